#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/elements.hpp"
#include "ringlab/radicals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

/// Ring file could not be read, parsed, or describes an invalid ring.
class RingFileError : public RingError {
 public:
  using RingError::RingError;
};

inline Json to_json(const ElementSet& s) {
  Json out = Json::array();
  for (auto i : s.indices()) out.push_back(i);
  return out;
}

inline Json table_to_json(const FiniteRing::Table& t, std::size_t rows, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < cols; ++j) row.push_back(t[i * cols + j]);
    out.push_back(std::move(row));
  }
  return out;
}

inline Json to_json(const FiniteRing& R) {
  Json j;
  j["name"] = R.name();
  j["order"] = R.order();
  j["zero"] = R.zero().value;
  j["one"] = R.one().value;
  j["add"] = table_to_json(R.add_table(), R.order(), R.order());
  j["mul"] = table_to_json(R.mul_table(), R.order(), R.order());
  if (!R.labels().empty()) j["labels"] = R.labels();
  return j;
}

namespace detail {

inline FiniteRing::Table table_from_json(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows) throw RingFileError(std::string(what) + ": wrong number of rows");
  FiniteRing::Table t;
  t.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw RingFileError(std::string(what) + ": wrong row length");
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) throw RingFileError(std::string(what) + ": entries must be non-negative integers");
      t.push_back(v.get<std::uint32_t>());
    }
  }
  return t;
}

inline std::string describe(const std::vector<AxiomViolation>& violations) {
  std::ostringstream msg;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) msg << "; ";
    msg << violations[i].axiom << " fails at (";
    for (std::size_t k = 0; k < violations[i].witnesses.size(); ++k)
      msg << (k ? "," : "") << violations[i].witnesses[k].value;
    msg << ")";
  }
  return msg.str();
}

}  // namespace detail

/// Reads the tables from JSON without checking ring axioms.
inline FiniteRing ring_tables_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw RingFileError("ring file must be a JSON object");
    const auto n = j.at("order").get<std::size_t>();
    if (n == 0) throw RingFileError("order must be positive");
    if (n > size_cap()) throw RingFileError("order exceeds the size cap");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    FiniteRing R(j.value("name", std::string("ring")), n, detail::table_from_json(j.at("add"), n, n, "add"),
                 detail::table_from_json(j.at("mul"), n, n, "mul"), ElementId(j.at("zero").get<std::uint32_t>()),
                 ElementId(j.at("one").get<std::uint32_t>()), std::move(labels));
    return R;
  } catch (const Json::exception& e) {
    throw RingFileError(std::string("malformed ring JSON: ") + e.what());
  } catch (const RingFileError&) {
    throw;
  } catch (const RingError& e) {
    throw RingFileError(e.what());
  }
}

/// Parses and validates a ring; invalid rings are refused.
inline FiniteRing ring_from_json(const Json& j, AxiomScope scope = AxiomScope::with_identity) {
  FiniteRing R = ring_tables_from_json(j);
  auto violations = verify_axioms(R, scope);
  if (!violations.empty()) throw RingFileError("ring axioms violated: " + detail::describe(violations));
  return R;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingFileError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw RingFileError(path + ": " + e.what());
  }
}

inline FiniteRing load_ring(const std::string& path) { return ring_from_json(read_json_file(path)); }

inline void save_ring(const FiniteRing& R, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw RingFileError("cannot write " + path);
  out << to_json(R).dump() << "\n";
}

/// {"base": ring, "bimodule": ring, "left_action": [[...]], "right_action": [[...]]}.
inline DorrohData dorroh_data_from_json(const Json& j) {
  try {
    FiniteRing base = ring_from_json(j.at("base"));
    FiniteRing V = ring_from_json(j.at("bimodule"), AxiomScope::without_identity);
    auto left = detail::table_from_json(j.at("left_action"), base.order(), V.order(), "left_action");
    auto right = detail::table_from_json(j.at("right_action"), V.order(), base.order(), "right_action");
    return {std::move(base), std::move(V), std::move(left), std::move(right)};
  } catch (const Json::exception& e) {
    throw RingFileError(std::string("malformed dorroh JSON: ") + e.what());
  }
}

inline Json to_json(const DorrohData& d) {
  Json j;
  j["base"] = to_json(d.base);
  j["bimodule"] = to_json(d.bimodule);
  j["left_action"] = table_to_json(d.left_action, d.base.order(), d.bimodule.order());
  j["right_action"] = table_to_json(d.right_action, d.bimodule.order(), d.base.order());
  return j;
}

inline Json to_json(const DeltaComputation& d) {
  Json j;
  j["R1"] = to_json(d.r1());
  j["R2"] = to_json(d.r2());
  j["R3"] = to_json(d.r3());
  j["R4"] = to_json(d.r4());
  j["R5"] = to_json(d.r5());
  j["agree"] = d.agree;
  j["consensus"] = d.agree ? to_json(d.consensus) : Json(nullptr);
  return j;
}

inline Json to_json(const Certificate& c) {
  Json j;
  j["property"] = std::string(to_string(c.property));
  j["element"] = c.element.value;
  Json w = Json::object();
  for (auto& [k, v] : c.witnesses) w[k] = v.value;
  j["witnesses"] = w;
  if (c.witness_count) j["witness_count"] = *c.witness_count;
  Json checks = Json::array();
  for (auto& [desc, ok] : c.checks) checks.push_back({{"check", desc}, {"holds", ok}});
  j["checks"] = checks;
  return j;
}

}  // namespace ringlab
