#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ringlab/analysis.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/elements.hpp"
#include "ringlab/io.hpp"
#include "ringlab/presets.hpp"

namespace ringlab {

// --- catalog ----------------------------------------------------------------

enum class FactSource { worked_example, derived, trivial };

inline std::string_view to_string(FactSource p) {
  switch (p) {
    case FactSource::worked_example: return "worked-example";
    case FactSource::derived: return "derived";
    case FactSource::trivial: return "trivial";
  }
  return "?";
}

/// A precomputed fact about a catalog ring: a predicate value or a set.
struct ExpectedFact {
  std::string key;  // a property name, or one of "order", "delta", "jacobson"
  std::variant<bool, std::size_t, std::vector<std::uint32_t>> value;
  FactSource source;
};

struct CatalogEntry {
  std::string name;
  std::string recipe;  // preset string or ring file path
  std::vector<ExpectedFact> facts;
};

namespace detail {

inline ExpectedFact fact(std::string key, bool v, FactSource p) { return {std::move(key), v, p}; }
inline ExpectedFact set_fact(std::string key, std::vector<std::uint32_t> v, FactSource p) {
  return {std::move(key), std::move(v), p};
}
inline ExpectedFact order_fact(std::size_t n, FactSource p) { return {"order", n, p}; }

inline std::vector<std::uint32_t> range(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> v;
  for (auto i = from; i < to; ++i) v.push_back(i);
  return v;
}

}  // namespace detail

/// The fixed catalog of example rings.
inline std::vector<CatalogEntry> default_catalog() {
  using detail::fact;
  using detail::set_fact;
  using detail::order_fact;
  using detail::range;
  constexpr auto P = FactSource::worked_example;
  constexpr auto D = FactSource::derived;
  constexpr auto T = FactSource::trivial;
  return {
      {"Z2", "zmod:2", {fact("boolean", true, T), fact("delta-quasipolar", true, P)}},
      {"Z3",
       "zmod:3",
       {fact("semisimple", true, P), fact("delta-quasipolar", true, P), fact("j-quasipolar", false, P),
        fact("boolean", false, P), fact("j-clean", false, P), set_fact("delta", range(0, 3), P)}},
      {"Z4",
       "zmod:4",
       {fact("delta-quasipolar", true, D), fact("uniquely-clean", true, D), set_fact("delta", {0, 2}, D),
        set_fact("jacobson", {0, 2}, D), fact("right-pp", false, D)}},
      {"Z6", "zmod:6", {set_fact("delta", range(0, 6), D), set_fact("jacobson", {0}, D), fact("local", false, D)}},
      {"Z8", "zmod:8", {fact("local", true, D), set_fact("delta", {0, 2, 4, 6}, D), fact("delta-quasipolar", true, D)}},
      {"Z9",
       "zmod:9",
       {fact("local", true, D), fact("quasipolar", true, D), fact("delta-quasipolar", false, D),
        set_fact("delta", {0, 3, 6}, D), set_fact("jacobson", {0, 3, 6}, D)}},
      {"Z2 x Z2", "product:[zmod:2,zmod:2]", {order_fact(4, T), fact("boolean", true, D)}},
      {"Z2 x Z3", "product:[zmod:2,zmod:3]", {order_fact(6, T), fact("delta-quasipolar", true, D)}},
      {"Mat2(Z2)",
       "mat:2:zmod:2",
       {order_fact(16, T), set_fact("jacobson", {0}, P), set_fact("delta", range(0, 16), P), fact("delta-quasipolar", true, P),
        fact("j-quasipolar", false, P), fact("abelian", false, D)}},
      {"Mat2(Z3)", "mat:2:zmod:3", {order_fact(81, D), set_fact("delta", range(0, 81), D)}},
      // T2 digits are (a11, a12, a22); delta is a11 = 0, J is a11 = a22 = 0.
      {"T2(Z2)",
       "tri:2:zmod:2",
       {order_fact(8, T), set_fact("delta", range(0, 4), P), set_fact("jacobson", {0, 2}, P), fact("delta-quasipolar", true, P),
        fact("right-pp", true, P)}},
      {"T2(Z3)", "tri:2:zmod:3", {order_fact(27, T), set_fact("delta", range(0, 9), P), fact("delta-quasipolar", false, P)}},
      {"CT2(Z2)", "cdtri:2:zmod:2", {order_fact(4, T), fact("local", true, D), set_fact("delta", {0, 1}, D)}},
      {"CT2(Z3)", "cdtri:2:zmod:3", {order_fact(9, T), set_fact("delta", range(0, 3), P), fact("delta-quasipolar", false, P)}},
      {"CT3(Z2)", "cdtri:3:zmod:2", {order_fact(16, T), fact("local", true, D), fact("delta-quasipolar", true, D)}},
      {"CT3(Z3)", "cdtri:3:zmod:3", {order_fact(81, T), set_fact("delta", range(0, 27), P), fact("delta-quasipolar", false, P)}},
      {"D(Z2,Z2)", "dorroh:[zmod:2]", {order_fact(4, T), fact("delta-quasipolar", true, D), fact("boolean", true, D)}},
      {"D(Z4,Z2)", "dorroh:[zmod:4,zmod:2]", {order_fact(8, T), fact("delta-quasipolar", true, D)}},
      {"D(Z3,Z3)", "dorroh:[zmod:3,zmod:3]", {order_fact(9, T), fact("delta-quasipolar", true, D)}},
      {"T2(Z2)/delta", "quot:[tri:2:zmod:2,delta]", {order_fact(2, P), fact("boolean", true, P)}},
      {"Z4/{0,2}", "quot:[zmod:4,{0,2}]", {order_fact(2, D), fact("boolean", true, D)}},
  };
}

/// A catalog ring with its analysis and, for Dorroh extensions, the input data.
struct CatalogRing {
  std::string name;
  std::string recipe;
  RingAnalysis analysis;
  std::optional<DorrohData> dorroh;
  std::vector<ExpectedFact> facts;

  const FiniteRing& ring() const { return analysis.ring(); }
};

inline CatalogRing analyze_entry(const CatalogEntry& e) {
  const bool is_file = e.recipe.ends_with(".json");
  FiniteRing R = is_file ? load_ring(e.recipe) : build_preset(e.recipe);
  std::optional<DorrohData> dorroh;
  if (!is_file && e.recipe.starts_with("dorroh:")) dorroh = dorroh_data_from_preset(e.recipe);
  std::string name = e.name.empty() ? R.name() : e.name;
  return {std::move(name), e.recipe, RingAnalysis(std::move(R)), std::move(dorroh), e.facts};
}

inline std::vector<CatalogRing> analyze_catalog(const std::vector<CatalogEntry>& entries) {
  std::vector<CatalogRing> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(analyze_entry(e));
  return out;
}

/// A catalog from disk: a directory of ring files (sorted by file name), or a
/// JSON array whose items are preset strings or {"name":..., "preset"|"file":...}.
inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<CatalogEntry> out;
  if (fs::is_directory(path)) {
    std::vector<std::string> files;
    for (const auto& de : fs::directory_iterator(path))
      if (de.path().extension() == ".json") files.push_back(de.path().string());
    std::sort(files.begin(), files.end());
    for (auto& f : files) out.push_back({"", f, {}});
    return out;
  }
  const Json j = read_json_file(path);
  if (!j.is_array()) throw RingFileError(path + ": catalog must be a JSON array");
  const fs::path dir = fs::path(path).parent_path();
  for (const auto& item : j) {
    if (item.is_string()) {
      out.push_back({"", item.get<std::string>(), {}});
    } else if (item.is_object() && item.contains("preset")) {
      out.push_back({item.value("name", std::string()), item.at("preset").get<std::string>(), {}});
    } else if (item.is_object() && item.contains("file")) {
      fs::path f = item.at("file").get<std::string>();
      if (f.is_relative()) f = dir / f;
      out.push_back({item.value("name", std::string()), f.string(), {}});
    } else {
      throw RingFileError(path + ": catalog items must be preset strings or objects with preset/file");
    }
  }
  return out;
}

/// Fact keys whose recomputed value differs from the recorded one.
inline std::vector<std::string> mismatched_facts(const CatalogRing& c) {
  std::vector<std::string> bad;
  for (const auto& f : c.facts) {
    bool ok = true;
    if (auto* b = std::get_if<bool>(&f.value)) {
      ok = ring_has(c.analysis, property_from_string(f.key)) == *b;
    } else if (auto* n = std::get_if<std::size_t>(&f.value)) {
      ok = c.ring().order() == *n;
    } else {
      const auto& want = std::get<std::vector<std::uint32_t>>(f.value);
      const ElementSet& got = f.key == "delta" ? c.analysis.delta() : c.analysis.jacobson();
      ok = got.indices() == want;
    }
    if (!ok) bad.push_back(f.key);
  }
  return bad;
}

// --- theorem results ------------------------------------------------------------

enum class TheoremStatus { holds_on_catalog, violated, disputed_paper_claim, out_of_scope };

inline std::string_view to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::holds_on_catalog: return "holds-on-catalog";
    case TheoremStatus::violated: return "violated";
    case TheoremStatus::disputed_paper_claim: return "disputed-paper-claim";
    case TheoremStatus::out_of_scope: return "out-of-scope";
  }
  return "?";
}

struct Witness {
  std::string ring;
  std::vector<std::pair<std::string, std::uint32_t>> elements;
  std::string note;
};

struct TheoremResult {
  std::string id;
  std::string statement;
  TheoremStatus status = TheoremStatus::holds_on_catalog;
  std::size_t instances = 0;
  std::vector<Witness> witnesses;
  std::string note;
};

struct SuiteOptions {
  /// Products A x B larger than this are skipped by the direct-product check.
  std::size_t max_product_order = 1024;
  std::size_t max_witnesses = 8;
};

namespace detail {

/// Memoized ring-level predicate lookups for one catalog ring.
class Facts {
 public:
  explicit Facts(const CatalogRing& c) : c_(&c) {}

  const CatalogRing& entry() const { return *c_; }
  const RingAnalysis& A() const { return c_->analysis; }
  const FiniteRing& R() const { return c_->ring(); }
  const std::string& name() const { return c_->name; }

  bool has(PropertyName p) const {
    auto it = ring_.find(p);
    if (it == ring_.end()) it = ring_.emplace(p, ring_property(A(), p)).first;
    return it->second.holds;
  }

  std::optional<ElementId> failing(PropertyName p) const {
    has(p);
    return ring_.at(p).witness;
  }

  const std::vector<ElementId>& delta_spectral(ElementId a) const {
    if (spectral_.empty()) {
      spectral_.reserve(R().order());
      for (auto x : R().elements()) spectral_.push_back(spectral_candidates(A(), x, SpectralFlavor::delta));
    }
    return spectral_[a.index()];
  }

  bool delta_quasipolar(ElementId a) const { return !delta_spectral(a).empty(); }

  const QuotientRing& quotient_by_delta() const {
    if (!quotient_) quotient_ = build_quotient(R(), A().delta(), R().name() + "/delta");
    return *quotient_;
  }

  bool trivial_idempotents() const {
    const auto& idem = A().idempotent_list();
    return std::all_of(idem.begin(), idem.end(), [&](ElementId e) { return e == R().zero() || e == R().one(); });
  }

 private:
  const CatalogRing* c_;
  mutable std::map<PropertyName, RingPropertyResult> ring_;
  mutable std::vector<std::vector<ElementId>> spectral_;
  mutable std::optional<QuotientRing> quotient_;
};

class Recorder {
 public:
  Recorder(std::string id, std::string statement, const SuiteOptions& opt) : opt_(opt) {
    r_.id = std::move(id);
    r_.statement = std::move(statement);
  }

  void instance(std::size_t n = 1) { r_.instances += n; }

  void counterexample(Witness w) {
    ++counterexamples_;
    if (r_.witnesses.size() < opt_.max_witnesses) r_.witnesses.push_back(std::move(w));
  }

  void support(Witness w) {
    if (r_.witnesses.size() < opt_.max_witnesses) r_.witnesses.push_back(std::move(w));
  }

  void note(std::string n) {
    if (!r_.note.empty()) r_.note += " ";
    r_.note += std::move(n);
  }

  std::size_t counterexamples() const { return counterexamples_; }

  TheoremResult claim() {
    r_.status = counterexamples_ ? TheoremStatus::violated : TheoremStatus::holds_on_catalog;
    return std::move(r_);
  }

  TheoremResult disputed() {
    r_.status = counterexamples_ ? TheoremStatus::disputed_paper_claim : TheoremStatus::holds_on_catalog;
    return std::move(r_);
  }

  TheoremResult with_status(TheoremStatus s) {
    r_.status = s;
    return std::move(r_);
  }

  TheoremResult& raw() { return r_; }

 private:
  TheoremResult r_;
  const SuiteOptions& opt_;
  std::size_t counterexamples_ = 0;
};

inline Witness at(const Facts& f, std::vector<std::pair<std::string, std::uint32_t>> elements = {},
                  std::string note = {}) {
  return {f.name(), std::move(elements), std::move(note)};
}

inline std::string pname(PropertyName p) { return std::string(to_string(p)); }

/// Ring-level implication hyp => concl over the catalog.
inline TheoremResult ring_implication(const std::vector<Facts>& cat, const SuiteOptions& opt, std::string id,
                                      std::string statement, const std::function<bool(const Facts&)>& hyp,
                                      PropertyName concl) {
  Recorder rec(std::move(id), std::move(statement), opt);
  for (const auto& f : cat) {
    if (!hyp(f)) continue;
    rec.instance();
    if (!f.has(concl)) {
      std::vector<std::pair<std::string, std::uint32_t>> el;
      if (auto w = f.failing(concl)) el.emplace_back("a", w->value);
      rec.counterexample(at(f, std::move(el), "hypothesis holds but " + pname(concl) + " fails"));
    }
  }
  return rec.claim();
}

/// Some ring is said to have `has` but not `lacks`; look for one.
inline TheoremResult non_implication(const std::vector<Facts>& cat, const SuiteOptions& opt, std::string id,
                                     std::string statement, const std::function<bool(const Facts&)>& has,
                                     const std::function<bool(const Facts&)>& lacks, std::string expected_ring) {
  Recorder rec(std::move(id), std::move(statement), opt);
  bool expected_present = false, expected_separates = false, any = false;
  for (const auto& f : cat) {
    if (f.name() == expected_ring) expected_present = true;
    if (!has(f)) continue;
    rec.instance();
    if (!lacks(f)) {
      any = true;
      if (f.name() == expected_ring) expected_separates = true;
      rec.support(at(f, {}, "separating example"));
    }
  }
  if (expected_present && !expected_separates) {
    rec.counterexample({expected_ring, {}, "documented separating example does not separate"});
    return rec.claim();
  }
  if (!any) rec.note("no separating ring in this catalog; vacuous.");
  return rec.claim();
}

inline ElementSet digit_zero_set(const FiniteRing& R, std::size_t base, std::size_t digits,
                                 std::vector<std::size_t> zero_digits) {
  MixedRadix codec(std::vector<std::size_t>(digits, base));
  ElementSet s(R.order());
  for (auto a : R.elements()) {
    auto d = codec.decode(a.index());
    bool all_zero = true;
    for (auto z : zero_digits) all_zero = all_zero && d[z] == 0;
    if (all_zero) s.insert(a);
  }
  return s;
}

}  // namespace detail

/// Checks every in-scope claim against the catalog. Result order is fixed.
inline std::vector<TheoremResult> theorem_suite(const std::vector<CatalogRing>& catalog, const SuiteOptions& opt = {}) {
  using detail::at;
  using detail::Facts;
  using detail::Recorder;
  using P = PropertyName;
  std::vector<Facts> cat;
  cat.reserve(catalog.size());
  for (const auto& c : catalog) cat.emplace_back(c);

  std::vector<TheoremResult> out;
  auto implication = [&](std::string id, std::string statement, std::function<bool(const Facts&)> hyp, P concl) {
    out.push_back(detail::ring_implication(cat, opt, std::move(id), std::move(statement), hyp, concl));
  };
  auto is = [](P p) { return [p](const Facts& f) { return f.has(p); }; };

  // delta(R) and J(R).
  {
    Recorder rec("delta-five-way-consensus", "the five characterizations of delta(R) coincide", opt);
    for (const auto& f : cat) {
      rec.instance();
      if (!f.A().delta_computation().agree) rec.counterexample(at(f, {}, "routes disagree"));
    }
    out.push_back(rec.claim());
  }
  {
    Recorder rec("jacobson-in-delta", "J(R) is contained in delta(R)", opt);
    for (const auto& f : cat) {
      rec.instance();
      if (!f.A().jacobson().is_subset_of(f.A().delta())) rec.counterexample(at(f));
    }
    out.push_back(rec.claim());
  }

  // J-quasipolar versus delta-quasipolar.
  implication("j-quasipolar-implies-delta-quasipolar", "every J-quasipolar ring is delta-quasipolar",
              is(P::j_quasipolar), P::delta_quasipolar);
  {
    Recorder rec("socle-in-jacobson-converse",
                 "if the right socle lies in J(R) then J(R) = delta(R), and a delta-quasipolar ring is J-quasipolar",
                 opt);
    for (const auto& f : cat) {
      if (!f.A().socle().is_subset_of(f.A().jacobson())) continue;
      rec.instance();
      if (!(f.A().jacobson() == f.A().delta())) rec.counterexample(at(f, {}, "J(R) != delta(R)"));
      else if (f.has(P::delta_quasipolar) && !f.has(P::j_quasipolar))
        rec.counterexample(at(f, {}, "delta-quasipolar but not J-quasipolar"));
    }
    out.push_back(rec.claim());
  }
  out.push_back(detail::non_implication(cat, opt, "delta-quasipolar-need-not-be-j-quasipolar",
                                        "some delta-quasipolar ring is not J-quasipolar (full matrix ring over a field)",
                                        is(P::delta_quasipolar), is(P::j_quasipolar), "Mat2(Z2)"));
  out.push_back(detail::non_implication(cat, opt, "quasipolar-need-not-be-delta-quasipolar",
                                        "some quasipolar ring is not delta-quasipolar", is(P::quasipolar),
                                        is(P::delta_quasipolar), "T2(Z3)"));
  {
    Recorder rec("semisimple-and-boolean-are-delta-quasipolar",
                 "semisimple rings and Boolean rings are delta-quasipolar and weakly delta-quasipolar", opt);
    for (const auto& f : cat) {
      if (!f.has(P::semisimple) && !f.has(P::boolean)) continue;
      rec.instance();
      if (!f.has(P::delta_quasipolar) || !f.has(P::weakly_delta_quasipolar)) rec.counterexample(at(f));
    }
    out.push_back(rec.claim());
  }

  // Element-level lemmas.
  {
    Recorder rec("conjugation-invariance", "a is delta-quasipolar iff u^-1 a u is, for every unit u", opt);
    for (const auto& f : cat) {
      const FiniteRing& R = f.R();
      for (auto u : f.A().units().members()) {
        const ElementId ui = *R.inverse(u);
        for (auto a : R.elements()) {
          rec.instance();
          const ElementId conj = R.mul(R.mul(ui, a), u);
          if (f.delta_quasipolar(a) != f.delta_quasipolar(conj))
            rec.counterexample(at(f, {{"a", a.value}, {"u", u.value}}));
        }
      }
    }
    out.push_back(rec.claim());
  }
  {
    Recorder rec("minus-one-minus-a",
                 "a is delta-quasipolar iff -1-a is, and 1-p is a delta-spectral idempotent of -1-a whenever p is one of a",
                 opt);
    for (const auto& f : cat) {
      const FiniteRing& R = f.R();
      for (auto a : R.elements()) {
        rec.instance();
        const ElementId b = R.sub(R.neg(R.one()), a);
        if (f.delta_quasipolar(a) != f.delta_quasipolar(b)) {
          rec.counterexample(at(f, {{"a", a.value}}));
          continue;
        }
        const auto& pb = f.delta_spectral(b);
        for (auto p : f.delta_spectral(a))
          if (std::find(pb.begin(), pb.end(), R.sub(R.one(), p)) == pb.end())
            rec.counterexample(at(f, {{"a", a.value}, {"p", p.value}}, "1-p does not certify -1-a"));
      }
    }
    out.push_back(rec.claim());
  }
  {
    Recorder rec("unit-spectral-idempotent-is-identity",
                 "in a delta-quasipolar ring with delta(R) = J(R), the only delta-spectral idempotent of a unit is 1", opt);
    for (const auto& f : cat) {
      if (!f.has(P::delta_quasipolar) || !(f.A().delta() == f.A().jacobson())) continue;
      for (auto u : f.A().units().members()) {
        rec.instance();
        const auto& ps = f.delta_spectral(u);
        if (ps.size() != 1 || ps.front() != f.R().one()) rec.counterexample(at(f, {{"u", u.value}}));
      }
    }
    out.push_back(rec.claim());
  }
  {
    Recorder rec("two-in-delta", "if R is delta-quasipolar then 2 = 1+1 lies in delta(R)", opt);
    for (const auto& f : cat) {
      if (!f.has(P::delta_quasipolar)) continue;
      rec.instance();
      if (!f.A().delta().contains(f.R().two())) rec.counterexample(at(f, {{"2", f.R().two().value}}));
    }
    out.push_back(rec.claim());
  }

  // The local-ring proposition conflicts with finite examples.
  {
    Recorder rec("local-quasipolar-implies-delta-quasipolar",
                 "a local quasipolar ring is delta-quasipolar (as literally stated, without R/J(R) = Z2)", opt);
    for (const auto& f : cat) {
      if (!f.has(P::local) || !f.has(P::quasipolar)) continue;
      rec.instance();
      if (!f.has(P::delta_quasipolar)) {
        std::vector<std::pair<std::string, std::uint32_t>> el;
        if (auto w = f.failing(P::delta_quasipolar)) el.emplace_back("a", w->value);
        rec.counterexample(at(f, std::move(el), "local and quasipolar, but a has no delta-spectral idempotent"));
      }
    }
    rec.note(
        "The argument assumes delta(R) = J(R) forces a+1 into delta(R) for every unit a, which needs "
        "R/J(R) = Z2. The localization of Z at an odd prime is also local, quasipolar and not "
        "delta-quasipolar.");
    out.push_back(rec.disputed());
  }

  // Regularity consequences.
  implication("delta-quasipolar-implies-right-pp", "every delta-quasipolar ring is right principally projective",
              is(P::delta_quasipolar), P::right_pp);
  implication("abelian-delta-quasipolar-is-strongly-regular", "every abelian delta-quasipolar ring is strongly regular",
              [](const Facts& f) { return f.has(P::abelian) && f.has(P::delta_quasipolar); }, P::strongly_regular);
  implication("abelian-delta-quasipolar-is-quasipolar", "every abelian delta-quasipolar ring is quasipolar",
              [](const Facts& f) { return f.has(P::abelian) && f.has(P::delta_quasipolar); }, P::quasipolar);
  implication("abelian-delta-quasipolar-is-strongly-clean", "every abelian delta-quasipolar ring is strongly clean",
              [](const Facts& f) { return f.has(P::abelian) && f.has(P::delta_quasipolar); }, P::strongly_clean);
  {
    Recorder rec("delta-quotient-boolean-with-lifting",
                 "if R is delta-quasipolar then R/delta(R) is Boolean and idempotents lift modulo delta(R)", opt);
    for (const auto& f : cat) {
      if (!f.has(P::delta_quasipolar)) continue;
      rec.instance();
      RingAnalysis Q(f.quotient_by_delta().ring);
      auto boolean = ring_property(Q, P::boolean);
      auto lift = idempotents_lift(f.R(), f.A().delta());
      if (!boolean.holds) rec.counterexample(at(f, {{"coset", boolean.witness->value}}, "R/delta(R) not Boolean"));
      if (!lift.holds) rec.counterexample(at(f, {{"a", lift.failing->value}}, "idempotent does not lift"));
    }
    out.push_back(rec.claim());
  }
  implication("delta-quasipolar-implies-delta-r-clean", "every delta-quasipolar ring is delta_r-clean",
              is(P::delta_quasipolar), P::delta_r_clean);
  implication("abelian-delta-r-clean-implies-delta-quasipolar", "an abelian delta_r-clean ring is delta-quasipolar",
              [](const Facts& f) { return f.has(P::abelian) && f.has(P::delta_r_clean); }, P::delta_quasipolar);
  {
    Recorder rec("delta-quasipolar-exchange-and-clean-quotient",
                 "a delta-quasipolar ring is an exchange ring and R/delta(R) is clean", opt);
    for (const auto& f : cat) {
      if (!f.has(P::delta_quasipolar)) continue;
      rec.instance();
      if (!f.has(P::exchange)) rec.counterexample(at(f, {}, "not exchange"));
      RingAnalysis Q(f.quotient_by_delta().ring);
      if (!ring_has(Q, P::clean)) rec.counterexample(at(f, {}, "R/delta(R) not clean"));
    }
    out.push_back(rec.claim());
  }
  implication("delta-quasipolar-zero-delta-is-boolean", "a delta-quasipolar ring with delta(R) = 0 is Boolean",
              [](const Facts& f) { return f.has(P::delta_quasipolar) && f.A().delta().count() == 1; }, P::boolean);
  {
    Recorder rec("boolean-is-regular-and-delta-quasipolar",
                 "a Boolean ring is von Neumann regular and delta-quasipolar", opt);
    for (const auto& f : cat) {
      if (!f.has(P::boolean)) continue;
      rec.instance();
      if (!f.has(P::von_neumann_regular) || !f.has(P::delta_quasipolar)) rec.counterexample(at(f));
    }
    out.push_back(rec.claim());
  }
  implication("abelian-j-clean-implies-delta-quasipolar", "an abelian J-clean ring is delta-quasipolar",
              [](const Facts& f) { return f.has(P::abelian) && f.has(P::j_clean); }, P::delta_quasipolar);
  out.push_back(detail::non_implication(
      cat, opt, "delta-quasipolar-need-not-be-boolean-or-j-clean",
      "some delta-quasipolar ring is neither Boolean nor J-clean", is(P::delta_quasipolar),
      [](const Facts& f) { return f.has(P::boolean) || f.has(P::j_clean); }, "Z3"));
  {
    Recorder rec("trivial-idempotents-characterization",
                 "a ring with only trivial idempotents is delta-quasipolar iff R = Z2 or R/delta(R) = Z2", opt);
    for (const auto& f : cat) {
      if (!f.trivial_idempotents()) continue;
      rec.instance();
      const bool rhs = is_zmod2(f.R()) || is_zmod2(f.quotient_by_delta().ring);
      if (f.has(P::delta_quasipolar) != rhs)
        rec.counterexample(at(f, {}, std::string(f.has(P::delta_quasipolar) ? "delta-quasipolar" : "not delta-quasipolar") +
                                         ", |R/delta(R)| = " + std::to_string(f.quotient_by_delta().ring.order())));
    }
    out.push_back(rec.claim());
  }
  {
    Recorder rec("strongly-pi-regular-radical-coincidence",
                 "for delta-quasipolar R with delta(R) = J(R): strongly pi-regular iff J(R) = qnil = nil(R) = delta(R)",
                 opt);
    for (const auto& f : cat) {
      if (!f.has(P::delta_quasipolar) || !(f.A().delta() == f.A().jacobson())) continue;
      rec.instance();
      const auto& A = f.A();
      const bool sets_equal = A.jacobson() == A.qnil() && A.qnil() == A.nilpotents() && A.nilpotents() == A.delta();
      if (f.has(P::strongly_pi_regular) != sets_equal) rec.counterexample(at(f));
    }
    rec.note("Every finite ring is strongly pi-regular, so only the set equalities carry information here.");
    out.push_back(rec.claim());
  }

  // Dorroh extensions.
  {
    Recorder rec("dorroh-reflects-delta-quasipolarity", "if D(R,V) is delta-quasipolar then R is delta-quasipolar", opt);
    for (const auto& f : cat) {
      if (!f.entry().dorroh || !f.has(P::delta_quasipolar)) continue;
      rec.instance();
      RingAnalysis base(f.entry().dorroh->base);
      if (!ring_has(base, P::delta_quasipolar)) rec.counterexample(at(f));
    }
    out.push_back(rec.claim());
  }
  {
    Recorder rec("dorroh-conditions-give-delta-quasipolar",
                 "if R is delta-quasipolar, idempotents of R commute with V, and V = delta(V), then D(R,V) is "
                 "delta-quasipolar",
                 opt);
    for (const auto& f : cat) {
      if (!f.entry().dorroh) continue;
      const DorrohData& d = *f.entry().dorroh;
      RingAnalysis base(d.base);
      if (!ring_has(base, P::delta_quasipolar)) continue;
      bool central = true;
      for (auto e : base.idempotent_list())
        for (auto v : d.bimodule.elements())
          if (d.left(e, v) != d.right(v, e)) central = false;
      if (!central) continue;
      RingAnalysis V(d.bimodule);
      if (!V.delta().is_full()) continue;
      rec.instance();
      if (!f.has(P::delta_quasipolar)) rec.counterexample(at(f));
    }
    out.push_back(rec.claim());
  }

  // Weakly delta-quasipolar rings.
  implication("delta-quasipolar-implies-weakly", "every delta-quasipolar ring is weakly delta-quasipolar",
              is(P::delta_quasipolar), P::weakly_delta_quasipolar);
  implication("strongly-j-clean-implies-weakly-delta-quasipolar",
              "every strongly J-clean ring is weakly delta-quasipolar", is(P::strongly_j_clean),
              P::weakly_delta_quasipolar);
  {
    Recorder rec("surjective-image-weakly-delta-quasipolar",
                 "a surjective image R/I of a weakly delta-quasipolar ring is weakly delta-quasipolar", opt);
    Recorder img("surjection-maps-delta-into-delta", "the projection R -> R/I maps delta(R) into delta(R/I)", opt);
    for (const auto& f : cat) {
      for (const auto& I : two_sided_ideals(f.R())) {
        QuotientRing q = build_quotient(f.R(), I);
        RingAnalysis Q(q.ring);
        img.instance();
        if (!image(q, f.A().delta()).is_subset_of(Q.delta()))
          img.counterexample(at(f, {}, "ideal of size " + std::to_string(I.count())));
        if (!f.has(P::weakly_delta_quasipolar)) continue;
        rec.instance();
        if (!ring_has(Q, P::weakly_delta_quasipolar))
          rec.counterexample(at(f, {}, "quotient by ideal of size " + std::to_string(I.count())));
      }
    }
    out.push_back(rec.claim());
    out.push_back(img.claim());
  }
  {
    Recorder rec("finite-product-weakly-delta-quasipolar",
                 "A x B is weakly delta-quasipolar iff both A and B are", opt);
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = i; j < cat.size(); ++j) {
        const auto& a = cat[i];
        const auto& b = cat[j];
        if (a.R().order() * b.R().order() > opt.max_product_order) {
          ++skipped;
          continue;
        }
        rec.instance();
        RingAnalysis prod(build_product({a.R(), b.R()}));
        const bool lhs = ring_has(prod, P::weakly_delta_quasipolar);
        const bool rhs = a.has(P::weakly_delta_quasipolar) && b.has(P::weakly_delta_quasipolar);
        if (lhs != rhs) rec.counterexample({a.name() + " x " + b.name(), {}, ""});
      }
    if (skipped)
      rec.note(std::to_string(skipped) + " pairs above order " + std::to_string(opt.max_product_order) + " skipped.");
    out.push_back(rec.claim());
  }
  {
    Recorder rec("weakly-delta-quasipolar-iff-strongly-delta-r-clean",
                 "R is weakly delta-quasipolar iff strongly delta_r-clean; elementwise, a is weakly delta-quasipolar "
                 "iff -a is strongly delta_r-clean",
                 opt);
    for (const auto& f : cat) {
      rec.instance();
      if (f.has(P::weakly_delta_quasipolar) != f.has(P::strongly_delta_r_clean))
        rec.counterexample(at(f, {}, "ring-level predicates differ"));
      for (auto a : f.R().elements()) {
        const bool weak = element_has(f.A(), a, P::weakly_delta_quasipolar);
        const bool sdc = element_has(f.A(), f.R().neg(a), P::strongly_delta_r_clean);
        if (weak != sdc) rec.counterexample(at(f, {{"a", a.value}}, "element bridge fails"));
      }
    }
    out.push_back(rec.claim());
  }
  {
    Recorder rec("local-ring-equivalences",
                 "for a local ring with nonzero maximal ideal: weakly delta-quasipolar, strongly J-clean, uniquely "
                 "clean, R/J(R) = Z2 and R/delta(R) = Z2 are equivalent",
                 opt);
    for (const auto& f : cat) {
      if (!f.has(P::local) || f.A().jacobson().count() == 1) continue;
      rec.instance();
      const bool c1 = f.has(P::weakly_delta_quasipolar);
      const bool c2 = f.has(P::strongly_j_clean);
      const bool c3 = f.has(P::uniquely_clean);
      const bool c4 = is_zmod2(build_quotient(f.R(), f.A().jacobson()).ring);
      const bool c5 = is_zmod2(f.quotient_by_delta().ring);
      if (!(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5))
        rec.counterexample(at(f, {{"weak", c1}, {"sjc", c2}, {"uc", c3}, {"RJ", c4}, {"Rdelta", c5}}));
      else
        rec.support(at(f, {}, c1 ? "all five hold" : "all five fail"));
    }
    out.push_back(rec.claim());
  }

  // Worked examples, checked on the named catalog rings when present.
  auto example = [&](std::string id, std::string statement, const std::vector<std::string>& names,
                     std::function<std::string(const Facts&)> check) {
    Recorder rec(std::move(id), std::move(statement), opt);
    for (const auto& f : cat) {
      if (std::find(names.begin(), names.end(), f.name()) == names.end()) continue;
      rec.instance();
      if (auto why = check(f); !why.empty()) rec.counterexample(at(f, {}, why));
    }
    if (rec.raw().instances == 0) rec.note("example ring not in this catalog; vacuous.");
    out.push_back(rec.claim());
  };
  auto expect_flags = [](const Facts& f, std::initializer_list<std::pair<P, bool>> flags) {
    std::string why;
    for (auto [p, want] : flags)
      if (f.has(p) != want) why += detail::pname(p) + (want ? " expected " : " unexpected ");
    return why;
  };
  example("example-upper-triangular-z2",
          "T2(Z2): J(R) is the strictly upper part, delta(R) has zero (1,1) entry, R is delta-quasipolar", {"T2(Z2)"},
          [&](const Facts& f) {
            std::string why = expect_flags(f, {{P::delta_quasipolar, true}});
            if (!(f.A().delta() == detail::digit_zero_set(f.R(), 2, 3, {0}))) why += "delta mismatch ";
            if (!(f.A().jacobson() == detail::digit_zero_set(f.R(), 2, 3, {0, 2}))) why += "J mismatch ";
            return why;
          });
  example("example-upper-triangular-z3", "T2(Z3): delta(R) has zero (1,1) entry, 2 is not in delta(R), not delta-quasipolar",
          {"T2(Z3)"}, [&](const Facts& f) {
            std::string why = expect_flags(f, {{P::delta_quasipolar, false}});
            if (!(f.A().delta() == detail::digit_zero_set(f.R(), 3, 3, {0}))) why += "delta mismatch ";
            if (f.A().delta().contains(f.R().two())) why += "2 in delta ";
            return why;
          });
  example("example-constant-diagonal-z3",
          "constant-diagonal triangular rings over Z3: delta(R) is the zero-diagonal part, 2 is not in delta(R), "
          "not delta-quasipolar",
          {"CT2(Z3)", "CT3(Z3)"}, [&](const Facts& f) {
            std::string why = expect_flags(f, {{P::delta_quasipolar, false}});
            const std::size_t digits = f.R().order() == 9 ? 2 : 4;
            if (!(f.A().delta() == detail::digit_zero_set(f.R(), 3, digits, {0}))) why += "delta mismatch ";
            if (f.A().delta().contains(f.R().two())) why += "2 in delta ";
            return why;
          });
  example("example-full-matrix-ring-over-field",
          "Mat2(F): semisimple, delta(R) = R, J(R) = 0, delta-quasipolar, not J-quasipolar", {"Mat2(Z2)", "Mat2(Z3)"},
          [&](const Facts& f) {
            std::string why = expect_flags(f, {{P::semisimple, true}, {P::delta_quasipolar, true}, {P::j_quasipolar, false}});
            if (!f.A().delta().is_full()) why += "delta != R ";
            if (f.A().jacobson().count() != 1) why += "J != 0 ";
            return why;
          });
  example("example-z3", "Z3: semisimple and delta-quasipolar, but not J-quasipolar, not Boolean, not J-clean", {"Z3"},
          [&](const Facts& f) {
            return expect_flags(f, {{P::semisimple, true},
                                    {P::delta_quasipolar, true},
                                    {P::j_quasipolar, false},
                                    {P::boolean, false},
                                    {P::j_clean, false}});
          });

  // Statements about infinite rings are recorded, not evaluated.
  auto out_of_scope = [&](std::string id, std::string statement) {
    Recorder rec(std::move(id), std::move(statement), opt);
    rec.note("concerns an infinite ring; not evaluated.");
    out.push_back(rec.with_status(TheoremStatus::out_of_scope));
  };
  out_of_scope("rationals-delta-quasipolar", "Q is delta-quasipolar since J(Q) = delta(Q) = Q");
  out_of_scope("integers-not-delta-quasipolar", "Z is not delta-quasipolar since delta(Z) = 0");
  out_of_scope("localization-quasipolar-not-delta-quasipolar", "Z localized at (p), p >= 3, is quasipolar but not delta-quasipolar");
  out_of_scope("eventually-constant-sequences-strongly-clean", "a ring of eventually constant sequences is strongly clean, not quasipolar, not delta-quasipolar");
  out_of_scope("dorroh-integers-rationals", "D(Z, Q) is not delta-quasipolar");
  out_of_scope("integer-matrix-rings", "Mat2(Z) and T2(Z) are not delta-quasipolar");
  out_of_scope("direct-sum-onto-rationals", "a direct sum of copies of Z maps onto Q; the converse of the image property fails");
  out_of_scope("integer-element-separation", "in Z, 1 is strongly delta_r-clean but not weakly delta-quasipolar, and -1 the reverse");
  return out;
}

inline bool suite_passes(const std::vector<TheoremResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const TheoremResult& r) { return r.status == TheoremStatus::violated; });
}

inline Json to_json(const Witness& w) {
  Json j;
  j["ring"] = w.ring;
  Json el = Json::object();
  for (auto& [k, v] : w.elements) el[k] = v;
  j["elements"] = el;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

inline Json to_json(const TheoremResult& r) {
  Json j;
  j["id"] = r.id;
  j["statement"] = r.statement;
  j["status"] = std::string(to_string(r.status));
  j["instances"] = r.instances;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const std::vector<TheoremResult>& rs) {
  Json j = Json::array();
  for (const auto& r : rs) j.push_back(to_json(r));
  return j;
}

inline std::string theorem_table(const std::vector<TheoremResult>& rs) {
  std::ostringstream os;
  os << std::left << std::setw(52) << "claim" << std::setw(22) << "status" << std::setw(10) << "instances"
     << "witness\n";
  for (const auto& r : rs) {
    os << std::left << std::setw(52) << r.id << std::setw(22) << to_string(r.status) << std::setw(10) << r.instances;
    if (!r.witnesses.empty() && r.status != TheoremStatus::holds_on_catalog) {
      const auto& w = r.witnesses.front();
      os << w.ring;
      for (auto& [k, v] : w.elements) os << " " << k << "=" << v;
    }
    os << "\n";
  }
  return os.str();
}

// --- counterexample search ------------------------------------------------------

struct SearchHit {
  std::string ring;
  std::optional<ElementId> element;
};

/// First catalog ring with every hypothesis and without the conclusion.
inline std::optional<SearchHit> search_counterexample(const std::vector<PropertyName>& hypotheses,
                                                      PropertyName conclusion,
                                                      const std::vector<CatalogRing>& catalog) {
  for (const auto& c : catalog) {
    bool hyp = std::all_of(hypotheses.begin(), hypotheses.end(),
                           [&](PropertyName p) { return ring_has(c.analysis, p); });
    if (!hyp) continue;
    auto r = ring_property(c.analysis, conclusion);
    if (!r.holds) return SearchHit{c.name, r.witness};
  }
  return std::nullopt;
}

}  // namespace ringlab
