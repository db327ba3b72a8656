#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include "ringlab/analysis.hpp"
#include "ringlab/elements.hpp"
#include "ringlab/io.hpp"

namespace ringlab {

/// Full structural report for one ring as deterministic JSON.
inline Json ring_report(const RingAnalysis& A) {
  const FiniteRing& R = A.ring();
  Json j;
  j["name"] = R.name();
  j["order"] = R.order();
  j["trivial"] = R.is_trivial();
  Json sets;
  sets["units"] = to_json(A.units());
  sets["idempotents"] = to_json(A.idempotents());
  sets["nilpotents"] = to_json(A.nilpotents());
  sets["socle"] = to_json(A.socle());
  sets["jacobson"] = to_json(A.jacobson());
  sets["qnil"] = to_json(A.qnil());
  sets["delta"] = to_json(A.delta());
  j["sets"] = sets;
  j["delta_routes"] = to_json(A.delta_computation());
  Json predicates;
  for (auto& [p, name] : kPropertyNames) {
    auto r = ring_property(A, p);
    Json entry;
    entry["holds"] = r.holds;
    entry["witness"] = r.witness ? Json(r.witness->value) : Json(nullptr);
    predicates[std::string(name)] = entry;
  }
  j["predicates"] = predicates;
  Json spectral = Json::array();
  for (auto a : R.elements()) {
    Json ps = Json::array();
    for (auto p : spectral_candidates(A, a, SpectralFlavor::delta)) ps.push_back(p.value);
    spectral.push_back({{"element", a.value}, {"label", R.label(a)}, {"delta_spectral_idempotents", ps}});
  }
  j["delta_spectral"] = spectral;
  return j;
}

namespace detail {

inline std::string set_text(const FiniteRing& R, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto a : s.members()) {
    if (!first) out += ", ";
    first = false;
    out += R.label(a);
  }
  return out + "}";
}

}  // namespace detail

/// Human-readable rendering of ring_report().
inline std::string ring_report_text(const RingAnalysis& A) {
  const FiniteRing& R = A.ring();
  std::ostringstream os;
  os << "ring " << R.name() << "  order " << R.order() << (R.is_trivial() ? "  [trivial: all predicates vacuous]" : "")
     << "\n\n";
  auto line = [&](const char* label, const ElementSet& s) {
    os << "  " << std::left << std::setw(12) << label << detail::set_text(R, s) << "\n";
  };
  line("units", A.units());
  line("idempotents", A.idempotents());
  line("nilpotents", A.nilpotents());
  line("socle", A.socle());
  line("J(R)", A.jacobson());
  line("qnil", A.qnil());
  line("delta(R)", A.delta());
  const auto& d = A.delta_computation();
  os << "  delta routes R1..R5 " << (d.agree ? "agree" : "DISAGREE") << "\n\npredicates\n";
  for (auto& [p, name] : kPropertyNames) {
    auto r = ring_property(A, p);
    os << "  " << std::left << std::setw(26) << name << (r.holds ? "yes" : "no");
    if (r.witness) os << "  (fails at " << R.label(*r.witness) << ")";
    os << "\n";
  }
  os << "\ndelta-spectral idempotents\n";
  for (auto a : R.elements()) {
    os << "  " << std::left << std::setw(16) << R.label(a) << "{";
    bool first = true;
    for (auto p : spectral_candidates(A, a, SpectralFlavor::delta)) {
      os << (first ? "" : ", ") << R.label(p);
      first = false;
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace ringlab
