#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/analysis.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// --- commutants -------------------------------------------------------------

/// comm(a) = {x : xa = ax}.
inline ElementSet commutant(const FiniteRing& R, ElementId a) {
  ElementSet s(R.order());
  for (auto x : R.elements())
    if (R.commute(x, a)) s.insert(x);
  return s;
}

/// comm^2(a) = {x : xy = yx for every y in comm(a)}.
inline ElementSet double_commutant(const FiniteRing& R, ElementId a) {
  const auto comm = commutant(R, a).members();
  ElementSet s(R.order());
  for (auto x : R.elements()) {
    bool ok = true;
    for (auto y : comm)
      if (!R.commute(x, y)) {
        ok = false;
        break;
      }
    if (ok) s.insert(x);
  }
  return s;
}

// --- property names -----------------------------------------------------------

enum class PropertyName {
  quasipolar,
  nil_quasipolar,
  j_quasipolar,
  delta_quasipolar,
  weakly_delta_quasipolar,
  clean,
  strongly_clean,
  j_clean,
  strongly_j_clean,
  uniquely_clean,
  delta_r_clean,
  strongly_delta_r_clean,
  uniquely_delta_r_clean,
  boolean,
  abelian,
  local,
  semisimple,
  von_neumann_regular,
  strongly_regular,
  strongly_pi_regular,
  exchange,
  right_pp,
};

inline constexpr std::array<std::pair<PropertyName, std::string_view>, 22> kPropertyNames{{
    {PropertyName::quasipolar, "quasipolar"},
    {PropertyName::nil_quasipolar, "nil-quasipolar"},
    {PropertyName::j_quasipolar, "j-quasipolar"},
    {PropertyName::delta_quasipolar, "delta-quasipolar"},
    {PropertyName::weakly_delta_quasipolar, "weakly-delta-quasipolar"},
    {PropertyName::clean, "clean"},
    {PropertyName::strongly_clean, "strongly-clean"},
    {PropertyName::j_clean, "j-clean"},
    {PropertyName::strongly_j_clean, "strongly-j-clean"},
    {PropertyName::uniquely_clean, "uniquely-clean"},
    {PropertyName::delta_r_clean, "delta-r-clean"},
    {PropertyName::strongly_delta_r_clean, "strongly-delta-r-clean"},
    {PropertyName::uniquely_delta_r_clean, "uniquely-delta-r-clean"},
    {PropertyName::boolean, "boolean"},
    {PropertyName::abelian, "abelian"},
    {PropertyName::local, "local"},
    {PropertyName::semisimple, "semisimple"},
    {PropertyName::von_neumann_regular, "von-neumann-regular"},
    {PropertyName::strongly_regular, "strongly-regular"},
    {PropertyName::strongly_pi_regular, "strongly-pi-regular"},
    {PropertyName::exchange, "exchange"},
    {PropertyName::right_pp, "right-pp"},
}};

inline std::string_view to_string(PropertyName p) {
  for (auto& [k, v] : kPropertyNames)
    if (k == p) return v;
  return "?";
}

inline std::optional<PropertyName> parse_property(std::string_view s) {
  for (auto& [k, v] : kPropertyNames)
    if (v == s) return k;
  return std::nullopt;
}

inline PropertyName property_from_string(std::string_view s) {
  if (auto p = parse_property(s)) return *p;
  throw UsageError("unknown property '" + std::string(s) + "'");
}

/// Names defined per element (a ring has the property when every element does).
inline bool is_element_level(PropertyName p) { return p <= PropertyName::uniquely_delta_r_clean; }

// --- spectral idempotents -----------------------------------------------------

enum class SpectralFlavor { delta, j, nil, quasipolar, weakly_delta };

inline std::string_view to_string(SpectralFlavor f) {
  switch (f) {
    case SpectralFlavor::delta: return "delta";
    case SpectralFlavor::j: return "j";
    case SpectralFlavor::nil: return "nil";
    case SpectralFlavor::quasipolar: return "quasipolar";
    case SpectralFlavor::weakly_delta: return "weakly-delta";
  }
  return "?";
}

/// Idempotents p (ascending) that witness the flavor for a:
///   delta: p in comm^2(a), a+p in delta(R)     j: ... a+p in J(R)
///   nil: p in comm^2(a), a+p nilpotent         quasipolar: a+p unit, ap in qnil
///   weakly_delta: p in comm(a), a+p in delta(R)
inline std::vector<ElementId> spectral_candidates(const RingAnalysis& A, ElementId a, SpectralFlavor flavor) {
  const FiniteRing& R = A.ring();
  const ElementSet centralizer =
      flavor == SpectralFlavor::weakly_delta ? commutant(R, a) : double_commutant(R, a);
  std::vector<ElementId> out;
  for (auto p : A.idempotent_list()) {
    if (!centralizer.contains(p)) continue;
    const ElementId s = R.add(a, p);
    bool ok = false;
    switch (flavor) {
      case SpectralFlavor::delta:
      case SpectralFlavor::weakly_delta: ok = A.delta().contains(s); break;
      case SpectralFlavor::j: ok = A.jacobson().contains(s); break;
      case SpectralFlavor::nil: ok = A.nilpotents().contains(s); break;
      case SpectralFlavor::quasipolar: ok = R.is_unit(s) && A.qnil().contains(R.mul(a, p)); break;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

// --- certificates -------------------------------------------------------------

struct Certificate {
  PropertyName property;
  ElementId element;
  std::vector<std::pair<std::string, ElementId>> witnesses;
  std::vector<std::pair<std::string, bool>> checks;
  /// Number of valid witnesses, recorded for the uniqueness properties.
  std::optional<std::size_t> witness_count;

  std::optional<ElementId> witness(std::string_view name) const {
    for (auto& [k, v] : witnesses)
      if (k == name) return v;
    return std::nullopt;
  }

  bool all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.second; });
  }
};

namespace detail {

inline bool in_commutant(const FiniteRing& R, ElementId a, ElementId x) { return R.commute(a, x); }

inline bool in_double_commutant(const FiniteRing& R, ElementId a, ElementId x) {
  for (auto y : R.elements())
    if (R.commute(y, a) && !R.commute(x, y)) return false;
  return true;
}

inline bool quasinilpotent(const FiniteRing& R, ElementId a) {
  for (auto x : R.elements())
    if (R.commute(a, x) && !R.is_unit(R.add(R.one(), R.mul(a, x)))) return false;
  return true;
}

inline std::optional<SpectralFlavor> spectral_flavor(PropertyName p) {
  switch (p) {
    case PropertyName::quasipolar: return SpectralFlavor::quasipolar;
    case PropertyName::nil_quasipolar: return SpectralFlavor::nil;
    case PropertyName::j_quasipolar: return SpectralFlavor::j;
    case PropertyName::delta_quasipolar: return SpectralFlavor::delta;
    case PropertyName::weakly_delta_quasipolar: return SpectralFlavor::weakly_delta;
    default: return std::nullopt;
  }
}

}  // namespace detail

/// Recomputes the conditions a certificate asserts directly from the ring
/// tables and the radical masks. Used both to fill a fresh certificate and to
/// re-validate one later.
inline std::vector<std::pair<std::string, bool>> certificate_checks(const RingAnalysis& A, const Certificate& c) {
  const FiniteRing& R = A.ring();
  const ElementId a = c.element;
  std::vector<std::pair<std::string, bool>> checks;
  auto need = [&](std::string_view w) -> std::optional<ElementId> {
    auto v = c.witness(w);
    if (!v || v->index() >= R.order()) {
      checks.emplace_back("witness " + std::string(w) + " present", false);
      return std::nullopt;
    }
    return v;
  };
  if (a.index() >= R.order()) return {{"element in range", false}};

  if (auto flavor = detail::spectral_flavor(c.property)) {
    auto p = need("p");
    if (!p) return checks;
    const ElementId s = R.add(a, *p);
    checks.emplace_back("p*p = p", R.is_idempotent(*p));
    if (*flavor == SpectralFlavor::weakly_delta)
      checks.emplace_back("p in comm(a)", detail::in_commutant(R, a, *p));
    else
      checks.emplace_back("p in comm2(a)", detail::in_double_commutant(R, a, *p));
    switch (*flavor) {
      case SpectralFlavor::delta:
      case SpectralFlavor::weakly_delta: checks.emplace_back("a+p in delta(R)", A.delta().contains(s)); break;
      case SpectralFlavor::j: checks.emplace_back("a+p in J(R)", A.jacobson().contains(s)); break;
      case SpectralFlavor::nil: checks.emplace_back("a+p nilpotent", is_nilpotent(R, s)); break;
      case SpectralFlavor::quasipolar:
        checks.emplace_back("a+p unit", R.is_unit(s));
        checks.emplace_back("ap quasinilpotent", detail::quasinilpotent(R, R.mul(a, *p)));
        break;
    }
    return checks;
  }

  auto e = need("e");
  if (!e) return checks;
  checks.emplace_back("e*e = e", R.is_idempotent(*e));
  const ElementId rest = R.sub(a, *e);
  const bool unit_part = c.property == PropertyName::clean || c.property == PropertyName::strongly_clean ||
                         c.property == PropertyName::uniquely_clean;
  if (unit_part) {
    auto u = need("u");
    if (!u) return checks;
    checks.emplace_back("a = e + u", R.add(*e, *u) == a && *u == rest);
    checks.emplace_back("u unit", R.is_unit(*u));
    if (c.property == PropertyName::strongly_clean) checks.emplace_back("eu = ue", R.commute(*e, *u));
  } else {
    auto w = need("w");
    if (!w) return checks;
    checks.emplace_back("a = e + w", R.add(*e, *w) == a && *w == rest);
    const bool radical = c.property == PropertyName::j_clean || c.property == PropertyName::strongly_j_clean;
    if (radical)
      checks.emplace_back("w in J(R)", A.jacobson().contains(*w));
    else
      checks.emplace_back("w in delta(R)", A.delta().contains(*w));
    if (c.property == PropertyName::strongly_j_clean || c.property == PropertyName::strongly_delta_r_clean)
      checks.emplace_back("ew = we", R.commute(*e, *w));
  }
  if (c.property == PropertyName::uniquely_clean || c.property == PropertyName::uniquely_delta_r_clean)
    checks.emplace_back("exactly one idempotent works", c.witness_count == std::size_t{1});
  return checks;
}

/// Re-validates a certificate against the ring; true iff every condition holds.
inline bool revalidate(const RingAnalysis& A, const Certificate& c) {
  auto checks = certificate_checks(A, c);
  if (checks.empty()) return false;
  if (c.property == PropertyName::uniquely_clean || c.property == PropertyName::uniquely_delta_r_clean) {
    // Recount independently of the stored count.
    const FiniteRing& R = A.ring();
    std::size_t count = 0;
    for (auto e : R.elements()) {
      if (!R.is_idempotent(e)) continue;
      const ElementId rest = R.sub(c.element, e);
      const bool ok = c.property == PropertyName::uniquely_clean ? R.is_unit(rest) : A.delta().contains(rest);
      if (ok) ++count;
    }
    if (count != 1) return false;
  }
  return std::all_of(checks.begin(), checks.end(), [](auto& ch) { return ch.second; });
}

/// Decides an element-level property; returns a certificate with the least
/// witness when it holds.
inline std::optional<Certificate> element_property(const RingAnalysis& A, ElementId a, PropertyName name) {
  const FiniteRing& R = A.ring();
  if (!is_element_level(name))
    throw UsageError("'" + std::string(to_string(name)) + "' is a ring-level property");
  if (a.index() >= R.order()) throw UsageError("element index out of range");

  Certificate c{name, a, {}, {}, std::nullopt};
  if (auto flavor = detail::spectral_flavor(name)) {
    auto candidates = spectral_candidates(A, a, *flavor);
    if (candidates.empty()) return std::nullopt;
    c.witnesses = {{"p", candidates.front()}};
    c.checks = certificate_checks(A, c);
    return c;
  }

  std::optional<ElementId> first;
  std::size_t count = 0;
  for (auto e : A.idempotent_list()) {
    const ElementId rest = R.sub(a, e);
    bool ok = false;
    switch (name) {
      case PropertyName::clean:
      case PropertyName::uniquely_clean: ok = R.is_unit(rest); break;
      case PropertyName::strongly_clean: ok = R.is_unit(rest) && R.commute(e, rest); break;
      case PropertyName::j_clean: ok = A.jacobson().contains(rest); break;
      case PropertyName::strongly_j_clean: ok = A.jacobson().contains(rest) && R.commute(e, rest); break;
      case PropertyName::delta_r_clean:
      case PropertyName::uniquely_delta_r_clean: ok = A.delta().contains(rest); break;
      case PropertyName::strongly_delta_r_clean: ok = A.delta().contains(rest) && R.commute(e, rest); break;
      default: break;
    }
    if (ok) {
      ++count;
      if (!first) first = e;
    }
  }
  const bool unique = name == PropertyName::uniquely_clean || name == PropertyName::uniquely_delta_r_clean;
  if (!first || (unique && count != 1)) return std::nullopt;
  const bool unit_part =
      name == PropertyName::clean || name == PropertyName::strongly_clean || name == PropertyName::uniquely_clean;
  c.witnesses = {{"e", *first}, {unit_part ? "u" : "w", R.sub(a, *first)}};
  if (unique) c.witness_count = count;
  c.checks = certificate_checks(A, c);
  return c;
}

inline bool element_has(const RingAnalysis& A, ElementId a, PropertyName name) {
  return element_property(A, a, name).has_value();
}

// --- ring-level properties ----------------------------------------------------

struct RingPropertyResult {
  bool holds = true;
  /// Least failing element when the property fails.
  std::optional<ElementId> witness;
  std::string detail;

  explicit operator bool() const { return holds; }
};

namespace detail {

inline RingPropertyResult fail_at(ElementId a, std::string detail = {}) { return {false, a, std::move(detail)}; }

template <typename Pred>
RingPropertyResult for_all_elements(const FiniteRing& R, Pred&& pred) {
  for (auto a : R.elements())
    if (!pred(a)) return fail_at(a);
  return {};
}

/// The non-units form a two-sided ideal; least offending non-unit otherwise.
inline RingPropertyResult nonunits_form_ideal(const RingAnalysis& A) {
  const FiniteRing& R = A.ring();
  const ElementSet nonunits = A.units().complement();
  for (auto x : nonunits.members()) {
    for (auto y : nonunits.members())
      if (R.is_unit(R.add(x, y))) return fail_at(x, "sum with " + std::to_string(y.value) + " is a unit");
    for (auto r : R.elements())
      if (R.is_unit(R.mul(x, r)) || R.is_unit(R.mul(r, x)))
        return fail_at(x, "product with " + std::to_string(r.value) + " is a unit");
  }
  return {};
}

}  // namespace detail

/// Decides a ring-level property. Element-level names are lifted by
/// quantifying over every element; the witness is then the least element
/// without the property.
inline RingPropertyResult ring_property(const RingAnalysis& A, PropertyName name) {
  const FiniteRing& R = A.ring();
  if (is_element_level(name))
    return detail::for_all_elements(R, [&](ElementId a) { return element_has(A, a, name); });

  switch (name) {
    case PropertyName::boolean:
      return detail::for_all_elements(R, [&](ElementId a) { return R.is_idempotent(a); });
    case PropertyName::abelian:
      for (auto e : A.idempotent_list())
        for (auto x : R.elements())
          if (!R.commute(e, x))
            return detail::fail_at(e, "idempotent does not commute with " + std::to_string(x.value));
      return {};
    case PropertyName::local: {
      if (R.is_trivial()) return {true, std::nullopt, "trivial ring"};
      auto by_units = detail::nonunits_form_ideal(A);
      const bool one_maximal = A.lattice().maximal().size() == 1;
      if (by_units.holds != one_maximal)
        throw ComputationFault("local: non-unit and maximal-ideal tests disagree on " + R.name());
      return by_units;
    }
    case PropertyName::semisimple:
      for (auto x : A.jacobson().members())
        if (x != R.zero()) return detail::fail_at(x, "nonzero element of J(R)");
      return {};
    case PropertyName::von_neumann_regular:
      return detail::for_all_elements(R, [&](ElementId a) {
        for (auto b : R.elements())
          if (R.mul(R.mul(a, b), a) == a) return true;
        return false;
      });
    case PropertyName::strongly_regular:
      return detail::for_all_elements(R, [&](ElementId a) {
        const ElementId a2 = R.mul(a, a);
        for (auto b : R.elements())
          if (R.mul(a2, b) == a) return true;
        return false;
      });
    case PropertyName::strongly_pi_regular:
      return detail::for_all_elements(R, [&](ElementId a) {
        ElementId an = a;
        for (std::size_t n = 1; n <= R.order(); ++n) {
          const ElementId an1 = R.mul(an, a);
          for (auto x : R.elements())
            if (R.mul(an1, x) == an) return true;
          an = an1;
        }
        return false;
      });
    case PropertyName::exchange:
      return detail::for_all_elements(R, [&](ElementId a) {
        const ElementSet& aR = A.lattice().principal(a);
        const ElementSet& bR = A.lattice().principal(R.sub(R.one(), a));
        for (auto e : A.idempotent_list())
          if (aR.contains(e) && bR.contains(R.sub(R.one(), e))) return true;
        return false;
      });
    case PropertyName::right_pp:
      // aR is projective iff the right annihilator of a is eR for an idempotent e.
      return detail::for_all_elements(R, [&](ElementId a) {
        ElementSet ann(R.order());
        for (auto x : R.elements())
          if (R.mul(a, x) == R.zero()) ann.insert(x);
        return A.lattice().summand_unchecked(ann).has_value();
      });
    default: break;
  }
  throw UsageError("unhandled property");
}

inline bool ring_has(const RingAnalysis& A, PropertyName name) { return ring_property(A, name).holds; }

struct LiftResult {
  bool holds = true;
  std::optional<ElementId> failing;
};

/// Idempotents of R/I lift: every a with a^2 - a in I has an idempotent e
/// with a - e in I.
inline LiftResult idempotents_lift(const FiniteRing& R, const ElementSet& I) {
  if (I.ring_order() != R.order() || !is_two_sided_ideal(R, I))
    throw UsageError("idempotents_lift: subset is not a two-sided ideal");
  const auto idem = idempotents(R).members();
  for (auto a : R.elements()) {
    if (!I.contains(R.sub(R.mul(a, a), a))) continue;
    bool lifted = false;
    for (auto e : idem)
      if (I.contains(R.sub(a, e))) {
        lifted = true;
        break;
      }
    if (!lifted) return {false, a};
  }
  return {};
}

}  // namespace ringlab
