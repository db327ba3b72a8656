#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/ideals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// The five characterizations of delta(R) and their consensus.
struct DeltaComputation {
  std::array<ElementSet, 5> routes;
  ElementSet consensus;
  bool agree = false;

  const ElementSet& r1() const { return routes[0]; }
  const ElementSet& r2() const { return routes[1]; }
  const ElementSet& r3() const { return routes[2]; }
  const ElementSet& r4() const { return routes[3]; }
  const ElementSet& r5() const { return routes[4]; }
};

/// Raised when the delta characterizations disagree; carries every route.
class DeltaDisagreement : public ComputationFault {
 public:
  explicit DeltaDisagreement(DeltaComputation computation, const std::string& ring_name)
      : ComputationFault(describe(computation, ring_name)), computation_(std::move(computation)) {}

  const DeltaComputation& computation() const { return computation_; }

 private:
  static std::string describe(const DeltaComputation& d, const std::string& ring_name) {
    std::ostringstream msg;
    msg << "delta characterizations disagree on " << ring_name << ":";
    for (std::size_t i = 0; i < d.routes.size(); ++i) {
      msg << " R" << (i + 1) << "={";
      bool first = true;
      for (auto m : d.routes[i].indices()) {
        msg << (first ? "" : ",") << m;
        first = false;
      }
      msg << "}";
    }
    return msg.str();
  }

  DeltaComputation computation_;
};

/// Intersection of a family of subsets; the empty family gives the whole ring.
inline ElementSet intersect_all(std::size_t order, const std::vector<ElementSet>& family) {
  ElementSet out = ElementSet::full(order);
  for (const auto& S : family) out = out & S;
  return out;
}

inline ElementSet jacobson_by_maximal_ideals(const RightIdealLattice& L) {
  return intersect_all(L.ring().order(), L.maximal());
}

/// {x : 1 - xy is a unit for every y}.
inline ElementSet jacobson_by_units(const FiniteRing& R) {
  ElementSet out(R.order());
  for (auto x : R.elements()) {
    bool ok = true;
    for (auto y : R.elements())
      if (!R.is_unit(R.sub(R.one(), R.mul(x, y)))) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

inline ElementSet jacobson(const RightIdealLattice& L) {
  auto by_ideals = jacobson_by_maximal_ideals(L);
  auto by_units = jacobson_by_units(L.ring());
  if (!(by_ideals == by_units))
    throw ComputationFault("Jacobson radical: maximal-ideal and unit characterizations disagree on " +
                           L.ring().name());
  return by_ideals;
}

inline ElementSet jacobson(const FiniteRing& R) { return jacobson(RightIdealLattice(R)); }

/// Intersection of the essential maximal right ideals.
inline ElementSet delta_r1(const RightIdealLattice& L) {
  std::vector<ElementSet> family;
  for (auto& M : L.maximal())
    if (L.is_essential(M)) family.push_back(M);
  return intersect_all(L.ring().order(), family);
}

/// Sum of all delta-small right ideals, which must itself be delta-small.
inline ElementSet delta_r2(const RightIdealLattice& L) {
  const FiniteRing& R = L.ring();
  ElementSet total = ElementSet::of(R.order(), {static_cast<int>(R.zero().value)});
  for (const auto& I : L.ideals())
    if (L.is_delta_small(I)) total = L.sum(total, I);
  if (!L.is_delta_small(total))
    throw ComputationFault("sum of delta-small right ideals is not delta-small in " + R.name());
  return total;
}

/// {x : xR + K = R implies K is a direct summand, for every right ideal K}.
inline ElementSet delta_r3(const RightIdealLattice& L) {
  const FiniteRing& R = L.ring();
  const auto& ideals = L.ideals();
  std::vector<bool> summand(ideals.size());
  for (std::size_t k = 0; k < ideals.size(); ++k) summand[k] = L.summand_unchecked(ideals[k]).has_value();
  ElementSet out(R.order());
  for (auto x : R.elements()) {
    bool ok = true;
    for (std::size_t k = 0; k < ideals.size() && ok; ++k)
      if (!summand[k] && L.sum(L.principal(x), ideals[k]).is_full()) ok = false;
    if (ok) out.insert(x);
  }
  return out;
}

/// Intersection of the cores of the essential maximal right ideals (the
/// annihilators of the singular simple modules R/M).
inline ElementSet delta_r4(const RightIdealLattice& L) {
  std::vector<ElementSet> family;
  for (auto& M : L.maximal())
    if (L.is_essential(M)) family.push_back(L.core(M));
  return intersect_all(L.ring().order(), family);
}

/// {x : for every y, (1+xy)R has a complement inside the socle}.
inline ElementSet delta_r5(const RightIdealLattice& L) {
  const FiniteRing& R = L.ring();
  const ElementSet soc = L.socle();
  std::vector<const ElementSet*> semisimple;
  for (const auto& Y : L.ideals())
    if (Y.is_subset_of(soc)) semisimple.push_back(&Y);

  // has_complement[u]: (u)R + Y = R and (u)R meets Y trivially for some Y in the socle.
  std::vector<int> has_complement(R.order(), -1);
  auto complemented = [&](ElementId u) {
    int& slot = has_complement[u.index()];
    if (slot < 0) {
      slot = 0;
      const auto& uR = L.principal(u);
      for (const ElementSet* Y : semisimple)
        if ((uR & *Y).count() == 1 && L.sum(uR, *Y).is_full()) {
          slot = 1;
          break;
        }
    }
    return slot == 1;
  };

  ElementSet out(R.order());
  for (auto x : R.elements()) {
    bool ok = true;
    for (auto y : R.elements())
      if (!complemented(R.add(R.one(), R.mul(x, y)))) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

inline ElementSet delta_r1(const FiniteRing& R) { return delta_r1(RightIdealLattice(R)); }
inline ElementSet delta_r2(const FiniteRing& R) { return delta_r2(RightIdealLattice(R)); }
inline ElementSet delta_r3(const FiniteRing& R) { return delta_r3(RightIdealLattice(R)); }
inline ElementSet delta_r4(const FiniteRing& R) { return delta_r4(RightIdealLattice(R)); }
inline ElementSet delta_r5(const FiniteRing& R) { return delta_r5(RightIdealLattice(R)); }

/// Runs all five routes without judging them.
inline DeltaComputation delta_routes(const RightIdealLattice& L) {
  DeltaComputation d;
  d.routes = {delta_r1(L), delta_r2(L), delta_r3(L), delta_r4(L), delta_r5(L)};
  d.agree = true;
  for (std::size_t i = 1; i < d.routes.size(); ++i) d.agree = d.agree && d.routes[i] == d.routes[0];
  if (d.agree) d.consensus = d.routes[0];
  return d;
}

/// delta(R) by five-way consensus. Throws DeltaDisagreement if the routes
/// differ and ComputationFault if the consensus is not a two-sided ideal
/// containing J(R).
inline DeltaComputation delta(const RightIdealLattice& L, const ElementSet& jacobson_radical) {
  DeltaComputation d = delta_routes(L);
  if (!d.agree) throw DeltaDisagreement(d, L.ring().name());
  if (!is_two_sided_ideal(L.ring(), d.consensus))
    throw ComputationFault("delta(R) is not a two-sided ideal in " + L.ring().name());
  if (!jacobson_radical.is_subset_of(d.consensus))
    throw ComputationFault("J(R) is not contained in delta(R) in " + L.ring().name());
  return d;
}

inline DeltaComputation delta(const RightIdealLattice& L) { return delta(L, jacobson(L)); }

inline DeltaComputation delta(const FiniteRing& R) { return delta(RightIdealLattice(R)); }

/// {a : 1 + ax is a unit for every x commuting with a}.
inline ElementSet qnil_set(const FiniteRing& R) {
  ElementSet out(R.order());
  for (auto a : R.elements()) {
    bool ok = true;
    for (auto x : R.elements())
      if (R.commute(a, x) && !R.is_unit(R.add(R.one(), R.mul(a, x)))) {
        ok = false;
        break;
      }
    if (ok) out.insert(a);
  }
  return out;
}

}  // namespace ringlab
