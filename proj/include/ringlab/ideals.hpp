#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr std::size_t kDefaultLatticeCap = 100000;

/// aR.
inline ElementSet principal_right_ideal(const FiniteRing& R, ElementId a) {
  ElementSet s(R.order());
  for (auto r : R.elements()) s.insert(R.mul(a, r));
  return s;
}

namespace detail {

/// Worklist fixpoint: smallest subgroup containing `gens` and closed under the
/// requested one-sided multiplications.
inline ElementSet closure(const FiniteRing& R, const ElementSet& gens, bool right, bool left) {
  ElementSet s(R.order());
  std::vector<ElementId> members;
  std::vector<ElementId> work;
  auto push = [&](ElementId x) {
    if (!s.contains(x)) {
      s.insert(x);
      work.push_back(x);
    }
  };
  push(R.zero());
  for (auto g : gens.members()) push(g);
  while (!work.empty()) {
    ElementId x = work.back();
    work.pop_back();
    members.push_back(x);
    push(R.neg(x));
    for (std::size_t i = 0; i < members.size(); ++i) push(R.add(x, members[i]));
    for (auto r : R.elements()) {
      if (right) push(R.mul(x, r));
      if (left) push(R.mul(r, x));
    }
  }
  return s;
}

/// Sum of additive subgroups: {i + k}.
inline ElementSet subgroup_sum(const FiniteRing& R, const ElementSet& I, const ElementSet& K) {
  ElementSet s(R.order());
  const auto km = K.members();
  for (auto i : I.members())
    for (auto k : km) s.insert(R.add(i, k));
  return s;
}

/// Closes a family of ideals under pairwise sums. Output sorted canonically.
inline std::vector<ElementSet> sum_closure(const FiniteRing& R, std::vector<ElementSet> seeds, std::size_t cap) {
  std::map<std::vector<bool>, std::size_t> seen;
  std::vector<ElementSet> all;
  auto add = [&](ElementSet s) {
    if (seen.emplace(s.mask(), all.size()).second) {
      all.push_back(std::move(s));
      if (all.size() > cap)
        throw RingError("ideal lattice exceeds the configured cap of " + std::to_string(cap) + " ideals");
    }
  };
  for (auto& s : seeds) add(std::move(s));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (all[i].is_subset_of(all[j]) || all[j].is_subset_of(all[i])) continue;
      add(subgroup_sum(R, all[i], all[j]));
    }
  std::sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return all;
}

inline void require_right_ideal(const FiniteRing& R, const ElementSet& I, const char* op) {
  if (I.ring_order() != R.order() || !is_right_ideal(R, I))
    throw UsageError(std::string(op) + ": subset is not a right ideal");
}

}  // namespace detail

inline ElementSet right_ideal_closure(const FiniteRing& R, const ElementSet& gens) {
  return detail::closure(R, gens, true, false);
}

inline ElementSet two_sided_ideal_closure(const FiniteRing& R, const ElementSet& gens) {
  return detail::closure(R, gens, true, true);
}

/// Every right ideal, as sums of principal right ideals. Sorted by
/// (cardinality, mask).
inline std::vector<ElementSet> all_right_ideals(const FiniteRing& R, std::size_t cap = kDefaultLatticeCap) {
  std::vector<ElementSet> seeds;
  seeds.push_back(ElementSet::of(R.order(), {static_cast<int>(R.zero().value)}));
  for (auto a : R.elements()) seeds.push_back(principal_right_ideal(R, a));
  return detail::sum_closure(R, std::move(seeds), cap);
}

inline std::vector<ElementSet> two_sided_ideals(const FiniteRing& R, std::size_t cap = kDefaultLatticeCap) {
  std::vector<ElementSet> seeds;
  seeds.push_back(ElementSet::of(R.order(), {static_cast<int>(R.zero().value)}));
  std::map<std::vector<bool>, bool> seen;
  for (auto a : R.elements()) {
    ElementSet g(R.order());
    g.insert(a);
    auto s = two_sided_ideal_closure(R, g);
    if (seen.emplace(s.mask(), true).second) seeds.push_back(std::move(s));
  }
  return detail::sum_closure(R, std::move(seeds), cap);
}

/// Right-ideal lattice of one ring with the queries built on it. Holds a
/// reference to the ring, which must outlive this object.
class RightIdealLattice {
 public:
  explicit RightIdealLattice(const FiniteRing& R, std::size_t cap = kDefaultLatticeCap)
      : ring_(&R), ideals_(all_right_ideals(R, cap)) {
    principal_.reserve(R.order());
    for (auto a : R.elements()) principal_.push_back(principal_right_ideal(R, a));
    essential_.reserve(ideals_.size());
    for (const auto& I : ideals_) essential_.push_back(essential_unchecked(I));
  }

  const FiniteRing& ring() const { return *ring_; }
  const std::vector<ElementSet>& ideals() const { return ideals_; }
  const ElementSet& principal(ElementId a) const { return principal_[a.index()]; }
  bool essential_at(std::size_t i) const { return essential_[i]; }

  std::optional<std::size_t> find(const ElementSet& I) const {
    for (std::size_t i = 0; i < ideals_.size(); ++i)
      if (ideals_[i] == I) return i;
    return std::nullopt;
  }

  ElementSet sum(const ElementSet& I, const ElementSet& K) const { return detail::subgroup_sum(*ring_, I, K); }

  bool is_essential(const ElementSet& I) const {
    detail::require_right_ideal(*ring_, I, "is_essential");
    return essential_unchecked(I);
  }

  std::vector<ElementSet> maximal() const {
    std::vector<ElementSet> out;
    for (const auto& I : ideals_) {
      if (I.is_full()) continue;
      bool covered = false;
      for (const auto& K : ideals_)
        if (!K.is_full() && K.count() > I.count() && I.is_subset_of(K)) {
          covered = true;
          break;
        }
      if (!covered) out.push_back(I);
    }
    return out;
  }

  std::vector<ElementSet> minimal() const {
    std::vector<ElementSet> out;
    for (const auto& I : ideals_) {
      if (I.count() <= 1) continue;
      bool has_smaller = false;
      for (const auto& K : ideals_)
        if (K.count() > 1 && K.count() < I.count() && K.is_subset_of(I)) {
          has_smaller = true;
          break;
        }
      if (!has_smaller) out.push_back(I);
    }
    return out;
  }

  ElementSet socle() const {
    ElementSet s = ElementSet::of(ring_->order(), {static_cast<int>(ring_->zero().value)});
    for (const auto& M : minimal()) s = sum(s, M);
    return s;
  }

  /// Least idempotent e with eR = I, if any.
  std::optional<ElementId> direct_summand_generator(const ElementSet& I) const {
    detail::require_right_ideal(*ring_, I, "is_direct_summand");
    return summand_unchecked(I);
  }

  bool is_delta_small(const ElementSet& I) const {
    detail::require_right_ideal(*ring_, I, "is_delta_small");
    for (std::size_t k = 0; k < ideals_.size(); ++k) {
      const auto& K = ideals_[k];
      if (K.is_full() || !essential_[k]) continue;
      if (sum(I, K).is_full()) return false;
    }
    return true;
  }

  /// Largest two-sided ideal inside M: {a : Ra is contained in M}.
  ElementSet core(const ElementSet& M) const {
    detail::require_right_ideal(*ring_, M, "ideal_core");
    ElementSet out(ring_->order());
    for (auto a : ring_->elements()) {
      if (!M.contains(a)) continue;
      bool inside = true;
      for (auto r : ring_->elements())
        if (!M.contains(ring_->mul(r, a))) {
          inside = false;
          break;
        }
      if (inside) out.insert(a);
    }
    return out;
  }

  std::optional<ElementId> summand_unchecked(const ElementSet& I) const {
    for (auto e : ring_->elements())
      if (ring_->is_idempotent(e) && principal_[e.index()] == I) return e;
    return std::nullopt;
  }

 private:
  bool essential_unchecked(const ElementSet& I) const {
    for (auto x : ring_->elements()) {
      if (x == ring_->zero()) continue;
      if ((I & principal_[x.index()]).count() <= 1) return false;
    }
    return true;
  }

  const FiniteRing* ring_;
  std::vector<ElementSet> ideals_;
  std::vector<ElementSet> principal_;
  std::vector<bool> essential_;
};

inline bool is_essential(const FiniteRing& R, const ElementSet& I) { return RightIdealLattice(R).is_essential(I); }

inline std::vector<ElementSet> maximal_right_ideals(const FiniteRing& R) { return RightIdealLattice(R).maximal(); }

inline ElementSet socle(const FiniteRing& R) { return RightIdealLattice(R).socle(); }

inline std::optional<ElementId> is_direct_summand(const FiniteRing& R, const ElementSet& I) {
  return RightIdealLattice(R).direct_summand_generator(I);
}

/// I is delta-small iff no proper essential right ideal K has I + K = R.
/// R/K is cyclic, and a cyclic module R/K is singular exactly when K is essential.
inline bool is_delta_small(const FiniteRing& R, const ElementSet& I) { return RightIdealLattice(R).is_delta_small(I); }

inline ElementSet ideal_core(const FiniteRing& R, const ElementSet& M) { return RightIdealLattice(R).core(M); }

}  // namespace ringlab
