#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/presets.hpp"

using namespace ringlab;
using oracle::Mask;

namespace {

std::vector<Mask> sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Mask> masks(const std::vector<ElementSet>& v) {
  std::vector<Mask> out;
  for (const auto& s : v) out.push_back(oracle::from(s));
  return out;
}

ElementSet to_set(const Mask& m) {
  ElementSet s(m.size());
  for (auto i : oracle::indices(m)) s.insert(ElementId(i));
  return s;
}

Mask set_sum(const oracle::Tables& T, const Mask& a, const Mask& b) {
  Mask m(T.n);
  for (std::uint32_t x = 0; x < T.n; ++x)
    for (std::uint32_t y = 0; y < T.n; ++y)
      if (a[x] && b[y]) m[T.plus(x, y)] = true;
  return m;
}

}  // namespace

TEST(RightIdeals, LatticeMatchesSubsetEnumeration) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    EXPECT_EQ(sorted(masks(all_right_ideals(R))), sorted(oracle::right_ideals(T)));
    EXPECT_EQ(sorted(masks(two_sided_ideals(R))), sorted(oracle::right_ideals(T, true)));
  }
}

TEST(RightIdeals, CanonicalOrderIsByCountThenMask) {
  FiniteRing R = build_preset("tri:2:zmod:2");
  auto ideals = all_right_ideals(R);
  for (std::size_t i = 1; i < ideals.size(); ++i) EXPECT_LE(ideals[i - 1].count(), ideals[i].count());
  EXPECT_EQ(ideals.front().count(), 1u);
  EXPECT_TRUE(ideals.back().is_full());
}

TEST(RightIdeals, KnownCounts) {
  EXPECT_EQ(all_right_ideals(build_zmod(12)).size(), 6u);  // divisors of 12
  EXPECT_EQ(all_right_ideals(build_preset("mat:2:zmod:3")).size(), 6u);  // 0, R and 4 lines
  EXPECT_EQ(two_sided_ideals(build_preset("mat:2:zmod:3")).size(), 2u);
}

TEST(RightIdeals, PrincipalIdealIsGeneratedSet) {
  for (const auto& p : oracle::small_presets()) {
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    for (auto a : R.elements()) {
      Mask m(T.n);
      for (std::uint32_t r = 0; r < T.n; ++r) m[T.times(a.value, r)] = true;
      EXPECT_EQ(oracle::from(principal_right_ideal(R, a)), m) << p;
    }
  }
}

TEST(LatticeQueries, EssentialMaximalSocleMatchOracle) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    auto ideals = oracle::right_ideals(T);
    RightIdealLattice L(R);
    for (const auto& I : ideals) EXPECT_EQ(L.is_essential(to_set(I)), oracle::essential(ideals, I));
    EXPECT_EQ(sorted(masks(L.maximal())), sorted(oracle::maximal(ideals)));
    EXPECT_EQ(oracle::from(L.socle()), oracle::socle(ideals));
  }
}

TEST(LatticeQueries, DeltaSmallMatchesDefinition) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    auto ideals = oracle::right_ideals(T);
    RightIdealLattice L(R);
    for (const auto& I : ideals) {
      bool small = true;
      for (const auto& K : ideals)
        if (oracle::count(K) < T.n && oracle::essential(ideals, K) && oracle::count(set_sum(T, I, K)) == T.n)
          small = false;
      EXPECT_EQ(L.is_delta_small(to_set(I)), small);
    }
  }
}

TEST(LatticeQueries, DirectSummandsAndCores) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    auto ideals = oracle::right_ideals(T);
    RightIdealLattice L(R);
    for (const auto& I : ideals) {
      std::optional<std::uint32_t> gen;
      for (std::uint32_t e = 0; e < T.n && !gen; ++e) {
        if (T.times(e, e) != e) continue;
        Mask eR(T.n);
        for (std::uint32_t r = 0; r < T.n; ++r) eR[T.times(e, r)] = true;
        if (eR == I) gen = e;
      }
      auto got = L.direct_summand_generator(to_set(I));
      ASSERT_EQ(got.has_value(), gen.has_value());
      if (gen) EXPECT_EQ(got->value, *gen);

      Mask core(T.n);
      for (std::uint32_t a = 0; a < T.n; ++a) {
        bool in = true;
        for (std::uint32_t r = 0; r < T.n && in; ++r) in = I[T.times(r, a)];
        core[a] = in;
      }
      ElementSet c = L.core(to_set(I));
      EXPECT_EQ(oracle::from(c), core);
      EXPECT_TRUE(is_two_sided_ideal(R, c));
      EXPECT_TRUE(c.is_subset_of(to_set(I)));
    }
  }
}

TEST(LatticeQueries, NonIdealArgumentsAreRejected) {
  FiniteRing R = build_zmod(4);
  RightIdealLattice L(R);
  const ElementSet bad = ElementSet::of(4, {0, 1});
  EXPECT_THROW(L.is_essential(bad), UsageError);
  EXPECT_THROW(L.is_delta_small(bad), UsageError);
  EXPECT_THROW(L.core(bad), UsageError);
  EXPECT_THROW(L.direct_summand_generator(bad), UsageError);
}

TEST(LatticeQueries, ClosuresAreSmallestContainingIdeals) {
  FiniteRing R = build_preset("tri:2:zmod:2");
  oracle::Tables T(R);
  for (auto a : R.elements()) {
    const ElementSet g = ElementSet::of(8, {static_cast<int>(a.value)});
    const ElementSet right = right_ideal_closure(R, g);
    const ElementSet two = two_sided_ideal_closure(R, g);
    Mask best_r(T.n, true), best_t(T.n, true);
    for (const auto& I : oracle::right_ideals(T))
      if (I[a.value] && oracle::count(I) < oracle::count(best_r)) best_r = I;
    for (const auto& I : oracle::right_ideals(T, true))
      if (I[a.value] && oracle::count(I) < oracle::count(best_t)) best_t = I;
    EXPECT_EQ(oracle::from(right), best_r);
    EXPECT_EQ(oracle::from(two), best_t);
  }
}
