#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringlab/analysis.hpp"
#include "ringlab/presets.hpp"
#include "ringlab/radicals.hpp"

using namespace ringlab;

namespace {

const std::vector<std::string> kLarger{"tri:2:zmod:3", "mat:2:zmod:3", "cdtri:3:zmod:3", "zmod:27",
                                       "product:[zmod:3,tri:2:zmod:2]"};

}  // namespace

TEST(Jacobson, MatchesIntersectionOfMaximalIdeals) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    EXPECT_EQ(oracle::from(jacobson(R)), oracle::jacobson(oracle::right_ideals(T)));
  }
}

TEST(Jacobson, UnitTestRouteAgreesEverywhere) {
  auto all = oracle::small_presets();
  all.insert(all.end(), kLarger.begin(), kLarger.end());
  for (const auto& p : all) {
    FiniteRing R = build_preset(p);
    RightIdealLattice L(R);
    EXPECT_EQ(jacobson_by_units(R), jacobson_by_maximal_ideals(L)) << p;
  }
}

TEST(Delta, MatchesEssentialMaximalIntersection) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    EXPECT_EQ(oracle::from(delta(R).consensus), oracle::delta(oracle::right_ideals(T)));
  }
}

TEST(Delta, FiveRoutesAgreeAndContainJacobson) {
  auto all = oracle::small_presets();
  all.insert(all.end(), kLarger.begin(), kLarger.end());
  for (const auto& p : all) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    RightIdealLattice L(R);
    DeltaComputation d = delta_routes(L);
    ASSERT_TRUE(d.agree);
    for (const auto& r : d.routes) EXPECT_EQ(r, d.consensus);
    EXPECT_TRUE(jacobson(L).is_subset_of(d.consensus));
    EXPECT_TRUE(is_two_sided_ideal(R, d.consensus));
  }
}

TEST(Delta, KnownValues) {
  EXPECT_EQ(delta(build_zmod(4)).consensus.indices(), (std::vector<std::uint32_t>{0, 2}));
  EXPECT_TRUE(delta(build_zmod(3)).consensus.is_full());
  EXPECT_TRUE(delta(build_zmod(6)).consensus.is_full());
  EXPECT_EQ(delta(build_zmod(9)).consensus.indices(), (std::vector<std::uint32_t>{0, 3, 6}));
  // T2(Z2), digits (a11, a12, a22): delta has a11 = 0.
  EXPECT_EQ(delta(build_preset("tri:2:zmod:2")).consensus.indices(), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_EQ(jacobson(build_preset("tri:2:zmod:2")).indices(), (std::vector<std::uint32_t>{0, 2}));
  auto m = delta(build_preset("mat:2:zmod:2"));
  EXPECT_TRUE(m.consensus.is_full());
  EXPECT_EQ(jacobson(build_preset("mat:2:zmod:2")).count(), 1u);
}

TEST(Delta, TrivialRing) {
  auto d = delta(build_zmod(1));
  EXPECT_TRUE(d.agree);
  EXPECT_TRUE(d.consensus.is_full());
}

TEST(Delta, DisagreementIsReportedNotHidden) {
  // Feed delta() a wrong Jacobson radical: J must lie inside delta, so this raises.
  FiniteRing R = build_zmod(4);
  RightIdealLattice L(R);
  EXPECT_THROW(delta(L, ElementSet::full(4)), ComputationFault);
}

TEST(Qnil, MatchesDefinitionAndJacobsonForCommutativeRings) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    oracle::Mask q(T.n);
    for (std::uint32_t a = 0; a < T.n; ++a) {
      bool ok = true;
      for (std::uint32_t x = 0; x < T.n && ok; ++x)
        if (T.times(a, x) == T.times(x, a)) ok = oracle::is_unit(T, T.plus(T.one, T.times(a, x)));
      q[a] = ok;
    }
    EXPECT_EQ(oracle::from(qnil_set(R)), q);
    if (p.starts_with("zmod:") || p.starts_with("product:")) EXPECT_EQ(qnil_set(R), jacobson(R));
  }
}

TEST(Analysis, CachesAgreeWithFreeFunctions) {
  for (const auto& p : oracle::small_presets()) {
    RingAnalysis A(build_preset(p));
    EXPECT_EQ(A.jacobson(), jacobson(A.ring())) << p;
    EXPECT_EQ(A.delta(), delta(A.ring()).consensus) << p;
    EXPECT_EQ(A.socle(), socle(A.ring())) << p;
    EXPECT_EQ(A.qnil(), qnil_set(A.ring())) << p;
  }
}
