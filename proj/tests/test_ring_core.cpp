#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "ringlab/io.hpp"
#include "ringlab/presets.hpp"

using namespace ringlab;

namespace {

// Row-major digits, most significant first.
std::vector<std::uint32_t> digits_of(std::uint32_t x, std::uint32_t base, std::size_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::size_t i = k; i-- > 0;) {
    d[i] = x % base;
    x /= base;
  }
  return d;
}

std::uint32_t index_of(const std::vector<std::uint32_t>& d, std::uint32_t base) {
  std::uint32_t x = 0;
  for (auto v : d) x = x * base + v;
  return x;
}

struct EnvCap {
  explicit EnvCap(const char* v) { setenv("RINGLAB_SIZE_CAP", v, 1); }
  ~EnvCap() { unsetenv("RINGLAB_SIZE_CAP"); }
};

}  // namespace

TEST(Zmod, TablesAreModularArithmetic) {
  for (std::size_t n = 1; n <= 12; ++n) {
    FiniteRing R = build_zmod(n);
    ASSERT_EQ(R.order(), n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        EXPECT_EQ(R.add(ElementId(a), ElementId(b)).value, (a + b) % n);
        EXPECT_EQ(R.mul(ElementId(a), ElementId(b)).value, (a * b) % n);
      }
    EXPECT_TRUE(verify_axioms(R, AxiomScope::with_identity).empty());
  }
}

TEST(Zmod, TrivialRingHasZeroEqualOne) {
  FiniteRing R = build_zmod(1);
  EXPECT_TRUE(R.is_trivial());
  EXPECT_EQ(R.zero(), R.one());
}

TEST(Zmod, ZeroOrderIsRejected) { EXPECT_THROW(build_zmod(0), RingError); }

TEST(BasicSets, MatchOracle) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    auto sets = element_sets(R);
    EXPECT_EQ(oracle::from(sets.units), oracle::units(T));
    EXPECT_EQ(oracle::from(sets.idempotents), oracle::idempotents(T));
    EXPECT_EQ(oracle::from(sets.nilpotents), oracle::nilpotents(T));
  }
}

TEST(Units, Z8HasFourUnitsAndTwoIdempotents) {
  FiniteRing R = build_zmod(8);
  EXPECT_EQ(units(R).indices(), (std::vector<std::uint32_t>{1, 3, 5, 7}));
  EXPECT_EQ(idempotents(R).indices(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(nilpotents(R).indices(), (std::vector<std::uint32_t>{0, 2, 4, 6}));
}

TEST(Axioms, EveryPresetSatisfiesTheAxioms) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    EXPECT_TRUE(verify_axioms(build_preset(p), AxiomScope::with_identity).empty());
  }
}

TEST(Axioms, CorruptedTableReportsWitness) {
  FiniteRing Z4 = build_zmod(4);
  auto mul = Z4.mul_table();
  mul[2 * 4 + 3] = 1;  // 2*3 := 1
  FiniteRing bad("bad", 4, Z4.add_table(), mul, Z4.zero(), Z4.one());
  auto v = verify_axioms(bad, AxiomScope::with_identity);
  ASSERT_FALSE(v.empty());
  EXPECT_FALSE(v.front().witnesses.empty());
}

TEST(Axioms, MissingIdentityIsReported) {
  FiniteRing Z4 = build_zmod(4);
  FiniteRing bad("bad", 4, Z4.add_table(), Z4.mul_table(), Z4.zero(), ElementId(2));
  EXPECT_FALSE(verify_axioms(bad, AxiomScope::with_identity).empty());
  EXPECT_TRUE(verify_axioms(bad, AxiomScope::without_identity).empty());
}

TEST(Product, LastFactorFastestComponentwise) {
  FiniteRing A = build_zmod(2), B = build_zmod(3);
  FiniteRing P = build_product({A, B});
  ASSERT_EQ(P.order(), 6u);
  for (std::uint32_t x = 0; x < 6; ++x)
    for (std::uint32_t y = 0; y < 6; ++y) {
      const std::uint32_t a1 = x / 3, b1 = x % 3, a2 = y / 3, b2 = y % 3;
      EXPECT_EQ(P.add(ElementId(x), ElementId(y)).value, ((a1 + a2) % 2) * 3 + (b1 + b2) % 3);
      EXPECT_EQ(P.mul(ElementId(x), ElementId(y)).value, ((a1 * a2) % 2) * 3 + (b1 * b2) % 3);
    }
  EXPECT_EQ(P.one().value, 4u);
}

TEST(Product, FactorPermutationPreservesInvariants) {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"product:[zmod:2,zmod:3]", "product:[zmod:3,zmod:2]"},
      {"product:[zmod:4,tri:2:zmod:2]", "product:[tri:2:zmod:2,zmod:4]"},
      {"product:[zmod:2,zmod:2,zmod:3]", "product:[zmod:3,zmod:2,zmod:2]"}};
  for (auto& [l, r] : pairs) {
    FiniteRing A = build_preset(l), B = build_preset(r);
    auto sa = element_sets(A), sb = element_sets(B);
    EXPECT_EQ(sa.units.count(), sb.units.count()) << l;
    EXPECT_EQ(sa.idempotents.count(), sb.idempotents.count()) << l;
    EXPECT_EQ(sa.nilpotents.count(), sb.nilpotents.count()) << l;
  }
}

TEST(MatrixRing, MultiplicationMatchesExplicitMatrices) {
  for (std::uint32_t n : {2u, 3u}) {
    FiniteRing M = build_matrix_ring(build_zmod(n), 2);
    ASSERT_EQ(M.order(), n * n * n * n);
    for (std::uint32_t x = 0; x < M.order(); ++x)
      for (std::uint32_t y = 0; y < M.order(); ++y) {
        auto a = digits_of(x, n, 4), b = digits_of(y, n, 4);
        std::vector<std::uint32_t> c{(a[0] * b[0] + a[1] * b[2]) % n, (a[0] * b[1] + a[1] * b[3]) % n,
                                     (a[2] * b[0] + a[3] * b[2]) % n, (a[2] * b[1] + a[3] * b[3]) % n};
        ASSERT_EQ(M.mul(ElementId(x), ElementId(y)).value, index_of(c, n));
      }
    EXPECT_EQ(M.one().value, index_of({1, 0, 0, 1}, n));
  }
}

TEST(MatrixRing, UpperTriangularMatchesExplicitMatrices) {
  for (std::uint32_t n : {2u, 3u}) {
    FiniteRing T = build_upper_triangular(build_zmod(n), 2);
    ASSERT_EQ(T.order(), n * n * n);
    for (std::uint32_t x = 0; x < T.order(); ++x)
      for (std::uint32_t y = 0; y < T.order(); ++y) {
        auto a = digits_of(x, n, 3), b = digits_of(y, n, 3);  // (a11, a12, a22)
        std::vector<std::uint32_t> c{(a[0] * b[0]) % n, (a[0] * b[1] + a[1] * b[2]) % n, (a[2] * b[2]) % n};
        ASSERT_EQ(T.mul(ElementId(x), ElementId(y)).value, index_of(c, n));
      }
  }
}

TEST(MatrixRing, ConstantDiagonalMatchesExplicitMatrices) {
  // CT3: digits (d, a12, a13, a23).
  const std::uint32_t n = 2;
  FiniteRing C = build_constant_diagonal_triangular(build_zmod(n), 3);
  ASSERT_EQ(C.order(), 16u);
  for (std::uint32_t x = 0; x < 16; ++x)
    for (std::uint32_t y = 0; y < 16; ++y) {
      auto a = digits_of(x, n, 4), b = digits_of(y, n, 4);
      std::vector<std::uint32_t> c{(a[0] * b[0]) % n, (a[0] * b[1] + a[1] * b[0]) % n,
                                   (a[0] * b[2] + a[1] * b[3] + a[2] * b[0]) % n, (a[0] * b[3] + a[3] * b[0]) % n};
      ASSERT_EQ(C.mul(ElementId(x), ElementId(y)).value, index_of(c, n));
    }
}

TEST(MatrixRing, SizeOneReturnsBase) {
  FiniteRing Z3 = build_zmod(3);
  EXPECT_TRUE(build_matrix_ring(Z3, 1).same_tables(Z3));
  EXPECT_TRUE(build_upper_triangular(Z3, 1).same_tables(Z3));
  EXPECT_TRUE(build_constant_diagonal_triangular(Z3, 1).same_tables(Z3));
}

TEST(SizeCap, DefaultCapRejectsLargeRings) {
  EXPECT_THROW(build_zmod(kDefaultSizeCap + 1), SizeCapError);
  EXPECT_THROW(build_preset("mat:3:zmod:3"), SizeCapError);
  EXPECT_NO_THROW(build_zmod(kDefaultSizeCap));
}

TEST(SizeCap, EnvironmentOverridesCap) {
  EnvCap cap("10");
  EXPECT_EQ(size_cap(), 10u);
  EXPECT_THROW(build_zmod(11), SizeCapError);
  EXPECT_NO_THROW(build_zmod(10));
}

TEST(Dorroh, RegularExtensionOfZ2) {
  FiniteRing D = build_preset("dorroh:[zmod:2]");
  EXPECT_EQ(D.order(), 4u);
  EXPECT_TRUE(verify_axioms(D, AxiomScope::with_identity).empty());
  // (r,v)(s,w) = (rs, rw + vs + vw), index r*|V| + v.
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y) {
      const std::uint32_t r = x / 2, v = x % 2, s = y / 2, w = y % 2;
      EXPECT_EQ(D.mul(ElementId(x), ElementId(y)).value, ((r * s) % 2) * 2 + (r * w + v * s + v * w) % 2);
    }
}

TEST(Dorroh, ScalarActionRequiresCompatibleCharacteristic) {
  EXPECT_NO_THROW(build_preset("dorroh:[zmod:4,zmod:2]"));
  EXPECT_THROW(build_preset("dorroh:[zmod:3,zmod:2]"), RingError);
}

TEST(Dorroh, BrokenActionNamesFailingTriple) {
  DorrohData d = regular_dorroh_data(build_zmod(3));
  d.left_action[1 * 3 + 1] = 2;  // 1.1 := 2 breaks unitality
  EXPECT_FALSE(dorroh_violations(d).empty());
  EXPECT_THROW(build_dorroh(d), RingError);
}

TEST(Quotient, Z4ModTwoIsZ2) {
  auto q = build_quotient(build_zmod(4), ElementSet::of(4, {0, 2}));
  EXPECT_TRUE(is_zmod2(q.ring));
  EXPECT_EQ(q.project(ElementId(3)).value, 1u);
}

TEST(Quotient, ProjectionIsHomomorphismForEveryIdeal) {
  for (const auto& p : oracle::small_presets()) {
    SCOPED_TRACE(p);
    FiniteRing R = build_preset(p);
    oracle::Tables T(R);
    for (const auto& I : oracle::right_ideals(T, true)) {
      ElementSet S(R.order());
      for (auto i : oracle::indices(I)) S.insert(ElementId(i));
      auto q = build_quotient(R, S);
      EXPECT_EQ(q.ring.order() * S.count(), R.order());
      for (auto a : R.elements())
        for (auto b : R.elements()) {
          ASSERT_EQ(q.project(R.add(a, b)), q.ring.add(q.project(a), q.project(b)));
          ASSERT_EQ(q.project(R.mul(a, b)), q.ring.mul(q.project(a), q.project(b)));
        }
      EXPECT_EQ(q.project(R.one()), q.ring.one());
    }
  }
}

TEST(Quotient, NonIdealIsRejected) {
  EXPECT_THROW(build_quotient(build_zmod(4), ElementSet::of(4, {0, 1})), UsageError);
  // e22 R in T2(Z2): a11 = a12 = 0. A right ideal, but [0 1; 0 0] e22 = e12 escapes it.
  FiniteRing T = build_preset("tri:2:zmod:2");
  const ElementSet row = ElementSet::of(8, {0, 1});
  ASSERT_TRUE(is_right_ideal(T, row));
  ASSERT_FALSE(is_two_sided_ideal(T, row));
  EXPECT_THROW(build_quotient(T, row), UsageError);
}

TEST(Presets, InvalidPresetsThrow) {
  for (const char* p : {"", "zmod:", "zmod:x", "mat:2", "product:[zmod:2", "quot:[zmod:4,{0,1}]", "nope:3",
                        "zmod:4 trailing", "dorroh:[tri:2:zmod:2,zmod:2]"})
    EXPECT_THROW(build_preset(p), RingError) << p;
}

TEST(Io, RoundTripPreservesTables) {
  const auto path = std::filesystem::temp_directory_path() / "ringlab_roundtrip.json";
  for (const auto& p : oracle::small_presets()) {
    FiniteRing R = build_preset(p);
    save_ring(R, path.string());
    FiniteRing S = load_ring(path.string());
    EXPECT_TRUE(R.same_tables(S)) << p;
    EXPECT_EQ(R.name(), S.name());
  }
  std::filesystem::remove(path);
}

TEST(Io, MalformedFilesAreRefused) {
  const auto path = std::filesystem::temp_directory_path() / "ringlab_bad.json";
  auto write = [&](const std::string& s) { std::ofstream(path) << s; };
  write("{not json");
  EXPECT_THROW(load_ring(path.string()), RingFileError);
  write(R"({"order":2,"zero":0,"one":1,"add":[[0,1],[1,0]],"mul":[[0,0],[0,0]]})");
  EXPECT_THROW(load_ring(path.string()), RingFileError);  // no identity
  write(R"({"order":2,"zero":0,"one":1,"add":[[0,1]],"mul":[[0,0],[0,1]]})");
  EXPECT_THROW(load_ring(path.string()), RingFileError);
  EXPECT_THROW(load_ring("/nonexistent/ring.json"), RingFileError);
  std::filesystem::remove(path);
}
