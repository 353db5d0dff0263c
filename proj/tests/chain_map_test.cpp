#include <gtest/gtest.h>

#include "cochain/chain_map.hpp"
#include "cochain/error.hpp"
#include "cochain/random.hpp"
#include "oracles.hpp"

namespace cochain {
namespace {

const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

CochainComplex two_term(const Field& field) {
  return CochainComplex::from_sequence(field, 0, {1, 1}, {Matrix::from_ints(field, 1, 1, {1})});
}

CochainComplex point(const Field& field) { return CochainComplex(field, 0, 0, {{0, 1}}); }

Matrix m1(const Field& field, int v) { return Matrix::from_ints(field, 1, 1, {v}); }

TEST(ChainMapConstruct, RejectsBadShapes) {
  EXPECT_THROW(ChainMap(point(Q), point(Q), {{0, Matrix(Q, 2, 1)}}), ShapeMismatch);
  EXPECT_THROW(ChainMap(point(Q), point(F5)), FieldMismatch);
}

TEST(ValidateChainMap, IdentityAndZero) {
  gen::Rng rng(1);
  const CochainComplex a = gen::random_complex(F5, -1, 2, 3, rng);
  const CochainComplex b = gen::random_complex(F5, 0, 3, 3, rng);
  EXPECT_TRUE(validate_chain_map(ChainMap::identity(a)).ok);
  EXPECT_TRUE(validate_chain_map(ChainMap::zero(a, b)).ok);
}

TEST(ValidateChainMap, NonCommutingSquare) {
  // Target F --0--> F. With f^0 = f^1 = 1 the degree-0 square reads 0*1 vs 1*1.
  const CochainComplex b(Q, 0, 1, {{0, 1}, {1, 1}});
  const ChainMap f(two_term(Q), b, {{0, m1(Q, 1)}, {1, m1(Q, 1)}});
  const ChainMapReport r = validate_chain_map(f);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.degree, 0);
  EXPECT_EQ(*r.target_side, m1(Q, 0));
  EXPECT_EQ(*r.source_side, m1(Q, 1));
  EXPECT_THROW(require_valid(f), InvalidChainMap);

  // With f^1 = 0 both sides vanish and the map is fine.
  EXPECT_TRUE(validate_chain_map(ChainMap(two_term(Q), b, {{0, m1(Q, 1)}, {1, m1(Q, 0)}})).ok);
}

TEST(Compose, Examples) {
  gen::Rng rng(2);
  const CochainComplex a = gen::random_complex(Q, 0, 2, 3, rng);
  const CochainComplex b = gen::random_complex(Q, 0, 2, 3, rng);
  const ChainMap f = gen::random_chain_map(a, b, rng);
  EXPECT_EQ(compose_chain_maps(ChainMap::identity(b), f), f);
  EXPECT_EQ(compose_chain_maps(f, ChainMap::zero(b, a)), ChainMap::zero(b, b));

  const CochainComplex p = point(F5);
  const ChainMap two(p, p, {{0, m1(F5, 2)}}), three(p, p, {{0, m1(F5, 3)}});
  EXPECT_EQ(compose_chain_maps(two, three).component(0), m1(F5, 1));

  EXPECT_THROW(compose_chain_maps(f, f), ObjectMismatch);
}

TEST(CheckHomotopy, Examples) {
  const CochainComplex a = two_term(Q);
  const ChainMap id = ChainMap::identity(a), zero = ChainMap::zero(a, a);
  EXPECT_TRUE(check_homotopy(id, id, Homotopy::zero(a, a)));
  EXPECT_TRUE(check_homotopy(id, zero, Homotopy(a, a, {{1, m1(Q, -1)}})));
  EXPECT_FALSE(check_homotopy(id, zero, Homotopy(a, a, {{1, m1(Q, 1)}})));

  const CochainComplex p = point(Q);
  EXPECT_FALSE(check_homotopy(ChainMap::zero(p, p), ChainMap::identity(p), Homotopy::zero(p, p)));
}

TEST(FindHomotopy, Examples) {
  gen::Rng rng(3);
  const CochainComplex c = gen::random_complex(F5, 0, 3, 3, rng);
  const ChainMap f = gen::random_chain_map(c, c, rng);
  const std::optional<Homotopy> same = find_homotopy(f, f);
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(check_homotopy(f, f, *same));

  const CochainComplex a = two_term(Q);
  const std::optional<Homotopy> k = find_homotopy(ChainMap::identity(a), ChainMap::zero(a, a));
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->component(1), m1(Q, -1));

  const CochainComplex p = point(Q);
  EXPECT_FALSE(find_homotopy(ChainMap::identity(p), ChainMap::zero(p, p)).has_value());
}

TEST(FindHomotopy, ShapeErrors) {
  const CochainComplex a = two_term(Q);
  EXPECT_THROW(find_homotopy(ChainMap::identity(a), ChainMap::identity(point(Q))), Error);
}

TEST(Perturb, Examples) {
  gen::Rng rng(4);
  const CochainComplex c = gen::random_complex(Q, 0, 2, 3, rng);
  const ChainMap f = gen::random_chain_map(c, c, rng);
  EXPECT_EQ(perturb_by_homotopy(f, Homotopy::zero(c, c)), f);

  const CochainComplex a = two_term(Q);
  EXPECT_EQ(perturb_by_homotopy(ChainMap::zero(a, a), Homotopy(a, a, {{1, m1(Q, 1)}})),
            ChainMap::identity(a));

  for (int trial = 0; trial < 50; ++trial) {
    const Homotopy k = gen::random_homotopy(c, c, rng);
    const ChainMap g = perturb_by_homotopy(f, k);
    ASSERT_TRUE(validate_chain_map(g).ok);
    ASSERT_TRUE(check_homotopy(f, g, k));
  }
}

TEST(InducedMap, Examples) {
  gen::Rng rng(5);
  const CochainComplex c = gen::random_complex(F5, -1, 2, 4, rng);
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const std::size_t h = cohomology(c, i).dim;
    EXPECT_EQ(induced_cohomology_map(ChainMap::identity(c), i), Matrix::identity(F5, h));
    EXPECT_TRUE(induced_cohomology_map(ChainMap::zero(c, c), i).is_zero());
  }
  for (int trial = 0; trial < 50; ++trial) {
    const ChainMap null = perturb_by_homotopy(ChainMap::zero(c, c), gen::random_homotopy(c, c, rng));
    for (int i = c.lo(); i <= c.hi(); ++i) ASSERT_TRUE(induced_cohomology_map(null, i).is_zero());
  }
}

TEST(QuasiIso, Examples) {
  gen::Rng rng(6);
  const CochainComplex c = gen::random_complex(Q, 0, 2, 3, rng);
  EXPECT_TRUE(is_quasi_iso(ChainMap::identity(c)));
  EXPECT_FALSE(is_quasi_iso(ChainMap::zero(point(Q), CochainComplex::zero(Q))));

  // F -> (F^2 --[[0,1]]--> F) via (1,0)^T. Both sides: H^0 = F, H^1 = 0.
  const CochainComplex b(F2, 0, 1, {{0, 2}, {1, 1}}, {{0, Matrix::from_ints(F2, 1, 2, {0, 1})}});
  ASSERT_EQ(oracle::cohomology_dim_by_enumeration(b, 0), 1u);
  ASSERT_EQ(oracle::cohomology_dim_by_enumeration(b, 1), 0u);
  const ChainMap incl(point(F2), b, {{0, Matrix::from_ints(F2, 2, 1, {1, 0})}});
  EXPECT_TRUE(is_quasi_iso(incl));
  // The zero map loses H^0.
  const ChainMap lost(point(F2), b, {{0, Matrix(F2, 2, 1)}});
  EXPECT_FALSE(is_quasi_iso(lost));
}

TEST(HomotopyEquivalence, Examples) {
  gen::Rng rng(7);
  const CochainComplex c = gen::random_complex(Q, 0, 2, 3, rng);
  const ChainMap id = ChainMap::identity(c);
  EXPECT_TRUE(check_homotopy_equivalence(id, id, Homotopy::zero(c, c), Homotopy::zero(c, c)));

  const CochainComplex a = two_term(Q), z = CochainComplex::zero(Q);
  const ChainMap f = ChainMap::zero(a, z), g = ChainMap::zero(z, a);
  const std::optional<Homotopy> k_a = find_homotopy(compose_chain_maps(g, f), ChainMap::identity(a));
  ASSERT_TRUE(k_a.has_value());
  EXPECT_TRUE(check_homotopy_equivalence(f, g, Homotopy::zero(z, z), *k_a));

  const CochainComplex p = point(Q);
  const ChainMap zp = ChainMap::zero(p, p);
  EXPECT_FALSE(check_homotopy_equivalence(zp, zp, Homotopy::zero(p, p), Homotopy::zero(p, p)));
}

// Properties ----------------------------------------------------------------

class ChainMapProperties : public ::testing::TestWithParam<Field> {};

TEST_P(ChainMapProperties, HomotopicMapsInduceEqualMaps) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const CochainComplex a = gen::random_complex_in(GetParam(), -3, 3, 4, rng);
    const CochainComplex b = gen::random_complex_in(GetParam(), -3, 3, 4, rng);
    const ChainMap f = gen::random_chain_map(a, b, rng);
    const ChainMap g = perturb_by_homotopy(f, gen::random_homotopy(a, b, rng));
    for (int i = std::min(a.lo(), b.lo()); i <= std::max(a.hi(), b.hi()); ++i) {
      ASSERT_EQ(induced_cohomology_map(f, i), induced_cohomology_map(g, i));
    }
  }
}

TEST_P(ChainMapProperties, FindHomotopySound) {
  gen::Rng rng(32);
  int found = 0, missing = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const CochainComplex a = gen::random_complex_in(GetParam(), -2, 2, 3, rng);
    const CochainComplex b = gen::random_complex_in(GetParam(), -2, 2, 3, rng);
    const ChainMap f = gen::random_chain_map(a, b, rng);
    const ChainMap g = trial % 2 == 0 ? perturb_by_homotopy(f, gen::random_homotopy(a, b, rng))
                                      : gen::random_chain_map(a, b, rng);
    const std::optional<Homotopy> k = find_homotopy(f, g);
    if (k) {
      ++found;
      ASSERT_TRUE(check_homotopy(f, g, *k));
    } else {
      ++missing;
      ASSERT_NE(trial % 2, 0);
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(missing, 0);
}

TEST_P(ChainMapProperties, Functoriality) {
  gen::Rng rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const CochainComplex a = gen::random_complex_in(GetParam(), -2, 2, 3, rng);
    const CochainComplex b = gen::random_complex_in(GetParam(), -2, 2, 3, rng);
    const CochainComplex c = gen::random_complex_in(GetParam(), -2, 2, 3, rng);
    const ChainMap f = gen::random_chain_map(a, b, rng);
    const ChainMap g = gen::random_chain_map(b, c, rng);
    const ChainMap gf = compose_chain_maps(g, f);
    ASSERT_TRUE(validate_chain_map(gf).ok);
    for (int i = -2; i <= 2; ++i) {
      ASSERT_EQ(induced_cohomology_map(gf, i), induced_cohomology_map(g, i) * induced_cohomology_map(f, i));
    }
  }
}

TEST_P(ChainMapProperties, QuasiIsosCompose) {
  gen::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const ChainMap f = gen::random_quasi_iso(GetParam(), -3, 3, 4, rng);
    const ChainMap g = gen::random_quasi_iso_from(f.target(), 6, rng);
    ASSERT_TRUE(is_quasi_iso(f));
    ASSERT_TRUE(is_quasi_iso(g));
    ASSERT_TRUE(is_quasi_iso(compose_chain_maps(g, f)));
  }
}

TEST_P(ChainMapProperties, HomotopyEquivalenceImpliesQuasiIso) {
  gen::Rng rng(35);
  int equivalences = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // C (+) P -> C and back, with P contractible: a homotopy equivalence
    // that is not an isomorphism.
    const CochainComplex c = gen::random_complex_in(GetParam(), -2, 2, 3, rng);
    const CochainComplex p = gen::random_acyclic(GetParam(), -2, 2, 2, rng);
    ChainMap f = gen::sum_projection(c, p);
    ChainMap g = gen::sum_inclusion(c, p);
    if (trial % 2 == 1) {
      f = perturb_by_homotopy(f, gen::random_homotopy(f.source(), f.target(), rng));
    }
    const std::optional<Homotopy> k_b = find_homotopy(compose_chain_maps(f, g), ChainMap::identity(c));
    const std::optional<Homotopy> k_a =
        find_homotopy(compose_chain_maps(g, f), ChainMap::identity(f.source()));
    ASSERT_TRUE(k_b && k_a);
    ASSERT_TRUE(check_homotopy_equivalence(f, g, *k_b, *k_a));
    ++equivalences;
    ASSERT_TRUE(is_quasi_iso(f));
    ASSERT_TRUE(is_quasi_iso(g));
  }
  EXPECT_EQ(equivalences, 100);
}

INSTANTIATE_TEST_SUITE_P(Fields, ChainMapProperties, ::testing::Values(F2, F5, Q),
                         [](const auto& info) { return info.param.name(); });

TEST(FindHomotopyOracle, AgreesWithEnumerationOverF2) {
  gen::Rng rng(36);
  int exists = 0, absent = 0, trials = 0;
  while (trials < 100) {
    const CochainComplex a = gen::random_complex_in(F2, -1, 1, 2, rng);
    const CochainComplex b = gen::random_complex_in(F2, -1, 1, 2, rng);
    if (oracle::homotopy_unknowns(a, b) > 12) continue;
    ++trials;
    const ChainMap f = gen::random_chain_map(a, b, rng);
    const ChainMap g = trials % 3 == 0 ? perturb_by_homotopy(f, gen::random_homotopy(a, b, rng))
                                       : gen::random_chain_map(a, b, rng);
    const bool brute = oracle::homotopy_exists_by_enumeration(f, g);
    const std::optional<Homotopy> k = find_homotopy(f, g);
    ASSERT_EQ(k.has_value(), brute);
    (brute ? exists : absent)++;
  }
  EXPECT_GT(exists, 0);
  EXPECT_GT(absent, 0);
}

}  // namespace
}  // namespace cochain
