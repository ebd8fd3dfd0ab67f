#include <gtest/gtest.h>

#include "stardmp/exact/exact_ring.hpp"

using namespace stardmp;
using namespace stardmp::exact;

TEST(Rational, ParsesUnreducedPrintsReduced) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-0/7").to_string(), "0");
  EXPECT_EQ(Rational::parse("+5").to_string(), "5");
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse("1/-2"), DomainError);
  EXPECT_THROW(Rational::parse("0.5"), DomainError);
}

TEST(GaussianRational, RoundTrip) {
  for (const char* text : {"0", "i", "-i", "2 i", "3/2", "1/2-3/4 i", "-1+i", "-7/3 i"}) {
    const auto g = GaussianRational::parse(text);
    EXPECT_EQ(GaussianRational::parse(g.to_string()), g) << text;
  }
  EXPECT_EQ(GaussianRational::parse("2/4+6/8i").to_string(), "1/2+3/4 i");
  EXPECT_EQ(GaussianRational::parse("1+2i") * GaussianRational::parse("1-2i"), GaussianRational(5));
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
}

TEST(GaussianRational, FusedProductMatchesPlain) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    GaussianRational acc = c;
    acc.add_product(a, b, 1);
    EXPECT_EQ(acc, c + a * b);
    acc = c;
    acc.add_product(a, b, -1);
    EXPECT_EQ(acc, c - a * b);
  }
}

TEST(Matrix, InvolutionFlavors) {
  ExactMatrixRing ct(2, Involution::conjugate_transpose), tr(2, Involution::transpose);
  const auto a = ct.parse({{"i", "1"}, {"0", "2"}});
  const auto b = tr.parse({{"i", "1"}, {"0", "2"}});
  EXPECT_EQ(star(a), ct.parse({{"-i", "0"}, {"1", "2"}}));
  EXPECT_EQ(star(b), tr.parse({{"i", "0"}, {"1", "2"}}));
}

TEST(Linalg, RankAndInverse) {
  ExactMatrixRing r(3, Involution::conjugate_transpose);
  const auto a = r.parse({{"1", "2", "3"}, {"2", "4", "6"}, {"0", "1", "i"}});
  EXPECT_EQ(rank(a), 2U);
  EXPECT_FALSE(inverse(a).has_value());
  const auto b = r.parse({{"1", "2", "0"}, {"0", "1", "i"}, {"1", "0", "1"}});
  const auto bi = inverse(b);
  ASSERT_TRUE(bi.has_value());
  EXPECT_EQ(b * *bi, r.one());
}

// {z : z x = 0} compares column spaces, not row spaces.
TEST(Linalg, LeftAnnihilatorUsesRange) {
  ExactMatrixRing r(2, Involution::transpose);
  const auto x = r.parse({{"1", "0"}, {"0", "0"}});
  const auto y = r.parse({{"0", "1"}, {"0", "0"}});  // same range as x, other row space
  const auto w = r.parse({{"0", "0"}, {"1", "0"}});
  EXPECT_TRUE(r.left_annihilator_contained(x, y));
  EXPECT_TRUE(r.left_annihilator_contained(y, x));
  EXPECT_FALSE(r.left_annihilator_contained(x, w));
  // left ideals compare row spaces
  EXPECT_TRUE(r.left_ideal_contained(x, w));
  EXPECT_FALSE(r.left_ideal_contained(x, y));
}

TEST(Linalg, MoorePenroseIdentity) {
  ExactMatrixRing r(3, Involution::conjugate_transpose);
  const auto mp = r.moore_penrose(r.one());
  ASSERT_TRUE(mp);
  EXPECT_EQ(mp.value(), r.one());
}

// The transpose over Q(i) is not a proper involution: this normal matrix has
// a a* = 0 and no Moore-Penrose inverse.
TEST(Linalg, TransposeImproper) {
  ExactMatrixRing r(2, Involution::transpose);
  const auto a = r.parse({{"i", "1"}, {"-1", "i"}});
  EXPECT_TRUE(is_zero(ExactMatrix(a * star(a))));
  EXPECT_FALSE(r.moore_penrose(a));
  EXPECT_FALSE(r.one_three(a));
}

// Random matrices: every produced witness satisfies its equations literally,
// and the Drazin index is the rank stabilization point.
TEST(Linalg, RandomWitnessesVerify) {
  for (auto inv : {Involution::conjugate_transpose, Involution::transpose}) {
    Rng rng(fnv1a("witness", 11));
    for (std::size_t n = 1; n <= 4; ++n) {
      ExactMatrixRing r(n, inv);
      for (int t = 0; t < 25; ++t) {
        const auto a = random_matrix(rng, n, inv);
        const auto d = r.drazin(a);
        ASSERT_TRUE(d);
        const int m = d.index();
        EXPECT_TRUE(verify_drazin(a, d.value(), m));
        EXPECT_EQ(rank(power(a, m)), rank(power(a, m + 1)));
        if (m > 1) EXPECT_NE(rank(power(a, m - 1)), rank(power(a, m)));
        if (auto x = r.moore_penrose(a)) EXPECT_TRUE(verify_penrose(a, x.value(), PenroseSet::all()));
        if (auto x = r.one_three(a)) EXPECT_TRUE(verify_penrose(a, x.value(), {1, 3}));
        if (auto x = r.pseudo_core(a)) EXPECT_TRUE(verify_pseudo_core_eqs(a, x.value(), x.index()));
        if (auto x = r.dual_pseudo_core(a)) EXPECT_TRUE(verify_dual_pseudo_core_eqs(a, x.value(), x.index()));
        if (auto x = r.core(a)) EXPECT_TRUE(verify_core_eqs(a, x.value()));
        for (const auto& y : r.one_three_family(power(a, m))) EXPECT_TRUE(verify_penrose(power(a, m), y, {1, 3}));
      }
    }
  }
}

TEST(Random, Deterministic) {
  Rng a(42), b(42);
  for (int t = 0; t < 10; ++t) EXPECT_EQ(random_matrix(a, 3, Involution::transpose), random_matrix(b, 3, Involution::transpose));
  EXPECT_EQ(fnv1a("abc"), fnv1a("abc"));
  EXPECT_NE(fnv1a("abc"), fnv1a("abd"));
}
