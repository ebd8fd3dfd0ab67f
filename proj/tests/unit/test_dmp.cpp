#include <gtest/gtest.h>

#include "stardmp/dmp/analysis.hpp"
#include "stardmp/exact/exact_ring.hpp"
#include "stardmp/finite/carriers.hpp"

using namespace stardmp;
using exact::ExactMatrix;
using exact::ExactMatrixRing;

namespace {

struct Pair {
  ExactMatrixRing ring{2, Involution::transpose};
  ExactMatrix a = ring.parse({{"i", "0"}, {"0", "0"}});
  ExactMatrix b = ring.parse({{"0", "0"}, {"-1", "0"}});
};

}  // namespace

TEST(StarDmp, OrthogonalPairSumFails) {
  Pair f;
  const auto p = f.ring.pseudo_core(f.a);
  ASSERT_TRUE(p);
  EXPECT_EQ(p.value(), f.ring.parse({{"-i", "0"}, {"0", "0"}}));
  EXPECT_EQ(p.index(), 1);
  EXPECT_TRUE(dmp::star_dmp(f.ring, f.a).is_star_dmp);
  EXPECT_TRUE(dmp::star_dmp(f.ring, f.b).is_star_dmp);
  const ExactMatrix s = f.a + f.b;
  EXPECT_FALSE(dmp::star_dmp(f.ring, s).is_star_dmp);
  EXPECT_FALSE(f.ring.pseudo_core(s));
  const auto v = dmp::sum_dmp_check(f.ring, f.a, f.b);
  EXPECT_FALSE(v.hypotheses);  // ba != 0
  EXPECT_TRUE(v.premises);
  EXPECT_FALSE(v.conclusion);
}

TEST(StarDmp, ClassifyVotesAgree) {
  Pair f;
  const auto r = dmp::classify(f.ring, f.a);
  EXPECT_TRUE(r.is_star_dmp);
  EXPECT_EQ(r.index, 1);
  EXPECT_EQ(r.votes.size(), dmp::characterization_ids().size());
  for (const auto& [id, v] : r.votes) EXPECT_TRUE(dmp::vote_agrees(r, v)) << id;
}

TEST(StarDmp, SevenPowerConditions) {
  std::size_t n = 0;
  for (const auto& id : dmp::characterization_ids()) n += id.rfind("T2.10", 0) == 0 ? 1 : 0;
  EXPECT_EQ(n, 7U);
  EXPECT_THROW(dmp::star_dmp_via(Pair{}.ring, "T9.9", Pair{}.a), DomainError);
}

TEST(StarDmp, NilpotentBlockIndex) {
  ExactMatrixRing r(3, Involution::conjugate_transpose);
  const auto n = r.parse({{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  const auto rep = dmp::star_dmp(r, n);
  // a^3 = 0 is EP, so the nilpotent Jordan block is *-DMP of index 3
  EXPECT_TRUE(rep.is_star_dmp);
  EXPECT_EQ(rep.index, 3);
  EXPECT_EQ(rep.drazin_index, 3);
}

TEST(Decompose, NilpotentIsAllSecondPart) {
  ExactMatrixRing r(2, Involution::conjugate_transpose);
  const auto a = r.parse({{"0", "1"}, {"0", "0"}});
  const auto d = dmp::pseudo_core_decompose(r, a);
  ASSERT_TRUE(d);
  EXPECT_TRUE(d->axioms_hold());
  EXPECT_TRUE(is_zero(d->a1));
  EXPECT_EQ(d->a2, a);
  const auto c = dmp::core_nilpotent_decompose(r, a);
  EXPECT_TRUE(c.axioms_hold());
  EXPECT_TRUE(is_zero(c.core_part));
  EXPECT_EQ(c.nilpotent_part, a);
}

TEST(Decompose, UniqueOnZ8) {
  finite::ZnRing z(8);
  for (const auto& a : finite::enumerate(z)) {
    const auto d = dmp::pseudo_core_decompose(z, a);
    ASSERT_TRUE(d);
    EXPECT_TRUE(d->axioms_hold());
    const auto all = dmp::all_pseudo_core_decompositions(z, a, d->m);
    ASSERT_EQ(all.size(), 1U) << a.value();
    EXPECT_TRUE(dmp::decomposition_unique(z, a, all[0].first, all[0].second, d->m));
  }
}

TEST(Decompose, RejectsInvalidCandidate) {
  finite::ZnRing z(8);
  EXPECT_THROW(dmp::decomposition_unique(z, z.make(3), z.make(1), z.make(2), 1), DomainError);
}

TEST(Order, ReflexiveAndNotAntisymmetric) {
  finite::ZpMatrixRing r(2, 2);
  const auto zero = r.zero();
  const auto n = r.make({{0, 0}, {1, 0}});
  EXPECT_TRUE(dmp::pseudo_core_order(r, n, n).holds());
  // both have pseudo core inverse 0, so each lies below the other
  EXPECT_TRUE(dmp::pseudo_core_order(r, zero, n).holds());
  EXPECT_TRUE(dmp::pseudo_core_order(r, n, zero).holds());
  EXPECT_FALSE(dmp::core_order(r, n, zero).holds());  // n has index 2
}

TEST(Order, MismatchedCarriers) {
  finite::ZnRing a(6), b(7);
  EXPECT_THROW(dmp::pseudo_core_order(a, a.make(1), b.make(1)), CarrierMismatch);
}

// a^2 = 1 makes the power conditions hold at m = 2 while a, which is EP with
// index 1, does not commute with a*: the least index reading does not match.
TEST(UnitaryFactor, IndexMismatchOnInvolutoryMatrix) {
  finite::ZpMatrixRing r(2, 2);
  const auto a = r.make({{1, 1}, {0, 1}});
  const auto rep = dmp::star_dmp(r, a);
  EXPECT_EQ(rep.index, 1);
  EXPECT_FALSE(is_normal(a));
  EXPECT_EQ(power(a, 2), r.one());
  const auto a2 = power(a, 2);
  EXPECT_TRUE(a2 * star(a2) == star(a2) * a2);
  EXPECT_TRUE(r.moore_penrose(a2));
  EXPECT_FALSE(dmp::unitary_factor_witness(r, a).has_value());
}

TEST(UnitaryFactor, WitnessOnNormalElement) {
  ExactMatrixRing r(2, Involution::conjugate_transpose);
  const auto a = r.parse({{"1", "i"}, {"-i", "1"}});  // Hermitian, singular
  const auto w = dmp::unitary_factor_witness(r, a);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->factors);
  EXPECT_TRUE(w->group_equations);
}

TEST(Closure, CommutingProduct) {
  finite::ZnRing z(12);
  for (const auto& a : finite::enumerate(z))
    for (const auto& b : finite::enumerate(z)) {
      const auto v = dmp::product_dmp_check(z, a, b);
      if (v.hypotheses && v.premises) EXPECT_TRUE(v.conclusion);
    }
}

TEST(Battery, EqualProjectorsAgree) {
  finite::ZnRing z(15);
  for (const auto& a : finite::enumerate(z))
    for (const auto& b : finite::enumerate(z)) {
      const auto v = dmp::projector_equality_battery(z, a, b);
      ASSERT_TRUE(v.applicable);
      for (bool e : v.equal) EXPECT_EQ(e, v.equal[0]);
      for (bool e : v.ideal) EXPECT_EQ(e, v.ideal[0]);
    }
}
