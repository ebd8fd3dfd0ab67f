#include <gtest/gtest.h>

#include "stardmp/core/star_ring.hpp"
#include "stardmp/exact/exact_ring.hpp"
#include "stardmp/finite/carriers.hpp"

using namespace stardmp;

TEST(Descriptor, Text) {
  EXPECT_EQ(StarRingDescriptor::gaussian_matrix(2, Involution::transpose).to_string(), "Q(i)^2x2/transpose");
  EXPECT_EQ(StarRingDescriptor::zn(12).to_string(), "Z_12");
  EXPECT_EQ(StarRingDescriptor::zp_matrix(3, 2).to_string(), "M_2(Z_3)/transpose");
}

TEST(Descriptor, ZpConjugateTransposeIsTranspose) {
  EXPECT_EQ(StarRingDescriptor::zp_matrix(2, 2, Involution::conjugate_transpose),
            StarRingDescriptor::zp_matrix(2, 2, Involution::transpose));
}

TEST(Descriptor, Rejects) {
  EXPECT_THROW(StarRingDescriptor::zn(1), DomainError);
  EXPECT_THROW(StarRingDescriptor::zp_matrix(4, 2), DomainError);
  EXPECT_THROW(StarRingDescriptor::gaussian_matrix(2, Involution::identity), DomainError);
}

TEST(InverseKind, ParsesShortAndLongNames) {
  EXPECT_EQ(parse_inverse_kind("mp"), InverseKind::moore_penrose);
  EXPECT_EQ(parse_inverse_kind("13"), InverseKind::one_three);
  EXPECT_EQ(parse_inverse_kind("pseudo-core"), InverseKind::pseudo_core);
  EXPECT_EQ(parse_inverse_kind("dual-pseudo-core"), InverseKind::dual_pseudo_core);
  for (auto k : {InverseKind::moore_penrose, InverseKind::one_three, InverseKind::group, InverseKind::drazin,
                 InverseKind::core, InverseKind::pseudo_core, InverseKind::dual_pseudo_core})
    EXPECT_EQ(parse_inverse_kind(to_string(k)), k);
  EXPECT_THROW(parse_inverse_kind("left"), DomainError);
}

TEST(Power, ZeroIsOne) {
  finite::ZnRing z(9);
  EXPECT_EQ(power(z.make(4), 0), z.make(1));
  EXPECT_EQ(power(z.make(2), 5), z.make(32 % 9));
}

TEST(Verifiers, LiteralEquations) {
  exact::ExactMatrixRing r(2, Involution::conjugate_transpose);
  const auto e = r.parse({{"1", "0"}, {"0", "0"}});
  EXPECT_TRUE(verify_penrose(e, e, PenroseSet::all()));
  EXPECT_TRUE(verify_core_eqs(e, e));
  EXPECT_TRUE(verify_pseudo_core_eqs(e, e, 1));
  EXPECT_FALSE(verify_penrose(e, r.one(), PenroseSet::all()));
}

TEST(Carriers, MismatchThrows) {
  finite::ZnRing a(6), b(8);
  EXPECT_THROW(require_same_carrier(a.make(1), b.make(1)), CarrierMismatch);
  exact::ExactMatrixRing c(2, Involution::transpose), d(2, Involution::conjugate_transpose);
  EXPECT_THROW((void)(c.one() * d.one()), CarrierMismatch);
}
