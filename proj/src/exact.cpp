#include <algorithm>

#include "stardmp/exact/exact_ring.hpp"
#include "stardmp/exact/linalg.hpp"
#include "stardmp/exact/random.hpp"

namespace stardmp::exact {

std::uint64_t fnv1a(std::string_view text, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rational random_rational(Rng& rng) {
  const long num = static_cast<long>(rng.uniform(-3, 3));
  const long den = static_cast<long>(rng.uniform(1, 3));
  return Rational(num, den);
}

GaussianRational random_scalar(Rng& rng) {
  if (rng.coin()) return {};
  Rational re = random_rational(rng);
  Rational im = rng.coin() ? random_rational(rng) : Rational(0);
  return {std::move(re), std::move(im)};
}

GaussianRational random_nonzero_scalar(Rng& rng) {
  for (;;) {
    GaussianRational s{random_rational(rng), rng.coin() ? random_rational(rng) : Rational(0)};
    if (!s.is_zero()) return s;
  }
}

namespace {

ExactMatrix blank(std::size_t r, std::size_t c, Involution inv) {
  return ExactMatrix(GaussianRationalField{}, r, c, inv);
}

ExactMatrix fill(Rng& rng, std::size_t r, std::size_t c, Involution inv) {
  ExactMatrix m = blank(r, c, inv);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng);
  return m;
}

}  // namespace

ExactMatrix random_dense(Rng& rng, std::size_t n, Involution inv) { return fill(rng, n, n, inv); }

ExactMatrix random_low_rank(Rng& rng, std::size_t n, Involution inv) {
  const auto r = static_cast<std::size_t>(rng.uniform(1, std::max<std::int64_t>(1, static_cast<std::int64_t>(n) - 1)));
  return fill(rng, n, r, inv) * fill(rng, r, n, inv);
}

ExactMatrix random_invertible(Rng& rng, std::size_t n, Involution inv) {
  ExactMatrix lower = ExactMatrix::identity(GaussianRationalField{}, n, inv);
  ExactMatrix upper = blank(n, n, inv);
  for (std::size_t i = 0; i < n; ++i) {
    upper(i, i) = random_nonzero_scalar(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      upper(i, j) = random_scalar(rng);
      lower(j, i) = random_scalar(rng);
    }
  }
  return lower * upper;
}

ExactMatrix random_similar_triangular(Rng& rng, std::size_t n, Involution inv) {
  ExactMatrix t = blank(n, n, inv);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = rng.coin() ? GaussianRational() : random_nonzero_scalar(rng);
    for (std::size_t j = i + 1; j < n; ++j) t(i, j) = rng.coin() ? random_nonzero_scalar(rng) : GaussianRational();
  }
  const ExactMatrix s = random_invertible(rng, n, inv);
  return s * t * *inverse(s);
}

ExactMatrix random_matrix(Rng& rng, std::size_t n, Involution inv) {
  switch (rng.uniform(0, 3)) {
    case 0:
      return random_dense(rng, n, inv);
    case 1:
      return random_low_rank(rng, n, inv);
    default:
      return random_similar_triangular(rng, n, inv);
  }
}

// ---- carrier

ExactMatrixRing::ExactMatrixRing(std::size_t n, Involution inv) : n_(n), inv_(inv) {
  (void)StarRingDescriptor::gaussian_matrix(static_cast<int>(n), inv);  // validates
}

const ExactMatrix& ExactMatrixRing::member(const ExactMatrix& a) const {
  if (a.rows() != n_ || a.cols() != n_ || a.involution() != inv_)
    throw CarrierMismatch("matrix does not belong to " + descriptor().to_string());
  return a;
}

ExactMatrix ExactMatrixRing::make(const std::vector<std::vector<GaussianRational>>& rows) const {
  auto m = ExactMatrix::from_rows(GaussianRationalField{}, rows, inv_);
  member(m);
  return m;
}

ExactMatrix ExactMatrixRing::parse(const std::vector<std::vector<std::string>>& rows) const {
  std::vector<std::vector<GaussianRational>> values;
  for (const auto& r : rows) {
    auto& out = values.emplace_back();
    for (const auto& s : r) out.push_back(GaussianRational::parse(s));
  }
  return make(values);
}

std::vector<ExactMatrix> ExactMatrixRing::one_three_family(const ExactMatrix& c) const {
  member(c);
  const auto canonical = one_three_inverse(c);
  if (!canonical) return {};
  std::vector<ExactMatrix> out{canonical.value()};
  auto add = [&](ExactMatrix x) {
    if (!verify_penrose(c, x, {1, 3})) throw std::logic_error("randomized {1,3}-inverse failed re-verification");
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  };
  if (const auto mp = mp_inverse(c)) add(mp.value());

  Rng rng(fnv1a(c.to_string(), 0x13));
  const auto id = one();
  const int half = kRandomizedOneThree / 2;
  if (!c.is_zero()) {
    // Other right inverses of G give other members: G_r' (F*F)^{-1} F*.
    const auto fg = full_rank_factorization(c);
    const auto gr = canonical_right_inverse(fg.right, fg.pivots);
    for (int k = 0; k < half; ++k) {
      const auto alt = perturbed_right_inverse(fg.right, gr, [&] { return random_scalar(rng); });
      add(one_three_inverse_with(c, fg, alt).value());
    }
  }
  // Every member has the form X + (I - X c) Y.
  const auto& x = canonical.value();
  for (int k = 0; k < half; ++k) add(x + (id - x * c) * random_dense(rng, n_, inv_));
  return out;
}

ExistenceResult<ExactMatrix> ExactMatrixRing::pseudo_core_randomized(const ExactMatrix& a) const {
  const auto d = drazin(a);
  const int m = d.index();
  const auto am = power(a, static_cast<unsigned>(m));
  const auto family = one_three_family(am);
  if (family.empty())
    return ExistenceResult<ExactMatrix>::not_exists(NotExistsReason::no_13_inverse_of_power,
                                                    "A^" + std::to_string(m) + " has no {1,3}-inverse");
  return verified_result(a, InverseKind::pseudo_core, d.value() * am * family.back(), m);
}

std::vector<ExactMatrix> ExactMatrixRing::random_probes(const ExactMatrix& a, int count) const {
  member(a);
  Rng rng(fnv1a(a.to_string(), 0x9e3779b97f4a7c15ULL));
  std::vector<ExactMatrix> out;
  for (int k = 0; k < count; ++k) out.push_back(random_matrix(rng, n_, inv_));
  return out;
}

}  // namespace stardmp::exact
