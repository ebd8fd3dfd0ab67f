#include <cstdlib>
#include <limits>
#include <string>
#include <tuple>

#include "stardmp/finite/carriers.hpp"
#include "stardmp/finite/finite_ring.hpp"

namespace stardmp::finite {

std::size_t budget_from_env(std::size_t fallback) {
  const char* raw = std::getenv("STARDMP_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

std::size_t RingSubset::count() const {
  std::size_t c = 0;
  for (bool b : bits_) c += b ? 1 : 0;
  return c;
}

std::vector<std::size_t> RingSubset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

void RingSubset::require_compatible(const RingSubset& o) const {
  if (!(carrier_ == o.carrier_) || bits_.size() != o.bits_.size())
    throw CarrierMismatch("subsets of different carriers");
}

bool RingSubset::subset_of(const RingSubset& o) const {
  require_compatible(o);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !o.bits_[i]) return false;
  return true;
}

RingSubset RingSubset::intersect(const RingSubset& o) const {
  require_compatible(o);
  RingSubset r(carrier_, bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && o.bits_[i]) r.insert(i);
  return r;
}

// ---- Z_n

namespace {

// Inverse of c modulo h (gcd(c, h) = 1), h >= 1.
std::int64_t inverse_mod(std::int64_t c, std::int64_t h) {
  if (h == 1) return 0;
  std::int64_t r0 = h, r1 = ((c % h) + h) % h, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return ((s0 % h) + h) % h;
}

}  // namespace

ZnRing::ZnRing(std::uint32_t n, std::size_t budget) : FiniteRingBase(budget), n_(n) {
  if (n < 2) throw DomainError("Z_n requires n >= 2");
}

std::size_t ZnRing::index_of(const ZnElement& e) const {
  if (e.modulus() != n_) throw CarrierMismatch("element of Z_" + std::to_string(e.modulus()) + " used in Z_" +
                                               std::to_string(n_));
  return e.value();
}

ExistenceResult<ZnElement> ZnRing::one_three(const ZnElement& c) const {
  index_of(c);
  const std::int64_t n = n_;
  const std::int64_t g = std::gcd(static_cast<std::int64_t>(c.value()), n);
  const std::int64_t h = n / g;
  if (std::gcd(g, h) != 1)
    return ExistenceResult<ZnElement>::not_exists(NotExistsReason::no_13_inverse,
                                                  std::to_string(c.value()) + " is not regular in Z_" +
                                                      std::to_string(n_));
  // x = c^{-1} (mod h), x = 0 (mod g): x = c^{-1} * g * (g^{-1} mod h).
  const std::int64_t x = inverse_mod(c.value(), h) * g % n * inverse_mod(g, h) % n;
  return verified_result(c, InverseKind::one_three, make(x), std::nullopt);
}

ExistenceResult<ZnElement> ZnRing::moore_penrose(const ZnElement& c) const {
  const auto y = one_three(c);
  if (!y) return ExistenceResult<ZnElement>::not_exists(NotExistsReason::form_degenerate, y.failure().detail);
  return verified_result(c, InverseKind::moore_penrose, y.value() * c * y.value(), std::nullopt);
}

// ---- M_k(Z_p)

namespace {

std::size_t saturating_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::size_t>::max() / base) return std::numeric_limits<std::size_t>::max();
    r *= base;
  }
  return r;
}

}  // namespace

ZpMatrixRing::ZpMatrixRing(std::uint32_t p, std::size_t k, std::size_t budget)
    : FiniteRingBase(budget), p_(p), k_(k), size_(saturating_power(p, k * k)) {
  if (!is_prime(p)) throw DomainError("zp-matrix requires a prime modulus, got " + std::to_string(p));
  if (k < 1) throw DomainError("matrix size must be at least 1");
}

FiniteMatrix ZpMatrixRing::element_at(std::size_t i) const {
  if (i >= size_) throw DomainError("element index out of range");
  FiniteMatrix m(PrimeField{p_}, k_, k_, Involution::transpose);
  for (std::size_t j = k_ * k_; j-- > 0;) {
    m(j / k_, j % k_) = ModP(static_cast<std::int64_t>(i % p_), p_);
    i /= p_;
  }
  return m;
}

void ZpMatrixRing::require_member(const FiniteMatrix& e) const {
  if (e.rows() != k_ || e.cols() != k_ || e.field().p != p_ || e.involution() != Involution::transpose)
    throw CarrierMismatch("matrix does not belong to " + descriptor().to_string());
}

std::size_t ZpMatrixRing::index_of(const FiniteMatrix& e) const {
  require_member(e);
  std::size_t i = 0;
  for (const auto& s : e.entries()) i = i * p_ + s.value();
  return i;
}

FiniteMatrix ZpMatrixRing::make(const std::vector<std::vector<std::int64_t>>& rows) const {
  if (rows.size() != k_) throw DomainError("expected " + std::to_string(k_) + " rows");
  std::vector<std::vector<ModP>> entries;
  for (const auto& r : rows) {
    if (r.size() != k_) throw DomainError("expected " + std::to_string(k_) + " columns");
    auto& out = entries.emplace_back();
    for (auto v : r) out.emplace_back(v, p_);
  }
  return FiniteMatrix::from_rows(PrimeField{p_}, entries, Involution::transpose);
}

ExistenceResult<FiniteMatrix> ZpMatrixRing::one_three(const FiniteMatrix& c) const {
  require_member(c);
  return exact::one_three_inverse(c);
}

ExistenceResult<FiniteMatrix> ZpMatrixRing::moore_penrose(const FiniteMatrix& c) const {
  require_member(c);
  return exact::mp_inverse(c);
}

ExistenceResult<FiniteMatrix> ZpMatrixRing::drazin(const FiniteMatrix& a) const {
  require_member(a);
  return exact::drazin_inverse(a);
}

bool ZpMatrixRing::is_unit(const FiniteMatrix& a) const {
  require_member(a);
  return exact::is_unit(a);
}

}  // namespace stardmp::finite
