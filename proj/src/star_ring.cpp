#include "stardmp/core/star_ring.hpp"

#include <array>

namespace stardmp {

std::string_view to_string(Involution inv) {
  switch (inv) {
    case Involution::conjugate_transpose:
      return "conjugate-transpose";
    case Involution::transpose:
      return "transpose";
    case Involution::identity:
      return "identity";
  }
  return "?";
}

Involution parse_involution(std::string_view text) {
  if (text == "conjugate-transpose" || text == "conj-transpose" || text == "conj") return Involution::conjugate_transpose;
  if (text == "transpose") return Involution::transpose;
  if (text == "identity") return Involution::identity;
  throw DomainError("unknown involution '" + std::string(text) + "'");
}

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

StarRingDescriptor StarRingDescriptor::gaussian_matrix(int size, Involution inv) {
  if (size < 1) throw DomainError("matrix size must be at least 1");
  if (inv == Involution::identity && size != 1)
    throw DomainError("identity involution requires a commutative carrier (1x1 matrices)");
  return {Kind::gaussian_rational_matrix, size, 0, inv};
}

StarRingDescriptor StarRingDescriptor::zn(int modulus) {
  if (modulus < 2) throw DomainError("Z_n requires n >= 2");
  return {Kind::zn, modulus, 0, Involution::identity};
}

StarRingDescriptor StarRingDescriptor::zp_matrix(int prime, int size, Involution inv) {
  if (!is_prime(prime)) throw DomainError("zp-matrix requires a prime modulus, got " + std::to_string(prime));
  if (size < 1) throw DomainError("matrix size must be at least 1");
  // Conjugation is trivial over Z_p, so conjugate-transpose is the transpose.
  if (inv == Involution::conjugate_transpose) inv = Involution::transpose;
  if (inv == Involution::identity && size != 1)
    throw DomainError("identity involution requires a commutative carrier (1x1 matrices)");
  return {Kind::zp_matrix, size, prime, inv};
}

std::string StarRingDescriptor::to_string() const {
  switch (kind) {
    case Kind::gaussian_rational_matrix:
      return "Q(i)^" + std::to_string(n) + "x" + std::to_string(n) + "/" + std::string(stardmp::to_string(involution));
    case Kind::zn:
      return "Z_" + std::to_string(n);
    case Kind::zp_matrix:
      return "M_" + std::to_string(n) + "(Z_" + std::to_string(p) + ")/" + std::string(stardmp::to_string(involution));
  }
  return "?";
}

namespace {
constexpr std::array<std::pair<InverseKind, std::string_view>, 7> kKindNames{{
    {InverseKind::moore_penrose, "moore-penrose"},
    {InverseKind::one_three, "one-three"},
    {InverseKind::group, "group"},
    {InverseKind::drazin, "drazin"},
    {InverseKind::core, "core"},
    {InverseKind::pseudo_core, "pseudo-core"},
    {InverseKind::dual_pseudo_core, "dual-pseudo-core"},
}};
}  // namespace

std::string_view to_string(InverseKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

InverseKind parse_inverse_kind(std::string_view text) {
  if (text == "mp") return InverseKind::moore_penrose;
  if (text == "13" || text == "{1,3}") return InverseKind::one_three;
  for (const auto& [k, name] : kKindNames)
    if (name == text) return k;
  throw DomainError("unknown inverse kind '" + std::string(text) + "'");
}

bool kind_has_index(InverseKind kind) {
  return kind == InverseKind::drazin || kind == InverseKind::pseudo_core || kind == InverseKind::dual_pseudo_core;
}

std::string_view to_string(NotExistsReason reason) {
  switch (reason) {
    case NotExistsReason::no_13_inverse:
      return "no-13-inverse";
    case NotExistsReason::no_13_inverse_of_power:
      return "no-13-inverse-of-power";
    case NotExistsReason::form_degenerate:
      return "form-degenerate";
    case NotExistsReason::not_strongly_pi_regular:
      return "not-strongly-pi-regular";
    case NotExistsReason::index_exceeds_one:
      return "index-exceeds-one";
    case NotExistsReason::no_solution:
      return "no-solution";
  }
  return "?";
}

}  // namespace stardmp
