#pragma once

// Seeded generators for exact matrices. Every draw goes through a fixed
// modulo mapping so sequences are identical across standard libraries.

#include <cstdint>
#include <random>
#include <string_view>

#include "stardmp/exact/matrix.hpp"
#include "stardmp/exact/scalar.hpp"

namespace stardmp::exact {

using ExactMatrix = Matrix<GaussianRationalField>;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// FNV-1a, used to derive per-element seeds from an element's text.
std::uint64_t fnv1a(std::string_view text, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// p/q with p in [-3, 3], q in [1, 3].
Rational random_rational(Rng& rng);
/// Zero half the time; otherwise a rational, plus an imaginary part half the time.
GaussianRational random_scalar(Rng& rng);
/// Never zero.
GaussianRational random_nonzero_scalar(Rng& rng);

/// i.i.d. entries from random_scalar.
ExactMatrix random_dense(Rng& rng, std::size_t n, Involution inv);
/// F G with F n x r, G r x n for a random r < n (singular when n > 1).
ExactMatrix random_low_rank(Rng& rng, std::size_t n, Involution inv);
/// S T S^{-1} with T upper triangular carrying some zero diagonal entries,
/// which produces nontrivial nilpotent parts and higher indices.
ExactMatrix random_similar_triangular(Rng& rng, std::size_t n, Involution inv);
/// A random invertible matrix (unit lower times unit upper, scaled).
ExactMatrix random_invertible(Rng& rng, std::size_t n, Involution inv);

/// Mixes the constructions above.
ExactMatrix random_matrix(Rng& rng, std::size_t n, Involution inv);

}  // namespace stardmp::exact
