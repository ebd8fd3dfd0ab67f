#pragma once

// Reference computations written against plain integers, independent of the
// library's carriers. Every inverse is found by scanning the whole ring and
// testing the defining equations literally.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

// ---- Z_n, trivial involution

struct Zn {
  int n;
  int mul(int a, int b) const { return (a * b) % n; }
  int pow(int a, int k) const {
    int r = 1 % n;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
};

inline std::vector<int> zn_group_solutions(const Zn& r, int a) {
  std::vector<int> out;
  for (int x = 0; x < r.n; ++x)
    if (r.mul(r.mul(a, x), a) == a && r.mul(r.mul(x, a), x) == x && r.mul(a, x) == r.mul(x, a)) out.push_back(x);
  return out;
}

inline std::vector<int> zn_penrose_solutions(const Zn& r, int a) {
  // (ax)* = ax and (xa)* = xa are automatic for the identity involution
  std::vector<int> out;
  for (int x = 0; x < r.n; ++x)
    if (r.mul(r.mul(a, x), a) == a && r.mul(r.mul(x, a), x) == x) out.push_back(x);
  return out;
}

inline bool zn_is_ep(const Zn& r, int a) {
  const auto g = zn_group_solutions(r, a);
  const auto m = zn_penrose_solutions(r, a);
  return g.size() == 1 && m.size() == 1 && g[0] == m[0];
}

/// Smallest k >= 1 with a^k EP, scanning k up to n.
inline std::optional<int> zn_dmp_index(const Zn& r, int a) {
  for (int k = 1; k <= r.n; ++k)
    if (zn_is_ep(r, r.pow(a, k))) return k;
  return std::nullopt;
}

struct IndexedSolutions {
  int m = 0;
  std::vector<int> xs;
};

/// x a^{m+1} = a^m, a x^2 = x, (ax)* = ax at the smallest m admitting a solution.
inline std::optional<IndexedSolutions> zn_pseudo_core(const Zn& r, int a) {
  for (int m = 1; m <= r.n; ++m) {
    IndexedSolutions s{m, {}};
    for (int x = 0; x < r.n; ++x)
      if (r.mul(x, r.pow(a, m + 1)) == r.pow(a, m) && r.mul(a, r.mul(x, x)) == x) s.xs.push_back(x);
    if (!s.xs.empty()) return s;
  }
  return std::nullopt;
}

// ---- 2 x 2 matrices over Z_p with the transpose

struct M2 {
  std::array<int, 4> e{};  // row-major
  friend bool operator==(const M2&, const M2&) = default;
};

struct M2Ring {
  int p;

  M2 mul(const M2& a, const M2& b) const {
    M2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        int s = 0;
        for (int k = 0; k < 2; ++k) s += a.e[2 * i + k] * b.e[2 * k + j];
        r.e[2 * i + j] = s % p;
      }
    return r;
  }
  M2 star(const M2& a) const { return {{a.e[0], a.e[2], a.e[1], a.e[3]}}; }
  M2 one() const { return {{1, 0, 0, 1}}; }
  M2 pow(const M2& a, int k) const {
    M2 r = one();
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  std::vector<M2> all() const {
    std::vector<M2> out;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c)
          for (int d = 0; d < p; ++d) out.push_back({{a, b, c, d}});
    return out;
  }
};

inline std::vector<M2> m2_group_solutions(const M2Ring& r, const M2& a) {
  std::vector<M2> out;
  for (const auto& x : r.all())
    if (r.mul(r.mul(a, x), a) == a && r.mul(r.mul(x, a), x) == x && r.mul(a, x) == r.mul(x, a)) out.push_back(x);
  return out;
}

inline std::vector<M2> m2_penrose_solutions(const M2Ring& r, const M2& a) {
  std::vector<M2> out;
  for (const auto& x : r.all()) {
    const M2 ax = r.mul(a, x), xa = r.mul(x, a);
    if (r.mul(ax, a) == a && r.mul(xa, x) == x && r.star(ax) == ax && r.star(xa) == xa) out.push_back(x);
  }
  return out;
}

inline bool m2_is_ep(const M2Ring& r, const M2& a) {
  const auto g = m2_group_solutions(r, a);
  const auto m = m2_penrose_solutions(r, a);
  return g.size() == 1 && m.size() == 1 && g[0] == m[0];
}

/// Smallest k >= 1 with a^k EP; the index of a 2 x 2 matrix is at most 2, the
/// scan goes to 4.
inline std::optional<int> m2_dmp_index(const M2Ring& r, const M2& a) {
  for (int k = 1; k <= 4; ++k)
    if (m2_is_ep(r, r.pow(a, k))) return k;
  return std::nullopt;
}

}  // namespace oracle
