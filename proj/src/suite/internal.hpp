#pragma once

// Shared between the suite translation units: universe slices with a per
// element memo, the violation recorder, and the per-check entry points.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stardmp/cli/document.hpp"
#include "stardmp/dmp/analysis.hpp"
#include "stardmp/exact/exact_ring.hpp"
#include "stardmp/finite/carriers.hpp"
#include "stardmp/suite/suite.hpp"

namespace stardmp::suite::detail {

template <class E>
struct Facts {
  dmp::ElementFacts<E> base;
  dmp::DmpReport<E> report;
  std::optional<int> ep_index;  // smallest k with a^k EP, found by scanning powers
  int bound = 1;                // index_bound(a)

  bool has_p() const { return base.p.has_value(); }
  bool has_q() const { return base.q.has_value(); }
  const E& p() const { return base.p.value(); }
  const E& q() const { return base.q.value(); }
};

template <class Ring, class E = typename Ring::Element>
Facts<E> compute_facts(const Ring& ring, const E& a) {
  Facts<E> f{dmp::gather(ring, a), dmp::star_dmp(ring, a), std::nullopt, ring.index_bound(a)};
  for (int k = 1; k <= f.bound && !f.ep_index; ++k)
    if (dmp::is_ep(ring, power(a, static_cast<unsigned>(k)))) f.ep_index = k;
  return f;
}

/// One carrier of a universe with the elements (and pairs, triples) to test.
/// When `exhaustive`, pairs and triples range over all tuples of `elements`.
template <class Ring>
struct Slice {
  using E = typename Ring::Element;

  Slice(Ring r, std::string name, bool all_tuples = true)
      : ring(std::move(r)), label(std::move(name)), exhaustive(all_tuples) {}

  Ring ring;
  std::string label;
  bool exhaustive = true;
  std::vector<E> elements;
  std::vector<std::pair<E, E>> pairs;
  std::vector<std::array<E, 3>> triples;

  const Facts<E>& facts(const E& a) {
    std::string key;
    if constexpr (Ring::is_finite)
      key = std::to_string(ring.index_of(a));
    else
      key = a.to_string();
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, std::make_shared<Facts<E>>(compute_facts(ring, a))).first;
    return *it->second;
  }

  /// f(a, b) returns true to stop early.
  template <class F>
  bool for_each_pair(F&& f) {
    if (exhaustive) {
      for (const auto& a : elements)
        for (const auto& b : elements)
          if (f(a, b)) return true;
      return false;
    }
    for (const auto& [a, b] : pairs)
      if (f(a, b)) return true;
    return false;
  }

  template <class F>
  bool for_each_triple(F&& f) {
    if (exhaustive) {
      for (const auto& a : elements)
        for (const auto& b : elements)
          for (const auto& c : elements)
            if (f(a, b, c)) return true;
      return false;
    }
    for (const auto& t : triples)
      if (f(t[0], t[1], t[2])) return true;
    return false;
  }

  /// a ≤⊛ b from memoized pseudo core inverses; false when either is missing.
  bool below(const E& a, const E& b) {
    const auto& fa = facts(a);
    if (!fa.has_p() || !facts(b).has_p()) return false;
    const E& x = fa.p();
    return x * a == x * b && a * x == b * x;
  }

 private:
  std::unordered_map<std::string, std::shared_ptr<Facts<E>>> cache_;
};

struct Recorder {
  static constexpr std::size_t kKept = 5;

  std::size_t instances = 0;
  std::size_t applicable = 0;
  std::size_t violation_count = 0;
  std::vector<json> violations;
  std::vector<std::string> notes;
  json witness;
  bool needs_witness = false;

  void violate(json v) {
    ++violation_count;
    if (violations.size() < kKept) violations.push_back(std::move(v));
  }
  void note(const std::string& text) {
    for (const auto& n : notes)
      if (n == text) return;
    notes.push_back(text);
  }
};

template <class Ring, class... Named>
json instance(const Slice<Ring>& s, std::string detail, const Named&... named) {
  json j;
  j["carrier"] = s.label;
  ((j[named.first] = io::value_to_json(named.second)), ...);
  j["detail"] = std::move(detail);
  return j;
}

template <class E>
std::pair<const char*, const E&> named(const char* name, const E& e) {
  return {name, e};
}

inline std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

// Entry points; each returns false when `id` is not one of its checks.
template <class Ring>
bool run_unary(std::string_view id, Slice<Ring>& s, Recorder& r);
template <class Ring>
bool run_relational(std::string_view id, Slice<Ring>& s, Recorder& r);

/// The fixed 2 x 2 transpose carrier and its named elements.
struct Fixture {
  exact::ExactMatrixRing ring{2, Involution::transpose};
  exact::ExactMatrix a, b, ep_not_normal, normal_not_ep;
  Fixture();
  /// 0, a, b, a+b, ba, then the two EP/normal witnesses.
  std::vector<exact::ExactMatrix> elements() const;
};

void check_fixed_pair(Recorder& r);

}  // namespace stardmp::suite::detail
