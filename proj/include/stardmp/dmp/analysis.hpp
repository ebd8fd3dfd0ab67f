#pragma once

// *-DMP classification, its characterizations, the two decompositions, the
// pseudo core and core orders, and the projector-equality battery. Every
// operation is generic over a carrier supplying the inverse constructors
// (ExactMatrixRing, ZnRing, ZpMatrixRing).

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stardmp/core/errors.hpp"
#include "stardmp/core/star_ring.hpp"

namespace stardmp::dmp {

enum class Verdict { holds, fails, inapplicable };
std::string_view to_string(Verdict v);

struct Vote {
  Verdict verdict = Verdict::inapplicable;
  std::optional<int> index;
  std::string note;

  static Vote holds(int index) { return {Verdict::holds, index, {}}; }
  static Vote fails(std::string note = {}) { return {Verdict::fails, std::nullopt, std::move(note)}; }
  static Vote inapplicable(std::string note) { return {Verdict::inapplicable, std::nullopt, std::move(note)}; }
};

/// Ids accepted by star_dmp_via, in catalog order.
const std::vector<std::string>& characterization_ids();
bool is_characterization_id(std::string_view id);

template <class E>
struct DmpReport {
  E subject;
  bool is_star_dmp = false;
  std::optional<int> index;  // smallest m with a^m EP
  int drazin_index = 1;
  std::optional<E> drazin;
  std::optional<E> power_mp;  // (a^m)^† at m = Drazin index
  std::optional<E> pseudo_core;
  std::optional<E> dual_pseudo_core;
  std::vector<std::pair<std::string, Vote>> votes;
};

/// A vote agrees with the definitional verdict when it holds at the same index
/// for a *-DMP element, and does not hold otherwise.
template <class E>
bool vote_agrees(const DmpReport<E>& r, const Vote& v) {
  if (r.is_star_dmp) return v.verdict == Verdict::holds && v.index == r.index;
  return v.verdict != Verdict::holds;
}

template <class E>
struct ElementFacts {
  E a;
  E one;
  ExistenceResult<E> d;
  int m;  // Drazin index
  E am;
  ExistenceResult<E> p;  // pseudo core inverse
  ExistenceResult<E> q;  // dual pseudo core inverse
};

template <class Ring, class E = typename Ring::Element>
ElementFacts<E> gather(const Ring& ring, const E& a) {
  auto d = ring.drazin(a);
  const int m = d.index();
  E am = power(a, static_cast<unsigned>(m));
  return {a, one_like(a), std::move(d), m, std::move(am), ring.pseudo_core(a), ring.dual_pseudo_core(a)};
}

/// a^# and a^† both exist and coincide.
template <class Ring, class E = typename Ring::Element>
bool is_ep(const Ring& ring, const E& a) {
  const auto g = ring.group(a);
  if (!g) return false;
  const auto mp = ring.moore_penrose(a);
  return mp && mp.value() == g.value();
}

/// Definitional route: a a^D symmetric decides; the index is the smallest k with
/// a^k EP, scanned from 1 (it must not exceed the Drazin index).
template <class Ring, class E = typename Ring::Element>
DmpReport<E> star_dmp(const Ring& ring, const E& a) {
  DmpReport<E> r{a};
  const auto d = ring.drazin(a);
  r.drazin_index = d.index();
  r.drazin = d.value();
  r.is_star_dmp = is_symmetric(E(a * d.value()));
  if (r.is_star_dmp) {
    for (int k = 1; k <= r.drazin_index && !r.index; ++k)
      if (is_ep(ring, power(a, static_cast<unsigned>(k)))) r.index = k;
    if (!r.index) throw std::logic_error("a a^D is symmetric but no power up to the Drazin index is EP");
  }
  const E am = power(a, static_cast<unsigned>(r.drazin_index));
  if (const auto mp = ring.moore_penrose(am)) r.power_mp = mp.value();
  if (const auto p = ring.pseudo_core(a)) r.pseudo_core = p.value();
  if (const auto q = ring.dual_pseudo_core(a)) r.dual_pseudo_core = q.value();
  return r;
}

namespace detail {

template <class Ring, class E>
std::vector<E> existential_candidates(const Ring& ring, const ElementFacts<E>& f) {
  if constexpr (Ring::is_finite) {
    return ring.elements();
  } else {
    std::vector<E> c{f.d.value()};
    for (auto& x : ring.random_probes(f.a, 2)) c.push_back(std::move(x));
    return c;
  }
}

// Smallest m in [1, bound] with some {1,3}-inverse x of a^m satisfying cond(m, a^m, x).
template <class Ring, class E, class Cond>
Vote scan_one_three(const Ring& ring, const E& a, Cond cond) {
  bool any_family = false;
  const int bound = ring.index_bound(a);
  for (int m = 1; m <= bound; ++m) {
    const E am = power(a, static_cast<unsigned>(m));
    const auto family = ring.one_three_family(am);
    if (family.empty()) continue;
    any_family = true;
    for (const auto& x : family)
      if (cond(am, x)) return Vote::holds(m);
  }
  if (!any_family) return Vote::inapplicable("no power of a has a {1,3}-inverse");
  return Vote::fails();
}

// Smallest m with some x: x a^{m+1} = a^m, extra(x), (x^m a^m)* = x^m a^m.
template <class Ring, class E, class Extra>
Vote scan_equations(const Ring& ring, const ElementFacts<E>& f, Extra extra) {
  const auto candidates = existential_candidates(ring, f);
  const int bound = ring.index_bound(f.a);
  for (int m = 1; m <= bound; ++m) {
    const E am = power(f.a, static_cast<unsigned>(m));
    const E am1 = am * f.a;
    for (const auto& x : candidates) {
      if (!(x * am1 == am) || !extra(x)) continue;
      if (is_symmetric(E(power(x, static_cast<unsigned>(m)) * am))) return Vote::holds(m);
    }
  }
  return Vote::fails();
}

inline Vote from_bool(bool ok, int m) { return ok ? Vote::holds(m) : Vote::fails(); }

}  // namespace detail

/// Evaluates one catalog characterization. Throws DomainError for an unknown id.
template <class Ring, class E = typename Ring::Element>
Vote star_dmp_via(const Ring& ring, std::string_view id, const ElementFacts<E>& f) {
  const E& a = f.a;
  const E& one = f.one;
  const E& d = f.d.value();
  const int m = f.m;

  if (id == "T2.4-1" || id == "T2.4-2") {
    const bool first = id == "T2.4-1";
    return detail::scan_one_three(ring, a, [&](const E& am, const E& x) {
      return first ? a * x == x * a : am * x == x * am;
    });
  }
  if (id == "T2.6-1") return detail::from_bool(d == d * star(E(a * d)), m);
  if (id == "T2.6-2") return detail::from_bool(d == star(E(d * a)) * d, m);
  if (id == "T2.6-3") {
    const E e = one - a * d;
    return detail::from_bool(d * star(e) == e * star(d), m);
  }

  if (id.substr(0, 5) == "T2.9-" || id.substr(0, 5) == "C5.3-") {
    if (!f.p || !f.q) return Vote::inapplicable("pseudo core or dual pseudo core inverse does not exist");
    if (f.p.index() != f.q.index()) return Vote::inapplicable("pseudo core and dual pseudo core indices differ");
    const int k = f.p.index();
    const E& p = f.p.value();
    const E& q = f.q.value();
    const E P = a * p;
    const E Q = q * a;
    if (id == "T2.9-2") return detail::from_bool(p == q, k);
    if (id == "T2.9-3") return detail::from_bool(P == Q, k);
    const E ak = power(a, static_cast<unsigned>(k));
    if (id == "C5.3-2") return detail::from_bool(P == Q, k);
    if (id == "C5.3-3") return detail::from_bool(P == P * Q && ring.is_unit(E(P + one - Q)), k);
    if (id == "C5.3-4") return detail::from_bool(P == P * Q && ring.is_unit(E(ak + one - Q)), k);
    const bool commute = P * Q == Q * P;
    if (id == "C5.3-5")
      return detail::from_bool(commute && ring.is_unit(E(P + one - Q)) && ring.is_unit(E(Q + one - P)), k);
    if (id == "C5.3-6") {
      const E diff = P - Q;
      return detail::from_bool(commute && ring.is_unit(E(one - diff * diff)), k);
    }
    if (id == "C5.3-7") return detail::from_bool(commute && star(q) * P - p * Q == star(q) - p, k);
  }

  if (id.substr(0, 6) == "T2.10-") {
    if (!f.p) return Vote::inapplicable("pseudo core inverse does not exist");
    const int k = f.p.index();
    const E& p = f.p.value();
    const E ak = power(a, static_cast<unsigned>(k));
    if (id == "T2.10-1") return detail::from_bool(a * p == p * a, k);
    if (id == "T2.10-2") return detail::from_bool(d * p == p * d, k);
    if (id == "T2.10-3") {
      for (const auto& y : ring.one_three_family(ak))
        if (p == y * ak * d) return Vote::holds(k);
      return Vote::fails();
    }
    if (id == "T2.10-4") return detail::from_bool(ak * a * p == ak, k);
    if (id == "T2.10-5") return detail::from_bool(p * p * a == p, k);
    if (id == "T2.10-6") return detail::from_bool(is_symmetric(E(p * a)), k);
    if (id == "T2.10-7") {
      const E P = a * p;
      const E Q = p * a;
      return detail::from_bool(P * Q == Q * P, k);
    }
  }

  if (id == "T2.11-2") return detail::scan_equations(ring, f, [&](const E& x) { return a * x * x == x; });
  if (id == "T2.11-3") return detail::scan_equations(ring, f, [&](const E& x) { return a * x == x * a; });

  throw DomainError("unknown characterization id '" + std::string(id) + "'");
}

template <class Ring, class E = typename Ring::Element>
Vote star_dmp_via(const Ring& ring, std::string_view id, const E& a) {
  if (!is_characterization_id(id)) throw DomainError("unknown characterization id '" + std::string(id) + "'");
  return star_dmp_via(ring, id, gather(ring, a));
}

/// star_dmp plus every characterization vote.
template <class Ring, class E = typename Ring::Element>
DmpReport<E> classify(const Ring& ring, const E& a) {
  auto report = star_dmp(ring, a);
  const auto facts = gather(ring, a);
  for (const auto& id : characterization_ids()) report.votes.emplace_back(id, star_dmp_via(ring, id, facts));
  return report;
}

// ---- (a^m)* = ua = au with u group invertible

template <class E>
struct UnitaryFactorWitness {
  E u;
  E u_group;  // a((a^D)^m)*
  bool factors = false;         // ua = au = (a^m)*
  bool group_equations = false;  // u_group satisfies the group inverse equations of u
};

/// Needs a *-DMP of index m with a(a*)^m = (a*)^m a; std::nullopt otherwise.
template <class Ring, class E = typename Ring::Element>
std::optional<UnitaryFactorWitness<E>> unitary_factor_witness(const Ring& ring, const E& a) {
  const auto report = star_dmp(ring, a);
  if (!report.is_star_dmp) return std::nullopt;
  const int m = *report.index;
  const E asm_ = power(star(a), static_cast<unsigned>(m));
  if (!(a * asm_ == asm_ * a)) return std::nullopt;
  const E& d = *report.drazin;
  UnitaryFactorWitness<E> w{d * star(power(a, static_cast<unsigned>(m))),
                            a * star(power(d, static_cast<unsigned>(m)))};
  w.factors = w.u * a == a * w.u && w.u * a == star(power(a, static_cast<unsigned>(m)));
  w.group_equations = verify_drazin(w.u, w.u_group, 1);
  return w;
}

// ---- decompositions

template <class E>
struct PseudoCoreDecomposition {
  E a1;
  E a2;
  int m = 1;
  E a1_group;  // (a^⊛)^2 a
  bool sum = false;               // a = a1 + a2
  bool nilpotent = false;         // a2^m = 0
  bool star_orthogonal = false;   // a1* a2 = 0
  bool annihilating = false;      // a2 a1 = 0
  bool group_invertible = false;  // a1^# exists
  bool group_formula = false;     // a1^# = (a^⊛)^2 a

  bool axioms_hold() const {
    return sum && nilpotent && star_orthogonal && annihilating && group_invertible && group_formula;
  }
};

template <class Ring, class E = typename Ring::Element>
std::optional<PseudoCoreDecomposition<E>> pseudo_core_decompose(const Ring& ring, const E& a) {
  const auto p = ring.pseudo_core(a);
  if (!p) return std::nullopt;
  const E& x = p.value();
  PseudoCoreDecomposition<E> dec{a * x * a, a - a * x * a, p.index(), x * x * a};
  dec.sum = dec.a1 + dec.a2 == a;
  dec.nilpotent = is_zero(power(dec.a2, static_cast<unsigned>(dec.m)));
  dec.star_orthogonal = is_zero(E(star(dec.a1) * dec.a2));
  dec.annihilating = is_zero(E(dec.a2 * dec.a1));
  const auto g = ring.group(dec.a1);
  dec.group_invertible = g.has_value();
  dec.group_formula = g && g.value() == dec.a1_group && verify_drazin(dec.a1, dec.a1_group, 1);
  return dec;
}

/// b1 + b2 = a, b1^# exists, b2^m = 0, b1* b2 = 0, b2 b1 = 0.
template <class Ring, class E = typename Ring::Element>
bool is_pseudo_core_candidate(const Ring& ring, const E& a, const E& b1, const E& b2, int m) {
  return b1 + b2 == a && ring.group(b1).has_value() && is_zero(power(b2, static_cast<unsigned>(m))) &&
         is_zero(E(star(b1) * b2)) && is_zero(E(b2 * b1));
}

/// Whether a valid candidate equals the constructed decomposition. A candidate
/// violating the axioms is rejected with DomainError.
template <class Ring, class E = typename Ring::Element>
bool decomposition_unique(const Ring& ring, const E& a, const E& b1, const E& b2, int m) {
  if (!is_pseudo_core_candidate(ring, a, b1, b2, m))
    throw DomainError("candidate does not satisfy the pseudo core decomposition axioms");
  const auto dec = pseudo_core_decompose(ring, a);
  if (!dec) throw DomainError("a has no pseudo core inverse");
  return dec->a1 == b1 && dec->a2 == b2;
}

/// All valid (b1, a - b1) at m = I(a), by exhaustive scan of b1.
template <class Ring, class E = typename Ring::Element>
std::vector<std::pair<E, E>> all_pseudo_core_decompositions(const Ring& ring, const E& a, int m) {
  static_assert(Ring::is_finite, "exhaustive decomposition scan needs a finite carrier");
  std::vector<std::pair<E, E>> out;
  for (const auto& b1 : ring.elements()) {
    const E b2 = a - b1;
    if (is_pseudo_core_candidate(ring, a, b1, b2, m)) out.emplace_back(b1, b2);
  }
  return out;
}

template <class E>
struct CoreNilpotentDecomposition {
  E core_part;       // a a^D a
  E nilpotent_part;  // (1 - a a^D) a
  int m = 1;
  bool sum = false;
  bool nilpotent = false;    // n^m = 0
  bool annihilating = false;  // c n = n c = 0
  bool group_formula = false;  // c^# = a^D

  bool axioms_hold() const { return sum && nilpotent && annihilating && group_formula; }
};

template <class Ring, class E = typename Ring::Element>
CoreNilpotentDecomposition<E> core_nilpotent_decompose(const Ring& ring, const E& a) {
  const auto d = ring.drazin(a);
  const E& x = d.value();
  CoreNilpotentDecomposition<E> dec{a * x * a, (one_like(a) - a * x) * a, d.index()};
  dec.sum = dec.core_part + dec.nilpotent_part == a;
  dec.nilpotent = is_zero(power(dec.nilpotent_part, static_cast<unsigned>(dec.m)));
  dec.annihilating = is_zero(E(dec.core_part * dec.nilpotent_part)) && is_zero(E(dec.nilpotent_part * dec.core_part));
  const auto g = ring.group(dec.core_part);
  dec.group_formula = g && g.value() == x;
  return dec;
}

/// std::nullopt when the pseudo core decomposition does not exist.
template <class Ring, class E = typename Ring::Element>
std::optional<bool> decompositions_coincide(const Ring& ring, const E& a) {
  const auto pc = pseudo_core_decompose(ring, a);
  if (!pc) return std::nullopt;
  const auto cn = core_nilpotent_decompose(ring, a);
  return pc->a1 == cn.core_part && pc->a2 == cn.nilpotent_part;
}

/// The core inverse of a1 equals a^⊛. std::nullopt when a^⊛ is absent.
template <class Ring, class E = typename Ring::Element>
std::optional<bool> core_of_first_part_matches(const Ring& ring, const E& a) {
  const auto p = ring.pseudo_core(a);
  if (!p) return std::nullopt;
  const E a1 = a * p.value() * a;
  const auto c = ring.core(a1);
  return c && c.value() == p.value();
}

/// (a is *-DMP with index I(a)) == (a1 is EP). std::nullopt when a^⊛ is absent.
template <class Ring, class E = typename Ring::Element>
std::optional<std::pair<bool, bool>> dmp_versus_first_part_ep(const Ring& ring, const E& a) {
  const auto p = ring.pseudo_core(a);
  if (!p) return std::nullopt;
  const auto r = star_dmp(ring, a);
  const bool lhs = r.is_star_dmp && r.index == p.index();
  return std::pair{lhs, is_ep(ring, E(a * p.value() * a))};
}

// ---- orders

enum class Relation { pseudo_core, core };
std::string_view to_string(Relation r);
Relation parse_relation(std::string_view text);

template <class E>
struct Equality {
  std::string label;
  E lhs;
  E rhs;
  bool holds() const { return lhs == rhs; }
};

template <class E>
struct OrderVerdict {
  Relation relation = Relation::pseudo_core;
  Verdict verdict = Verdict::inapplicable;
  std::vector<Equality<E>> equalities;
  std::string note;
  bool holds() const { return verdict == Verdict::holds; }
};

namespace detail {

template <class E>
OrderVerdict<E> order_from(Relation rel, const ExistenceResult<E>& inv, const E& a, const E& b, const char* sym) {
  OrderVerdict<E> v{rel};
  if (!inv) {
    v.note = std::string("a has no ") + (rel == Relation::core ? "core" : "pseudo core") + " inverse";
    return v;
  }
  const E& x = inv.value();
  v.equalities.push_back({std::string(sym) + " a = " + sym + " b", x * a, x * b});
  v.equalities.push_back({std::string("a ") + sym + " = b " + sym, a * x, b * x});
  v.verdict = v.equalities[0].holds() && v.equalities[1].holds() ? Verdict::holds : Verdict::fails;
  return v;
}

}  // namespace detail

template <class Ring, class E = typename Ring::Element>
OrderVerdict<E> pseudo_core_order(const Ring& ring, const E& a, const E& b) {
  require_same_carrier(a, b);
  return detail::order_from(Relation::pseudo_core, ring.pseudo_core(a), a, b, "x");
}

template <class Ring, class E = typename Ring::Element>
OrderVerdict<E> core_order(const Ring& ring, const E& a, const E& b) {
  require_same_carrier(a, b);
  return detail::order_from(Relation::core, ring.core(a), a, b, "x");
}

template <class Ring, class E = typename Ring::Element>
OrderVerdict<E> compare(const Ring& ring, Relation rel, const E& a, const E& b) {
  return rel == Relation::core ? core_order(ring, a, b) : pseudo_core_order(ring, a, b);
}

/// Equivalent conditions evaluated together; `applicable` is false when a
/// hypothesis fails, with `reason` naming it.
template <std::size_t N>
struct ConditionVector {
  bool applicable = false;
  std::string reason;
  std::array<bool, N> values{};
  bool all_equal() const {
    for (bool v : values)
      if (v != values[0]) return false;
    return true;
  }
};

/// (1) a ≤⊛ b; (2) a^{k+1} = b a^k and a* a^k = b* a^k; (3) a1 ≤⊕ b1; k = max(I(a), I(b)).
template <class Ring, class E = typename Ring::Element>
ConditionVector<3> order_characterizations(const Ring& ring, const E& a, const E& b) {
  ConditionVector<3> out;
  const auto pa = ring.pseudo_core(a);
  const auto pb = ring.pseudo_core(b);
  if (!pa || !pb) {
    out.reason = "a or b has no pseudo core inverse";
    return out;
  }
  out.applicable = true;
  const auto k = static_cast<unsigned>(std::max(pa.index(), pb.index()));
  const E ak = power(a, k);
  out.values[0] = pseudo_core_order(ring, a, b).holds();
  out.values[1] = ak * a == b * ak && star(a) * ak == star(b) * ak;
  const E a1 = a * pa.value() * a;
  const E b1 = b * pb.value() * b;
  out.values[2] = core_order(ring, a1, b1).holds();
  return out;
}

/// Under a *-DMP: (1) a ≤⊛ b; (2) c_a ≤⊕ c_b; (3) a^⊛ b^⊛ = b^⊛ a^⊛ and a^⊛ b = a^⊛ a;
/// (4) a^⊛ ≤⊕ b^⊛ and a^⊛ b = a^⊛ a.
template <class Ring, class E = typename Ring::Element>
ConditionVector<4> dmp_order_characterizations(const Ring& ring, const E& a, const E& b) {
  ConditionVector<4> out;
  const auto pa = ring.pseudo_core(a);
  const auto pb = ring.pseudo_core(b);
  if (!pa || !pb) {
    out.reason = "a or b has no pseudo core inverse";
    return out;
  }
  if (!star_dmp(ring, a).is_star_dmp) {
    out.reason = "a is not *-DMP";
    return out;
  }
  out.applicable = true;
  const E& x = pa.value();
  const E& y = pb.value();
  const bool absorb = x * b == x * a;
  out.values[0] = pseudo_core_order(ring, a, b).holds();
  out.values[1] = core_order(ring, core_nilpotent_decompose(ring, a).core_part,
                             core_nilpotent_decompose(ring, b).core_part)
                      .holds();
  out.values[2] = x * y == y * x && absorb;
  out.values[3] = core_order(ring, x, y).holds() && absorb;
  return out;
}

/// Under a ≤⊛ b with a *-DMP: (b is *-DMP, b(1 - a a^⊛) is *-DMP).
template <class Ring, class E = typename Ring::Element>
ConditionVector<2> order_dmp_transfer(const Ring& ring, const E& a, const E& b) {
  ConditionVector<2> out;
  const auto pa = ring.pseudo_core(a);
  if (!pa || !ring.pseudo_core(b)) {
    out.reason = "a or b has no pseudo core inverse";
    return out;
  }
  if (!pseudo_core_order(ring, a, b).holds()) {
    out.reason = "a is not below b in the pseudo core order";
    return out;
  }
  if (!star_dmp(ring, a).is_star_dmp) {
    out.reason = "a is not *-DMP";
    return out;
  }
  out.applicable = true;
  out.values[0] = star_dmp(ring, b).is_star_dmp;
  out.values[1] = star_dmp(ring, E(b * (one_like(a) - a * pa.value()))).is_star_dmp;
  return out;
}

// ---- projector equalities

template <class E>
struct UnitCertificate {
  std::string label;  // u, v, s or w
  E value;
  bool is_unit = false;
};

template <class E>
struct ProjectorBattery {
  bool applicable = false;
  std::string reason;
  int m = 1;                     // I(a)
  std::array<bool, 4> ideal{};   // aa^⊛ = bb^⊛aa^⊛ family
  std::array<bool, 6> equal{};   // aa^⊛ = bb^⊛ family
  std::vector<UnitCertificate<E>> certificates;
};

template <class Ring, class E = typename Ring::Element>
ProjectorBattery<E> projector_equality_battery(const Ring& ring, const E& a, const E& b) {
  ProjectorBattery<E> out;
  const auto pa = ring.pseudo_core(a);
  const auto pb = ring.pseudo_core(b);
  if (!pa || !pb) {
    out.reason = "a or b has no pseudo core inverse";
    return out;
  }
  out.applicable = true;
  out.m = pa.index();
  const E& x = pa.value();
  const E& y = pb.value();
  const E one = one_like(a);
  const E P = a * x;
  const E Q = b * y;
  const E PQ = P * Q;
  const E QP = Q * P;

  out.ideal[0] = P == QP;
  out.ideal[1] = P == PQ;
  out.ideal[2] = x == x * Q;
  out.ideal[3] = ring.left_ideal_contained(x, E(x * Q));

  const E diff = P - Q;
  out.certificates.push_back({"u", P + one - Q});
  out.certificates.push_back({"v", power(a, static_cast<unsigned>(out.m)) + one - Q});
  out.certificates.push_back({"s", Q + one - P});
  out.certificates.push_back({"w", one - diff * diff});
  for (auto& c : out.certificates) c.is_unit = ring.is_unit(c.value);
  const bool u = out.certificates[0].is_unit, v = out.certificates[1].is_unit, s = out.certificates[2].is_unit,
             w = out.certificates[3].is_unit;
  const bool commute = PQ == QP;
  out.equal[0] = P == Q;
  out.equal[1] = P == PQ && u;
  out.equal[2] = P == PQ && v;
  out.equal[3] = commute && u && s;
  out.equal[4] = commute && w;
  out.equal[5] = commute && y * P - x * Q == y - x;
  return out;
}

// ---- powers, products, sums

/// (a is *-DMP, a^k is *-DMP)
template <class Ring, class E = typename Ring::Element>
std::pair<bool, bool> power_dmp_check(const Ring& ring, const E& a, unsigned k) {
  if (k == 0) throw DomainError("power must be positive");
  return {star_dmp(ring, a).is_star_dmp, star_dmp(ring, power(a, k)).is_star_dmp};
}

struct ClosureVerdict {
  bool hypotheses = false;  // the algebraic side conditions
  std::string reason;
  bool premises = false;    // a and b both *-DMP
  bool conclusion = false;  // the product (sum) is *-DMP
  /// Only meaningful when hypotheses and premises hold.
  bool confirmed() const { return conclusion; }
};

/// ab = ba, ab* = b*a, a and b *-DMP  =>  ab *-DMP.
template <class Ring, class E = typename Ring::Element>
ClosureVerdict product_dmp_check(const Ring& ring, const E& a, const E& b) {
  require_same_carrier(a, b);
  ClosureVerdict v;
  const E bs = star(b);
  v.hypotheses = a * b == b * a && a * bs == bs * a;
  if (!v.hypotheses) v.reason = a * b == b * a ? "ab* != b*a" : "ab != ba";
  v.premises = star_dmp(ring, a).is_star_dmp && star_dmp(ring, b).is_star_dmp;
  v.conclusion = star_dmp(ring, E(a * b)).is_star_dmp;
  return v;
}

/// ab = ba = 0, a*b = 0, a and b *-DMP  =>  a+b *-DMP.
template <class Ring, class E = typename Ring::Element>
ClosureVerdict sum_dmp_check(const Ring& ring, const E& a, const E& b) {
  require_same_carrier(a, b);
  ClosureVerdict v;
  const bool ab = is_zero(E(a * b)), ba = is_zero(E(b * a)), asb = is_zero(E(star(a) * b));
  v.hypotheses = ab && ba && asb;
  if (!ab)
    v.reason = "ab != 0";
  else if (!ba)
    v.reason = "ba != 0";
  else if (!asb)
    v.reason = "a*b != 0";
  v.premises = star_dmp(ring, a).is_star_dmp && star_dmp(ring, b).is_star_dmp;
  v.conclusion = star_dmp(ring, E(a + b)).is_star_dmp;
  return v;
}

}  // namespace stardmp::dmp
