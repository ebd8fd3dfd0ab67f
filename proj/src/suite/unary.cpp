// Checks over single elements.

#include "internal.hpp"

namespace stardmp::suite::detail {

namespace {

template <class Ring, class E = typename Ring::Element>
std::optional<E> mp_of(const Ring& ring, const E& x) {
  if (auto r = ring.moore_penrose(x)) return r.value();
  return std::nullopt;
}

/// Definitional agreement: holds at the EP-scan index, or does not hold.
template <class E>
bool agrees(const Facts<E>& f, const dmp::Vote& v) {
  if (f.ep_index) return v.verdict == dmp::Verdict::holds && v.index == f.ep_index;
  return v.verdict != dmp::Verdict::holds;
}

template <class Ring>
void votes(Slice<Ring>& s, Recorder& r, std::string_view prefix, bool need_both) {
  for (const auto& a : s.elements) {
    ++r.instances;
    const auto& f = s.facts(a);
    if (need_both && (!f.has_p() || !f.has_q())) continue;
    ++r.applicable;
    for (const auto& id : dmp::characterization_ids()) {
      if (id.compare(0, prefix.size(), prefix) != 0) continue;
      const auto v = dmp::star_dmp_via(s.ring, id, f.base);
      if (!agrees(f, v))
        r.violate(instance(s,
                           id + " gives " + std::string(dmp::to_string(v.verdict)) + " at " + show(v.index) +
                               ", *-DMP index is " + show(f.ep_index),
                           named("a", a)));
    }
  }
  if constexpr (!Ring::is_finite)
    if (prefix == "T2.4" || prefix == "T2.10" || prefix == "T2.11")
      r.note("existential quantifiers on matrices range over the canonical, Moore-Penrose and randomized candidates");
}

// Candidate x for existential and ideal conditions.
template <class Ring, class E = typename Ring::Element>
std::vector<E> candidates(Slice<Ring>& s, const E& a) {
  if constexpr (Ring::is_finite) {
    return s.elements.size() == s.ring.size() ? s.elements : s.ring.elements();
  } else {
    const auto& f = s.facts(a);
    std::vector<E> c{f.base.d.value(), a, s.ring.zero(), s.ring.one()};
    if (f.has_p()) c.push_back(f.p());
    if (auto mp = mp_of(s.ring, f.base.am)) c.push_back(*mp);
    for (auto& x : s.ring.random_probes(a, 2)) c.push_back(std::move(x));
    return c;
  }
}

template <class Ring>
void lemma_existence(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const auto& f = s.facts(a);
    const E& d = f.base.d.value();
    const int m = f.base.m;
    const E& am = f.base.am;
    const auto family = s.ring.one_three_family(am);
    if (f.has_p() != !family.empty()) {
      r.violate(instance(s, "pseudo core existence differs from {1,3}-invertibility of a^m", named("a", a)));
      continue;
    }
    if (f.has_p()) {
      if (f.base.p.index() != m) r.violate(instance(s, "pseudo core index differs from the Drazin index", named("a", a)));
      for (const auto& y : family)
        if (!(d * am * y == f.p())) {
          r.violate(instance(s, "a^D a^m y differs from a^⊛ for a {1,3}-inverse y", named("a", a), named("y", y)));
          break;
        }
    }
    if constexpr (Ring::is_finite) {
      const auto brute = finite::brute_force_inverse(s.ring, InverseKind::pseudo_core, a);
      const bool ok = f.has_p() ? brute.size() == 1 && brute[0].value == f.p() && brute[0].index == m : brute.empty();
      if (!ok) r.violate(instance(s, "exhaustive pseudo core solutions do not match", named("a", a)));
    } else {
      // No smaller index is possible, and {1,3}-invertibility is constant from m on.
      for (int k = 1; k < m; ++k)
        if (exact::rank(power(a, static_cast<unsigned>(k))) == exact::rank(power(a, static_cast<unsigned>(k + 1))))
          r.violate(instance(s, "rank stabilizes before the Drazin index", named("a", a)));
      for (int k = m + 1; k <= f.bound; ++k)
        if (exact::one_three_inverse(power(a, static_cast<unsigned>(k))).has_value() != f.has_p())
          r.violate(instance(s, "{1,3}-invertibility of a^k changes past the Drazin index", named("a", a)));
    }
    const auto mp = mp_of(s.ring, am);
    if ((f.has_p() && f.has_q()) != mp.has_value()) {
      r.violate(instance(s, "both one-sided pseudo core inverses exist iff (a^m)^† exists: failed", named("a", a)));
    } else if (mp && !(f.p() == d * am * *mp && f.q() == *mp * am * d)) {
      r.violate(instance(s, "one-sided pseudo core formulas via (a^m)^† fail", named("a", a)));
    }
  }
}

template <class Ring>
void lemma_symmetric_projector(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const auto& f = s.facts(a);
    const std::optional<int> via = is_symmetric(E(a * f.base.d.value())) ? std::optional<int>(f.base.m) : std::nullopt;
    if (via != f.ep_index)
      r.violate(instance(s, "a a^D test gives " + show(via) + ", EP scan gives " + show(f.ep_index), named("a", a)));
    if (f.report.is_star_dmp != f.ep_index.has_value() || f.report.index != f.ep_index)
      r.violate(instance(s, "classifier disagrees with the EP scan", named("a", a)));
  }
}

template <class Ring>
void lemma_power_identities(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const auto& f = s.facts(a);
    const int m = f.base.m;
    const E& d = f.base.d.value();
    const auto mp = mp_of(s.ring, f.base.am);
    const auto um = static_cast<unsigned>(m);
    std::array<bool, 4> c{};
    c[0] = f.ep_index == m;
    c[1] = mp && power(d, um) == *mp;
    c[2] = f.has_p() && f.p() == d;
    c[3] = f.has_p() && mp && power(f.p(), um) == *mp;
    if (!(c[0] == c[1] && c[1] == c[2] && c[2] == c[3]))
      r.violate(instance(s,
                         "conditions differ: " + std::to_string(c[0]) + std::to_string(c[1]) + std::to_string(c[2]) +
                             std::to_string(c[3]),
                         named("a", a)));
  }
}

template <class Ring>
void ep_by_one_three(Slice<Ring>& s, Recorder& r) {
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const bool ep = dmp::is_ep(s.ring, a);
    bool some = false;
    for (const auto& x : s.ring.one_three_family(a))
      if (a * x == x * a) {
        some = true;
        break;
      }
    if (ep != some) r.violate(instance(s, ep ? "EP but no commuting {1,3}-inverse" : "commuting {1,3}-inverse but not EP", named("a", a)));
  }
}

// Is there a group invertible u with t = ua = au?
template <class Ring, class E = typename Ring::Element>
std::optional<bool> group_factor_exists(Slice<Ring>& s, const E& a, const E& t, const std::optional<E>& witness) {
  if constexpr (Ring::is_finite) {
    (void)witness;
    for (const auto& u : s.ring.elements())
      if (u * a == t && a * u == t && s.facts(u).base.m == 1) return true;
    return false;
  } else {
    if (!witness) return std::nullopt;  // not decidable from candidates
    return *witness * a == t && a * *witness == t && s.ring.group(*witness).has_value();
  }
}

template <class Ring>
void normal_power(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const auto& f = s.facts(a);
    auto commutes = [&](int k) {
      const E ask = power(star(a), static_cast<unsigned>(k));
      return a * ask == ask * a;
    };
    const std::optional<int> c1 = f.ep_index && commutes(*f.ep_index) ? f.ep_index : std::nullopt;
    std::optional<int> c2;
    for (int k = 1; k <= f.bound && !c2; ++k)
      if (commutes(k) && mp_of(s.ring, E(power(a, static_cast<unsigned>(k))))) c2 = k;
    const int m = f.base.m;
    std::optional<E> witness;
    if (c1) witness = f.base.d.value() * star(f.base.am);
    const auto u = group_factor_exists(s, a, E(star(f.base.am)), witness);
    if (!u) r.note("on matrices the group invertible factor is only certified through its explicit witness");
    const std::optional<int> c3 = u ? (*u ? std::optional<int>(m) : std::nullopt) : c1;
    if (c1 != c2 || c1 != c3)
      r.violate(instance(s, "index per condition: " + show(c1) + ", " + show(c2) + ", " + show(c3), named("a", a)));
    if (c1) {
      const auto w = dmp::unitary_factor_witness(s.ring, a);
      if (!w || !w->factors || !w->group_equations)
        r.violate(instance(s, "explicit factor a^D (a^m)* fails", named("a", a)));
    }
  }
}

template <class Ring>
void ep_and_normal(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const bool normal = is_normal(a);
    const bool c1 = dmp::is_ep(s.ring, a) && normal;
    const bool c2 = mp_of(s.ring, a).has_value() && normal;
    bool c3 = false;
    if (const auto g = s.ring.group(a)) {
      std::optional<E> witness;
      if (c1) witness = g.value() * star(a);
      const auto u = group_factor_exists(s, a, E(star(a)), witness);
      if (!u) r.note("on matrices the group invertible factor is only certified through its explicit witness");
      c3 = u ? *u : c1;
    }
    if (c1 != c2 || c1 != c3)
      r.violate(instance(s, "conditions differ: " + std::to_string(c1) + std::to_string(c2) + std::to_string(c3),
                         named("a", a)));
  }
}

template <class Ring>
void ideal_pseudo_core(Slice<Ring>& s, Recorder& r) {
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const auto& f = s.facts(a);
    for (const auto& x : candidates(s, a)) {
      for (int variant = 1; variant <= 2; ++variant) {
        std::optional<int> least;
        for (int m = 1; m <= f.bound && !least; ++m)
          if (finite::pseudo_core_ideal_condition(s.ring, a, x, m, variant)) least = m;
        const bool is_p = f.has_p() && x == f.p();
        const bool ok = is_p ? least == f.base.p.index() : !least;
        if (!ok)
          r.violate(instance(s,
                             "variant " + std::to_string(variant) + " least m = " + show(least) +
                                 (is_p ? " for a^⊛" : " for x other than a^⊛"),
                             named("a", a), named("x", x)));
      }
    }
  }
}

template <class Ring>
void ideal_dmp(Slice<Ring>& s, Recorder& r) {
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const auto& f = s.facts(a);
    const auto xs = candidates(s, a);
    for (int variant = 1; variant <= 2; ++variant) {
      std::optional<int> least;
      for (int m = 1; m <= f.bound && !least; ++m)
        for (const auto& x : xs)
          if (finite::dmp_ideal_condition(s.ring, a, x, m, variant)) {
            least = m;
            break;
          }
      if (least != f.ep_index)
        r.violate(instance(s,
                           "variant " + std::to_string(variant) + " least m = " + show(least) + ", *-DMP index " +
                               show(f.ep_index),
                           named("a", a)));
    }
  }
  if constexpr (!Ring::is_finite) r.note("the solution x on matrices ranges over a^⊛, a^D, (a^m)^† and random probes");
}

template <class Ring>
void power_inheritance(Slice<Ring>& s, Recorder& r) {
  for (const auto& a : s.elements) {
    ++r.instances;
    ++r.applicable;
    const auto& f = s.facts(a);
    for (int k = 1; k <= f.bound + 1; ++k) {
      const auto [base, pow] = dmp::power_dmp_check(s.ring, a, static_cast<unsigned>(k));
      if (base != pow) {
        r.violate(instance(s, "a and a^" + std::to_string(k) + " differ", named("a", a)));
        break;
      }
    }
  }
}

template <class Ring>
void decomposition_axioms(Slice<Ring>& s, Recorder& r) {
  for (const auto& a : s.elements) {
    ++r.instances;
    if (!s.facts(a).has_p()) continue;
    ++r.applicable;
    const auto dec = dmp::pseudo_core_decompose(s.ring, a);
    if (!dec || !dec->axioms_hold()) r.violate(instance(s, "decomposition axioms fail", named("a", a)));
  }
}

template <class Ring>
void decomposition_unique(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  for (const auto& a : s.elements) {
    ++r.instances;
    const auto& f = s.facts(a);
    if (!f.has_p()) continue;
    ++r.applicable;
    const auto dec = dmp::pseudo_core_decompose(s.ring, a);
    if constexpr (Ring::is_finite) {
      const auto all = dmp::all_pseudo_core_decompositions(s.ring, a, f.base.p.index());
      if (all.size() != 1 || all[0].first != dec->a1)
        r.violate(instance(s, std::to_string(all.size()) + " decompositions found", named("a", a)));
    } else {
      // Second route: a pseudo core inverse built from a randomized {1,3}-inverse.
      const auto alt = s.ring.pseudo_core_randomized(a);
      if (!alt || !(a * alt.value() * a == dec->a1))
        r.violate(instance(s, "randomized route gives a different first part", named("a", a)));
      if (f.ep_index) {
        const auto cn = dmp::core_nilpotent_decompose(s.ring, a);
        if (!(cn.core_part == dec->a1) || !(cn.nilpotent_part == dec->a2))
          r.violate(instance(s, "core-nilpotent route differs", named("a", a)));
      }
      // Shifting mass between the parts must break an axiom.
      for (const auto& t : s.ring.random_probes(a, 2)) {
        if (is_zero(t)) continue;
        const E b1 = dec->a1 + t;
        const E b2 = dec->a2 - t;
        if (dmp::is_pseudo_core_candidate(s.ring, a, b1, b2, f.base.p.index()))
          r.violate(instance(s, "a shifted decomposition also satisfies the axioms", named("a", a), named("t", t)));
      }
    }
  }
  if constexpr (!Ring::is_finite)
    r.note("matrix uniqueness is checked against a randomized route, the core-nilpotent route and shifted candidates");
}

template <class Ring>
void core_of_first_part(Slice<Ring>& s, Recorder& r) {
  for (const auto& a : s.elements) {
    ++r.instances;
    const auto ok = dmp::core_of_first_part_matches(s.ring, a);
    if (!ok) continue;
    ++r.applicable;
    if (!*ok) r.violate(instance(s, "core inverse of a1 differs from a^⊛", named("a", a)));
  }
}

template <class Ring>
void first_part_ep(Slice<Ring>& s, Recorder& r) {
  for (const auto& a : s.elements) {
    ++r.instances;
    const auto v = dmp::dmp_versus_first_part_ep(s.ring, a);
    if (!v) continue;
    ++r.applicable;
    if (v->first != v->second)
      r.violate(instance(s, std::string("*-DMP at I(a): ") + (v->first ? "yes" : "no") + ", a1 EP: " + (v->second ? "yes" : "no"),
                         named("a", a)));
  }
}

template <class Ring>
void decompositions_coincide(Slice<Ring>& s, Recorder& r) {
  for (const auto& a : s.elements) {
    ++r.instances;
    if (!s.facts(a).ep_index) continue;
    ++r.applicable;
    const auto same = dmp::decompositions_coincide(s.ring, a);
    if (!same || !*same) r.violate(instance(s, "decompositions differ for a *-DMP element", named("a", a)));
  }
}

}  // namespace

template <class Ring>
bool run_unary(std::string_view id, Slice<Ring>& s, Recorder& r) {
  if (id == "L2.1") lemma_existence(s, r);
  else if (id == "L2.2") lemma_symmetric_projector(s, r);
  else if (id == "L2.3") lemma_power_identities(s, r);
  else if (id == "T2.4") votes(s, r, "T2.4", false);
  else if (id == "C2.5") ep_by_one_three(s, r);
  else if (id == "T2.6") votes(s, r, "T2.6", false);
  else if (id == "T2.7") normal_power(s, r);
  else if (id == "C2.8") ep_and_normal(s, r);
  else if (id == "T2.9") votes(s, r, "T2.9", false);
  else if (id == "T2.10") votes(s, r, "T2.10", false);
  else if (id == "T2.11") votes(s, r, "T2.11", false);
  else if (id == "L2.12") ideal_pseudo_core(s, r);
  else if (id == "T2.13") ideal_dmp(s, r);
  else if (id == "T2.14") power_inheritance(s, r);
  else if (id == "T3.1") decomposition_axioms(s, r);
  else if (id == "T3.2") decomposition_unique(s, r);
  else if (id == "T3.3") core_of_first_part(s, r);
  else if (id == "T3.4") first_part_ep(s, r);
  else if (id == "R3.5") decompositions_coincide(s, r);
  else if (id == "C5.3") votes(s, r, "C5.3", true);
  else return false;
  return true;
}

template bool run_unary(std::string_view, Slice<finite::ZnRing>&, Recorder&);
template bool run_unary(std::string_view, Slice<finite::ZpMatrixRing>&, Recorder&);
template bool run_unary(std::string_view, Slice<exact::ExactMatrixRing>&, Recorder&);

}  // namespace stardmp::suite::detail
