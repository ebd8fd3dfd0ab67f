// Checks over pairs and triples.

#include "internal.hpp"

namespace stardmp::suite::detail {

namespace {

template <std::size_t N>
std::string bits(const std::array<bool, N>& v) {
  std::string out;
  for (bool b : v) out += b ? '1' : '0';
  return out;
}

template <class Ring>
void product_closure(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  s.for_each_pair([&](const E& a, const E& b) {
    ++r.instances;
    const E bs = star(b);
    if (!(a * b == b * a) || !(a * bs == bs * a)) return false;
    if (!s.facts(a).ep_index || !s.facts(b).ep_index) return false;
    const auto v = dmp::product_dmp_check(s.ring, a, b);
    ++r.applicable;
    if (!v.conclusion) r.violate(instance(s, "ab is not *-DMP", named("a", a), named("b", b)));
    return false;
  });
}

template <class Ring>
void sum_closure(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  s.for_each_pair([&](const E& a, const E& b) {
    ++r.instances;
    if (!is_zero(E(a * b)) || !is_zero(E(b * a)) || !is_zero(E(star(a) * b))) return false;
    if (!s.facts(a).ep_index || !s.facts(b).ep_index) return false;
    const auto v = dmp::sum_dmp_check(s.ring, a, b);
    ++r.applicable;
    if (!v.conclusion) r.violate(instance(s, "a + b is not *-DMP", named("a", a), named("b", b)));
    return false;
  });
}

template <class Ring>
void preorder(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  r.needs_witness = true;
  for (const auto& a : s.elements) {
    ++r.instances;
    if (!s.facts(a).has_p()) continue;
    ++r.applicable;
    if (!s.below(a, a)) r.violate(instance(s, "not reflexive", named("a", a)));
  }
  // keep the first anti-symmetry witness across slices
  if (r.witness.is_null()) {
    s.for_each_pair([&](const E& a, const E& b) {
      if (a == b || !s.below(a, b) || !s.below(b, a)) return false;
      r.witness = instance(s, "a ≤ b and b ≤ a with a ≠ b", named("a", a), named("b", b));
      return true;
    });
  }
  s.for_each_triple([&](const E& a, const E& b, const E& c) {
    ++r.instances;
    if (!s.facts(c).has_p() || !s.below(a, b) || !s.below(b, c)) return false;
    ++r.applicable;
    if (!s.below(a, c)) r.violate(instance(s, "not transitive", named("a", a), named("b", b), named("c", c)));
    return false;
  });
}

template <class Ring>
void order_forms(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  s.for_each_pair([&](const E& a, const E& b) {
    ++r.instances;
    if (!s.facts(a).has_p() || !s.facts(b).has_p()) return false;
    const auto v = dmp::order_characterizations(s.ring, a, b);
    ++r.applicable;
    if (!v.all_equal()) r.violate(instance(s, "conditions " + bits(v.values), named("a", a), named("b", b)));
    return false;
  });
}

template <class Ring>
void dmp_order_forms(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  s.for_each_pair([&](const E& a, const E& b) {
    ++r.instances;
    if (!s.facts(a).has_p() || !s.facts(b).has_p() || !s.facts(a).ep_index) return false;
    const auto v = dmp::dmp_order_characterizations(s.ring, a, b);
    if (!v.applicable) return false;
    ++r.applicable;
    if (!v.all_equal()) r.violate(instance(s, "conditions " + bits(v.values), named("a", a), named("b", b)));
    return false;
  });
}

template <class Ring>
void order_transfer(Slice<Ring>& s, Recorder& r) {
  using E = typename Ring::Element;
  s.for_each_pair([&](const E& a, const E& b) {
    ++r.instances;
    if (!s.facts(a).ep_index || !s.below(a, b)) return false;
    const auto v = dmp::order_dmp_transfer(s.ring, a, b);
    if (!v.applicable) return false;
    ++r.applicable;
    if (!v.all_equal()) r.violate(instance(s, "conditions " + bits(v.values), named("a", a), named("b", b)));
    return false;
  });
}

template <class Ring>
void projector_battery(Slice<Ring>& s, Recorder& r, bool ideal) {
  using E = typename Ring::Element;
  s.for_each_pair([&](const E& a, const E& b) {
    ++r.instances;
    if (!s.facts(a).has_p() || !s.facts(b).has_p()) return false;
    const auto v = dmp::projector_equality_battery(s.ring, a, b);
    ++r.applicable;
    const std::string pattern = ideal ? bits(v.ideal) : bits(v.equal);
    if (pattern.find('0') != std::string::npos && pattern.find('1') != std::string::npos)
      r.violate(instance(s, "conditions " + pattern, named("a", a), named("b", b)));
    return false;
  });
}

}  // namespace

template <class Ring>
bool run_relational(std::string_view id, Slice<Ring>& s, Recorder& r) {
  if (id == "T2.15") product_closure(s, r);
  else if (id == "T2.16") sum_closure(s, r);
  else if (id == "T4.2") preorder(s, r);
  else if (id == "T4.3") order_forms(s, r);
  else if (id == "T4.4") dmp_order_forms(s, r);
  else if (id == "T4.5") order_transfer(s, r);
  else if (id == "P5.1") projector_battery(s, r, true);
  else if (id == "T5.2") projector_battery(s, r, false);
  else return false;
  return true;
}

template bool run_relational(std::string_view, Slice<finite::ZnRing>&, Recorder&);
template bool run_relational(std::string_view, Slice<finite::ZpMatrixRing>&, Recorder&);
template bool run_relational(std::string_view, Slice<exact::ExactMatrixRing>&, Recorder&);

}  // namespace stardmp::suite::detail
