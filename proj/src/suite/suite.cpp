#include "stardmp/suite/suite.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "internal.hpp"

namespace stardmp::suite {

using detail::Recorder;
using detail::Slice;
using exact::ExactMatrix;
using exact::ExactMatrixRing;
using finite::ZnRing;
using finite::ZpMatrixRing;

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::vacuous:
      return "vacuous";
  }
  return "?";
}

const std::vector<TheoremInfo>& catalog() {
  static const std::vector<TheoremInfo> k{
      {"L2.1", "a^⊛ exists iff a^D exists and a^m has a {1,3}-inverse y, and then a^⊛ = a^D a^m y; a^⊛ and a_⊛ both exist iff (a^m)^† does", Role::unary},
      {"L2.2", "a is *-DMP with index m iff a^D has index m and a a^D is symmetric", Role::unary},
      {"L2.3", "a is *-DMP with index m iff (a^D)^m = (a^m)^†, iff a^⊛ = a^D, iff (a^⊛)^m = (a^m)^†", Role::unary},
      {"T2.4", "a is *-DMP with index m iff m is least such that a^m has a {1,3}-inverse commuting with a (or with a^m)", Role::unary},
      {"C2.5", "a is EP iff some {1,3}-inverse of a commutes with a", Role::unary},
      {"T2.6", "a is *-DMP iff a^D = a^D (a a^D)*, iff a^D = (a^D a)* a^D, iff a^D (1 - a a^D)* = (1 - a a^D)(a^D)*", Role::unary},
      {"T2.7", "a is *-DMP with index m and commutes with (a*)^m, iff m is least with (a^m)^† existing and that commutation, iff (a^m)* = ua = au for some group invertible u", Role::unary},
      {"C2.8", "a is EP and normal, iff a^† exists and a is normal, iff a^# exists and a* = ua = au for some group invertible u", Role::unary},
      {"T2.9", "a is *-DMP iff a^⊛ and a_⊛ exist and coincide, iff a a^⊛ = a_⊛ a", Role::unary},
      {"T2.10", "a is *-DMP iff a^⊛ exists and satisfies any one of seven identities", Role::unary},
      {"T2.11", "a is *-DMP with index m iff m is least admitting x with x a^{m+1} = a^m, (x^m a^m)* = x^m a^m and a x^2 = x (or ax = xa)", Role::unary},
      {"L2.12", "x = a^⊛ iff m is least with xax = x and xR = x*R = a^m R (equivalently, the annihilator form)", Role::unary},
      {"T2.13", "a is *-DMP with index m iff m is least for which the ideal conditions together with x^m R = (a^m)* R have a solution x", Role::unary},
      {"T2.14", "a is *-DMP iff a^k is *-DMP, for every k >= 1", Role::unary},
      {"T2.15", "if ab = ba and ab* = b*a with a, b *-DMP, then ab is *-DMP", Role::pair},
      {"T2.16", "if ab = ba = 0 and a*b = 0 with a, b *-DMP, then a + b is *-DMP", Role::pair},
      {"E2.17", "the fixed 2 x 2 transpose pair has ab = a*b = 0 and ba != 0, yet a + b is not *-DMP", Role::fixture},
      {"T3.1", "a = a1 + a2 with a1 = a a^⊛ a group invertible, a2^m = 0 and a1* a2 = a2 a1 = 0", Role::unary},
      {"T3.2", "the pseudo core decomposition is the only pair with those properties", Role::unary},
      {"T3.3", "the core inverse of a1 is a^⊛", Role::unary},
      {"T3.4", "a is *-DMP with index I(a) iff a1 is EP", Role::unary},
      {"R3.5", "for *-DMP a the pseudo core and core-nilpotent decompositions coincide", Role::unary},
      {"T4.2", "the pseudo core order is reflexive and transitive but not anti-symmetric", Role::triple},
      {"T4.3", "a ≤⊛ b iff a^{k+1} = b a^k and a* a^k = b* a^k, iff a1 ≤⊕ b1", Role::pair},
      {"T4.4", "for *-DMP a: a ≤⊛ b, c_a ≤⊕ c_b, commuting pseudo core inverses with a^⊛ b = a^⊛ a, and a^⊛ ≤⊕ b^⊛ with a^⊛ b = a^⊛ a are equivalent", Role::pair},
      {"T4.5", "for *-DMP a with a ≤⊛ b: b is *-DMP iff b(1 - a a^⊛) is *-DMP", Role::pair},
      {"P5.1", "a a^⊛ = b b^⊛ a a^⊛, a a^⊛ = a a^⊛ b b^⊛, a^⊛ = a^⊛ b b^⊛ and R a^⊛ ⊆ R a^⊛ b b^⊛ are equivalent", Role::pair},
      {"T5.2", "a a^⊛ = b b^⊛ is equivalent to each of five forms built from the unit certificates u, v, s, w", Role::pair},
      {"C5.3", "when a^⊛ and a_⊛ exist, a is *-DMP iff any of six projector conditions with b = a* holds", Role::unary},
  };
  return k;
}

const TheoremInfo& find_theorem(std::string_view id) {
  for (const auto& t : catalog())
    if (t.id == id) return t;
  throw DomainError("unknown theorem id '" + std::string(id) + "'");
}

std::vector<std::string> select_ids(std::string_view filter) {
  std::vector<std::string> picked;
  std::size_t start = 0;
  while (start <= filter.size()) {
    const auto end = std::min(filter.find(',', start), filter.size());
    const auto token = filter.substr(start, end - start);
    start = end + 1;
    if (token.empty()) continue;
    bool any = false;
    for (const auto& t : catalog()) {
      const bool match = t.id == token || (token.back() == '.' && t.id.compare(0, token.size(), token) == 0);
      if (!match) continue;
      any = true;
      if (std::find(picked.begin(), picked.end(), t.id) == picked.end()) picked.push_back(t.id);
    }
    if (!any) throw DomainError("theorem filter '" + std::string(token) + "' matches no registered id");
  }
  // Catalog order regardless of filter order.
  std::vector<std::string> out;
  for (const auto& t : catalog())
    if (std::find(picked.begin(), picked.end(), t.id) != picked.end()) out.push_back(t.id);
  return out;
}

json config_to_json(const RunConfig& c) {
  json j;
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  j["samples"] = c.samples;
  j["pair_samples"] = c.pair_samples;
  j["triple_samples"] = c.triple_samples;
  if (c.universes.empty()) {
    json per_role;
    per_role["unary"] = default_universes(Role::unary);
    per_role["pair"] = default_universes(Role::pair);
    per_role["triple"] = default_universes(Role::triple);
    per_role["fixture"] = default_universes(Role::fixture);
    j["universes"] = {{"per_role_defaults", std::move(per_role)}};
  } else {
    j["universes"] = c.universes;
  }
  json ids = json::array();
  if (c.ids.empty())
    for (const auto& t : catalog()) ids.push_back(t.id);
  else
    ids = c.ids;
  j["ids"] = std::move(ids);
  return j;
}

// ---- universes

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 1)
    throw DomainError("malformed universe '" + std::string(whole) + "'");
  return v;
}

std::vector<int> parse_range(std::string_view text, std::string_view whole) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) return {parse_int(text, whole)};
  const int lo = parse_int(text.substr(0, dash), whole);
  const int hi = parse_int(text.substr(dash + 1), whole);
  if (lo > hi) throw DomainError("empty range in universe '" + std::string(whole) + "'");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

UniverseSpec parse_universe(std::string_view text) {
  UniverseSpec u;
  u.name = std::string(text);
  if (text == "fixture") {
    u.kind = UniverseSpec::Kind::fixture;
    return u;
  }
  if (text == "random") {
    u.kind = UniverseSpec::Kind::random_matrix;
    u.sizes = {1, 2, 3, 4};
    return u;
  }
  if (text.substr(0, 7) == "random:") {
    u.kind = UniverseSpec::Kind::random_matrix;
    u.sizes = parse_range(text.substr(7), text);
    if (u.sizes.back() > 8) throw DomainError("random matrix sizes are limited to 8");
    return u;
  }
  if (text.substr(0, 3) == "zn:") {
    u.kind = UniverseSpec::Kind::zn;
    u.moduli = parse_range(text.substr(3), text);
    if (u.moduli.front() < 2) throw DomainError("zn modulus must be at least 2");
    return u;
  }
  if (text.substr(0, 3) == "zp:") {
    const auto rest = text.substr(3);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw DomainError("expected zp:P:K, got '" + std::string(text) + "'");
    u.kind = UniverseSpec::Kind::zp_matrix;
    u.prime = parse_int(rest.substr(0, colon), text);
    u.dim = parse_int(rest.substr(colon + 1), text);
    if (!is_prime(u.prime)) throw DomainError("zp universe needs a prime, got " + std::to_string(u.prime));
    return u;
  }
  throw DomainError("unknown universe '" + std::string(text) + "'");
}

std::vector<std::string> default_universes(Role role) {
  switch (role) {
    case Role::unary:
      return {"zn:2-24", "zp:2:2", "zp:3:2", "random", "fixture"};
    case Role::pair:
      return {"zn:8", "zn:10", "zn:12", "zn:15", "zp:2:2", "zp:3:2", "random", "fixture"};
    case Role::triple:
      return {"zn:8", "zp:2:2", "random", "fixture"};
    case Role::fixture:
      return {"fixture"};
  }
  return {};
}

// ---- fixture

namespace detail {

Fixture::Fixture() {
  a = ring.parse({{"i", "0"}, {"0", "0"}});
  b = ring.parse({{"0", "0"}, {"-1", "0"}});
  ep_not_normal = ring.parse({{"1", "1"}, {"0", "1"}});
  normal_not_ep = ring.parse({{"i", "1"}, {"-1", "i"}});
}

std::vector<ExactMatrix> Fixture::elements() const {
  return {ring.zero(), a, b, a + b, b * a, ep_not_normal, normal_not_ep};
}

void check_fixed_pair(Recorder& r) {
  const Fixture fx;
  const auto& ring = fx.ring;
  const auto& a = fx.a;
  const auto& b = fx.b;
  Slice<ExactMatrixRing> s{ring, ring.descriptor().to_string()};
  auto fail = [&](const std::string& what) { r.violate(instance(s, what, named("a", a), named("b", b))); };
  ++r.instances;
  ++r.applicable;

  const auto p = ring.pseudo_core(a);
  if (!p || !(p.value() == ring.parse({{"-i", "0"}, {"0", "0"}})) || p.index() != 1)
    fail("pseudo core inverse of a is not [[-i,0],[0,0]] at index 1");
  if (p && !(p.value() == ring.group(a).value() && p.value() == ring.core(a).value() && p.value() == ring.drazin(a).value()))
    fail("a^⊛, a^⊕, a^# and a^D are not all equal");
  if (!is_zero(ExactMatrix(a * b)) || !is_zero(ExactMatrix(star(a) * b))) fail("ab or a*b is nonzero");
  if (is_zero(ExactMatrix(b * a))) fail("ba is zero");
  if (!dmp::star_dmp(ring, a).is_star_dmp || !dmp::star_dmp(ring, b).is_star_dmp) fail("a or b is not *-DMP");
  const ExactMatrix c = a + b;
  const ExactMatrix c2 = c * c;
  // Powers alternate between ±c and ±c^2, none with a {1,3}-inverse.
  for (unsigned m = 1; m <= 8; ++m) {
    const ExactMatrix cm = power(c, m);
    const ExactMatrix expect = m % 2 == 1 ? (((m - 1) / 2) % 2 == 0 ? c : -c) : ((m / 2 + 1) % 2 == 0 ? c2 : -c2);
    if (!(cm == expect)) fail("(a+b)^" + std::to_string(m) + " does not follow the period-4 sign pattern");
    if (ring.one_three(cm)) fail("(a+b)^" + std::to_string(m) + " has a {1,3}-inverse");
  }
  if (dmp::star_dmp(ring, c).is_star_dmp) fail("a + b is *-DMP");
  if (ring.pseudo_core(c)) fail("a + b has a pseudo core inverse");
}

}  // namespace detail

// ---- contexts

namespace {

struct Context {
  UniverseSpec spec;
  RunConfig config;
  std::vector<Slice<ZnRing>> zn;
  std::vector<Slice<ZpMatrixRing>> zp;
  std::vector<Slice<ExactMatrixRing>> exact;
  bool relational_ready = false;
  json summary;
};

ExactMatrix hermitian(exact::Rng& rng, std::size_t n, Involution inv) {
  const ExactMatrix s = exact::random_dense(rng, n, inv);
  return s + star(s);
}

ExactMatrix nilpotent(exact::Rng& rng, std::size_t n, Involution inv) {
  ExactMatrix t(exact::GaussianRationalField{}, n, n, inv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) t(i, j) = exact::random_scalar(rng);
  const ExactMatrix s = exact::random_invertible(rng, n, inv);
  return s * t * *exact::inverse(s);
}

// b = a + Q Y Q with Q = 1 - a^m (a^m)^(1,3): then a ≤⊛ b.
std::optional<ExactMatrix> order_partner(const ExactMatrixRing& ring, const ExactMatrix& a, exact::Rng& rng) {
  const auto d = ring.drazin(a);
  const ExactMatrix am = power(a, static_cast<unsigned>(d.index()));
  const auto y = ring.one_three(am);
  if (!y) return std::nullopt;
  const ExactMatrix q = ring.one() - am * y.value();
  return a + q * exact::random_dense(rng, ring.dimension(), ring.involution()) * q;
}

ExactMatrix block(const ExactMatrix& top_left, const ExactMatrix& bottom_right, Involution inv) {
  const std::size_t r = top_left.rows();
  const std::size_t n = r + bottom_right.rows();
  ExactMatrix out(exact::GaussianRationalField{}, n, n, inv);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out(i, j) = top_left(i, j);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) out(i, j) = bottom_right(i - r, j - r);
  return out;
}

std::pair<ExactMatrix, ExactMatrix> random_pair(const ExactMatrixRing& ring, exact::Rng& rng, std::size_t k) {
  const std::size_t n = ring.dimension();
  const Involution inv = ring.involution();
  ExactMatrix zero = ring.zero();
  switch (k % 6) {
    case 1:
    case 2: {
      const ExactMatrix a = k % 6 == 1 ? exact::random_matrix(rng, n, inv) : hermitian(rng, n, inv);
      if (auto b = order_partner(ring, a, rng)) return {a, *b};
      break;
    }
    case 3: {
      const ExactMatrix a = hermitian(rng, n, inv);
      return {a, ring.one().scaled(exact::random_scalar(rng)) + a.scaled(exact::random_scalar(rng)) +
                     (a * a).scaled(exact::random_scalar(rng))};
    }
    case 4:
      if (n >= 2) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) - 1));
        const bool h = rng.coin();
        const ExactMatrix a1 = h ? hermitian(rng, r, inv) : exact::random_matrix(rng, r, inv);
        const ExactMatrix b2 = h ? hermitian(rng, n - r, inv) : exact::random_matrix(rng, n - r, inv);
        ExactMatrix za(exact::GaussianRationalField{}, n - r, n - r, inv);
        ExactMatrix zb(exact::GaussianRationalField{}, r, r, inv);
        return {block(a1, za, inv), block(zb, b2, inv)};
      }
      break;
    case 5: {
      const ExactMatrix a = (k / 6) % 2 == 0 ? nilpotent(rng, n, inv) : exact::random_matrix(rng, n, inv);
      return {a, power(a, static_cast<unsigned>(rng.uniform(2, 3)))};
    }
    default:
      break;
  }
  ExactMatrix a = exact::random_matrix(rng, n, inv);
  ExactMatrix b = exact::random_matrix(rng, n, inv);
  return {std::move(a), std::move(b)};
}

void build_relational(Context& ctx) {
  if (ctx.relational_ready || ctx.spec.kind != UniverseSpec::Kind::random_matrix) {
    ctx.relational_ready = true;
    return;
  }
  for (auto& s : ctx.exact) {
    exact::Rng prng(exact::fnv1a(s.label + "/pairs", ctx.config.seed));
    for (std::size_t k = 0; k < ctx.config.pair_samples; ++k) s.pairs.push_back(random_pair(s.ring, prng, k));
    exact::Rng trng(exact::fnv1a(s.label + "/triples", ctx.config.seed));
    for (std::size_t k = 0; k < ctx.config.triple_samples; ++k) {
      const std::size_t n = s.ring.dimension();
      const ExactMatrix a = k % 2 == 0 ? exact::random_matrix(trng, n, s.ring.involution()) : hermitian(trng, n, s.ring.involution());
      const auto b = order_partner(s.ring, a, trng);
      if (!b) continue;
      const auto c = order_partner(s.ring, *b, trng);
      if (!c) continue;
      s.triples.push_back({a, *b, *c});
    }
  }
  ctx.relational_ready = true;
}

template <class Ring>
Slice<Ring> finite_slice(Ring ring) {
  Slice<Ring> s{ring, ring.descriptor().to_string()};
  s.elements = ring.elements();
  return s;
}

Context make_context(const UniverseSpec& spec, const RunConfig& config) {
  Context ctx{spec, config};
  json& sum = ctx.summary;
  sum["name"] = spec.name;
  json carriers = json::array();
  switch (spec.kind) {
    case UniverseSpec::Kind::zn:
      sum["kind"] = "exhaustive";
      for (int n : spec.moduli) {
        ctx.zn.push_back(finite_slice(ZnRing(static_cast<std::uint32_t>(n), config.budget)));
        carriers.push_back(io::descriptor_to_json(ctx.zn.back().ring.descriptor()));
      }
      break;
    case UniverseSpec::Kind::zp_matrix:
      sum["kind"] = "exhaustive";
      ctx.zp.push_back(finite_slice(ZpMatrixRing(static_cast<std::uint32_t>(spec.prime),
                                                 static_cast<std::size_t>(spec.dim), config.budget)));
      carriers.push_back(io::descriptor_to_json(ctx.zp.back().ring.descriptor()));
      break;
    case UniverseSpec::Kind::random_matrix:
      sum["kind"] = "random";
      sum["seed"] = config.seed;
      sum["samples"] = config.samples;
      sum["pair_samples"] = config.pair_samples;
      sum["triple_samples"] = config.triple_samples;
      if (config.samples > config.budget)
        throw BudgetExceeded(std::to_string(config.samples) + " samples exceeds budget " + std::to_string(config.budget));
      for (int n : spec.sizes)
        for (Involution inv : {Involution::conjugate_transpose, Involution::transpose}) {
          ExactMatrixRing ring(static_cast<std::size_t>(n), inv);
          Slice<ExactMatrixRing> s{ring, ring.descriptor().to_string(), false};
          exact::Rng rng(exact::fnv1a(s.label, config.seed));
          for (std::size_t k = 0; k < config.samples; ++k) s.elements.push_back(exact::random_matrix(rng, s.ring.dimension(), inv));
          carriers.push_back(io::descriptor_to_json(ring.descriptor()));
          ctx.exact.push_back(std::move(s));
        }
      break;
    case UniverseSpec::Kind::fixture: {
      sum["kind"] = "fixture";
      const detail::Fixture fx;
      Slice<ExactMatrixRing> s{fx.ring, fx.ring.descriptor().to_string()};
      s.elements = fx.elements();
      carriers.push_back(io::descriptor_to_json(fx.ring.descriptor()));
      ctx.exact.push_back(std::move(s));
      break;
    }
  }
  sum["carriers"] = std::move(carriers);
  return ctx;
}

template <class Ring>
void require_work(const Slice<Ring>& s, Role role) {
  if constexpr (Ring::is_finite) {
    const std::size_t n = s.ring.size();
    const std::size_t work = role == Role::triple ? n * n * n : n * n;
    finite::require_budget(s.ring, work);
  }
}

template <class Ring>
void run_slice(const TheoremInfo& info, Slice<Ring>& s, Recorder& r) {
  require_work(s, info.role);
  if (detail::run_unary(info.id, s, r) || detail::run_relational(info.id, s, r)) return;
  throw std::logic_error("no check bound to " + info.id);
}

TheoremCheckResult run_in(const TheoremInfo& info, Context& ctx) {
  Recorder r;
  if (info.role == Role::fixture) {
    if (ctx.spec.kind == UniverseSpec::Kind::fixture)
      detail::check_fixed_pair(r);
    else
      r.note("this check is bound to the fixture universe");
  } else {
    if (info.role != Role::unary) build_relational(ctx);
    for (auto& s : ctx.zn) run_slice(info, s, r);
    for (auto& s : ctx.zp) run_slice(info, s, r);
    for (auto& s : ctx.exact) run_slice(info, s, r);
    if (r.needs_witness && r.witness.is_null()) r.note("no witness found in this universe");
  }
  TheoremCheckResult out;
  out.id = info.id;
  out.universe = ctx.summary;
  out.instances = r.instances;
  out.applicable = r.applicable;
  out.violation_count = r.violation_count;
  out.violations = std::move(r.violations);
  out.notes = std::move(r.notes);
  out.witness = std::move(r.witness);
  if (out.violation_count > 0)
    out.verdict = Outcome::fail;
  else if (out.applicable > 0 && (!r.needs_witness || !out.witness.is_null()))
    out.verdict = Outcome::pass;
  else
    out.verdict = Outcome::vacuous;
  return out;
}

}  // namespace

json result_to_json(const TheoremCheckResult& r) {
  json j;
  j["id"] = r.id;
  j["universe"] = r.universe;
  j["verdict"] = std::string(to_string(r.verdict));
  j["instances"] = r.instances;
  j["applicable"] = r.applicable;
  j["violation_count"] = r.violation_count;
  j["violations"] = r.violations;
  j["notes"] = r.notes;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

TheoremCheckResult run_theorem(std::string_view id, const UniverseSpec& universe, const RunConfig& config) {
  const auto& info = find_theorem(id);
  Context ctx = make_context(universe, config);
  return run_in(info, ctx);
}

bool SuiteReport::all_pass() const { return count(Outcome::fail) == 0; }

std::size_t SuiteReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(theorems.begin(), theorems.end(), [o](const TheoremSummary& t) { return t.verdict == o; }));
}

SuiteReport run_suite(const RunConfig& config) {
  SuiteReport report{config};
  std::vector<std::string> ids = config.ids;
  if (ids.empty())
    for (const auto& t : catalog()) ids.push_back(t.id);
  std::vector<UniverseSpec> chosen;
  for (const auto& u : config.universes) chosen.push_back(parse_universe(u));

  std::map<std::string, Context> contexts;
  auto context = [&](const UniverseSpec& u) -> Context& {
    auto it = contexts.find(u.name);
    if (it == contexts.end()) it = contexts.emplace(u.name, make_context(u, config)).first;
    return it->second;
  };

  for (const auto& id : ids) {
    const auto& info = find_theorem(id);
    TheoremSummary summary{info.id, info.statement};
    std::vector<UniverseSpec> specs = chosen;
    if (specs.empty())
      for (const auto& name : default_universes(info.role)) specs.push_back(parse_universe(name));
    bool any_pass = false, any_fail = false;
    for (const auto& u : specs) {
      auto result = run_in(info, context(u));
      any_pass |= result.verdict == Outcome::pass;
      any_fail |= result.verdict == Outcome::fail;
      summary.runs.push_back(std::move(result));
    }
    summary.verdict = any_fail ? Outcome::fail : any_pass ? Outcome::pass : Outcome::vacuous;
    report.theorems.push_back(std::move(summary));
  }
  return report;
}

json report_to_json(const SuiteReport& r) {
  json j;
  j["config"] = config_to_json(r.config);
  j["summary"] = {{"pass", r.count(Outcome::pass)},
                  {"fail", r.count(Outcome::fail)},
                  {"vacuous", r.count(Outcome::vacuous)},
                  {"all_pass", r.all_pass()}};
  json list = json::array();
  for (const auto& t : r.theorems) {
    json e;
    e["id"] = t.id;
    e["statement"] = t.statement;
    e["verdict"] = std::string(to_string(t.verdict));
    json runs = json::array();
    for (const auto& run : t.runs) {
      json x = result_to_json(run);
      x.erase("id");
      runs.push_back(std::move(x));
    }
    e["runs"] = std::move(runs);
    list.push_back(std::move(e));
  }
  j["theorems"] = std::move(list);
  return j;
}

// ---- oracle

namespace {

template <class Ring>
ExistenceResult<typename Ring::Element> construct(const Ring& ring, InverseKind kind, const typename Ring::Element& a) {
  switch (kind) {
    case InverseKind::moore_penrose:
      return ring.moore_penrose(a);
    case InverseKind::one_three:
      return ring.one_three(a);
    case InverseKind::group:
      return ring.group(a);
    case InverseKind::drazin:
      return ring.drazin(a);
    case InverseKind::core:
      return ring.core(a);
    case InverseKind::pseudo_core:
      return ring.pseudo_core(a);
    case InverseKind::dual_pseudo_core:
      return ring.dual_pseudo_core(a);
  }
  throw std::logic_error("unhandled inverse kind");
}

template <class Ring>
void oracle_slice(Slice<Ring>& s, Recorder& r) {
  finite::require_budget(s.ring, s.ring.size() * s.ring.size());
  constexpr InverseKind kinds[] = {InverseKind::moore_penrose, InverseKind::one_three,  InverseKind::group,
                                   InverseKind::drazin,        InverseKind::core,       InverseKind::pseudo_core,
                                   InverseKind::dual_pseudo_core};
  for (const auto& a : s.elements) {
    for (InverseKind kind : kinds) {
      ++r.instances;
      ++r.applicable;
      const auto built = construct(s.ring, kind, a);
      const auto brute = finite::brute_force_inverse(s.ring, kind, a);
      const std::string name(to_string(kind));
      if (kind == InverseKind::one_three) {
        const bool member = built && std::any_of(brute.begin(), brute.end(), [&](const auto& x) { return x.value == built.value(); });
        if (built.has_value() != !brute.empty() || (built && !member))
          r.violate(instance(s, name + ": constructive result not among the exhaustive solutions", detail::named("a", a)));
        continue;
      }
      if (!built) {
        if (!brute.empty()) r.violate(instance(s, name + ": exhaustive scan finds a solution", detail::named("a", a)));
        continue;
      }
      const auto minimal = finite::minimal_index_solutions(brute);
      const bool ok = brute.size() == 1 && minimal.size() == 1 && minimal[0].value == built.value() &&
                      (!kind_has_index(kind) || minimal[0].index == built.witness().index);
      if (!ok)
        r.violate(instance(s, name + ": " + std::to_string(brute.size()) + " exhaustive solutions, constructive differs",
                           detail::named("a", a)));
    }
  }
}

}  // namespace

TheoremCheckResult oracle_agreement(const UniverseSpec& universe, const RunConfig& config) {
  if (!universe.finite()) throw DomainError("the exhaustive oracle needs a finite universe");
  Context ctx = make_context(universe, config);
  Recorder r;
  for (auto& s : ctx.zn) oracle_slice(s, r);
  for (auto& s : ctx.zp) oracle_slice(s, r);
  TheoremCheckResult out;
  out.id = "oracle";
  out.universe = ctx.summary;
  out.instances = r.instances;
  out.applicable = r.applicable;
  out.violation_count = r.violation_count;
  out.violations = std::move(r.violations);
  out.verdict = r.violation_count ? Outcome::fail : r.applicable ? Outcome::pass : Outcome::vacuous;
  return out;
}

// ---- counterexample search

const std::vector<std::string>& counterexample_properties() {
  static const std::vector<std::string> k{"order-antisymmetry", "T2.16-without-ba0", "normal-without-EP",
                                          "EP-without-normal"};
  return k;
}

namespace {

template <class Ring>
std::optional<json> search_slice(std::string_view property, Slice<Ring>& s) {
  using E = typename Ring::Element;
  std::optional<json> found;
  if (property == "order-antisymmetry") {
    s.for_each_pair([&](const E& a, const E& b) {
      if (a == b || !s.below(a, b) || !s.below(b, a)) return false;
      found = instance(s, "a ≤⊛ b and b ≤⊛ a with a ≠ b", detail::named("a", a), detail::named("b", b));
      return true;
    });
  } else if (property == "T2.16-without-ba0") {
    s.for_each_pair([&](const E& a, const E& b) {
      if (!is_zero(E(a * b)) || !is_zero(E(star(a) * b)) || is_zero(E(b * a))) return false;
      if (!s.facts(a).ep_index || !s.facts(b).ep_index || s.facts(E(a + b)).ep_index) return false;
      found = instance(s, "ab = a*b = 0, ba != 0, a and b *-DMP, a + b not *-DMP", detail::named("a", a),
                       detail::named("b", b));
      return true;
    });
  } else {
    const bool want_normal = property == "normal-without-EP";
    for (const auto& a : s.elements) {
      const bool normal = is_normal(a);
      const bool ep = dmp::is_ep(s.ring, a);
      if (want_normal ? normal && !ep : ep && !normal) {
        found = instance(s, want_normal ? "normal, not EP" : "EP, not normal", detail::named("a", a));
        break;
      }
    }
  }
  return found;
}

}  // namespace

std::optional<json> search_counterexample(std::string_view property, const UniverseSpec& universe,
                                          const RunConfig& config) {
  const auto& props = counterexample_properties();
  if (std::find(props.begin(), props.end(), property) == props.end())
    throw DomainError("unknown property '" + std::string(property) + "'");
  Context ctx = make_context(universe, config);
  if (property != "normal-without-EP" && property != "EP-without-normal") build_relational(ctx);
  for (auto& s : ctx.zn) {
    require_work(s, Role::pair);
    if (auto f = search_slice(property, s)) return f;
  }
  for (auto& s : ctx.zp) {
    require_work(s, Role::pair);
    if (auto f = search_slice(property, s)) return f;
  }
  for (auto& s : ctx.exact)
    if (auto f = search_slice(property, s)) return f;
  return std::nullopt;
}

}  // namespace stardmp::suite
