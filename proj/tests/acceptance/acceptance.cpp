// Acceptance run: one PASS/FAIL line per criterion. Arithmetic is exact, so
// every comparison is equality (tolerance 0). Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "stardmp/cli/commands.hpp"
#include "stardmp/dmp/analysis.hpp"
#include "stardmp/suite/suite.hpp"

using namespace stardmp;
using exact::ExactMatrix;
using exact::ExactMatrixRing;
using suite::Outcome;
using suite::parse_universe;
using suite::RunConfig;
using suite::json;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool report(int n, const std::string& title, const std::function<std::string(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double s = seconds_since(t0);
  std::cout << "criterion " << n << " " << (c.ok ? "PASS" : "FAIL") << "  " << title << "  [" << std::fixed
            << std::setprecision(2) << s << " s]";
  if (!detail.empty()) std::cout << "  " << detail;
  if (!c.ok) std::cout << "  failed: " << c.why.str();
  std::cout << std::endl;
  return c.ok;
}

/// Runs `ids` over `universes` sharing per-element work; the theorem entries in catalog order.
suite::SuiteReport run(std::vector<std::string> ids, std::vector<std::string> universes, std::size_t samples = 100) {
  RunConfig cfg;
  cfg.ids = std::move(ids);
  cfg.universes = std::move(universes);
  cfg.samples = samples;
  return suite::run_suite(cfg);
}

/// Every run passed with no violations and at least one applicable instance.
void require_all_pass(Check& c, const suite::SuiteReport& r) {
  c.require(!r.theorems.empty() && r.theorems.size() == r.config.ids.size(), "every selected id reported");
  for (const auto& t : r.theorems) {
    c.require(!t.runs.empty(), t.id + " has no runs");
    for (const auto& run : t.runs) {
      const std::string where = t.id + " on " + run.universe.at("name").get<std::string>();
      c.require(run.verdict == Outcome::pass, where + " is " + std::string(suite::to_string(run.verdict)));
      c.require(run.violation_count == 0, where + " has " + std::to_string(run.violation_count) + " violations");
      c.require(run.applicable > 0, where + " is vacuous");
    }
  }
}

std::size_t applicable(const suite::SuiteReport& r, const std::string& id) {
  std::size_t n = 0;
  for (const auto& t : r.theorems)
    if (t.id == id)
      for (const auto& run : t.runs) n += run.applicable;
  return n;
}

oracle::M2 to_m2(const finite::FiniteMatrix& m) {
  oracle::M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[2 * i + j] = static_cast<int>(m(i, j).value());
  return r;
}

}  // namespace

int main() {
  bool all = true;
  const auto pair_defaults = suite::default_universes(suite::Role::pair);
  const auto unary_defaults = suite::default_universes(suite::Role::unary);

  all &= report(1, "orthogonal pair with non *-DMP sum", [](Check& c) {
    const auto t0 = Clock::now();
    ExactMatrixRing R(2, Involution::transpose);
    const auto a = R.parse({{"i", "0"}, {"0", "0"}});
    const auto b = R.parse({{"0", "0"}, {"-1", "0"}});
    const auto p = R.pseudo_core(a);
    c.require(p && p.value() == R.parse({{"-i", "0"}, {"0", "0"}}), "a^⊛ = [[-i,0],[0,0]]");
    c.require(p && p.index() == 1, "I(a) = 1");
    c.require(is_zero(ExactMatrix(a * b)), "ab = 0");
    c.require(is_zero(ExactMatrix(star(a) * b)), "a*b = 0");
    c.require(!is_zero(ExactMatrix(b * a)), "ba != 0");
    const ExactMatrix s = a + b;
    c.require(!R.one_three(s), "a+b has no {1,3}-inverse");
    c.require(!R.one_three(ExactMatrix(s * s)), "(a+b)^2 has no {1,3}-inverse");
    c.require(!dmp::star_dmp(R, s).is_star_dmp, "a+b is not *-DMP");
    const auto fixture = suite::run_theorem("E2.17", parse_universe("fixture"), RunConfig{});
    c.require(fixture.verdict == Outcome::pass, "E2.17 suite check");
    const double sec = seconds_since(t0);
    c.require(sec < 1.0, "runtime under 1 s");
    return std::string();
  });

  all &= report(2, "EP but not normal, normal but not EP (transpose)", [](Check& c) {
    const auto t0 = Clock::now();
    ExactMatrixRing R(2, Involution::transpose);
    const auto a = R.parse({{"1", "1"}, {"0", "1"}});
    c.require(dmp::is_ep(R, a), "[[1,1],[0,1]] is EP");
    c.require(!is_normal(a), "[[1,1],[0,1]] is not normal");
    c.require(a * star(a) == R.parse({{"2", "1"}, {"1", "1"}}), "aa* = [[2,1],[1,1]]");
    const auto b = R.parse({{"i", "1"}, {"-1", "i"}});
    c.require(is_normal(b), "[[i,1],[-1,i]] is normal");
    c.require(is_zero(ExactMatrix(b * star(b))), "bb* = 0");
    c.require(!R.moore_penrose(b), "[[i,1],[-1,i]] has no Moore-Penrose inverse");
    c.require(!dmp::is_ep(R, b), "[[i,1],[-1,i]] is not EP");
    c.require(seconds_since(t0) < 1.0, "runtime under 1 s");
    return std::string();
  });

  all &= report(3, "characterization concordance on Z_2..Z_24, M_2(Z_2), M_2(Z_3)", [](Check& c) {
    const auto t0 = Clock::now();
    const std::vector<std::string> ids{"T2.4", "T2.6", "T2.9", "T2.10", "T2.11", "C5.3"};
    const auto r = run(ids, {"zn:2-24", "zp:2:2", "zp:3:2"});
    require_all_pass(c, r);
    std::size_t t210 = 0;
    for (const auto& id : dmp::characterization_ids()) t210 += id.rfind("T2.10", 0) == 0 ? 1 : 0;
    c.require(t210 == 7, "seven power conditions registered");
    // every vote against the definitional classifier, which is itself checked
    // against the plain-integer EP scan
    std::size_t elements = 0, votes = 0;
    for (int n = 2; n <= 24; ++n) {
      finite::ZnRing z(static_cast<std::uint32_t>(n));
      for (const auto& a : finite::enumerate(z)) {
        const auto rep = dmp::classify(z, a);
        c.require(rep.index == oracle::zn_dmp_index({n}, static_cast<int>(a.value())),
                  "Z_" + std::to_string(n) + " index of " + a.to_string());
        for (const auto& [id, v] : rep.votes)
          if (v.verdict != dmp::Verdict::inapplicable) {
            ++votes;
            c.require(dmp::vote_agrees(rep, v), id + " on Z_" + std::to_string(n) + " at " + a.to_string());
          }
        ++elements;
      }
    }
    for (int p : {2, 3}) {
      finite::ZpMatrixRing m(static_cast<std::uint32_t>(p), 2);
      for (const auto& a : finite::enumerate(m)) {
        const auto rep = dmp::classify(m, a);
        c.require(rep.index == oracle::m2_dmp_index({p}, to_m2(a)), "M_2(Z_" + std::to_string(p) + ") index");
        for (const auto& [id, v] : rep.votes)
          if (v.verdict != dmp::Verdict::inapplicable) {
            ++votes;
            c.require(dmp::vote_agrees(rep, v), id + " on " + a.to_string());
          }
        ++elements;
      }
    }
    c.require(seconds_since(t0) < 300.0, "runtime under 5 min");
    return std::to_string(elements) + " elements, " + std::to_string(votes) + " votes, 0 violations";
  });

  all &= report(4, "constructive inverses equal the exhaustive oracle", [](Check& c) {
    std::size_t instances = 0;
    for (const char* u : {"zn:2-24", "zp:2:2", "zp:3:2"}) {
      const auto r = suite::oracle_agreement(parse_universe(u), RunConfig{});
      c.require(r.verdict == Outcome::pass && r.violation_count == 0, std::string("oracle on ") + u);
      instances += r.applicable;
    }
    // the pseudo core inverse of each residue is the unique solution at the least index
    for (int n = 2; n <= 24; ++n) {
      finite::ZnRing z(static_cast<std::uint32_t>(n));
      for (int v = 0; v < n; ++v) {
        const auto want = oracle::zn_pseudo_core({n}, v);
        const auto got = z.pseudo_core(z.make(v));
        c.require(want && want->xs.size() == 1, "unique solution in Z_" + std::to_string(n));
        c.require(got && want && static_cast<int>(got.value().value()) == want->xs[0] && got.index() == want->m,
                  "a^⊛ in Z_" + std::to_string(n) + " at " + std::to_string(v));
      }
    }
    return std::to_string(instances) + " element/kind pairs";
  });

  all &= report(5, "randomized matrices, 1000 per size 1-4 and involution", [](Check& c) {
    const auto t0 = Clock::now();
    const auto r = run({"L2.1", "L2.3", "T3.3"}, {"random:1-4"}, 1000);
    require_all_pass(c, r);
    c.require(applicable(r, "L2.1") == 8000, "8000 matrices through L2.1");
    c.require(applicable(r, "L2.3") == 8000, "8000 matrices through L2.3");
    // an independent sample: every witness the library produces satisfies its
    // defining equations literally
    std::size_t witnesses = 0;
    for (auto inv : {Involution::conjugate_transpose, Involution::transpose}) {
      exact::Rng rng(exact::fnv1a(std::string("acceptance/") + std::string(to_string(inv)), 20240611));
      for (std::size_t n = 1; n <= 4; ++n) {
        ExactMatrixRing R(n, inv);
        for (int t = 0; t < 1000; ++t) {
          const ExactMatrix a = exact::random_matrix(rng, n, inv);
          const std::array<ExistenceResult<ExactMatrix>, 7> all{R.moore_penrose(a), R.one_three(a), R.group(a),
                                                                R.drazin(a),        R.core(a),      R.pseudo_core(a),
                                                                R.dual_pseudo_core(a)};
          for (const auto& w : all)
            if (w) {
              ++witnesses;
              const auto& wit = w.witness();
              c.require(verify_witness(a, wit.kind, wit.value, wit.index), "witness of " + a.to_string());
            }
        }
      }
    }
    c.require(seconds_since(t0) < 120.0, "runtime under 2 min");
    return std::to_string(witnesses) + " witnesses re-verified";
  });

  all &= report(6, "decomposition axioms, uniqueness and coincidence", [](Check& c) {
    const auto r = run({"T3.1", "T3.2", "R3.5"}, {"zn:8", "zp:2:2", "random"});
    require_all_pass(c, r);
    std::size_t counted = 0;
    finite::ZnRing z(8);
    for (const auto& a : finite::enumerate(z)) {
      const auto d = dmp::pseudo_core_decompose(z, a);
      c.require(d && dmp::all_pseudo_core_decompositions(z, a, d->m).size() == 1, "unique in Z_8");
      ++counted;
    }
    finite::ZpMatrixRing m(2, 2);
    for (const auto& a : finite::enumerate(m))
      if (const auto d = dmp::pseudo_core_decompose(m, a)) {
        c.require(dmp::all_pseudo_core_decompositions(m, a, d->m).size() == 1, "unique in M_2(Z_2)");
        ++counted;
      }
    return std::to_string(counted) + " finite decompositions counted exactly once";
  });

  all &= report(7, "pseudo core order", [&](Check& c) {
    const auto t42 = suite::run_theorem("T4.2", parse_universe("zp:2:2"), RunConfig{});
    c.require(t42.verdict == Outcome::pass && t42.violation_count == 0, "T4.2 on M_2(Z_2)");
    c.require(t42.instances == 16 + 16 * 16 * 16, "all elements and triples enumerated");
    c.require(!t42.witness.is_null(), "anti-symmetry witness found");
    std::ofstream("antisymmetry_witness.json") << t42.witness.dump(2) << "\n";
    const auto r = run({"T4.3", "T4.4", "T4.5"}, pair_defaults);
    require_all_pass(c, r);
    return "witness " + t42.witness.at("a").dump() + " / " + t42.witness.at("b").dump() + ", T4.4 on " +
           std::to_string(applicable(r, "T4.4")) + " pairs, T4.5 on " + std::to_string(applicable(r, "T4.5"));
  });

  all &= report(8, "projector battery", [&](Check& c) {
    const auto r = run({"P5.1", "T5.2"}, {"zn:15", "zp:2:2"});
    require_all_pass(c, r);
    for (const auto& t : r.theorems) {
      c.require(t.runs.size() == 2 && t.runs[0].instances == 225 && t.runs[1].instances == 256,
                t.id + " covers every pair");
    }
    const auto c53 = run({"C5.3"}, unary_defaults);
    require_all_pass(c, c53);
    return "C5.3 on " + std::to_string(applicable(c53, "C5.3")) + " elements";
  });

  all &= report(9, "suite hygiene", [](Check& c) {
    // same path both times, since the report echoes --out
    const std::string path = "verify_default.json";
    const auto run_once = [&] {
      std::ostringstream out, err;
      const int code = cli::run({"stardmp", "verify", "--out", path}, out, err);
      std::ifstream f(path, std::ios::binary);
      return std::make_pair(code, std::string((std::istreambuf_iterator<char>(f)), {}));
    };
    const auto [code1, b1] = run_once();
    const auto [code2, b2] = run_once();
    c.require(code1 == code2, "same exit status");
    c.require(!b1.empty() && b1 == b2, "identical bytes across runs");
    const auto rep = json::parse(b1);
    c.require(rep.at("config").at("seed") == RunConfig{}.seed, "seed echoed");
    std::size_t checked = 0;
    for (const auto& t : rep.at("theorems")) {
      const auto id = t.at("id").get<std::string>();
      if (id != "T2.15" && id != "T2.16" && id != "T4.4" && id != "T4.5") continue;
      c.require(t.at("verdict") != "vacuous", id + " vacuous");
      for (const auto& runj : t.at("runs")) {
        c.require(runj.at("verdict") != "vacuous" && runj.at("applicable").get<std::size_t>() > 0,
                  id + " vacuous on " + runj.at("universe").at("name").get<std::string>());
        ++checked;
      }
    }
    c.require(checked > 0, "hypothesis checks present");
    return std::to_string(b1.size()) + " bytes, " + std::to_string(checked) + " non-vacuous runs";
  });

  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
