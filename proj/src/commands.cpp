#include "stardmp/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace stardmp::cli {

namespace {

json header(std::string_view command, const CommonConfig& c) {
  json h;
  h["tool"] = "stardmp";
  h["command"] = std::string(command);
  h["config"] = {{"budget", c.budget}, {"out", c.out.empty() ? json("stdout") : json(c.out)}};
  return h;
}

template <class Ring, class E = typename Ring::Element>
ExistenceResult<E> compute(const Ring& ring, InverseKind kind, const E& a) {
  switch (kind) {
    case InverseKind::moore_penrose: return ring.moore_penrose(a);
    case InverseKind::one_three: return ring.one_three(a);
    case InverseKind::group: return ring.group(a);
    case InverseKind::drazin: return ring.drazin(a);
    case InverseKind::core: return ring.core(a);
    case InverseKind::pseudo_core: return ring.pseudo_core(a);
    case InverseKind::dual_pseudo_core: return ring.dual_pseudo_core(a);
  }
  throw DomainError("unknown inverse kind");
}

template <class E>
json existence_to_json(const ExistenceResult<E>& r) {
  json j;
  j["exists"] = r.has_value();
  if (r) {
    const auto& w = r.witness();
    j["witness"] = io::value_to_json(w.value);
    j["index"] = w.index ? json(*w.index) : json(nullptr);
    j["verified"] = w.verified;
  } else {
    j["reason"] = std::string(to_string(r.failure().reason));
    j["detail"] = r.failure().detail;
  }
  return j;
}

template <class E>
json optional_value(const std::optional<E>& v) {
  return v ? io::value_to_json(*v) : json(nullptr);
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

/// Runs f(ring, element) on the concrete carrier of `doc`.
template <class F>
decltype(auto) on_element(const io::Document& doc, std::size_t budget, F&& f) {
  return io::with_ring(doc.ring, budget, [&](const auto& ring) {
    using E = typename std::decay_t<decltype(ring)>::Element;
    return f(ring, io::element_as<E>(doc));
  });
}

}  // namespace

Decomposition parse_decomposition(std::string_view text) {
  if (text == "pseudo-core") return Decomposition::pseudo_core;
  if (text == "core-nilpotent") return Decomposition::core_nilpotent;
  throw DomainError("unknown decomposition '" + std::string(text) + "'");
}

CommandResult cmd_inverse(const io::Document& doc, InverseKind kind, const CommonConfig& config) {
  CommandResult out{header("inverse", config)};
  out.report["input"] = io::document_to_json(doc);
  out.report["kind"] = std::string(to_string(kind));
  const bool exists = on_element(doc, config.budget, [&](const auto& ring, const auto& a) {
    const auto r = compute(ring, kind, a);
    out.report["result"] = existence_to_json(r);
    return r.has_value();
  });
  out.exit_code = exists ? kExitOk : kExitNegative;
  return out;
}

CommandResult cmd_classify(const io::Document& doc, const CommonConfig& config) {
  CommandResult out{header("classify", config)};
  out.report["input"] = io::document_to_json(doc);
  on_element(doc, config.budget, [&](const auto& ring, const auto& a) {
    const auto r = dmp::classify(ring, a);
    json j;
    j["star_dmp"] = r.is_star_dmp;
    j["index"] = optional_int(r.index);
    j["drazin_index"] = r.drazin_index;
    j["witnesses"] = {{"drazin", optional_value(r.drazin)},
                      {"power_moore_penrose", optional_value(r.power_mp)},
                      {"pseudo_core", optional_value(r.pseudo_core)},
                      {"dual_pseudo_core", optional_value(r.dual_pseudo_core)}};
    json votes = json::array();
    for (const auto& [id, v] : r.votes) {
      json e{{"id", id}, {"verdict", std::string(dmp::to_string(v.verdict))}, {"index", optional_int(v.index)}};
      if (!v.note.empty()) e["note"] = v.note;
      e["agrees"] = dmp::vote_agrees(r, v);
      votes.push_back(std::move(e));
    }
    j["characterizations"] = std::move(votes);
    out.report["result"] = std::move(j);
    return 0;
  });
  return out;
}

CommandResult cmd_decompose(const io::Document& doc, Decomposition which, const CommonConfig& config) {
  CommandResult out{header("decompose", config)};
  out.report["input"] = io::document_to_json(doc);
  out.report["which"] = which == Decomposition::pseudo_core ? "pseudo-core" : "core-nilpotent";
  const bool exists = on_element(doc, config.budget, [&](const auto& ring, const auto& a) {
    json j;
    if (which == Decomposition::pseudo_core) {
      const auto d = dmp::pseudo_core_decompose(ring, a);
      j["exists"] = d.has_value();
      if (!d) {
        j["reason"] = "no pseudo core inverse";
        out.report["result"] = std::move(j);
        return false;
      }
      j["a1"] = io::value_to_json(d->a1);
      j["a2"] = io::value_to_json(d->a2);
      j["index"] = d->m;
      j["a1_group_inverse"] = io::value_to_json(d->a1_group);
      j["checks"] = {{"sum", d->sum},
                     {"nilpotent", d->nilpotent},
                     {"star_orthogonal", d->star_orthogonal},
                     {"annihilating", d->annihilating},
                     {"group_invertible", d->group_invertible},
                     {"group_formula", d->group_formula}};
      j["axioms_hold"] = d->axioms_hold();
    } else {
      const auto d = dmp::core_nilpotent_decompose(ring, a);
      j["exists"] = true;
      j["a1"] = io::value_to_json(d.core_part);
      j["a2"] = io::value_to_json(d.nilpotent_part);
      j["index"] = d.m;
      j["checks"] = {{"sum", d.sum},
                     {"nilpotent", d.nilpotent},
                     {"annihilating", d.annihilating},
                     {"group_formula", d.group_formula}};
      j["axioms_hold"] = d.axioms_hold();
    }
    out.report["result"] = std::move(j);
    return true;
  });
  out.exit_code = exists ? kExitOk : kExitNegative;
  return out;
}

CommandResult cmd_order(const io::Document& a, const io::Document& b, dmp::Relation relation,
                        const CommonConfig& config) {
  if (!(a.ring == b.ring))
    throw CarrierMismatch("order needs both elements in one carrier, got " + a.ring.to_string() + " and " +
                          b.ring.to_string());
  CommandResult out{header("order", config)};
  out.report["relation"] = std::string(dmp::to_string(relation));
  out.report["a"] = io::document_to_json(a);
  out.report["b"] = io::document_to_json(b);
  const bool holds = on_element(a, config.budget, [&](const auto& ring, const auto& x) {
    using E = std::decay_t<decltype(x)>;
    const auto v = dmp::compare(ring, relation, x, io::element_as<E>(b));
    json j;
    j["verdict"] = std::string(dmp::to_string(v.verdict));
    json eqs = json::array();
    for (const auto& e : v.equalities)
      eqs.push_back({{"equation", e.label},
                     {"lhs", io::value_to_json(e.lhs)},
                     {"rhs", io::value_to_json(e.rhs)},
                     {"holds", e.holds()}});
    j["equalities"] = std::move(eqs);
    if (!v.note.empty()) j["note"] = v.note;
    out.report["result"] = std::move(j);
    return v.holds();
  });
  out.exit_code = holds ? kExitOk : kExitNegative;
  return out;
}

CommandResult cmd_verify(const suite::RunConfig& config, const std::string& out_path) {
  const auto report = suite::run_suite(config);
  CommandResult out;
  out.report["tool"] = "stardmp";
  out.report["command"] = "verify";
  json cfg = suite::config_to_json(config);
  cfg["out"] = out_path.empty() ? json("stdout") : json(out_path);
  out.report["config"] = std::move(cfg);
  json body = suite::report_to_json(report);
  body.erase("config");
  for (auto& [key, value] : body.items()) out.report[key] = value;
  out.exit_code = report.all_pass() ? kExitOk : kExitNegative;
  return out;
}

namespace {

io::Document read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return io::parse_document_text(text);
}

int emit(const CommandResult& r, const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string text = r.report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return r.exit_code;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write '" << path << "'\n";
    return kExitInput;
  }
  return r.exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized inverses, *-DMP analysis and theorem checks"};
  app.name("stardmp");
  app.require_subcommand(1);
  app.fallthrough();

  CommonConfig common;
  common.budget = finite::budget_from_env();
  app.add_option("--budget", common.budget, "Element cap for exhaustive work (env STARDMP_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", common.out, "Write the report here instead of stdout");

  std::string file, file_b, kind = "pseudo-core", which = "pseudo-core", relation = "pseudo-core";

  auto* inverse = app.add_subcommand("inverse", "Compute one generalized inverse");
  inverse->add_option("file", file, "Element document ('-' for stdin)")->required();
  inverse->add_option("--kind", kind, "mp|13|group|drazin|core|pseudo-core|dual-pseudo-core")->required();

  auto* classify = app.add_subcommand("classify", "Decide *-DMP and evaluate every characterization");
  classify->add_option("file", file, "Element document ('-' for stdin)")->required();

  auto* decompose = app.add_subcommand("decompose", "Pseudo core or core-nilpotent decomposition");
  decompose->add_option("file", file, "Element document ('-' for stdin)")->required();
  decompose->add_option("--which", which, "pseudo-core|core-nilpotent");

  auto* order = app.add_subcommand("order", "Compare two elements of one carrier");
  order->add_option("a", file, "First element document")->required();
  order->add_option("b", file_b, "Second element document")->required();
  order->add_option("--relation", relation, "pseudo-core|core");

  suite::RunConfig rc;
  std::string ids;
  auto* verify = app.add_subcommand("verify", "Run the theorem suite");
  verify->add_option("--id", ids, "Comma-separated ids or prefixes such as 'T4.'");
  verify->add_option("--seed", rc.seed, "Seed for the random matrix universes");
  verify->add_option("--samples", rc.samples, "Random matrices per size and involution")->check(CLI::PositiveNumber);
  verify->add_option("--pair-samples", rc.pair_samples, "Random pairs per size and involution")
      ->check(CLI::PositiveNumber);
  verify->add_option("--triple-samples", rc.triple_samples, "Random chains per size and involution")
      ->check(CLI::PositiveNumber);
  verify->add_option("--universe", rc.universes, "Universe override, repeatable (zn:2-24, zp:2:2, random:1-4, fixture)");

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    CommandResult r;
    if (*inverse) {
      r = cmd_inverse(read_document(file), parse_inverse_kind(kind), common);
    } else if (*classify) {
      r = cmd_classify(read_document(file), common);
    } else if (*decompose) {
      r = cmd_decompose(read_document(file), parse_decomposition(which), common);
    } else if (*order) {
      r = cmd_order(read_document(file), read_document(file_b), dmp::parse_relation(relation), common);
    } else {
      rc.budget = common.budget;
      if (!ids.empty()) rc.ids = suite::select_ids(ids);
      for (const auto& u : rc.universes) suite::parse_universe(u);
      r = cmd_verify(rc, common.out);
    }
    return emit(r, common.out, out, err);
  } catch (const io::DocumentError& e) {
    err << "error: malformed document: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace stardmp::cli
