// Thin binding: documents and reports cross the boundary as JSON text, the
// Python side turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stardmp/cli/commands.hpp"

namespace py = pybind11;
using namespace stardmp;

namespace {

cli::CommonConfig common(std::size_t budget) {
  cli::CommonConfig c;
  c.budget = budget;
  return c;
}

py::tuple as_tuple(const cli::CommandResult& r) { return py::make_tuple(r.exit_code, r.report.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.attr("default_budget") = finite::budget_from_env();

  m.def(
      "inverse",
      [](const std::string& doc, const std::string& kind, std::size_t budget) {
        return as_tuple(cli::cmd_inverse(io::parse_document_text(doc), parse_inverse_kind(kind), common(budget)));
      },
      py::arg("doc"), py::arg("kind"), py::arg("budget"));
  m.def(
      "classify",
      [](const std::string& doc, std::size_t budget) {
        return as_tuple(cli::cmd_classify(io::parse_document_text(doc), common(budget)));
      },
      py::arg("doc"), py::arg("budget"));
  m.def(
      "decompose",
      [](const std::string& doc, const std::string& which, std::size_t budget) {
        return as_tuple(
            cli::cmd_decompose(io::parse_document_text(doc), cli::parse_decomposition(which), common(budget)));
      },
      py::arg("doc"), py::arg("which"), py::arg("budget"));
  m.def(
      "order",
      [](const std::string& a, const std::string& b, const std::string& relation, std::size_t budget) {
        return as_tuple(cli::cmd_order(io::parse_document_text(a), io::parse_document_text(b),
                                       dmp::parse_relation(relation), common(budget)));
      },
      py::arg("a"), py::arg("b"), py::arg("relation"), py::arg("budget"));
  m.def(
      "verify",
      [](std::vector<std::string> ids, std::vector<std::string> universes, std::uint64_t seed, std::size_t samples,
         std::size_t budget) {
        suite::RunConfig c;
        c.ids = std::move(ids);
        c.universes = std::move(universes);
        c.seed = seed;
        c.samples = samples;
        c.budget = budget;
        cli::CommandResult r;
        {
          py::gil_scoped_release unlock;
          r = cli::cmd_verify(c);
        }
        return as_tuple(r);
      },
      py::arg("ids"), py::arg("universes"), py::arg("seed"), py::arg("samples"), py::arg("budget"));
  m.def(
      "run",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "stardmp");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
