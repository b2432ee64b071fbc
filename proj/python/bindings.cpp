#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropnewton/dispatch.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_tropnewton, m) {
  m.doc() = "Bindings to the tropnewton command dispatcher";

  py::enum_<tropnewton::Status>(m, "Status")
      .value("OK", tropnewton::Status::Ok)
      .value("VERIFICATION_FAILED", tropnewton::Status::VerificationFailed)
      .value("RESOURCE_LIMIT", tropnewton::Status::ResourceLimit)
      .value("INPUT_ERROR", tropnewton::Status::InputError);

  m.def("exit_code", &tropnewton::exit_code);

  // Returns (status, json document, text summary). The GIL is released
  // while the command runs.
  m.def(
      "run",
      [](const std::string& command, const std::string& ideal_text, std::uint64_t seed, long max_attempts,
         long precision_cap, bool pure_powers, bool precondition, bool paper_exact, bool trace, bool timing,
         unsigned jobs, long unit_bound, std::optional<std::string> weight, std::optional<std::string> substitute,
         const std::string& order, std::optional<std::string> var, bool quiet) {
        tropnewton::CommandOptions o;
        o.command = command;
        o.ideal_text = ideal_text;
        o.seed = seed;
        o.max_attempts = max_attempts;
        o.precision_cap = precision_cap;
        o.pure_powers = pure_powers;
        o.precondition = precondition;
        o.paper_exact = paper_exact;
        o.trace = trace;
        o.timing = timing;
        o.jobs = jobs;
        o.unit_bound = unit_bound;
        o.weight = std::move(weight);
        o.substitute = std::move(substitute);
        o.order = order;
        o.var = std::move(var);
        o.quiet = quiet;
        tropnewton::CommandResult r;
        {
          py::gil_scoped_release release;
          r = tropnewton::dispatch(o);
        }
        return py::make_tuple(r.status, r.json, r.text);
      },
      py::arg("command"), py::arg("ideal_text"), py::kw_only(), py::arg("seed") = 0, py::arg("max_attempts") = 20,
      py::arg("precision_cap") = 64, py::arg("pure_powers") = false, py::arg("precondition") = false,
      py::arg("paper_exact") = false, py::arg("trace") = false, py::arg("timing") = false, py::arg("jobs") = 1,
      py::arg("unit_bound") = 100, py::arg("weight") = py::none(), py::arg("substitute") = py::none(),
      py::arg("order") = "degrevlex", py::arg("var") = py::none(), py::arg("quiet") = true);
}
