#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dproc/dproc.hpp"
#include "dproc/report.hpp"

namespace py = pybind11;
using namespace dproc;

namespace {

EnumerationOptions enumeration_options(const std::string& strategy, unsigned workers, std::size_t max_alphabet) {
  auto s = strategy_from_name(strategy);
  if (!s) throw py::value_error("unknown strategy '" + strategy + "' (expected brute, leaf or auto)");
  if (workers == 0) throw py::value_error("workers must be at least 1");
  EnumerationOptions o;
  o.strategy = *s;
  o.workers = workers;
  o.max_alphabet = max_alphabet;
  return o;
}

std::vector<std::string> labels_of(const Trace& t, const Alphabet& alphabet) {
  std::vector<std::string> out;
  for (auto a : t.events()) out.push_back(alphabet.label(a));
  return out;
}

Trace trace_from_labels(const std::vector<py::object>& items, const Alphabet& alphabet) {
  std::vector<ActivityId> ids;
  for (const auto& item : items) ids.push_back(alphabet.id_of(py::str(item).cast<std::string>()));
  return Trace(std::move(ids));
}

std::vector<std::string> stakeholder_labels(const ProcessSpec& spec) {
  std::vector<std::string> out;
  for (const auto& s : spec.stakeholders) out.push_back(s.label);
  return out;
}

py::object json_to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

struct PyEnumeration {
  std::vector<std::vector<std::string>> traces;
  std::uint64_t satisfies_calls;
  std::string strategy;
  std::size_t peeled;
};

PyEnumeration enumerate(const ProcessSpec& spec, const std::string& strategy, unsigned workers,
                        std::size_t max_alphabet) {
  EnumerationResult r;
  {
    py::gil_scoped_release release;
    r = unique_traces(spec.process, enumeration_options(strategy, workers, max_alphabet));
  }
  PyEnumeration out{{}, r.satisfies_calls, std::string(strategy_name(r.strategy)), r.peel_sequence.size()};
  for (const auto& t : r.traces) out.traces.push_back(labels_of(t, spec.process.alphabet()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_dproc, m) {
  m.doc() = "Declarative process enumeration and stakeholder utility comparison";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "ParseError", base.ptr());
  py::register_exception<ArityError>(m, "ArityError", base.ptr());
  py::register_exception<UnknownActivity>(m, "UnknownActivity", base.ptr());
  py::register_exception<DuplicateActivityId>(m, "DuplicateActivityId", base.ptr());
  py::register_exception<AlphabetTooLarge>(m, "AlphabetTooLarge", base.ptr());
  py::register_exception<Overflow>(m, "Overflow", base.ptr());
  py::register_exception<DegenerateProcess>(m, "DegenerateProcess", base.ptr());
  py::register_exception<EmptySubset>(m, "EmptySubset", base.ptr());
  py::register_exception<TooManyStakeholders>(m, "TooManyStakeholders", base.ptr());
  py::register_exception<MismatchedStakeholders>(m, "MismatchedStakeholders", base.ptr());

  m.attr("DEFAULT_MAX_ALPHABET") = kDefaultMaxAlphabet;

  py::class_<ProcessSpec>(m, "ProcessSpec")
      .def_readonly("name", &ProcessSpec::name)
      .def_property_readonly("activities",
                             [](const ProcessSpec& s) {
                               std::vector<std::string> out;
                               for (const auto& a : s.process.alphabet().activities()) out.push_back(a.label);
                               return out;
                             })
      .def_property_readonly("constraints",
                             [](const ProcessSpec& s) {
                               std::vector<std::string> out;
                               for (const auto& c : s.process.constraints()) {
                                 out.push_back(format_constraint(c, s.process.alphabet()));
                               }
                               return out;
                             })
      .def_property_readonly("stakeholders", &stakeholder_labels)
      .def_property_readonly("preferences",
                             [](const ProcessSpec& s) {
                               std::vector<std::string> out;
                               for (const auto& h : s.stakeholders) {
                                 out.push_back(format_preference(h.preference, s.process.alphabet()));
                               }
                               return out;
                             })
      .def("__str__", &print_spec)
      .def("__eq__", [](const ProcessSpec& a, const ProcessSpec& b) { return a == b; })
      .def("__repr__", [](const ProcessSpec& s) {
        return "<ProcessSpec " + s.name + ": " + std::to_string(s.process.alphabet().size()) + " activities, " +
               std::to_string(s.process.constraints().size()) + " constraints>";
      });

  py::class_<PyEnumeration>(m, "Enumeration")
      .def_readonly("traces", &PyEnumeration::traces)
      .def_readonly("satisfies_calls", &PyEnumeration::satisfies_calls)
      .def_readonly("strategy", &PyEnumeration::strategy)
      .def_readonly("peeled", &PyEnumeration::peeled)
      .def("__len__", [](const PyEnumeration& e) { return e.traces.size(); });

  m.def("parse_spec", &parse_spec, py::arg("text"), "Parse process DSL text.");
  m.def(
      "load_spec", [](const std::string& path) { return load_spec(path); }, py::arg("path"),
      "Parse a .dproc file.");

  m.def("unique_traces", &enumerate, py::arg("spec"), py::arg("strategy") = "auto", py::arg("workers") = 1,
        py::arg("max_alphabet") = kDefaultMaxAlphabet,
        "Enumerate the duplicate-free traces of a process in canonical order.");

  m.def(
      "check",
      [](const ProcessSpec& spec, const std::vector<py::object>& trace) {
        const auto t = trace_from_labels(trace, spec.process.alphabet());
        return satisfies(t, spec.process.constraints());
      },
      py::arg("spec"), py::arg("trace"), "True when the trace satisfies every constraint.");

  m.def("enumeration_workload", &enumeration_workload, py::arg("n"),
        "Number of duplicate-free sequences over n activities.");
  m.def("utility", &utility, py::arg("good"), py::arg("total"));

  m.def(
      "good_counts",
      [](const ProcessSpec& spec, const std::string& strategy, unsigned workers, std::size_t max_alphabet) {
        const auto traces = unique_traces(spec.process, enumeration_options(strategy, workers, max_alphabet)).traces;
        const auto u = utility_vector(spec.system(), traces);
        return std::make_pair(u.counts->good, u.counts->total);
      },
      py::arg("spec"), py::arg("strategy") = "auto", py::arg("workers") = 1,
      py::arg("max_alphabet") = kDefaultMaxAlphabet, "Per-stakeholder good trace counts and the trace total.");

  m.def(
      "utility_vector",
      [](const ProcessSpec& spec, const std::string& strategy, unsigned workers, std::size_t max_alphabet) {
        const auto traces = unique_traces(spec.process, enumeration_options(strategy, workers, max_alphabet)).traces;
        return utility_vector(spec.system(), traces).values;
      },
      py::arg("spec"), py::arg("strategy") = "auto", py::arg("workers") = 1,
      py::arg("max_alphabet") = kDefaultMaxAlphabet);

  m.def(
      "utility_vector_from_counts",
      [](const std::vector<std::uint64_t>& good, std::uint64_t total) {
        return UtilityVector::from_counts(good, total).values;
      },
      py::arg("good"), py::arg("total"));

  m.def(
      "h_distance", [](const std::vector<double>& u) { return h_distance(u); }, py::arg("utilities"));

  m.def(
      "compare_vectors",
      [](const std::vector<std::pair<std::string, std::vector<double>>>& systems,
         std::optional<std::vector<std::string>> stakeholders, double tolerance) {
        std::vector<ComparedSystem> cs;
        for (const auto& [label, values] : systems) cs.push_back({label, UtilityVector::from_values(values), {}});
        std::vector<std::string> names;
        if (stakeholders) {
          names = *stakeholders;
        } else if (!cs.empty()) {
          for (std::size_t i = 0; i < cs.front().utilities.size(); ++i) names.push_back("S" + std::to_string(i + 1));
        }
        CompareOptions o;
        o.tolerance = tolerance;
        return json_to_python(report::to_json(compare(std::move(cs), std::move(names), o)));
      },
      py::arg("systems"), py::arg("stakeholders") = std::nullopt, py::arg("tolerance") = kDefaultTieTolerance,
      "Compare (label, utilities) pairs. Returns the JSON report as a dict.");

  m.def(
      "compare_specs",
      [](const std::vector<ProcessSpec>& specs, const std::string& strategy, unsigned workers,
         std::size_t max_alphabet, double tolerance) {
        std::vector<StakeholderSystem> systems;
        for (const auto& s : specs) systems.push_back(s.system());
        CompareOptions o;
        o.tolerance = tolerance;
        o.enumeration = enumeration_options(strategy, workers, max_alphabet);
        return json_to_python(report::to_json(compare(systems, o)));
      },
      py::arg("specs"), py::arg("strategy") = "auto", py::arg("workers") = 1,
      py::arg("max_alphabet") = kDefaultMaxAlphabet, py::arg("tolerance") = kDefaultTieTolerance,
      "Enumerate and compare stakeholder systems. Returns the JSON report as a dict.");
}
