#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mmpw/checks.hpp"
#include "mmpw/io.hpp"
#include "mmpw/oracle.hpp"
#include "mmpw/valuations.hpp"
#include "mmpw/veronese.hpp"
#include "mmpw/walk.hpp"

namespace py = pybind11;
using namespace mmpw;

// Documents cross the boundary as JSON text; the Python side decodes them.
namespace {

RingDatum load(const std::string& text) {
  RingDatum d = io::datum_from_json(io::parse_document(text));
  const ValidationReport report = validate(d);
  if (!report.ok()) {
    std::string msg = "ring datum failed validation";
    for (const auto& issue : report.issues) {
      if (issue.severity == Severity::Error) msg += "\n  [" + issue.code + "] " + issue.message;
    }
    throw ValidationError(msg);
  }
  return d;
}

QVector to_vector(const std::vector<std::string>& coords) {
  std::vector<Rat> out;
  for (const auto& c : coords) out.push_back(parse_rat(c));
  return QVector(out);
}

std::string example(const std::string& name) {
  const auto& catalog = builtin_examples();
  const auto it = catalog.find(name);
  if (it == catalog.end()) throw py::key_error("unknown example '" + name + "'");
  return io::dump(io::to_json(it->second));
}

std::string walk(const std::string& datum, std::optional<std::vector<std::string>> h) {
  const RingDatum d = load(datum);
  QVector start;
  if (h) {
    start = to_vector(*h);
  } else if (d.segment_h) {
    start = *d.segment_h;
  } else {
    throw ValidationError("walk: no segment; pass h or add a segment to the datum");
  }
  const ChamberWalk w = order_chambers(chamber_fan(d), make_segment(d, start));
  std::optional<NefClassification> cls;
  if (d.numerical && d.nef) cls = classify_nef(w, d);
  auto doc = io::to_json(emit_trace(w, cls));
  doc["walk"] = io::to_json(w);
  return io::dump(doc);
}

std::string check(const std::string& datum, std::uint64_t seed) {
  const RingDatum d = load(datum);
  CheckOptions opts;
  opts.seed = seed;
  const CheckSuite suite = run_checks(d, chamber_decomposition(d), opts);
  io::json doc;
  doc["passed"] = suite.passed();
  for (const auto& r : suite.results) {
    doc["checks"].push_back({{"name", r.name}, {"tested", r.tested}, {"failures", r.failures}, {"messages", r.messages}});
  }
  doc["grid"] = io::to_json(suite.grid);
  return io::dump(doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact chamber decomposition and MMP walk for divisorial rings";

  const auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<OutsideSupport>(m, "OutsideSupport", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<NonGenericSegment>(m, "NonGenericSegment", base.ptr());
  py::register_exception<NotFound>(m, "NotFound", base.ptr());

  m.def("example_names", [] {
    std::vector<std::string> names;
    for (const auto& [name, d] : builtin_examples()) names.push_back(name);
    return names;
  });
  m.def("example", &example, py::arg("name"));
  m.def("random_instance",
        [](std::uint64_t seed, int r, int generators, int valuations, long bound) {
          return io::dump(io::to_json(random_instance({r, generators, valuations, bound, seed}).datum));
        },
        py::arg("seed"), py::arg("r") = 1, py::arg("generators") = 4, py::arg("valuations") = 2, py::arg("bound") = 3);
  m.def("validate", [](const std::string& datum) {
    return io::dump(io::to_json(validate(io::datum_from_json(io::parse_document(datum)))));
  });
  m.def("support_cone", [](const std::string& datum) { return io::dump(io::to_json(support_cone(load(datum)))); });
  m.def("o_value",
        [](const std::string& datum, const std::string& valuation, const std::vector<std::string>& x) {
          return io::dump(io::to_json(o_value(load(datum), valuation, to_vector(x))));
        },
        py::arg("datum"), py::arg("valuation"), py::arg("x"));
  m.def("ip_value",
        [](const std::string& datum, const std::string& valuation, const std::vector<std::string>& x,
           long k) -> std::optional<std::string> {
          const auto v = ip_value(load(datum), valuation, to_vector(x), k);
          if (!v) return std::nullopt;
          return format_rat(*v);
        },
        py::arg("datum"), py::arg("valuation"), py::arg("x"), py::arg("k"));
  m.def("linearity_fan",
        [](const std::string& datum, const std::string& valuation) {
          return io::dump(io::to_json(linearity_fan(load(datum), valuation)));
        },
        py::arg("datum"), py::arg("valuation"));
  m.def("chamber_decomposition",
        [](const std::string& datum, bool refine) {
          return io::dump(io::to_json(chamber_decomposition(load(datum), refine)));
        },
        py::arg("datum"), py::arg("refine") = true);
  m.def("walk", &walk, py::arg("datum"), py::arg("h") = py::none());
  m.def("veronese_degree",
        [](const std::vector<long>& degrees, int max_m) {
          return io::dump(io::to_json(veronese_degree(degrees, max_m)));
        },
        py::arg("degrees"), py::arg("max_m") = 6);
  m.def("check", &check, py::arg("datum"), py::arg("seed") = 1);
}
