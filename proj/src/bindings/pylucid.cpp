#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lucid/cli/cli.hpp"
#include "lucid/eduction/runner.hpp"
#include "lucid/frontend/parser.hpp"
#include "lucid/frontend/printer.hpp"
#include "lucid/semantics/compiler.hpp"
#include "lucid/semantics/serialize.hpp"
#include "lucid/translator/translator.hpp"

namespace py = pybind11;
using namespace lucid;

namespace {

std::optional<Dialect> dialect_arg(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  if (*name == "gipl") return Dialect::Gipl;
  if (*name == "indexical") return Dialect::Indexical;
  if (*name == "jlucid") return Dialect::JLucid;
  if (*name == "objective") return Dialect::Objective;
  throw py::value_error("unknown dialect '" + *name + "' (gipl, indexical, jlucid, objective)");
}

// Records come back as dicts with their class under "__class__".
py::object to_python(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Int: return py::int_(v.as_int());
    case ValueKind::Float:
    case ValueKind::Double: return py::float_(v.as_double());
    case ValueKind::Bool: return py::bool_(v.as_bool());
    case ValueKind::Str: return py::str(v.as_string());
    case ValueKind::Dim: return py::str(v.as_dim());
    case ValueKind::HostFn: return py::str(v.as_host_fn());
    case ValueKind::Arr: {
      py::list out;
      for (const auto& item : v.as_array().items) out.append(to_python(item));
      return out;
    }
    case ValueKind::Rec: {
      py::dict out;
      out["__class__"] = v.as_record().className;
      for (const auto& [k, f] : v.as_record().fields) out[py::str(k)] = to_python(f);
      return out;
    }
  }
  return py::none();
}

struct Program {
  EductionProgram prog;
  std::vector<std::string> warnings;
};

py::object text_or_none(bool present, const std::string& text) {
  return present ? py::object(py::str(text)) : py::object(py::none());
}

py::dict result_dict(const AstResult& r) {
  py::dict d;
  d["ast"] = r.astIndex;
  d["value"] = r.value ? to_python(*r.value) : py::none();
  d["text"] = text_or_none(r.value.has_value(), r.value ? r.value->render() : "");
  d["error"] = text_or_none(r.error.has_value(), r.error ? std::string(to_string(r.error->code())) : "");
  d["message"] = text_or_none(r.error.has_value(), r.error ? r.error->message() : "");
  d["output"] = r.output;
  return d;
}

}  // namespace

PYBIND11_MODULE(pylucid, m) {
  m.doc() = "Lucid compiler and eduction engine";
  py::register_exception<Error>(m, "LucidError");

  py::class_<Program>(m, "Program")
      .def_property_readonly("ast_count", [](const Program& p) { return p.prog.asts.size(); })
      .def_readonly("warnings", &Program::warnings)
      .def_property_readonly("strefs",
                             [](const Program& p) {
                               std::vector<std::string> names;
                               for (const auto& s : p.prog.stRefs) names.push_back(s.name);
                               return names;
                             })
      .def("serialize", [](const Program& p) { return serialize(p.prog); })
      .def("listing", [](const Program& p) {
        std::vector<std::string> out;
        for (const auto& a : p.prog.asts) out.push_back(print_pretty(*a));
        return out;
      });

  m.def(
      "compile",
      [](const std::string& source, std::optional<std::string> dialect, bool translate, const std::string& base_dir) {
        CompileOptions o;
        o.dialect = dialect_arg(dialect);
        o.translate = translate;
        o.baseDir = base_dir;
        CompileResult r = compile(source, HostRegistry::with_builtins(), o);
        Program p{std::move(r.program), {}};
        for (const auto& w : r.warnings) p.warnings.push_back(w.diagnostic("<source>"));
        return p;
      },
      py::arg("source"), py::arg("dialect") = py::none(), py::arg("translate") = true, py::arg("base_dir") = ".");

  m.def(
      "load", [](const std::string& text) { return Program{deserialize(text, HostRegistry::with_builtins()), {}}; },
      py::arg("text"));

  m.def(
      "run",
      [](const Program& p, std::optional<std::size_t> warehouse_capacity, bool socket, bool concurrent) {
        RunOptions o;
        if (warehouse_capacity) o.warehouseCapacity = *warehouse_capacity;
        if (socket) o.cpKind = CpKind::Socket;
        o.concurrent = concurrent;
        RunReport r;
        {
          py::gil_scoped_release release;
          r = run(p.prog, o);
        }
        py::list out;
        for (const auto& a : r.results) out.append(result_dict(a));
        return out;
      },
      py::arg("program"), py::arg("warehouse_capacity") = py::none(), py::arg("socket") = false,
      py::arg("concurrent") = false);

  m.def(
      "evaluate",
      [](const std::string& source, std::optional<std::string> dialect) {
        CompileOptions o;
        o.dialect = dialect_arg(dialect);
        EductionProgram prog = compile(source, HostRegistry::with_builtins(), o).program;
        RunReport r;
        {
          py::gil_scoped_release release;
          r = run(prog);
        }
        if (r.results.at(0).error) throw *r.results[0].error;
        return to_python(*r.results[0].value);
      },
      py::arg("source"), py::arg("dialect") = py::none(),
      "Value of the first tree of a program; raises LucidError on failure.");

  m.def(
      "translate",
      [](const std::string& source) { return print_pretty(*lucid::translate(*parse_indexical(source))); },
      py::arg("source"), "An Indexical Lucid expression rewritten to GIPL, as text.");

  m.def(
      "canonical",
      [](const std::string& source, const std::string& dialect) {
        return print(*parse(source, *dialect_arg(dialect)));
      },
      py::arg("source"), py::arg("dialect") = "indexical");
}
