#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "catlens/cli.hpp"
#include "catlens/enumerate.hpp"
#include "catlens/io.hpp"

namespace py = pybind11;
using namespace catlens;

namespace {

// Python-side handle; categories are shared and immutable.
struct Category {
  CategoryPtr ptr;
};

Category wrap(FinCategory c) { return {share(std::move(c))}; }

template <class T>
std::string json_text(const T& x) {
  return io::dump(io::to_json(x));
}

py::object to_python(io::Document d) {
  if (auto* c = std::get_if<CategoryPtr>(&d)) return py::cast(Category{*c});
  if (auto* f = std::get_if<FinFunctor>(&d)) return py::cast(*f);
  if (auto* p = std::get_if<FinCofunctor>(&d)) return py::cast(*p);
  if (auto* l = std::get_if<FinLens>(&d)) return py::cast(*l);
  if (auto* s = std::get_if<StateLens>(&d)) return py::cast(*s);
  return py::cast(std::move(d));
}

io::Document to_document(const py::object& x) {
  if (py::isinstance<Category>(x)) return x.cast<Category>().ptr;
  if (py::isinstance<FinFunctor>(x)) return x.cast<FinFunctor>();
  if (py::isinstance<FinCofunctor>(x)) return x.cast<FinCofunctor>();
  if (py::isinstance<FinLens>(x)) return x.cast<FinLens>();
  if (py::isinstance<StateLens>(x)) return x.cast<StateLens>();
  if (py::isinstance<io::Document>(x)) return x.cast<io::Document>();
  throw py::type_error("not a catlens structure");
}

std::vector<std::string> names(std::span<const std::string> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto structural = py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<io::ParseError>(m, "ParseError", structural);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<BoundaryMismatch>(m, "BoundaryMismatch", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<ValidationReport>(m, "Report")
      .def_property_readonly("valid", &ValidationReport::valid)
      .def_property_readonly("violations",
                             [](const ValidationReport& r) {
                               std::vector<std::pair<std::string, std::vector<std::string>>> out;
                               for (const auto& v : r.violations()) out.emplace_back(v.law, v.witness);
                               return out;
                             })
      .def("__bool__", &ValidationReport::valid)
      .def("__str__", &ValidationReport::to_text);

  py::class_<Category>(m, "Category")
      .def_property_readonly("objects", [](const Category& c) { return names(c.ptr->objects()); })
      .def_property_readonly("morphisms", [](const Category& c) { return names(c.ptr->morphisms()); })
      .def("dom", [](const Category& c, const std::string& f) { return c.ptr->object_id(c.ptr->dom(c.ptr->morphism_index(f))); })
      .def("cod", [](const Category& c, const std::string& f) { return c.ptr->object_id(c.ptr->cod(c.ptr->morphism_index(f))); })
      .def("identity",
           [](const Category& c, const std::string& a) { return c.ptr->morphism_id(c.ptr->identity(c.ptr->object_index(a))); })
      .def("compose",
           [](const Category& c, const std::string& first, const std::string& second) -> std::optional<std::string> {
             Index r = c.ptr->compose(c.ptr->morphism_index(first), c.ptr->morphism_index(second));
             if (r == kNone) return std::nullopt;
             return c.ptr->morphism_id(r);
           },
           py::arg("first"), py::arg("second"))
      .def("__eq__", [](const Category& a, const Category& b) { return same_category(a.ptr, b.ptr); })
      .def("__len__", [](const Category& c) { return c.ptr->object_count(); })
      .def("__repr__",
           [](const Category& c) {
             std::ostringstream s;
             s << "<Category " << c.ptr->object_count() << " objects, " << c.ptr->morphism_count() << " morphisms>";
             return s.str();
           })
      .def("to_json", [](const Category& c) { return json_text(*c.ptr); });

  py::class_<FinFunctor>(m, "Functor")
      .def_property_readonly("source", [](const FinFunctor& f) { return Category{f.source_ptr()}; })
      .def_property_readonly("target", [](const FinFunctor& f) { return Category{f.target_ptr()}; })
      .def("__eq__", [](const FinFunctor& a, const FinFunctor& b) { return a == b; })
      .def("to_json", &json_text<FinFunctor>);

  py::class_<FinCofunctor>(m, "Cofunctor")
      .def_property_readonly("source", [](const FinCofunctor& p) { return Category{p.source_ptr()}; })
      .def_property_readonly("target", [](const FinCofunctor& p) { return Category{p.target_ptr()}; })
      .def("__eq__", [](const FinCofunctor& a, const FinCofunctor& b) { return a == b; })
      .def("to_json", &json_text<FinCofunctor>);

  py::class_<FinLens>(m, "Lens")
      .def_property_readonly("get", &FinLens::get)
      .def_property_readonly("put", &FinLens::put)
      .def_property_readonly("source", [](const FinLens& l) { return Category{l.source_ptr()}; })
      .def_property_readonly("target", [](const FinLens& l) { return Category{l.target_ptr()}; })
      .def("__eq__", [](const FinLens& a, const FinLens& b) { return a == b; })
      .def("to_json", &json_text<FinLens>);

  py::class_<StateLens>(m, "StateLens")
      .def(py::init([](std::vector<std::string> source, std::vector<std::string> view,
                       const std::map<std::string, std::string>& get,
                       const std::map<std::pair<std::string, std::string>, std::string>& put) {
             return StateLens::from_names(std::move(source), std::move(view), get, put);
           }),
           py::arg("source"), py::arg("view"), py::arg("get"), py::arg("put"))
      .def_property_readonly("source", &StateLens::source)
      .def_property_readonly("view", &StateLens::view)
      .def("__eq__", [](const StateLens& a, const StateLens& b) { return a == b; })
      .def("to_json", &json_text<StateLens>);

  // Any other document kind, kept opaque.
  py::class_<io::Document>(m, "Document")
      .def_property_readonly("kind", [](const io::Document& d) { return io::kind_of(d); })
      .def("to_json", [](const io::Document& d) { return io::dump(io::to_json(d)); });

  m.def("codiscrete", [](std::vector<std::string> objects) { return wrap(codiscrete(std::move(objects))); });
  m.def("discrete", [](std::vector<std::string> objects) { return wrap(discrete(std::move(objects))); });
  m.def("interval", [](std::size_t n) { return wrap(interval(n)); }, "Objects 0..n.");
  m.def("arrow_category", [](const Category& c) { return wrap(arrow_category(*c.ptr)); });
  m.def("lambda_category", [](const FinCofunctor& p) { return wrap(lambda_category(p)); });

  m.def("validate", [](const Category& c) { return validate_category(*c.ptr); });
  m.def("validate", &validate_functor);
  m.def("validate", &validate_cofunctor);
  m.def("validate", &validate_lens);
  m.def("validate", &validate_state_lens);
  m.def("is_discrete_opfibration", &is_discrete_opfibration);

  m.def("identity_functor", [](const Category& c) { return identity_functor(c.ptr); });
  m.def("identity_cofunctor", [](const Category& c) { return identity_cofunctor(c.ptr); });
  m.def("identity_lens", [](const Category& c) { return identity_lens(c.ptr); });
  m.def("compose", &compose_functors, py::arg("first"), py::arg("second"));
  m.def("compose", [](const FinCofunctor& a, const FinCofunctor& b) { return compose_cofunctors(a, b); },
        py::arg("first"), py::arg("second"));
  m.def("compose", &compose_lenses, py::arg("first"), py::arg("second"));
  m.def("compose", &compose_state_lenses, py::arg("first"), py::arg("second"));
  m.def("dopf_to_lens", &dopf_to_lens);
  m.def("state_lens_to_internal", &state_lens_to_internal);

  auto guard = py::arg("max_candidates") = kDefaultMaxCandidates;
  m.def("enumerate_functors",
        [](const Category& a, const Category& b, std::uint64_t n) { return enumerate_functors(a.ptr, b.ptr, n); },
        py::arg("source"), py::arg("target"), guard);
  m.def("enumerate_dopfs",
        [](const Category& a, const Category& b, std::uint64_t n) { return enumerate_dopfs(a.ptr, b.ptr, n); },
        py::arg("source"), py::arg("target"), guard);
  m.def("enumerate_cofunctors",
        [](const Category& a, const Category& b, std::uint64_t n) { return enumerate_cofunctors(a.ptr, b.ptr, n); },
        py::arg("source"), py::arg("target"), guard);
  m.def("enumerate_lenses",
        [](const Category& a, const Category& b, std::uint64_t n) { return enumerate_lenses(a.ptr, b.ptr, n); },
        py::arg("source"), py::arg("target"), guard);

  m.def("load", [](const std::string& path) { return to_python(io::read_document(path)); });
  m.def("loads", [](const std::string& text, const std::string& base) { return to_python(io::parse_document(text, base)); },
        py::arg("text"), py::arg("base") = ".");
  m.def("dumps", [](const py::object& x) { return io::dump(io::to_json(to_document(x))); });

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "catlens");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
