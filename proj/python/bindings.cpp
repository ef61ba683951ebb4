#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zonocube/bruhat.hpp"
#include "zonocube/error.hpp"
#include "zonocube/geom.hpp"
#include "zonocube/io.hpp"
#include "zonocube/order.hpp"
#include "zonocube/systems.hpp"

namespace py = pybind11;
using namespace zonocube;

namespace pybind11::detail {

// Color sets cross the boundary as sorted tuples of ints; any iterable of ints is accepted.
template <>
struct type_caster<ColorSet> {
  PYBIND11_TYPE_CASTER(ColorSet, const_name("ColorSet"));

  bool load(handle src, bool) {
    if (!src || isinstance<str>(src) || !hasattr(src, "__iter__")) return false;
    std::vector<int> colors;
    for (handle item : reinterpret_borrow<object>(src)) {
      if (!PyLong_Check(item.ptr())) return false;
      colors.push_back(item.cast<int>());
    }
    value = ColorSet::from_unordered(colors);
    return true;
  }

  static handle cast(ColorSet s, return_value_policy, handle) {
    tuple out(s.size());
    std::size_t i = 0;
    for (int c : s) out[i++] = int_(c);
    return out.release();
  }
};

}  // namespace pybind11::detail

namespace {

py::dict diagnostic(const Diagnostic& d) {
  py::dict out;
  out["ok"] = d.ok;
  if (!d.ok) {
    out["condition"] = d.condition;
    out["detail"] = d.detail;
  }
  return out;
}

std::vector<std::pair<ColorSet, ColorSet>> cells(std::span<const Facet> facets) {
  std::vector<std::pair<ColorSet, ColorSet>> out;
  for (const Facet& f : facets) out.emplace_back(f.root, f.type);
  return out;
}

EnumerationLimits limits(std::size_t max_states, std::uint64_t max_cubes) {
  EnumerationLimits l;
  l.max_states = max_states;
  l.max_cubes = max_cubes;
  return l;
}

Realization realization(const std::optional<std::vector<long long>>& t) { return t ? Realization(*t) : Realization(); }

const EnumerationLimits kDefaults{};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fine zonotopal tilings of cyclic zonotopes and separated set systems";

  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<CorruptInput>(m, "CorruptInput", PyExc_ValueError);
  py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);
  py::register_exception<NotRealizable>(m, "NotRealizable", PyExc_ValueError);
  py::register_exception<Refused>(m, "Refused", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Cubillage>(m, "Cubillage")
      .def(py::init([](ColorSet colors, int d, const std::vector<std::pair<ColorSet, ColorSet>>& cubes) {
             std::vector<Cube> cs;
             for (auto [root, type] : cubes) cs.push_back({root, type});
             return Cubillage(colors, d, std::move(cs));
           }),
           py::arg("colors"), py::arg("d"), py::arg("cubes"))
      .def_property_readonly("colors", &Cubillage::colors)
      .def_property_readonly("d", &Cubillage::dim)
      .def_property_readonly("n", &Cubillage::n)
      .def_property_readonly("cubes",
                             [](const Cubillage& Q) {
                               std::vector<std::pair<ColorSet, ColorSet>> out;
                               for (const Cube& c : Q.cubes()) out.emplace_back(c.root, c.type);
                               return out;
                             })
      .def("root_of", &Cubillage::root_of, py::arg("type"))
      .def("__len__", &Cubillage::size)
      .def("__eq__", [](const Cubillage& a, const Cubillage& b) { return a == b; })
      .def("__hash__",
           [](const Cubillage& Q) {
             py::tuple key(py::cast(Q.key()));
             return py::hash(key);
           })
      .def("to_json", [](const Cubillage& Q) { return io::dump(io::to_json(Q)); })
      .def_static("from_json", [](const std::string& text) { return io::cubillage_from_json(io::parse(text)); })
      .def("__repr__", [](const Cubillage& Q) {
        std::ostringstream s;
        s << "Cubillage(n=" << Q.n() << ", d=" << Q.dim() << ", cubes=" << Q.size() << ")";
        return s.str();
      });

  m.def("standard", py::overload_cast<int, int>(&standard), py::arg("n"), py::arg("d"));
  m.def("antistandard", py::overload_cast<int, int>(&antistandard), py::arg("n"), py::arg("d"));
  m.def("validate", [](const Cubillage& Q) { return diagnostic(validate(Q)); });
  m.def("vertex_spectra", &vertex_spectra);
  m.def("reduce", [](const Cubillage& Q, int color) { return reduce(Q, color).cubillage; }, py::arg("Q"), py::arg("color"));
  m.def("expand",
        [](const Cubillage& Q, const std::vector<ColorSet>& stack, int color) { return expand(Q, stack, color); },
        py::arg("Q"), py::arg("stack"), py::arg("color"));
  m.def("contract", &contract, py::arg("Q"), py::arg("color"));
  m.def("embed_subcubillage", &embed_subcubillage, py::arg("colors"), py::arg("d"), py::arg("root"), py::arg("type"));

  m.def("find_flips", [](const Cubillage& Q) {
    py::list out;
    for (const Flip& f : find_flips(Q)) {
      py::dict x;
      x["parent"] = py::cast(f.parent);
      x["direction"] = f.direction == FlipDirection::raising ? "raising" : "lowering";
      out.append(x);
    }
    return out;
  });
  m.def("apply_flip", &apply_flip, py::arg("Q"), py::arg("parent"));
  m.def("avalanche", &avalanche);
  m.def("antiavalanche", &antiavalanche);
  m.def("standardize", &standardize);
  m.def("antipode", &antipode);
  m.def("natural_order", [](const Cubillage& Q) {
    NaturalOrder O(Q);
    std::vector<std::pair<ColorSet, ColorSet>> out;
    for (auto [a, b] : O.covers()) out.emplace_back(O.type(a), O.type(b));
    return out;
  });
  m.def("enumerate_membranes", &enumerate_membranes);
  m.def(
      "membrane_of_stack",
      [](const Cubillage& Q, const std::vector<ColorSet>& stack) { return cells(membrane_of_stack(Q, stack).plates); },
      py::arg("Q"), py::arg("stack"));
  m.def("garland", &garland);

  m.def("inversions", &inversions);
  m.def(
      "is_consistent", [](const std::vector<ColorSet>& S, int n, int d) { return is_consistent(S, n, d); }, py::arg("sets"),
      py::arg("n"), py::arg("d"));
  m.def(
      "from_spectra", [](const std::vector<ColorSet>& S, int n, int d) { return from_spectra(S, n, d); }, py::arg("sets"),
      py::arg("n"), py::arg("d"));
  m.def(
      "from_consistent",
      [](const std::vector<ColorSet>& S, int n, int d) {
        MembraneRealization r = from_consistent(S, n, d);
        py::dict out;
        out["ambient"] = r.ambient;
        out["membrane"] = cells(r.membrane.plates);
        out["cubillage"] = r.cubillage;
        return out;
      },
      py::arg("sets"), py::arg("n"), py::arg("d"));
  m.def("order_relations", [](const Cubillage& Q) { return order_of(Q).relations; });
  m.def(
      "from_order",
      [](int n, int d, const std::vector<std::pair<ColorSet, ColorSet>>& relations) {
        return from_order(AdmissibleOrder{n, d, relations});
      },
      py::arg("n"), py::arg("d"), py::arg("relations"));

  m.def(
      "is_separated", [](const std::vector<ColorSet>& S, int r) { return is_r_separated_system(S, r); }, py::arg("sets"),
      py::arg("r"));
  m.def(
      "is_weakly_separated", [](const std::vector<ColorSet>& S, int k) { return is_weakly_separated_system(S, k); },
      py::arg("sets"), py::arg("k"));
  m.def(
      "extension_search",
      [](const std::vector<ColorSet>& S, int n, int d, bool certify) {
        ExtensionResult r = extension_search(S, n, d, certify ? ExtensionMode::certify_maximal : ExtensionMode::complete);
        py::dict out;
        out["target"] = r.target;
        out["base"] = r.base;
        out["candidates"] = r.candidates;
        out["completable"] = r.completable;
        out["completion"] = r.completion;
        if (certify) out["maximal_extensions"] = r.maximal_extensions;
        return out;
      },
      py::arg("sets"), py::arg("n"), py::arg("d"), py::arg("certify") = false);
  m.def("count_maximum_separated_systems", &count_maximum_separated_systems, py::arg("n"), py::arg("d"));
  m.def(
      "weak_separation_suite",
      [](int n, int k) {
        WeakSeparationReport r = weak_separation_suite(n, k);
        py::dict out;
        out["maximum"] = r.maximum;
        out["bound"] = r.bound;
        out["witness"] = r.witness;
        return out;
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "enumerate_cubillages",
      [](int n, int d, std::size_t max_states, std::uint64_t max_cubes) {
        return enumerate_cubillages(n, d, limits(max_states, max_cubes));
      },
      py::arg("n"), py::arg("d"), py::arg("max_states") = kDefaults.max_states, py::arg("max_cubes") = kDefaults.max_cubes);
  m.def(
      "bruhat_poset",
      [](int n, int d) {
        BruhatPoset P = bruhat_poset(n, d);
        py::dict out;
        out["elements"] = P.elements;
        out["covers"] = P.covers;
        out["rank"] = P.rank;
        out["is_lattice"] = P.is_lattice();
        out["dot"] = P.to_dot();
        return out;
      },
      py::arg("n"), py::arg("d"));
  m.def("sec", [](const Cubillage& Q) { return sec(Q).simplices; });
  m.def(
      "check_triangulation",
      [](int n, int d, const std::vector<ColorSet>& simplices) {
        return diagnostic(check_triangulation(Triangulation{n, d, simplices}));
      },
      py::arg("n"), py::arg("d"), py::arg("simplices"));
  m.def(
      "sec_surjectivity",
      [](int n, int d) {
        SurjectivityReport r = sec_surjectivity(n, d);
        py::dict out;
        out["cubillages"] = r.cubillages;
        out["image"] = r.image;
        out["triangulations"] = r.triangulations;
        out["surjective"] = r.surjective();
        out["all_valid"] = r.all_valid;
        return out;
      },
      py::arg("n"), py::arg("d"));

  m.def(
      "det_sign",
      [](ColorSet J, int i, std::optional<std::vector<long long>> t) { return det_sign(J, i, realization(t)); },
      py::arg("J"), py::arg("i"), py::arg("t") = py::none());
  m.def(
      "vertex_coordinates",
      [](ColorSet X, int d, std::optional<std::vector<long long>> t) {
        std::vector<std::string> out;
        for (const BigInt& x : vertex_coordinates(X, d, realization(t))) out.push_back(x.str());
        py::list coords;
        for (const auto& s : out) coords.append(py::int_(py::str(s)));
        return coords;
      },
      py::arg("X"), py::arg("d"), py::arg("t") = py::none());
  m.def(
      "render_svg",
      [](const Cubillage& Q, bool arrows, bool labels, int width, int height,
         std::optional<std::vector<ColorSet>> membrane_stack) {
        SvgOptions o;
        o.arrows = arrows;
        o.labels = labels;
        o.width = width;
        o.height = height;
        o.membrane_stack = std::move(membrane_stack);
        return render_svg(Q, o);
      },
      py::arg("Q"), py::arg("arrows") = false, py::arg("labels") = false, py::arg("width") = 640,
      py::arg("height") = 480, py::arg("membrane_stack") = py::none());
}
