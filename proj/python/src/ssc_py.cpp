#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "ssc/algebra.hpp"
#include "ssc/laws.hpp"
#include "ssc/oracle.hpp"
#include "ssc/samples.hpp"
#include "ssc/scheme.hpp"
#include "ssc/script.hpp"
#include "ssc/subscheme.hpp"

namespace py = pybind11;
using namespace ssc;

namespace {

struct PyAlgebra {
  Algebra ptr;
};

struct PyScheme {
  Scheme ptr;
};

MonomialOrder order_from(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw py::value_error("order must be 'lex' or 'grevlex'");
}

std::vector<Polynomial> parse_all(const Algebra& a, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(a->parse(t));
  return out;
}

std::vector<std::string> format_all(const Algebra& a, const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(a->format(p));
  return out;
}

PyAlgebra make_algebra(std::vector<std::string> vars, const std::vector<std::string>& relations,
                       const std::string& order) {
  MonomialOrder ord = order_from(order);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_poly(r, vars, ord));
  return {AffineAlgebra::make(std::move(vars), rels, ord)};
}

std::vector<PyAlgebra> wrap_all(const std::vector<Algebra>& algebras) {
  std::vector<PyAlgebra> out;
  for (const auto& a : algebras) out.push_back({a});
  return out;
}

ClosedSubscheme make_subscheme(const PyScheme& scheme,
                               const std::vector<std::vector<std::string>>& gens) {
  const Scheme& x = scheme.ptr;
  if (gens.size() != x->npatches())
    throw py::value_error("need one generator list per patch");
  std::vector<Ideal> ideals;
  for (std::size_t i = 0; i < gens.size(); ++i)
    ideals.emplace_back(x->patch(i), parse_all(x->patch(i), gens[i]));
  return ClosedSubscheme(x, std::move(ideals));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed subschemes of glued affine schemes over QQ";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::enum_<Status>(m, "Status")
      .value("PASS", Status::Pass)
      .value("FAIL", Status::Fail)
      .value("VIOLATED", Status::Violated);

  py::class_<Report>(m, "Report")
      .def_property_readonly("lines",
                             [](const Report& r) {
                               std::vector<std::tuple<Status, std::string, std::string>> out;
                               for (const auto& l : r.lines()) out.emplace_back(l.status, l.subject, l.detail);
                               return out;
                             })
      .def_property_readonly("ok", &Report::ok)
      .def_property_readonly("failures", &Report::failures)
      .def("__str__", &Report::to_string)
      .def("__bool__", &Report::ok);

  py::class_<PyAlgebra>(m, "Algebra")
      .def(py::init(&make_algebra), py::arg("variables"), py::arg("relations") = std::vector<std::string>{},
           py::arg("order") = "grevlex")
      .def_property_readonly("variables", [](const PyAlgebra& a) { return a.ptr->variables(); })
      .def_property_readonly("relations",
                             [](const PyAlgebra& a) { return format_all(a.ptr, a.ptr->relations()); })
      .def_property_readonly("is_zero_ring", [](const PyAlgebra& a) { return a.ptr->is_zero_ring(); })
      .def("reduce",
           [](const PyAlgebra& a, const std::string& f) { return a.ptr->format(a.ptr->reduce(a.ptr->parse(f))); })
      .def("inverse",
           [](const PyAlgebra& a, const std::string& f) -> std::optional<std::string> {
             auto inv = inverse_of(a.ptr, a.ptr->parse(f));
             if (!inv) return std::nullopt;
             return a.ptr->format(*inv);
           })
      .def("__eq__", [](const PyAlgebra& a, const PyAlgebra& b) { return same_algebra(a.ptr, b.ptr); })
      .def("__str__", [](const PyAlgebra& a) { return a.ptr->describe(); })
      .def("__repr__", [](const PyAlgebra& a) { return "Algebra(" + a.ptr->describe() + ")"; });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const PyAlgebra& a, const std::vector<std::string>& gens) {
             return Ideal(a.ptr, parse_all(a.ptr, gens));
           }),
           py::arg("algebra"), py::arg("generators"))
      .def_static("zero", [](const PyAlgebra& a) { return Ideal::zero(a.ptr); })
      .def_static("unit", [](const PyAlgebra& a) { return Ideal::unit(a.ptr); })
      .def_property_readonly("algebra", [](const Ideal& i) { return PyAlgebra{i.algebra()}; })
      .def_property_readonly("basis", [](const Ideal& i) { return format_all(i.algebra(), i.basis()); })
      .def("contains", [](const Ideal& i, const std::string& f) { return i.contains(i.algebra()->parse(f)); })
      .def("__contains__", [](const Ideal& i, const std::string& f) { return i.contains(i.algebra()->parse(f)); })
      .def_property_readonly("is_unit", &Ideal::is_unit)
      .def_property_readonly("is_zero", &Ideal::is_zero)
      .def("__add__", &ideal_sum)
      .def("__and__", &ideal_intersect)
      .def("__eq__", &ideal_eq)
      .def("__str__", &Ideal::to_string)
      .def("__repr__", [](const Ideal& i) { return "Ideal" + i.to_string(); });

  m.def("ideal_sum", &ideal_sum);
  m.def("intersect", &ideal_intersect);
  m.def("saturate", [](const Ideal& i, const std::string& f) { return saturate(i, i.algebra()->parse(f)); });
  m.def("eliminate", &eliminate, py::arg("ideal"), py::arg("k"),
        "Eliminate the first k variables.");

  py::class_<RingMap>(m, "RingMap")
      .def(py::init([](const PyAlgebra& source, const PyAlgebra& target,
                       const std::vector<std::string>& images) {
             return RingMap(source.ptr, target.ptr, parse_all(target.ptr, images));
           }),
           py::arg("source"), py::arg("target"), py::arg("images"))
      .def_static("identity", [](const PyAlgebra& a) { return RingMap::identity(a.ptr); })
      .def_property_readonly("source", [](const RingMap& f) { return PyAlgebra{f.source()}; })
      .def_property_readonly("target", [](const RingMap& f) { return PyAlgebra{f.target()}; })
      .def_property_readonly("images", [](const RingMap& f) { return format_all(f.target(), f.images()); })
      .def("__call__",
           [](const RingMap& f, const std::string& p) { return f.target()->format(f(f.source()->parse(p))); })
      .def("validate", &map_validate)
      .def("kernel", &map_kernel)
      .def("is_surjective", &map_surjective)
      .def("extend", &extend)
      .def("contract", &contract);
  m.def("compose_maps", &map_compose, py::arg("psi"), py::arg("phi"), "psi after phi");

  py::class_<PyScheme>(m, "Scheme")
      .def_static("affine", [](const PyAlgebra& a) { return PyScheme{GluedScheme::affine(a.ptr)}; })
      .def_property_readonly("npatches", [](const PyScheme& x) { return x.ptr->npatches(); })
      .def_property_readonly("patches", [](const PyScheme& x) { return wrap_all(x.ptr->patches()); })
      .def("validate", [](const PyScheme& x, bool cocycle) { return validate_scheme(*x.ptr, cocycle); },
           py::arg("cocycle") = false)
      .def("transport", [](const PyScheme& x, std::size_t i, std::size_t j, const Ideal& ideal) {
        return transport(*x.ptr, i, j, ideal);
      })
      .def("__eq__", [](const PyScheme& a, const PyScheme& b) { return same_scheme(a.ptr, b.ptr); });

  py::class_<SchemeMorphism>(m, "Morphism")
      .def(py::init([](const PyScheme& source, const PyScheme& target,
                       const std::vector<std::pair<std::size_t, RingMap>>& patches) {
             std::vector<PatchMap> pm;
             for (const auto& [j, f] : patches) pm.push_back({j, f});
             return SchemeMorphism(source.ptr, target.ptr, std::move(pm));
           }),
           py::arg("source"), py::arg("target"), py::arg("patches"))
      .def_static("identity", [](const PyScheme& x) { return SchemeMorphism::identity(x.ptr); })
      .def_property_readonly("source", [](const SchemeMorphism& f) { return PyScheme{f.source()}; })
      .def_property_readonly("target", [](const SchemeMorphism& f) { return PyScheme{f.target()}; })
      .def("validate", &validate_morphism);
  m.def("compose", &compose, py::arg("g"), py::arg("f"), "g after f");

  py::class_<ClosedSubscheme>(m, "Subscheme")
      .def(py::init(&make_subscheme), py::arg("scheme"), py::arg("generators"))
      .def_property_readonly("scheme", [](const ClosedSubscheme& z) { return PyScheme{z.scheme()}; })
      .def_property_readonly("ideals", &ClosedSubscheme::ideals)
      .def("validate", [](const ClosedSubscheme& z) { return validate(z); })
      .def("canon", [](const ClosedSubscheme& z) { return canon(z); })
      .def("__mul__", &mul)
      .def("__add__", &add)
      .def("__eq__", [](const ClosedSubscheme& z, const ClosedSubscheme& w) { return eq(z, w); })
      .def("__str__", &ClosedSubscheme::to_string)
      .def("__repr__", [](const ClosedSubscheme& z) { return "Subscheme" + z.to_string(); });

  m.def("whole", [](const PyScheme& x) { return whole(x.ptr); });
  m.def("empty", [](const PyScheme& x) { return empty(x.ptr); });
  m.def("mul", &mul);
  m.def("add", &add);
  m.def("eq", &eq);
  m.def("pullback", &pullback, py::arg("f"), py::arg("z"));
  m.def("from_surjection", &from_surjection);
  m.def("check_additive_law", &check_additive_law);

  auto samples = m.def_submodule("samples", "Standard example schemes and morphisms");
  samples.def("projective_line", [] { return PyScheme{samples::projective_line()}; });
  samples.def("projective_plane", [] { return PyScheme{samples::projective_plane()}; });
  samples.def("doubled_origin_line", [] { return PyScheme{samples::doubled_origin_line()}; });
  samples.def("twisted_triple_line", [] { return PyScheme{samples::twisted_triple_line()}; });
  samples.def("squaring", [](const PyScheme& p1) { return samples::squaring(p1.ptr); });
  samples.def("diagonal", &samples::diagonal);

  auto oracle = m.def_submodule("oracle", "Closed subschemes of Spec Z and Spec Z/n");
  oracle.def("int_mul", [](std::uint64_t a, std::uint64_t b) { return oracle::int_mul({a}, {b}).m; });
  oracle.def("int_add", [](std::uint64_t a, std::uint64_t b) { return oracle::int_add({a}, {b}).m; });
  oracle.def("prime_support", &oracle::prime_support);
  oracle.def("divisors", &oracle::divisors);
  oracle.def("cyc_mul", [](std::uint64_t n, std::uint64_t a, std::uint64_t b) {
    return oracle::cyc_mul({n, a}, {n, b}).d;
  });
  oracle.def("cyc_add", [](std::uint64_t n, std::uint64_t a, std::uint64_t b) {
    return oracle::cyc_add({n, a}, {n, b}).d;
  });
  oracle.def("cyc_extend", [](std::uint64_t n, std::uint64_t d, std::uint64_t target) {
    return oracle::cyc_extend({n, d}, target).d;
  });
  oracle.def("uni_gcd", [](const PyAlgebra& a, const std::string& f, const std::string& g) {
    return a.ptr->format(oracle::uni_gcd_oracle(a.ptr->parse(f), a.ptr->parse(g)));
  });
  oracle.def("uni_intersect", [](const PyAlgebra& a, const std::string& f, const std::string& g) {
    return a.ptr->format(oracle::uni_intersect_oracle(a.ptr->parse(f), a.ptr->parse(g)));
  });

  m.def("law_modules", &law_modules);
  m.def(
      "run_laws",
      [](const std::string& module, std::uint64_t seed, std::uint64_t max_n) {
        LawOptions opts;
        opts.seed = seed;
        opts.max_n = max_n;
        return run_laws(module, opts);
      },
      py::arg("module") = "all", py::arg("seed") = 1, py::arg("max_n") = 1000);

  m.def(
      "run_script",
      [](const std::string& text, bool cocycle_check, const std::string& order) {
        ScriptOptions opts;
        opts.order = order_from(order);
        opts.cocycle_check = cocycle_check;
        ExecResult r = execute(parse_script(text, opts), opts);
        return std::make_tuple(r.out, r.err, r.exit_code);
      },
      py::arg("text"), py::arg("cocycle_check") = false, py::arg("order") = "grevlex",
      "Run a .ssc script; returns (stdout, stderr, exit_code).");
}
