#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dnsurf/analysis.hpp"
#include "dnsurf/cohomology.hpp"
#include "dnsurf/generators.hpp"
#include "dnsurf/io.hpp"
#include "dnsurf/poset.hpp"
#include "dnsurf/rational.hpp"
#include "dnsurf/surface.hpp"
#include "dnsurf/version.hpp"

namespace py = pybind11;
using namespace dnsurf;

namespace {

std::string rational_str(const Rational& r) { return to_string(r); }

py::list fvector_list(const FVector& f) {
  py::list out;
  for (long long c : f.counts) out.append(c);
  return out;
}

Cochain parse_cochain(const FacePoset& p, const std::string& text) {
  return io::read_cochain(p, 1, text);
}

py::dict validation_dict(const ValidationReport& r) {
  py::dict d;
  d["is_simplicial_poset"] = r.is_simplicial_poset;
  d["is_closed"] = r.is_closed;
  d["is_connected"] = r.is_connected;
  d["is_closed_3_manifold"] = r.is_closed_3_manifold;
  py::list viol;
  for (const Violation& v : r.violations) {
    py::dict e;
    e["dim"] = v.dim;
    e["id"] = v.id;
    e["kind"] = violation_kind_name(v.kind);
    viol.append(e);
  }
  d["violations"] = viol;
  return d;
}

py::dict component_dict(const ComponentClass& c) {
  py::dict d;
  d["chi"] = c.chi;
  d["orientable"] = c.orientable;
  d[c.orientable ? "genus" : "crosscaps"] = c.genus_or_crosscaps;
  d["pieces"] = c.pieces;
  return d;
}

py::dict spectrum_dict(const ClassSpectrum& s) {
  py::dict d;
  d["representative"] = io::write_cochain(s.representative);
  d["count"] = s.count;
  d["mean_chi"] = rational_str(s.mean_chi);
  d["mean_subcomplex_chi"] = rational_str(s.mean_subcomplex_chi);
  d["min_chi"] = s.min_chi;
  d["max_chi"] = s.max_chi;
  d["witness"] = io::write_cochain(s.witness_max);
  d["all_cross_checked"] = s.all_cross_checked;
  d["every_surface_has_nonorientable"] = s.every_surface_has_nonorientable;
  d["any_sphere_component"] = s.any_sphere_component;
  d["nonorientable_chis"] = s.nonorientable_chis;
  py::list entries;
  for (const SpectrumEntry& e : s.entries) {
    py::dict ed;
    ed["chi"] = e.chi;
    ed["count"] = e.count;
    py::list comps;
    for (const ComponentClass& c : e.components) comps.append(component_dict(c));
    ed["components"] = comps;
    entries.append(ed);
  }
  d["entries"] = entries;
  return d;
}

py::dict average_dict(const AverageReport& r) {
  py::dict d;
  d["f"] = fvector_list(r.f);
  d["formula_value"] = rational_str(r.formula_value);
  d["complex_chi"] = r.complex_chi;
  d["closed"] = r.closed;
  d["is_closed_3_manifold"] = r.is_closed_3_manifold;
  if (r.closed3_value) d["closed3_value"] = rational_str(*r.closed3_value);
  d["h1_dim"] = r.h1_dim;
  d["pass"] = r.pass;
  py::list classes;
  for (const ClassCheck& c : r.classes) {
    py::dict cd;
    cd["representative"] = io::write_cochain(c.representative);
    cd["count"] = c.count;
    cd["mean_subcomplex_chi"] = rational_str(c.mean_subcomplex_chi);
    cd["subcomplex_mean_ok"] = c.subcomplex_mean_ok;
    if (c.mean_surface_chi) cd["mean_surface_chi"] = rational_str(*c.mean_surface_chi);
    if (c.surface_mean_ok) cd["surface_mean_ok"] = *c.surface_mean_ok;
    cd["cross_check_failures"] = c.cross_check_failures;
    cd["is_sigma_class"] = c.is_sigma_class;
    classes.append(cd);
  }
  d["classes"] = classes;
  return d;
}

py::dict certificate_dict(const LensCertificate& c) {
  py::dict d;
  d["k"] = c.k;
  d["q"] = c.q;
  d["r"] = c.r;
  d["bound"] = c.bound;
  d["f3"] = c.f3;
  d["bound_met"] = c.bound_met;
  d["bound_respected"] = c.bound_respected;
  d["complex"] = c.complex_hash;
  d["tool"] = c.tool_version;
  d["class_size"] = c.class_size;
  d["class_mean_chi"] = rational_str(c.class_mean_chi);
  d["witness_chi"] = c.witness_chi;
  d["witness"] = io::write_cochain(c.witness);
  d["witness_at_least_mean"] = c.witness_at_least_mean;
  d["every_surface_nonorientable"] = c.every_surface_nonorientable;
  d["sphere_component_present"] = c.sphere_component_present;
  d["bredon_wood_ok"] = c.bredon_wood_ok;
  d["nonorientable_chis"] = c.nonorientable_chis;
  d["checks_pass"] = c.checks_pass;
  d["note"] = c.note;
  return d;
}

SpectrumOptions options_of(uint64_t budget, int workers) {
  SpectrumOptions o;
  o.budget = budget;
  o.workers = workers;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "discrete normal surfaces in simplicial posets";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "DnsurfError");

  py::class_<FacePoset>(m, "FacePoset")
      .def_property_readonly("dimension", &FacePoset::dimension)
      .def_property_readonly("f_vector",
                             [](const FacePoset& p) { return fvector_list(p.f_vector()); })
      .def_property_readonly("euler_char", &FacePoset::euler_char)
      .def_property_readonly("components", &FacePoset::components)
      .def_property_readonly("hash", [](const FacePoset& p) { return io::hash_hex(p); })
      .def("same_structure", &FacePoset::same_structure)
      .def("__repr__", [](const FacePoset& p) {
        return "FacePoset(dim=" + std::to_string(p.dimension()) + ", f=" + p.f_vector().str() +
               ")";
      });

  // generators
  m.def("lens_standard", &lens_standard, py::arg("p"), py::arg("q"));
  m.def("cyclic_polytope_boundary", &cyclic_polytope_boundary, py::arg("n"));
  m.def("two_tet_sphere", &two_tet_sphere);
  m.def("four_simplex_boundary", &four_simplex_boundary);
  m.def("single_tet", &single_tet);
  m.def("cycle", &cycle, py::arg("m"));
  m.def("join", &join, py::arg("a"), py::arg("b"));
  m.def("disjoint_union", &disjoint_union, py::arg("a"), py::arg("b"));

  // io
  m.def("read_poset", [](const std::string& text) { return io::read_poset(text); },
        py::arg("text"));
  m.def("write_poset", [](const FacePoset& p) { return io::write_poset(p); }, py::arg("poset"));

  // validation and invariants
  m.def("validate", [](const FacePoset& p) { return validation_dict(validate(p)); },
        py::arg("poset"));
  m.def("h1", [](const FacePoset& p) {
    const CohomologyBasis b = h1(p);
    py::dict d;
    d["h1_dim"] = b.h1_dim;
    d["components"] = b.kernel_dim_delta0;
    py::list reps;
    for (const Cochain& r : b.representatives) reps.append(io::write_cochain(r));
    d["representatives"] = reps;
    return d;
  }, py::arg("poset"));

  // surfaces
  m.def("surface", [](const FacePoset& p, const std::string& cocycle) {
    const Cochain psi = parse_cochain(p, cocycle);
    const Surface s = extract_surface(p, psi);
    py::dict d;
    d["points"] = s.points.size();
    d["arcs"] = s.arcs.size();
    d["pieces"] = s.pieces.size();
    d["chi"] = s.euler();
    d["n_components"] = s.n_components;
    py::list comps;
    for (const ComponentClass& c : classify_components(s)) comps.append(component_dict(c));
    d["component_classes"] = comps;
    d["cross_check"] = cross_check(p, psi);
    d["subcomplex_chi"] = slicing_euler(p, psi);
    return d;
  }, py::arg("poset"), py::arg("cocycle"));

  // analysis
  m.def("class_spectrum", [](const FacePoset& p, const std::string& sigma, uint64_t budget,
                             int workers) {
    const Cochain s = sigma.empty() ? Cochain(p, 1) : parse_cochain(p, sigma);
    return spectrum_dict(class_spectrum(p, s, options_of(budget, workers)));
  }, py::arg("poset"), py::arg("sigma") = std::string(), py::arg("budget") = (uint64_t(1) << 24),
     py::arg("workers") = 1);

  m.def("verify_average", [](const FacePoset& p, const std::string& sigma, uint64_t budget,
                             int workers) {
    std::optional<Cochain> s;
    if (!sigma.empty()) s = parse_cochain(p, sigma);
    return average_dict(verify_lemma(p, s, options_of(budget, workers)));
  }, py::arg("poset"), py::arg("sigma") = std::string(), py::arg("budget") = (uint64_t(1) << 24),
     py::arg("workers") = 1);

  m.def("pseudomanifold_average", [](const FacePoset& p, const std::string& sigma,
                                     uint64_t budget, int workers) {
    std::optional<Cochain> s;
    if (!sigma.empty()) s = parse_cochain(p, sigma);
    return average_dict(pseudomanifold_average(p, s, options_of(budget, workers)));
  }, py::arg("poset"), py::arg("sigma") = std::string(), py::arg("budget") = (uint64_t(1) << 24),
     py::arg("workers") = 1);

  m.def("certify_lens", [](const FacePoset& p, long long k, long long q, uint64_t budget,
                           int workers) {
    return certificate_dict(certify_lens(p, k, q, options_of(budget, workers)));
  }, py::arg("poset"), py::arg("k"), py::arg("q"), py::arg("budget") = (uint64_t(1) << 24),
     py::arg("workers") = 1);

  m.def("average_formula", [](const std::vector<long long>& f) {
    return rational_str(average_formula(FVector(f)));
  }, py::arg("f"));
  m.def("average_closed3", [](const std::vector<long long>& f) {
    return rational_str(average_closed3(FVector(f)));
  }, py::arg("f"));
  m.def("bredon_wood_chis", &bredon_wood_chis, py::arg("q"), py::arg("r"), py::arg("floor_chi"));
}
