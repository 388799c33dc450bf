#include "dnsurf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dnsurf/analysis.hpp"
#include "dnsurf/cohomology.hpp"
#include "dnsurf/generators.hpp"
#include "dnsurf/io.hpp"
#include "dnsurf/surface.hpp"
#include "dnsurf/version.hpp"

namespace dnsurf {

namespace {

using ordered_json = nlohmann::ordered_json;

FacePoset load_poset(const std::string& path, std::istream& in) {
  if (path == "-") return io::read_poset(in);
  std::ifstream file(path);
  if (!file) fail(ErrorCode::FormatError, "cannot open " + path);
  return io::read_poset(file);
}

// Cochain option values: a literal string, or @path to read a file.
std::string load_text(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream file(value.substr(1));
  if (!file) fail(ErrorCode::FormatError, "cannot open " + value.substr(1));
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string component_str(const ComponentClass& c) {
  std::ostringstream s;
  s << "chi=" << c.chi << (c.orientable ? " orientable genus=" : " nonorientable crosscaps=")
    << c.genus_or_crosscaps << " pieces=" << c.pieces;
  return s.str();
}

ordered_json component_json(const ComponentClass& c) {
  ordered_json j;
  j["chi"] = c.chi;
  j["orientable"] = c.orientable;
  j[c.orientable ? "genus" : "crosscaps"] = c.genus_or_crosscaps;
  j["pieces"] = c.pieces;
  return j;
}

std::string int_list_str(const std::vector<long long>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

struct Ctx {
  std::istream* in;
  std::ostream* out;
  bool structured = false;
  int rc = 0;

  void emit(const ordered_json& doc) { *out << doc.dump(2) << "\n"; }
};

void cmd_validate(Ctx& ctx, const std::string& path) {
  const FacePoset p = load_poset(path, *ctx.in);
  const ValidationReport rep = validate(p);
  if (ctx.structured) {
    ordered_json j;
    j["f"] = p.f_vector().counts;
    j["simplicial_poset"] = rep.is_simplicial_poset;
    j["closed"] = rep.is_closed;
    j["connected"] = rep.is_connected;
    j["closed_3_manifold"] = rep.is_closed_3_manifold;
    ordered_json viol = ordered_json::array();
    for (const auto& v : rep.violations) {
      ordered_json jv;
      jv["dim"] = v.dim;
      jv["id"] = v.id;
      jv["kind"] = violation_kind_name(v.kind);
      viol.push_back(std::move(jv));
    }
    j["violations"] = std::move(viol);
    ctx.emit(j);
  } else {
    auto& out = *ctx.out;
    out << "f = " << p.f_vector().str() << "\n";
    out << "simplicial_poset = " << (rep.is_simplicial_poset ? "true" : "false") << "\n";
    out << "closed = " << (rep.is_closed ? "true" : "false") << "\n";
    out << "connected = " << (rep.is_connected ? "true" : "false") << "\n";
    out << "closed_3_manifold = " << (rep.is_closed_3_manifold ? "true" : "false") << "\n";
    for (const auto& v : rep.violations)
      out << "violation: dim=" << v.dim << " id=" << v.id << " kind=" << violation_kind_name(v.kind) << "\n";
  }
  ctx.rc = rep.is_simplicial_poset ? 0 : 1;
}

void cmd_info(Ctx& ctx, const std::string& path) {
  const FacePoset p = load_poset(path, *ctx.in);
  const ValidationReport rep = validate(p);
  if (ctx.structured) {
    ordered_json j;
    j["f"] = p.f_vector().counts;
    j["chi"] = p.euler_char();
    j["components"] = p.components();
    j["complex"] = io::hash_hex(p);
    j["simplicial_poset"] = rep.is_simplicial_poset;
    j["closed"] = rep.is_closed;
    j["closed_3_manifold"] = rep.is_closed_3_manifold;
    ctx.emit(j);
  } else {
    auto& out = *ctx.out;
    out << "f = " << p.f_vector().str() << "\n";
    out << "chi = " << p.euler_char() << "\n";
    out << "components = " << p.components() << "\n";
    out << "complex = " << io::hash_hex(p) << "\n";
    out << "simplicial_poset = " << (rep.is_simplicial_poset ? "true" : "false") << "\n";
    out << "closed = " << (rep.is_closed ? "true" : "false") << "\n";
    out << "closed_3_manifold = " << (rep.is_closed_3_manifold ? "true" : "false") << "\n";
  }
}

void cmd_h1(Ctx& ctx, const std::string& path) {
  const FacePoset p = load_poset(path, *ctx.in);
  const CohomologyBasis basis = h1(p);
  if (ctx.structured) {
    ordered_json j;
    j["h1_dim"] = basis.h1_dim;
    j["components"] = basis.kernel_dim_delta0;
    ordered_json reps = ordered_json::array();
    for (const auto& r : basis.representatives) reps.push_back(io::write_cochain(r));
    j["representatives"] = std::move(reps);
    ctx.emit(j);
  } else {
    auto& out = *ctx.out;
    out << "h1_dim = " << basis.h1_dim << "\n";
    out << "components = " << basis.kernel_dim_delta0 << "\n";
    for (size_t i = 0; i < basis.representatives.size(); ++i)
      out << "rep[" << i << "] = " << io::write_cochain(basis.representatives[i]) << "\n";
  }
}

void cmd_surface(Ctx& ctx, const std::string& path, const std::string& cocycle) {
  const FacePoset p = load_poset(path, *ctx.in);
  const Cochain psi = io::read_cochain(p, 1, load_text(cocycle));
  const Surface s = extract_surface(p, psi);
  const auto comps = classify_components(s);
  const bool crossed = s.euler() == slicing_euler(p, psi) - p.euler_char();
  if (ctx.structured) {
    ordered_json j;
    j["cocycle"] = io::write_cochain(psi);
    j["points"] = s.points.size();
    j["arcs"] = s.arcs.size();
    j["pieces"] = s.pieces.size();
    j["chi"] = s.euler();
    j["components"] = ordered_json::array();
    for (const auto& c : comps) j["components"].push_back(component_json(c));
    j["cross_check"] = crossed;
    ctx.emit(j);
  } else {
    auto& out = *ctx.out;
    out << "cocycle = " << io::write_cochain(psi) << "\n";
    out << "points = " << s.points.size() << "\n";
    out << "arcs = " << s.arcs.size() << "\n";
    out << "pieces = " << s.pieces.size() << "\n";
    out << "chi = " << s.euler() << "\n";
    out << "components = " << comps.size() << "\n";
    for (size_t i = 0; i < comps.size(); ++i) out << "component[" << i << "] = " << component_str(comps[i]) << "\n";
    out << "cross_check = " << (crossed ? "pass" : "FAIL") << "\n";
  }
  ctx.rc = crossed ? 0 : 1;
}

Cochain pick_class(const FacePoset& p, const std::string& cls) {
  if (cls == "trivial") return Cochain(p, 1);
  if (cls.rfind("rep-", 0) == 0) {
    size_t idx = 0;
    try {
      idx = std::stoul(cls.substr(4));
    } catch (const std::logic_error&) {
      fail(ErrorCode::FormatError, "bad class name: " + cls);
    }
    const CohomologyBasis basis = h1(p);
    if (idx >= basis.representatives.size())
      fail(ErrorCode::WrongH1Dimension, "class rep-" + std::to_string(idx) + " does not exist, h1_dim = " +
                                            std::to_string(basis.h1_dim));
    return basis.representatives[idx];
  }
  fail(ErrorCode::FormatError, "class must be 'trivial' or 'rep-<i>'");
}

void cmd_spectrum(Ctx& ctx, const std::string& path, const std::string& cls, const SpectrumOptions& opts) {
  const FacePoset p = load_poset(path, *ctx.in);
  const ClassSpectrum spec = class_spectrum(p, pick_class(p, cls), opts);
  if (ctx.structured) {
    ordered_json j;
    j["class"] = cls;
    j["representative"] = io::write_cochain(spec.representative);
    j["count"] = spec.count;
    j["mean_chi"] = to_string(spec.mean_chi);
    j["mean_subcomplex_chi"] = to_string(spec.mean_subcomplex_chi);
    j["min_chi"] = spec.min_chi;
    j["max_chi"] = spec.max_chi;
    j["witness"] = io::write_cochain(spec.witness_max);
    j["witness_chi"] = spec.max_chi;
    j["cross_checked"] = spec.all_cross_checked;
    j["every_surface_has_nonorientable"] = spec.every_surface_has_nonorientable;
    j["sphere_component_present"] = spec.any_sphere_component;
    j["nonorientable_chis"] = spec.nonorientable_chis;
    ordered_json entries = ordered_json::array();
    for (const auto& e : spec.entries) {
      ordered_json je;
      je["count"] = e.count;
      je["chi"] = e.chi;
      je["components"] = ordered_json::array();
      for (const auto& c : e.components) je["components"].push_back(component_json(c));
      entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    ctx.emit(j);
  } else {
    auto& out = *ctx.out;
    out << "class = " << cls << "\n";
    out << "representative = " << io::write_cochain(spec.representative) << "\n";
    out << "count = " << spec.count << "\n";
    out << "mean_chi = " << to_string(spec.mean_chi) << "\n";
    out << "mean_subcomplex_chi = " << to_string(spec.mean_subcomplex_chi) << "\n";
    out << "min_chi = " << spec.min_chi << "\n";
    out << "max_chi = " << spec.max_chi << "\n";
    out << "witness = " << io::write_cochain(spec.witness_max) << "\n";
    out << "witness_chi = " << spec.max_chi << "\n";
    out << "cross_checked = " << (spec.all_cross_checked ? "pass" : "FAIL") << "\n";
    out << "every_surface_has_nonorientable = " << (spec.every_surface_has_nonorientable ? "true" : "false")
        << "\n";
    out << "sphere_component_present = " << (spec.any_sphere_component ? "true" : "false") << "\n";
    out << "nonorientable_chis = " << int_list_str(spec.nonorientable_chis) << "\n";
    out << "entries:\n";
    for (const auto& e : spec.entries) {
      out << "  count=" << e.count << " chi=" << e.chi << " components=[";
      for (size_t i = 0; i < e.components.size(); ++i) {
        if (i) out << "; ";
        out << component_str(e.components[i]);
      }
      out << "]\n";
    }
  }
  ctx.rc = spec.all_cross_checked ? 0 : 1;
}

void cmd_verify_average(Ctx& ctx, const std::string& path, const SpectrumOptions& opts) {
  const FacePoset p = load_poset(path, *ctx.in);
  const AverageReport rep = verify_lemma(p, std::nullopt, opts);
  if (ctx.structured) {
    ordered_json j;
    j["f"] = rep.f.counts;
    j["average_formula"] = to_string(rep.formula_value);
    j["chi"] = rep.complex_chi;
    j["closed"] = rep.closed;
    j["closed3_fvector"] = rep.closed3_fvector;
    j["closed_3_manifold"] = rep.is_closed_3_manifold;
    if (rep.closed3_value) j["average_closed3"] = to_string(*rep.closed3_value);
    j["h1_dim"] = rep.h1_dim;
    ordered_json classes = ordered_json::array();
    for (const auto& c : rep.classes) {
      ordered_json jc;
      jc["representative"] = io::write_cochain(c.representative);
      jc["count"] = c.count;
      jc["mean_subcomplex_chi"] = to_string(c.mean_subcomplex_chi);
      jc["subcomplex_mean_ok"] = c.subcomplex_mean_ok;
      if (c.mean_surface_chi) {
        jc["mean_surface_chi"] = to_string(*c.mean_surface_chi);
        jc["surface_mean_ok"] = *c.surface_mean_ok;
        jc["cross_check_failures"] = c.cross_check_failures;
      }
      jc["sigma_class"] = c.is_sigma_class;
      classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    j["pass"] = rep.pass;
    ctx.emit(j);
  } else {
    auto& out = *ctx.out;
    out << "f = " << rep.f.str() << "\n";
    out << "average_formula = " << to_string(rep.formula_value) << "\n";
    out << "chi = " << rep.complex_chi << "\n";
    out << "closed = " << (rep.closed ? "true" : "false") << "\n";
    out << "closed3_fvector = " << (rep.closed3_fvector ? "true" : "false") << "\n";
    out << "closed_3_manifold = " << (rep.is_closed_3_manifold ? "true" : "false") << "\n";
    if (rep.closed3_value) out << "average_closed3 = " << to_string(*rep.closed3_value) << "\n";
    out << "h1_dim = " << rep.h1_dim << "\n";
    for (size_t i = 0; i < rep.classes.size(); ++i) {
      const auto& c = rep.classes[i];
      out << "class[" << i << "]: count=" << c.count << " mean_subcomplex=" << to_string(c.mean_subcomplex_chi)
          << " ok=" << (c.subcomplex_mean_ok ? "true" : "false");
      if (c.mean_surface_chi)
        out << " mean_surface=" << to_string(*c.mean_surface_chi)
            << " ok=" << (*c.surface_mean_ok ? "true" : "false") << " cross_check_failures=" << c.cross_check_failures;
      out << (c.is_sigma_class ? " sigma=true" : "") << "\n";
    }
    out << "result = " << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  ctx.rc = rep.pass ? 0 : 1;
}

void cmd_certify(Ctx& ctx, const std::string& path, long long k, long long q, const SpectrumOptions& opts) {
  const FacePoset p = load_poset(path, *ctx.in);
  const LensCertificate cert = certify_lens(p, k, q, opts);
  if (ctx.structured) {
    ordered_json j;
    j["tool"] = std::string(kToolName) + " " + cert.tool_version;
    j["complex"] = cert.complex_hash;
    j["k"] = cert.k;
    j["q"] = cert.q;
    j["r"] = cert.r;
    j["bound"] = cert.bound;
    j["f3"] = cert.f3;
    j["bound_met"] = cert.bound_met;
    j["bound_respected"] = cert.bound_respected;
    j["class_size"] = cert.class_size;
    j["class_mean_chi"] = to_string(cert.class_mean_chi);
    j["witness"] = io::write_cochain(cert.witness);
    j["witness_chi"] = cert.witness_chi;
    j["witness_at_least_mean"] = cert.witness_at_least_mean;
    j["every_surface_nonorientable"] = cert.every_surface_nonorientable;
    j["sphere_component_present"] = cert.sphere_component_present;
    j["nonorientable_chis"] = cert.nonorientable_chis;
    j["bredon_wood_ok"] = cert.bredon_wood_ok;
    j["note"] = cert.note;
    j["pass"] = cert.checks_pass;
    ctx.emit(j);
  } else {
    auto& out = *ctx.out;
    out << "tool = " << kToolName << " " << cert.tool_version << "\n";
    out << "complex = " << cert.complex_hash << "\n";
    out << "k = " << cert.k << "\n";
    out << "q = " << cert.q << "\n";
    out << "r = " << cert.r << "\n";
    out << "bound = " << cert.bound << "\n";
    out << "f3 = " << cert.f3 << "\n";
    out << "bound_met = " << (cert.bound_met ? "true" : "false") << "\n";
    out << "bound_respected = " << (cert.bound_respected ? "true" : "false") << "\n";
    out << "class_size = " << cert.class_size << "\n";
    out << "class_mean_chi = " << to_string(cert.class_mean_chi) << "\n";
    out << "witness = " << io::write_cochain(cert.witness) << "\n";
    out << "witness_chi = " << cert.witness_chi << "\n";
    out << "witness_at_least_mean = " << (cert.witness_at_least_mean ? "true" : "false") << "\n";
    out << "every_surface_nonorientable = " << (cert.every_surface_nonorientable ? "true" : "false") << "\n";
    out << "sphere_component_present = " << (cert.sphere_component_present ? "true" : "false") << "\n";
    out << "nonorientable_chis = " << int_list_str(cert.nonorientable_chis) << "\n";
    out << "bredon_wood_ok = " << (cert.bredon_wood_ok ? "true" : "false") << "\n";
    out << "note = " << cert.note << "\n";
    out << "result = " << (cert.checks_pass ? "PASS" : "FAIL") << "\n";
  }
  ctx.rc = cert.checks_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"discrete normal surfaces of simplicial posets"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  Ctx ctx{&in, &out, false, 0};
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option_function<std::string>(
           "--format", [&ctx](const std::string& v) { ctx.structured = v == "structured"; },
           "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->default_str("text");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a complex and print it");
  gen->require_subcommand(1);
  {
    auto* lens = gen->add_subcommand("lens", "standard lens space crystallization");
    auto p = std::make_shared<long long>(0);
    auto q = std::make_shared<long long>(1);
    lens->add_option("--p", *p, "order of the cyclic group")->required();
    lens->add_option("--q", *q, "twist parameter")->required();
    lens->callback([&ctx, p, q] { *ctx.out << io::write_poset(lens_standard(*p, *q)); });

    auto* cyc = gen->add_subcommand("cyclic", "boundary of a cyclic 4-polytope");
    auto n = std::make_shared<int>(0);
    cyc->add_option("--n", *n, "number of vertices")->required();
    cyc->callback([&ctx, n] { *ctx.out << io::write_poset(cyclic_polytope_boundary(*n)); });

    auto* sph = gen->add_subcommand("sphere", "small 3-sphere complexes");
    auto tets = std::make_shared<int>(2);
    sph->add_option("--tets", *tets, "tetrahedron count (2, 4 or 5)")->check(CLI::IsMember({2, 4, 5}));
    sph->callback([&ctx, tets] {
      if (*tets == 2)
        *ctx.out << io::write_poset(two_tet_sphere());
      else if (*tets == 4)
        *ctx.out << io::write_poset(join(cycle(2), cycle(2)));
      else
        *ctx.out << io::write_poset(four_simplex_boundary());
    });
  }

  auto file_arg = std::make_shared<std::string>("-");
  auto cocycle_arg = std::make_shared<std::string>();
  auto class_arg = std::make_shared<std::string>("trivial");
  auto k_arg = std::make_shared<long long>(0);
  auto q_arg = std::make_shared<long long>(0);
  auto opts = std::make_shared<SpectrumOptions>();

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", *file_arg, "poset file, or - for stdin")->required();
  };
  auto add_opts = [&](CLI::App* cmd) {
    cmd->add_option("--budget", opts->budget, "enumeration budget");
    cmd->add_option("--workers", opts->workers, "worker threads")->check(CLI::Range(1, 64));
  };

  auto* val = app.add_subcommand("validate", "check the simplicial poset axioms");
  add_file(val);
  add_format(val);
  val->callback([&] { cmd_validate(ctx, *file_arg); });

  auto* info = app.add_subcommand("info", "f-vector and basic flags");
  add_file(info);
  add_format(info);
  info->callback([&] { cmd_info(ctx, *file_arg); });

  auto* h1cmd = app.add_subcommand("h1", "mod-2 first cohomology");
  add_file(h1cmd);
  add_format(h1cmd);
  h1cmd->callback([&] { cmd_h1(ctx, *file_arg); });

  auto* surf = app.add_subcommand("surface", "cut surface of a cocycle");
  add_file(surf);
  surf->add_option("--cocycle", *cocycle_arg, "cochain text, hex bits, or @file")->required();
  add_format(surf);
  surf->callback([&] { cmd_surface(ctx, *file_arg, *cocycle_arg); });

  auto* spectrum = app.add_subcommand("spectrum", "enumerate one cohomology class");
  add_file(spectrum);
  spectrum->add_option("--class", *class_arg, "trivial or rep-<i>");
  add_opts(spectrum);
  add_format(spectrum);
  spectrum->callback([&] { cmd_spectrum(ctx, *file_arg, *class_arg, *opts); });

  auto* verify = app.add_subcommand("verify-average", "check the exact mean identities");
  add_file(verify);
  add_opts(verify);
  add_format(verify);
  verify->callback([&] { cmd_verify_average(ctx, *file_arg, *opts); });

  auto* certify = app.add_subcommand("certify-lens", "minimal crystallization certificate");
  add_file(certify);
  certify->add_option("--k", *k_arg, "lens space L(2k, q)")->required();
  certify->add_option("--q", *q_arg, "lens space L(2k, q)")->required();
  add_opts(certify);
  add_format(certify);
  certify->callback([&] { cmd_certify(ctx, *file_arg, *k_arg, *q_arg, *opts); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return ctx.rc;
}

}  // namespace dnsurf
