#include "hartogs/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "hartogs/companion.hpp"
#include "hartogs/errors.hpp"
#include "hartogs/format.hpp"
#include "hartogs/grid.hpp"
#include "hartogs/oracles.hpp"

namespace hartogs::scenario {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

cplx to_cplx(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return cplx(j[0].get<double>(), j[1].get<double>());
  fail(errc::config_error, "expected a complex scalar");
}

int severity_rank(int code) {
  switch (code) {
    case kExitPass: return 0;
    case kExitCheckFailed: return 1;
    case kExitNumericFailure: return 2;
    default: return 3;  // config errors dominate
  }
}

int worse(int a, int b) { return severity_rank(a) >= severity_rank(b) ? a : b; }

bool is_config_error(errc code) {
  return code == errc::config_error || code == errc::unknown_id ||
         code == errc::missing_metadata || code == errc::invalid_input;
}

ordered_json cplx_json(cplx v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json cpoint_json(const CPoint& p) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : p.entries())
    entries.push_back(ordered_json::array({e.index, e.value.real(), e.value.imag()}));
  ordered_json out;
  out["entries"] = entries;
  if (p.ambient_dim()) out["ambient"] = *p.ambient_dim();
  return out;
}

}  // namespace

CPoint parse_cpoint(const json& j) {
  if (j.is_array()) {
    std::vector<cplx> coords;
    for (const auto& e : j) coords.push_back(to_cplx(e));
    return CPoint(coords);
  }
  if (j.is_object() && j.contains("entries")) {
    std::optional<std::size_t> ambient;
    if (j.contains("ambient") && j["ambient"].is_number())
      ambient = j["ambient"].get<std::size_t>();
    CPoint p = CPoint::zero(ambient);
    for (const auto& e : j["entries"]) {
      if (!e.is_array() || e.size() != 2) fail(errc::config_error, "bad sparse point entry");
      p.set(e[0].get<std::size_t>(), to_cplx(e[1]));
    }
    return p;
  }
  fail(errc::config_error, "expected a point (dense list or {entries, ambient})");
}

Box parse_box(const json& j) {
  if (!j.is_array() || j.empty()) fail(errc::config_error, "expected a box: list of [lo, hi]");
  Box b;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) fail(errc::config_error, "box axis must be [lo, hi]");
    b.lo.push_back(e[0].get<double>());
    b.hi.push_back(e[1].get<double>());
  }
  return b;
}

DomainSpec parse_domain(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ball") return DomainSpec::ball(parse_cpoint(j.at("center")), j.at("radius").get<double>());
  if (kind == "polydisc")
    return DomainSpec::polydisc(parse_cpoint(j.at("center")), j.at("radius").get<double>(),
                                j.at("dim").get<std::size_t>());
  if (kind == "halfspace")
    return DomainSpec::halfspace(parse_cpoint(j.at("functional")), j.at("threshold").get<double>(),
                                 parse_box(j.at("box")));
  if (kind == "norm-functional")
    return DomainSpec::norm_functional(parse_cpoint(j.at("functional")), j.at("alpha").get<double>(),
                                       parse_box(j.at("box")));
  if (kind == "sequence-omega-rho") {
    std::map<std::size_t, double> overrides;
    if (j.contains("rho_overrides"))
      for (const auto& [k, v] : j["rho_overrides"].items())
        overrides[std::stoul(k)] = v.get<double>();
    return DomainSpec::sequence_omega_rho(j.value("rho", 1.0), overrides);
  }
  if (kind == "union") {
    std::vector<DomainSpec> members;
    for (const auto& m : j.at("members")) members.push_back(parse_domain(m));
    return DomainSpec::union_of(std::move(members));
  }
  if (kind == "difference")
    return DomainSpec::difference(parse_domain(j.at("base")), parse_compact(j.at("compact")));
  fail(errc::config_error, "unknown domain kind '" + kind + "'");
}

CompactSpec parse_compact(const json& j, const DomainSpec* omega_for_clip) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "empty") return CompactSpec::make_empty();
  if (kind == "closed-ball")
    return CompactSpec::closed_ball(parse_cpoint(j.at("center")), j.at("radius").get<double>());
  if (kind == "sphere")
    return CompactSpec::sphere(parse_cpoint(j.at("center")), j.at("radius").get<double>(),
                               j.value("thickness", 0.1));
  if (kind == "finite-points") {
    std::vector<CPoint> pts;
    for (const auto& p : j.at("points")) pts.push_back(parse_cpoint(p));
    return CompactSpec::finite_points(std::move(pts), j.value("snap_tol", 1e-9));
  }
  if (kind == "parametric-curve") {
    std::vector<std::vector<cplx>> coeffs;
    for (const auto& c : j.at("coefficients")) {
      std::vector<cplx> poly;
      for (const auto& e : c) poly.push_back(to_cplx(e));
      coeffs.push_back(std::move(poly));
    }
    std::optional<DomainSpec> clip;
    if (j.value("clip_to_omega", false)) {
      if (!omega_for_clip) fail(errc::config_error, "clip_to_omega without an Omega in scope");
      clip = *omega_for_clip;
    }
    return CompactSpec::parametric_curve(std::move(coeffs), std::move(clip), parse_box(j.at("box")),
                                         j.value("snap_tol", 1e-9));
  }
  if (kind == "moment-curve") {
    std::vector<cplx> a_values;
    for (const auto& a : j.at("a_values")) a_values.push_back(to_cplx(a));
    return CompactSpec::moment_curve(std::move(a_values), j.at("length").get<std::size_t>());
  }
  if (kind == "pointwise-bound") {
    std::map<std::size_t, double> overrides;
    if (j.contains("rho_overrides"))
      for (const auto& [k, v] : j["rho_overrides"].items())
        overrides[std::stoul(k)] = v.get<double>();
    return CompactSpec::pointwise_bound(j.value("rho", 1.0), overrides);
  }
  fail(errc::config_error, "unknown compact kind '" + kind + "'");
}

PlaneSlice parse_plane(const json& j, const CPoint& base) {
  return PlaneSlice(j.contains("base") ? parse_cpoint(j["base"]) : base,
                    parse_cpoint(j.at("dir1")), parse_cpoint(j.at("dir2")));
}

ordered_json report_to_json(const checks::CheckReport& rep) {
  ordered_json out;
  out["check_id"] = rep.check_id;
  out["pass"] = rep.pass;
  out["worst_violation"] = rep.worst_violation;
  out["tolerance"] = rep.tolerance;
  out["witness"] = cpoint_json(rep.witness);
  out["samples_used"] = rep.samples_used;
  ordered_json metrics;
  for (const auto& [k, v] : rep.metrics) metrics[k] = v;
  out["metrics"] = metrics;
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

namespace {

SeminormSpec parse_seminorm(const json& j) {
  SeminormSpec p;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "max-norm") p.kind = SeminormSpec::Kind::max_norm;
  else if (kind == "coordinate-modulus") p.kind = SeminormSpec::Kind::coordinate_modulus;
  else if (kind == "norm-with-functional") p.kind = SeminormSpec::Kind::norm_with_functional;
  else fail(errc::config_error, "unknown seminorm kind '" + kind + "'");
  p.index = j.value("index", std::size_t(0));
  p.phi_index = j.value("phi_index", std::size_t(1));
  return p;
}

checks::PlanarSet parse_planar_set(const json& j) {
  checks::PlanarSet d;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "disc") {
    d.kind = checks::PlanarSet::Kind::disc;
    d.center = to_cplx(j.at("center"));
    d.param = j.at("radius").get<double>();
  } else if (kind == "halfplane") {
    d.kind = checks::PlanarSet::Kind::halfplane;
    d.center = to_cplx(j.at("normal"));
    d.param = j.value("offset", 0.0);
  } else {
    fail(errc::config_error, "unknown planar set kind '" + kind + "'");
  }
  return d;
}

PlanarRegion parse_region(const json& j) {
  std::vector<Disc> discs;
  for (const auto& d : j) {
    if (!d.is_array() || d.size() != 3) fail(errc::config_error, "region disc must be [re, im, r]");
    discs.push_back(Disc{cplx(d[0].get<double>(), d[1].get<double>()), d[2].get<double>()});
  }
  return PlanarRegion(discs);
}

struct Context {
  json config;
  std::string id;
  DomainSpec omega = DomainSpec::sequence_omega_rho(1.0);
  CompactSpec compact;
  HoloFn fn;
  checks::CheckOptions copts;
  std::optional<GridComplex> grid;
  std::filesystem::path scenario_out;
  int status = kExitPass;

  GridComplex& ensure_grid() {
    if (!grid) {
      if (!config.contains("grid")) fail(errc::config_error, "scenario needs a grid section");
      const Box box = parse_box(config["grid"].at("box"));
      // default resolution: 201 cells per axis on planar grids, 41 on 4d ones
      const std::size_t fallback = box.dim() <= 2 ? 201 : 41;
      grid.emplace(build_grid(compact, omega, box,
                              config["grid"].value("resolution", fallback)));
    }
    return *grid;
  }
};

Context build_context(const json& config, const RunOverrides& overrides) {
  Context ctx;
  ctx.config = config;
  if (config.value("spec_version", 0) != 1)
    fail(errc::config_error, "unsupported or missing spec_version (expected 1)");
  ctx.id = config.at("scenario_id").get<std::string>();
  ctx.omega = parse_domain(config.at("omega"));
  ctx.compact = config.contains("compact") ? parse_compact(config["compact"], &ctx.omega)
                                           : CompactSpec::make_empty();

  const json& fj = config.at("function");
  HoloFn g = catalog_fn(fj.at("id").get<std::string>(), fj.value("params", json::object()));
  if (fj.value("restricted", false) && !ctx.compact.is_empty_kind())
    ctx.fn = restrict_fn(g, ctx.compact);
  else
    ctx.fn = g;
  if (!ctx.fn.domain) ctx.fn.domain = ctx.omega;
  if (!ctx.fn.ambient && ctx.omega.ambient_dim()) ctx.fn.ambient = ctx.omega.ambient_dim();

  ctx.copts.seed = overrides.seed ? *overrides.seed : config.value("seed", std::uint64_t(42));
  if (config.contains("tolerances")) {
    const json& t = config["tolerances"];
    ctx.copts.companion.quad.tol = t.value("quadrature", 1e-10);
    ctx.copts.identity_tol = t.value("identity", 1e-8);
    ctx.copts.image_threshold = t.value("image", 0.05);
  }
  if (overrides.quad_tol) ctx.copts.companion.quad.tol = *overrides.quad_tol;
  if (overrides.node_cap) ctx.copts.companion.quad.node_cap = *overrides.node_cap;
  return ctx;
}

CompanionResult evaluate_by_method(Context& ctx, const std::string& method, const CPoint& x,
                                   const json& task) {
  const CompanionOptions& opts = ctx.copts.companion;
  if (method == "1d") return companion_1d(ctx.fn, ctx.compact, ctx.omega, x[0], opts);
  if (method == "nd") {
    std::optional<CPoint> u;
    std::optional<PlanarRegion> G;
    if (task.contains("u")) u = parse_cpoint(task["u"]);
    if (task.contains("G")) G = parse_region(task["G"]);
    return companion_nd(ctx.fn, ctx.compact, ctx.omega, x, u, G, opts);
  }
  if (method == "outer")
    return companion_outer(ctx.fn, ctx.compact, ctx.omega, parse_cpoint(task.at("u")), x, opts);
  if (method == "finitely-open")
    return companion_finitely_open(ctx.fn, ctx.compact, ctx.omega, x,
                                   parse_plane(task.at("plane"), x), opts);
  fail(errc::config_error, "unknown evaluate method '" + method + "'");
}

ordered_json run_evaluate_point(Context& ctx, const json& task) {
  ordered_json entry;
  const std::string method = task.value("method", std::string("nd"));
  entry["task"] = "evaluate-point";
  entry["method"] = method;
  const double tol = task.value("tol", ctx.copts.identity_tol);
  ordered_json rows = ordered_json::array();
  bool all_ok = true;
  std::size_t idx = 0;
  for (const auto& pj : task.at("points")) {
    const CPoint x = parse_cpoint(pj);
    const CompanionResult res = evaluate_by_method(ctx, method, x, task);
    ordered_json row;
    row["point"] = cpoint_json(x);
    ordered_json vals = ordered_json::array();
    for (cplx v : res.value) vals.push_back(cplx_json(v));
    row["value"] = vals;
    row["est_error"] = res.quadrature.est_error;
    row["nodes"] = res.quadrature.nodes_used;
    row["converged"] = res.quadrature.converged;
    if (task.contains("expect")) {
      const cplx expect = to_cplx(task["expect"].at(idx));
      const double err = std::abs(res.scalar() - expect);
      row["expect"] = cplx_json(expect);
      row["abs_err"] = err;
      if (err > tol) {
        all_ok = false;
        row["pass"] = false;
      } else {
        row["pass"] = true;
      }
    }
    rows.push_back(row);
    ++idx;
  }
  entry["points"] = rows;
  entry["pass"] = all_ok;
  if (!all_ok) ctx.status = worse(ctx.status, kExitCheckFailed);
  return entry;
}

void write_grid_csv(Context& ctx, const json& task, const std::filesystem::path& path) {
  if (ctx.fn.codomain != 1)
    fail(errc::config_error, "evaluate-grid expects a scalar-valued function");
  const std::size_t coord = task.value("coordinate", std::size_t(0));
  const CPoint base = task.contains("base") ? parse_cpoint(task["base"])
                                            : CPoint::zero(ctx.omega.ambient_dim());
  const auto re_range = task.at("re_range");
  const auto im_range = task.at("im_range");
  const std::size_t res = task.value("resolution", std::size_t(21));
  const HoloFn* ref = ctx.fn.reference();

  std::ofstream os(path);
  if (!os) fail(errc::invalid_input, "cannot open grid output " + path.string());
  os << "re,im,companion_re,companion_im,reference_re,reference_im,abs_err,status\n";
  for (std::size_t i = 0; i < res; ++i) {
    for (std::size_t j = 0; j < res; ++j) {
      const double re = re_range[0].get<double>() +
                        (re_range[1].get<double>() - re_range[0].get<double>()) * double(i) /
                            double(res - 1);
      const double im = im_range[0].get<double>() +
                        (im_range[1].get<double>() - im_range[0].get<double>()) * double(j) /
                            double(res - 1);
      CPoint x = base;
      x.set(coord, cplx(re, im));
      os << format_double(re) << "," << format_double(im) << ",";
      if (!ctx.omega.contains(x)) {
        os << ",,,,,outside\n";
        continue;
      }
      CompanionResult cres;
      try {
        cres = evaluate_by_method(ctx, task.value("method", std::string("nd")), x, task);
      } catch (const ToolkitError& e) {
        if (is_config_error(e.code())) throw;
        os << ",,,,,failed\n";
        continue;
      }
      const cplx v = cres.scalar();
      os << format_double(v.real()) << "," << format_double(v.imag()) << ",";
      if (ref) {
        const cplx r = ref->eval(x)[0];
        os << format_double(r.real()) << "," << format_double(r.imag()) << ","
           << format_double(std::abs(v - r)) << ",ok\n";
      } else {
        os << ",,,noref\n";
      }
    }
  }
}

ordered_json run_topology_report(Context& ctx, const json& task) {
  ordered_json entry;
  entry["task"] = "topology-report";
  ordered_json per_res = ordered_json::array();
  std::vector<std::size_t> resolutions;
  if (task.contains("resolutions"))
    for (const auto& r : task["resolutions"]) resolutions.push_back(r.get<std::size_t>());
  else
    resolutions.push_back(ctx.config.at("grid").at("resolution").get<std::size_t>());

  bool all_ok = true;
  for (std::size_t res : resolutions) {
    const GridComplex grid = build_grid(ctx.compact, ctx.omega,
                                        parse_box(ctx.config.at("grid").at("box")), res);
    ordered_json r;
    r["resolution"] = res;
    const ComponentReport omega_comp = components(grid, GridRegion::omega);
    const ComponentReport shell_comp = components(grid, GridRegion::omega_minus_k);
    const ComponentReport compl_comp = components(grid, GridRegion::complement_of_k);
    r["omega_components"] = omega_comp.count();
    r["omega_minus_k_components"] = shell_comp.count();
    r["complement_components"] = compl_comp.count();
    r["complement_unbounded_id"] =
        compl_comp.unbounded_component_id ? ordered_json(*compl_comp.unbounded_component_id)
                                          : ordered_json(nullptr);
    const EquivalenceReport eq = connectedness_report(grid);
    ordered_json ej;
    ej["omega_minus_k_connected"] = eq.omega_minus_k_connected;
    ej["complement_connected"] = eq.complement_connected;
    ej["omega_connected"] = eq.omega_connected;
    ej["per_component_complements"] = eq.per_component_complements;
    ej["per_component_shells"] = eq.per_component_shells;
    ej["eq1"] = eq.eq1_holds;
    ej["eq2"] = eq.eq2_holds;
    ej["eq3"] = eq.eq3_holds;
    ej["all_hold"] = eq.all_hold;
    r["equivalences"] = ej;
    if (!eq.all_hold) all_ok = false;

    if (task.contains("expect_complement_components") &&
        compl_comp.count() != task["expect_complement_components"].get<std::size_t>())
      all_ok = false;

    if (task.contains("coincidence_probes")) {
      ordered_json probes = ordered_json::array();
      const checks::CoincidenceClassifier classifier(grid);
      for (const auto& probe : task["coincidence_probes"]) {
        const CPoint x = parse_cpoint(probe.at("point"));
        const auto flat = grid.locate(x);
        bool got = false;
        if (flat) got = classifier.classify(*flat);
        ordered_json pj;
        pj["point"] = cpoint_json(x);
        pj["coincident"] = got;
        if (probe.contains("expect")) {
          const bool want = probe["expect"].get<bool>();
          pj["expect"] = want;
          if (want != got) all_ok = false;
        }
        probes.push_back(pj);
      }
      r["coincidence_probes"] = probes;
    }
    per_res.push_back(r);

    if (task.contains("dump_cells")) {
      std::ofstream os(ctx.scenario_out / task["dump_cells"].get<std::string>());
      dump_cells_csv(os, grid, compl_comp);
    }
  }
  entry["resolutions"] = per_res;
  entry["pass"] = all_ok;
  if (!all_ok) ctx.status = worse(ctx.status, kExitCheckFailed);
  return entry;
}

ordered_json run_check_task(Context& ctx, const json& task) {
  const std::string name = task.at("task").get<std::string>();
  checks::CheckReport rep;

  if (name == "verify-coincidence") {
    rep = checks::verify_coincidence(ctx.fn, ctx.compact, ctx.omega, ctx.ensure_grid(),
                                     task.value("samples", std::size_t(100)), ctx.copts);
  } else if (name == "verify-range") {
    std::vector<std::size_t> sizes;
    for (const auto& s : task.value("sizes", json::array({1000, 4000, 16000})))
      sizes.push_back(s.get<std::size_t>());
    std::optional<checks::PlanarSet> D;
    if (task.contains("inertia")) D = parse_planar_set(task["inertia"]);
    rep = checks::verify_range_and_inertia(ctx.fn, ctx.compact, ctx.omega, sizes,
                                           task.value("probes", std::size_t(20)), D, ctx.copts);
  } else if (name == "verify-excision") {
    std::vector<std::size_t> sizes;
    for (const auto& s : task.value("sizes", json::array({1000, 4000, 16000})))
      sizes.push_back(s.get<std::size_t>());
    HoloFn g = ctx.fn.extension ? *ctx.fn.extension : ctx.fn;
    rep = checks::verify_excision(g, ctx.compact, ctx.omega, sizes, ctx.copts);
  } else if (name == "verify-roundtrips") {
    std::optional<checks::OperatorBoundGeometry> geo;
    if (task.contains("operator_bound")) {
      const json& gj = task["operator_bound"];
      checks::OperatorBoundGeometry g{
          parse_plane(gj.at("plane"), CPoint::zero(ctx.omega.ambient_dim())),
          cplx(0.0, 0.0),
          gj.at("k0_radius").get<double>(),
          gj.at("omega0_radius").get<double>(),
          gj.value("m_points", std::size_t(50)),
          gj.value("shell_samples", std::size_t(4000))};
      geo = g;
    }
    // the round trip needs a map holomorphic on all of Omega: the extension
    // when the scenario restricted one, else the known companion
    const HoloFn* g = ctx.fn.reference();
    rep = checks::verify_roundtrips(g ? *g : ctx.fn, ctx.compact, ctx.omega, ctx.ensure_grid(),
                                    task.value("samples", std::size_t(50)), geo, ctx.copts);
  } else if (name == "verify-composition") {
    const json& oj = task.at("outer");
    const HoloFn outer = catalog_fn(oj.at("id").get<std::string>(),
                                    oj.value("params", json::object()));
    rep = checks::verify_composition(ctx.fn, outer, ctx.compact, ctx.omega,
                                     task.value("samples", std::size_t(20)), ctx.copts);
  } else if (name == "verify-boundary") {
    std::vector<PlaneSlice> slices;
    for (const auto& s : task.at("slices"))
      slices.push_back(parse_plane(s, CPoint::zero(ctx.omega.ambient_dim())));
    std::optional<SeminormSpec> p;
    if (task.contains("seminorm")) p = parse_seminorm(task["seminorm"]);
    rep = checks::verify_boundary(ctx.fn, ctx.omega, slices,
                                  task.value("samples", std::size_t(2000)), ctx.copts, p);
  } else if (name == "verify-max-min") {
    rep = checks::verify_max_min(ctx.fn, parse_seminorm(task.at("seminorm")), ctx.omega,
                                 parse_cpoint(task.at("c")),
                                 task.value("samples", std::size_t(10000)), ctx.copts);
  } else if (name == "verify-identity") {
    const json& fj = task.at("f2");
    HoloFn f2 = catalog_fn(fj.at("id").get<std::string>(), fj.value("params", json::object()));
    rep = checks::verify_identity(ctx.fn, f2, ctx.omega, parse_cpoint(task.at("c_center")),
                                  task.at("c_radius").get<double>(),
                                  task.value("samples", std::size_t(200)), ctx.copts);
  } else if (name == "verify-level-sets") {
    rep = checks::verify_level_sets(ctx.fn, ctx.omega,
                                    parse_plane(task.at("slice"),
                                                CPoint::zero(ctx.omega.ambient_dim())),
                                    task.contains("value") ? to_cplx(task["value"]) : cplx(0.0),
                                    ctx.copts);
  } else {
    fail(errc::config_error, "unknown task '" + name + "'");
  }

  ordered_json entry = report_to_json(rep);
  entry["task"] = name;
  if (!rep.pass) ctx.status = worse(ctx.status, kExitCheckFailed);
  return entry;
}

}  // namespace

int run_scenario(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                 const RunOverrides& overrides) {
  json config;
  Context ctx;
  try {
    std::ifstream is(config_path);
    if (!is) fail(errc::config_error, "cannot open config " + config_path.string());
    config = json::parse(is, nullptr, true, true);
    ctx = build_context(config, overrides);
  } catch (const ToolkitError& e) {
    if (is_config_error(e.code())) return kExitConfigError;
    return kExitNumericFailure;
  } catch (const json::exception&) {
    return kExitConfigError;
  }

  ctx.scenario_out = out_dir / ctx.id;
  std::filesystem::create_directories(ctx.scenario_out);

  ordered_json report;
  report["scenario_id"] = ctx.id;
  report["spec_version"] = 1;
  report["seed"] = ctx.copts.seed;
  ordered_json tasks = ordered_json::array();

  try {
    for (const auto& task : config.value("tasks", json::array())) {
      const std::string name = task.at("task").get<std::string>();
      if (name == "evaluate-point") {
        tasks.push_back(run_evaluate_point(ctx, task));
      } else if (name == "evaluate-grid") {
        const std::string out_name = task.value("out", std::string("grid.csv"));
        write_grid_csv(ctx, task, ctx.scenario_out / out_name);
        ordered_json entry;
        entry["task"] = "evaluate-grid";
        entry["out"] = out_name;
        tasks.push_back(entry);
      } else if (name == "topology-report") {
        tasks.push_back(run_topology_report(ctx, task));
      } else {
        tasks.push_back(run_check_task(ctx, task));
      }
    }
  } catch (const ToolkitError& e) {
    if (is_config_error(e.code())) return kExitConfigError;
    ordered_json entry;
    entry["error"] = e.what();
    tasks.push_back(entry);
    ctx.status = worse(ctx.status, kExitNumericFailure);
  }

  report["tasks"] = tasks;
  report["exit_code"] = ctx.status;
  report["status"] = ctx.status == kExitPass          ? "pass"
                     : ctx.status == kExitCheckFailed ? "check_failed"
                                                      : "numeric_failure";
  std::ofstream os(ctx.scenario_out / "report.json");
  os << report.dump(2) << "\n";
  return ctx.status;
}

int verify_all(const std::filesystem::path& suite_dir, const std::filesystem::path& out_dir,
               const RunOverrides& overrides) {
  std::vector<std::filesystem::path> configs;
  if (std::filesystem::is_directory(suite_dir)) {
    for (const auto& e : std::filesystem::directory_iterator(suite_dir))
      if (e.path().extension() == ".json") configs.push_back(e.path());
  }
  if (configs.empty()) return kExitConfigError;
  std::sort(configs.begin(), configs.end());

  std::filesystem::create_directories(out_dir);
  std::ofstream summary(out_dir / "summary.csv");
  summary << "scenario_id,check_id,pass,worst_violation,witness\n";

  int status = kExitPass;
  for (const auto& path : configs) {
    const int code = run_scenario(path, out_dir, overrides);
    status = worse(status, code);

    const std::string id = path.stem().string();
    std::string scenario_id = id;
    bool wrote_rows = false;
    // pull per-check rows from the report when it exists
    std::ifstream is(out_dir / id / "report.json");
    if (is) {
      try {
        const json report = json::parse(is);
        scenario_id = report.value("scenario_id", id);
        for (const auto& t : report.value("tasks", json::array())) {
          if (!t.contains("check_id")) continue;
          summary << scenario_id << "," << t["check_id"].get<std::string>() << ","
                  << (t.value("pass", false) ? "1" : "0") << ","
                  << format_double(t.value("worst_violation", 0.0)) << ",";
          std::string witness;
          if (t.contains("witness") && t["witness"].contains("entries")) {
            for (const auto& e : t["witness"]["entries"]) {
              if (!witness.empty()) witness += ";";
              witness += std::to_string(e[0].get<std::size_t>()) + ":" +
                         format_double(e[1].get<double>()) + "|" +
                         format_double(e[2].get<double>());
            }
          }
          summary << (witness.empty() ? "origin" : witness) << "\n";
          wrote_rows = true;
        }
      } catch (const json::exception&) {
      }
    }
    if (!wrote_rows)
      summary << scenario_id << ",run," << (code == kExitPass ? "1" : "0") << ","
              << format_double(double(code)) << ",none\n";
  }
  return status;
}

int dump_grid(const std::filesystem::path& config_path, const std::filesystem::path& out_path,
              const RunOverrides& overrides) {
  try {
    std::ifstream is(config_path);
    if (!is) fail(errc::config_error, "cannot open config " + config_path.string());
    const json config = json::parse(is, nullptr, true, true);
    Context ctx = build_context(config, overrides);
    ctx.scenario_out = out_path.parent_path();
    for (const auto& task : config.value("tasks", json::array())) {
      if (task.at("task").get<std::string>() == "evaluate-grid") {
        write_grid_csv(ctx, task, out_path);
        return kExitPass;
      }
    }
    fail(errc::config_error, "scenario has no evaluate-grid task");
  } catch (const ToolkitError& e) {
    return is_config_error(e.code()) ? kExitConfigError : kExitNumericFailure;
  } catch (const json::exception&) {
    return kExitConfigError;
  }
}

}  // namespace hartogs::scenario
