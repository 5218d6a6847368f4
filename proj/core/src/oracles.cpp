#include "hartogs/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hartogs/errors.hpp"

namespace hartogs {

namespace {

using nlohmann::json;

cplx to_cplx(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  fail(errc::config_error, "expected a complex scalar (number or [re, im])");
}

std::vector<cplx> to_cplx_list(const json& j) {
  std::vector<cplx> out;
  if (!j.is_array()) fail(errc::config_error, "expected a list of complex scalars");
  for (const auto& e : j) out.push_back(to_cplx(e));
  return out;
}

std::optional<std::size_t> ambient_of(const json& params) {
  if (params.contains("ambient") && !params["ambient"].is_null())
    return params["ambient"].get<std::size_t>();
  return std::nullopt;
}

HoloFn self_extending(HoloFn base) {
  base.extension = std::make_shared<HoloFn>(base);
  return base;
}

std::vector<cplx> nan_vector(std::size_t m) {
  const double qnan = std::numeric_limits<double>::quiet_NaN();
  return std::vector<cplx>(m, cplx(qnan, qnan));
}

}  // namespace

HoloFn catalog_fn(const std::string& id, const nlohmann::json& params) {
  HoloFn fn;
  fn.id = id;
  fn.ambient = ambient_of(params);

  if (id == "constant") {
    std::vector<cplx> value;
    if (params.at("value").is_array() && params["value"].size() > 0 && params["value"][0].is_array())
      value = to_cplx_list(params["value"]);
    else
      value = {to_cplx(params.at("value"))};
    fn.codomain = value.size();
    fn.eval = [value](const CPoint&) { return value; };
    return self_extending(fn);
  }

  if (id == "coordinate") {
    const std::size_t i = params.at("index").get<std::size_t>();
    fn.eval = [i](const CPoint& x) { return std::vector<cplx>{x[i]}; };
    return self_extending(fn);
  }

  if (id == "exp-plus-square") {
    const std::size_t i = params.at("exp_index").get<std::size_t>();
    const std::size_t j = params.at("square_index").get<std::size_t>();
    fn.eval = [i, j](const CPoint& x) {
      return std::vector<cplx>{std::exp(x[i]) + x[j] * x[j]};
    };
    return self_extending(fn);
  }

  if (id == "product-plus-square") {
    const std::size_t i = params.at("i").get<std::size_t>();
    const std::size_t j = params.at("j").get<std::size_t>();
    const std::size_t k = params.at("k").get<std::size_t>();
    fn.eval = [i, j, k](const CPoint& x) {
      return std::vector<cplx>{x[i] * x[j] + x[k] * x[k]};
    };
    return self_extending(fn);
  }

  if (id == "exp-affine") {
    const std::size_t i = params.value("index", std::size_t(0));
    const cplx s = params.contains("scale") ? to_cplx(params["scale"]) : cplx(1.0);
    const cplx o = params.contains("offset") ? to_cplx(params["offset"]) : cplx(0.0);
    fn.eval = [i, s, o](const CPoint& x) { return std::vector<cplx>{s * std::exp(x[i]) + o}; };
    return self_extending(fn);
  }

  if (id == "poly-1d") {
    const std::vector<cplx> coeffs = to_cplx_list(params.at("coefficients"));
    fn.ambient = 1;
    fn.eval = [coeffs](const CPoint& x) { return std::vector<cplx>{poly_eval(coeffs, x[0])}; };
    return self_extending(fn);
  }

  if (id == "rational-1d") {
    LaurentData data;
    std::vector<CPoint> pole_points;
    for (const auto& p : params.at("poles")) {
      LaurentPole pole;
      pole.location = to_cplx(p.at("location"));
      pole.principal = to_cplx_list(p.at("principal"));
      bool any = false;
      for (cplx c : pole.principal) any = any || std::abs(c) > 0.0;
      if (!any) fail(errc::config_error, "rational-1d pole needs a nonzero principal part");
      CPoint pt = CPoint::zero(1);
      pt.set(0, pole.location);
      pole_points.push_back(pt);
      data.poles.push_back(std::move(pole));
    }
    const std::vector<cplx> poly =
        params.contains("poly") ? to_cplx_list(params["poly"]) : std::vector<cplx>{};
    fn.ambient = 1;
    fn.laurent = data;
    fn.excluded = std::make_shared<CompactSpec>(CompactSpec::finite_points(pole_points, 1e-12));
    fn.eval = [data, poly](const CPoint& x) {
      const cplx z = x[0];
      return std::vector<cplx>{poly_eval(poly, z) + principal_part_eval(data, z)};
    };
    // the regular part in closed form doubles as the known companion
    json poly_params;
    poly_params["coefficients"] = json::array();
    for (cplx c : poly) poly_params["coefficients"].push_back(json::array({c.real(), c.imag()}));
    fn.reference_companion = std::make_shared<HoloFn>(catalog_fn("poly-1d", poly_params));
    return fn;
  }

  if (id == "piecewise-radial") {
    const double r = params.at("radius").get<double>();
    const double t = params.at("thickness").get<double>();
    HoloFn inner = catalog_fn(params.at("inner").at("id").get<std::string>(),
                              params["inner"].value("params", json::object()));
    HoloFn outer = catalog_fn(params.at("outer").at("id").get<std::string>(),
                              params["outer"].value("params", json::object()));
    if (inner.codomain != outer.codomain)
      fail(errc::config_error, "piecewise-radial branches must share a codomain");
    const cplx inner_off =
        params.contains("inner_offset") ? to_cplx(params["inner_offset"]) : cplx(0.0);
    const cplx outer_off =
        params.contains("outer_offset") ? to_cplx(params["outer_offset"]) : cplx(0.0);
    fn.codomain = inner.codomain;
    const std::size_t m = fn.codomain;
    auto ie = inner.eval, oe = outer.eval;
    fn.eval = [r, t, ie, oe, inner_off, outer_off, m](const CPoint& x) {
      const double d = x.norm();
      if (d < r - t) {
        auto v = ie(x);
        for (auto& c : v) c += inner_off;
        return v;
      }
      if (d > r + t) {
        auto v = oe(x);
        for (auto& c : v) c += outer_off;
        return v;
      }
      return nan_vector(m);  // inside the excluded shell: no branch applies
    };
    // coincidence pins the companion to the outer branch
    fn.reference_companion = std::make_shared<HoloFn>(
        std::abs(outer_off) > 0.0 ? fn_offset(outer, outer_off) : outer);
    return fn;
  }

  if (id == "seq-reciprocal") {
    const cplx pole = to_cplx(params.at("pole"));
    const std::size_t i = params.value("index", std::size_t(0));
    fn.eval = [pole, i](const CPoint& x) { return std::vector<cplx>{1.0 / (pole - x[i])}; };
    return self_extending(fn);
  }

  if (id == "affine-pair") {
    const std::size_t i = params.value("index", std::size_t(0));
    const cplx c = params.contains("constant") ? to_cplx(params["constant"]) : cplx(1.0);
    fn.codomain = 2;
    fn.eval = [i, c](const CPoint& x) { return std::vector<cplx>{x[i], c}; };
    return self_extending(fn);
  }

  fail(errc::unknown_id, "catalog_fn: unknown id '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  return {"constant",   "coordinate",  "exp-plus-square", "product-plus-square",
          "exp-affine", "poly-1d",     "rational-1d",     "piecewise-radial",
          "seq-reciprocal", "affine-pair"};
}

HoloFn regular_part(const HoloFn& f) {
  if (!f.laurent) fail(errc::missing_metadata, "regular_part: no Laurent data on " + f.id);
  if (f.excluded) {
    for (const auto& pole : f.laurent->poles) {
      CPoint p = CPoint::zero(1);
      p.set(0, pole.location);
      if (!f.excluded->contains(p))
        fail(errc::missing_metadata, "regular_part: pole outside the excluded set");
    }
  }
  HoloFn out;
  out.id = f.id + "#regular";
  out.codomain = 1;
  out.ambient = 1;
  const LaurentData data = *f.laurent;
  auto fe = f.eval;
  out.eval = [fe, data](const CPoint& x) {
    return std::vector<cplx>{fe(x)[0] - principal_part_eval(data, x[0])};
  };
  return out;
}

// ---------------------------------------------------------------------------
// hull distance
// ---------------------------------------------------------------------------

namespace {

double dist2(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return s;
}

// real pairing in C^m = R^{2m}
double dot_r(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return s;
}

}  // namespace

double hull_distance(const std::vector<cplx>& y, const std::vector<std::vector<cplx>>& samples,
                     HullMode mode, double tol) {
  if (samples.empty()) fail(errc::empty_samples, "hull_distance needs samples");
  const std::size_t m = y.size();
  for (const auto& s : samples)
    if (s.size() != m) fail(errc::invalid_input, "hull_distance: dimension mismatch");

  std::size_t start = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = dist2(y, samples[i]);
    if (d < best) {
      best = d;
      start = i;
    }
  }
  if (mode == HullMode::set) return std::sqrt(best);

  // Frank-Wolfe with away steps on min ||y - sum_i l_i s_i||^2 over the simplex.
  // The finite hull of samples is closed, so both hull modes coincide here.
  std::vector<cplx> w = samples[start];
  std::map<std::size_t, double> weight{{start, 1.0}};
  const double scale = std::sqrt(std::max(1.0, best));

  for (int iter = 0; iter < 200000; ++iter) {
    std::vector<cplx> g(m);
    for (std::size_t i = 0; i < m; ++i) g[i] = w[i] - y[i];

    std::size_t fw = 0;
    double fw_val = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double v = dot_r(g, samples[i]);
      if (v < fw_val) {
        fw_val = v;
        fw = i;
      }
    }
    const double gap = dot_r(g, w) - fw_val;
    if (gap <= tol * scale) break;

    std::size_t away = weight.begin()->first;
    double away_val = -std::numeric_limits<double>::infinity();
    for (const auto& [idx, wt] : weight) {
      const double v = dot_r(g, samples[idx]);
      if (v > away_val) {
        away_val = v;
        away = idx;
      }
    }

    const bool use_fw = (dot_r(g, w) - fw_val) >= (away_val - dot_r(g, w));
    std::vector<cplx> d(m);
    double t_max = 1.0;
    if (use_fw) {
      for (std::size_t i = 0; i < m; ++i) d[i] = samples[fw][i] - w[i];
    } else {
      for (std::size_t i = 0; i < m; ++i) d[i] = w[i] - samples[away][i];
      const double alpha = weight[away];
      if (alpha >= 1.0) break;
      t_max = alpha / (1.0 - alpha);
    }
    const double dd = dot_r(d, d);
    if (dd < 1e-300) break;
    double t = -dot_r(g, d) / dd;
    t = std::clamp(t, 0.0, t_max);
    if (t <= 0.0) break;

    for (std::size_t i = 0; i < m; ++i) w[i] += t * d[i];
    if (use_fw) {
      for (auto& [idx, wt] : weight) wt *= (1.0 - t);
      weight[fw] += t;
    } else {
      for (auto& [idx, wt] : weight) wt *= (1.0 + t);
      weight[away] -= t;
    }
    for (auto it = weight.begin(); it != weight.end();)
      it = it->second <= 1e-16 ? weight.erase(it) : std::next(it);
  }
  return std::sqrt(dist2(y, w));
}

double seminorm_eval(const SeminormSpec& p, const std::vector<cplx>& y) {
  switch (p.kind) {
    case SeminormSpec::Kind::coordinate_modulus:
      return p.index < y.size() ? std::abs(y[p.index]) : 0.0;
    case SeminormSpec::Kind::max_norm: {
      double s = 0.0;
      for (cplx v : y) s = std::max(s, std::abs(v));
      return s;
    }
    case SeminormSpec::Kind::norm_with_functional: {
      const cplx phi = p.phi_index < y.size() ? y[p.phi_index] : cplx(0.0);
      std::vector<cplx> v = y;
      if (p.phi_index < v.size()) v[p.phi_index] -= phi;  // v = y - phi(y) y0
      const double nu = p.index < v.size() ? std::abs(v[p.index]) : 0.0;
      return std::max(nu, std::abs(phi));
    }
  }
  return 0.0;
}

}  // namespace hartogs
