#include "hartogs/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>

#include "hartogs/errors.hpp"

namespace hartogs::checks {

namespace {

double sup_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

CompanionResult companion_value(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                                const CPoint& x, const CompanionOptions& opts) {
  std::size_t ambient = 0;
  if (omega.ambient_dim()) ambient = *omega.ambient_dim();
  else if (f.ambient) ambient = *f.ambient;
  if (ambient == 1) return companion_1d(f, K, omega, x[0], opts);
  return companion_nd(f, K, omega, x, std::nullopt, std::nullopt, opts);
}

// uniform-bucket nearest neighbor over points of C
class PlanarIndex {
 public:
  explicit PlanarIndex(const std::vector<cplx>& pts) : pts_(pts) {
    if (pts_.empty()) return;
    double lox = 1e300, loy = 1e300, hix = -1e300, hiy = -1e300;
    for (cplx p : pts_) {
      lox = std::min(lox, p.real());
      loy = std::min(loy, p.imag());
      hix = std::max(hix, p.real());
      hiy = std::max(hiy, p.imag());
    }
    lo_ = cplx(lox, loy);
    const double w = std::max({hix - lox, hiy - loy, 1e-12});
    n_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(double(pts_.size()))));
    cell_ = w / double(n_);
    buckets_.assign(n_ * n_, {});
    for (std::uint32_t i = 0; i < pts_.size(); ++i) buckets_[bucket_of(pts_[i])].push_back(i);
  }

  double nearest(cplx q) const {
    if (pts_.empty()) return std::numeric_limits<double>::infinity();
    const auto [qx, qy] = cell_of(q);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t ring = 0; ring <= 2 * n_; ++ring) {
      const double ring_lb = (ring <= 1) ? 0.0 : (double(ring) - 1.0) * cell_;
      if (ring_lb > best) break;
      const std::ptrdiff_t r = static_cast<std::ptrdiff_t>(ring);
      for (std::ptrdiff_t dx = -r; dx <= r; ++dx) {
        for (std::ptrdiff_t dy = -r; dy <= r; ++dy) {
          if (std::max(std::abs(dx), std::abs(dy)) != r) continue;
          const std::ptrdiff_t cx = std::ptrdiff_t(qx) + dx, cy = std::ptrdiff_t(qy) + dy;
          if (cx < 0 || cy < 0 || cx >= std::ptrdiff_t(n_) || cy >= std::ptrdiff_t(n_)) continue;
          for (std::uint32_t i : buckets_[std::size_t(cy) * n_ + std::size_t(cx)])
            best = std::min(best, std::abs(pts_[i] - q));
        }
      }
    }
    return best;
  }

 private:
  std::pair<std::size_t, std::size_t> cell_of(cplx p) const {
    const auto clampi = [this](double v) {
      return std::min(n_ - 1, std::size_t(std::max(0.0, v)));
    };
    return {clampi((p.real() - lo_.real()) / cell_), clampi((p.imag() - lo_.imag()) / cell_)};
  }
  std::size_t bucket_of(cplx p) const {
    const auto [x, y] = cell_of(p);
    return y * n_ + x;
  }

  std::vector<cplx> pts_;
  cplx lo_{0.0, 0.0};
  double cell_ = 1.0;
  std::size_t n_ = 1;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

double one_sided_image_distance(const std::vector<cplx>& from, const PlanarIndex& to) {
  double d = 0.0;
  for (cplx a : from) d = std::max(d, to.nearest(a));
  return d;
}

// max-abs projection residual onto the normal of the best affine hyperplane
// (smallest-eigenvalue direction of the sample covariance)
double affine_flatness_residual(const std::vector<std::vector<cplx>>& samples) {
  if (samples.size() < 3) return 0.0;
  const std::size_t m = samples[0].size();
  const std::size_t d = 2 * m;
  if (d < 2) return 0.0;

  auto coords = [](const std::vector<cplx>& v, std::size_t i) {
    return i % 2 == 0 ? v[i / 2].real() : v[i / 2].imag();
  };
  std::vector<double> mean(d, 0.0);
  for (const auto& s : samples)
    for (std::size_t i = 0; i < d; ++i) mean[i] += coords(s, i);
  for (auto& v : mean) v /= double(samples.size());

  std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
  for (const auto& s : samples)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        cov[i][j] += (coords(s, i) - mean[i]) * (coords(s, j) - mean[j]);

  // cyclic Jacobi (d <= 8 in practice)
  std::vector<std::vector<double>> evec(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) evec[i][i] = 1.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) off += cov[p][q] * cov[p][q];
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        if (std::abs(cov[p][q]) < 1e-300) continue;
        const double theta = 0.5 * std::atan2(2.0 * cov[p][q], cov[q][q] - cov[p][p]);
        const double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = 0; k < d; ++k) {
          const double akp = cov[k][p], akq = cov[k][q];
          cov[k][p] = c * akp - s * akq;
          cov[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const double apk = cov[p][k], aqk = cov[q][k];
          cov[p][k] = c * apk - s * aqk;
          cov[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const double vkp = evec[k][p], vkq = evec[k][q];
          evec[k][p] = c * vkp - s * vkq;
          evec[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < d; ++i)
    if (cov[i][i] < cov[argmin][argmin]) argmin = i;

  double resid = 0.0;
  for (const auto& s : samples) {
    double proj = 0.0;
    for (std::size_t i = 0; i < d; ++i) proj += (coords(s, i) - mean[i]) * evec[i][argmin];
    resid = std::max(resid, std::abs(proj));
  }
  return resid;
}

// operator bound of the seminorm against the Euclidean norm
double seminorm_gain(const SeminormSpec& p, std::size_t m) {
  double gain = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<cplx> e(m, 0.0);
    e[i] = 1.0;
    gain = std::max(gain, seminorm_eval(p, e));
    e[i] = cplx(0.0, 1.0);
    gain = std::max(gain, seminorm_eval(p, e));
  }
  Rng rng(0x73656d69ull);
  for (int k = 0; k < 64; ++k) {
    const auto v = rng.on_sphere(2 * m);
    std::vector<cplx> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = cplx(v[2 * i], v[2 * i + 1]);
    gain = std::max(gain, seminorm_eval(p, y));
  }
  return gain;
}

}  // namespace

double CheckReport::metric_value(const std::string& k) const {
  for (const auto& [key, val] : metrics)
    if (key == k) return val;
  fail(errc::invalid_input, "unknown metric " + k);
}

CPoint sample_in(const DomainSpec& omega, Rng& rng) {
  const Box box = omega.sample_box();
  const std::size_t n = box.dim() / 2;
  for (int attempt = 0; attempt < 200000; ++attempt) {
    CPoint x = CPoint::zero(omega.ambient_dim() ? omega.ambient_dim()
                                                : std::optional<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const double re = rng.uniform(box.lo[2 * i], box.hi[2 * i]);
      const double im = rng.uniform(box.lo[2 * i + 1], box.hi[2 * i + 1]);
      x.set(i, cplx(re, im));
    }
    if (omega.contains(x)) return x;
  }
  fail(errc::empty_samples, "rejection sampling of Omega failed");
}

CPoint sample_in_minus(const DomainSpec& omega, const CompactSpec& K, Rng& rng) {
  for (int attempt = 0; attempt < 200000; ++attempt) {
    CPoint x = sample_in(omega, rng);
    if (!K.contains(x)) return x;
  }
  fail(errc::empty_samples, "rejection sampling of Omega \\ K failed");
}

CoincidenceClassifier::CoincidenceClassifier(const GridComplex& grid)
    : grid_(grid), omega_comps_(components(grid, GridRegion::omega)) {}

bool CoincidenceClassifier::classify(std::size_t flat) const {
  const std::int32_t omega_id = omega_comps_.cell_component[flat];
  if (omega_id < 0)
    fail(errc::indeterminate,
         "cell center classification disagrees with membership; raise the grid resolution");
  const ComponentReport* comp = nullptr;
  for (const auto& [id, rep] : complement_by_omega_)
    if (id == omega_id) comp = &rep;
  if (!comp) {
    std::vector<bool> mask(grid_.cell_count());
    for (std::size_t i = 0; i < grid_.cell_count(); ++i) {
      const bool blocked = grid_.label(i) == CellLabel::in_k &&
                           omega_comps_.cell_component[i] == omega_id;
      mask[i] = !blocked;
    }
    complement_by_omega_.emplace_back(omega_id, components_masked(grid_, mask));
    comp = &complement_by_omega_.back().second;
  }
  if (!comp->unbounded_component_id) return false;
  return comp->cell_component[flat] == *comp->unbounded_component_id;
}

CheckReport verify_coincidence(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                               const GridComplex& grid, std::size_t n_samples,
                               const CheckOptions& opts) {
  CheckReport rep;
  rep.check_id = "coincidence";
  rep.tolerance = opts.identity_tol;
  Rng rng(opts.seed);
  const CoincidenceClassifier classifier(grid);

  std::size_t accepted = 0, synthesis_skips = 0;
  for (int attempt = 0; attempt < 200000 && accepted < n_samples; ++attempt) {
    const CPoint x = sample_in_minus(omega, K, rng);
    const auto flat = grid.locate(x);
    if (!flat) continue;
    bool coincident = false;
    try {
      coincident = classifier.classify(*flat);
    } catch (const ToolkitError& e) {
      if (e.code() != errc::indeterminate) throw;
      continue;
    }
    if (!coincident) continue;
    CompanionResult comp;
    try {
      comp = companion_value(f, K, omega, x, opts.companion);
    } catch (const ToolkitError& e) {
      if (e.code() == errc::synthesis_failed) {
        ++synthesis_skips;
        continue;
      }
      throw;
    }
    const double d = sup_diff(comp.value, f.eval(x));
    if (d > rep.worst_violation) {
      rep.worst_violation = d;
      rep.witness = x;
    }
    ++accepted;
  }
  if (accepted == 0) fail(errc::empty_samples, "no coincidence samples found");
  rep.samples_used = accepted;
  if (synthesis_skips > 0)
    rep.note = std::to_string(synthesis_skips) + " samples skipped (synthesis failed near margin)";
  rep.pass = rep.worst_violation <= rep.tolerance;
  return rep;
}

CheckReport verify_range_and_inertia(const HoloFn& f, const CompactSpec& K,
                                     const DomainSpec& omega,
                                     const std::vector<std::size_t>& sample_sizes,
                                     std::size_t probe_points,
                                     const std::optional<PlanarSet>& D,
                                     const CheckOptions& opts) {
  CheckReport rep;
  rep.check_id = "range_inertia";
  rep.tolerance = opts.image_threshold;
  Rng rng(opts.seed);
  Rng image_rng = rng.fork(1);

  std::vector<CPoint> probes;
  std::vector<std::vector<cplx>> probe_values;
  std::size_t guard = 0;
  while (probes.size() < probe_points && guard++ < 100 * probe_points + 1000) {
    const CPoint x = sample_in(omega, rng);
    try {
      probe_values.push_back(companion_value(f, K, omega, x, opts.companion).value);
      probes.push_back(x);
    } catch (const ToolkitError& e) {
      if (e.code() != errc::synthesis_failed) throw;
    }
  }
  if (probes.empty()) fail(errc::empty_samples, "no probes admitted a companion evaluation");

  // nested image sample stream of f over Omega \ K
  const std::size_t n_max = *std::max_element(sample_sizes.begin(), sample_sizes.end());
  std::vector<std::vector<cplx>> image;
  image.reserve(n_max);
  for (std::size_t i = 0; i < n_max; ++i)
    image.push_back(f.eval(sample_in_minus(omega, K, image_rng)));

  const std::size_t m = f.codomain;
  double prev = std::numeric_limits<double>::infinity();
  bool monotone = true;
  double final_eps = 0.0;
  for (std::size_t n : sample_sizes) {
    double eps = 0.0;
    if (m == 1) {
      std::vector<cplx> flat;
      flat.reserve(n);
      for (std::size_t i = 0; i < n; ++i) flat.push_back(image[i][0]);
      const PlanarIndex index(flat);
      for (std::size_t pi = 0; pi < probes.size(); ++pi) {
        const double d = index.nearest(probe_values[pi][0]);
        if (d > eps) {
          eps = d;
          rep.witness = probes[pi];
        }
      }
    } else {
      const std::vector<std::vector<cplx>> prefix(image.begin(), image.begin() + long(n));
      for (std::size_t pi = 0; pi < probes.size(); ++pi) {
        const double d = hull_distance(probe_values[pi], prefix, HullMode::convex_hull);
        if (d > eps) {
          eps = d;
          rep.witness = probes[pi];
        }
      }
    }
    rep.metric("eps_" + std::to_string(n), eps);
    if (eps > prev + 1e-12) monotone = false;
    prev = eps;
    final_eps = eps;
  }
  rep.samples_used = n_max;
  rep.worst_violation = final_eps;
  rep.pass = monotone && final_eps <= opts.image_threshold;
  if (!monotone) rep.note = "image distance not monotone under refinement";

  if (D && m == 1) {
    bool premise = true;
    for (const auto& s : image) premise = premise && D->contains(s[0]);
    rep.metric("inertia_premise", premise ? 1.0 : 0.0);
    if (premise) {
      bool conclusion = true;
      for (const auto& v : probe_values) conclusion = conclusion && D->contains(v[0]);
      rep.metric("inertia_holds", conclusion ? 1.0 : 0.0);
      if (!conclusion) {
        rep.pass = false;
        rep.note += "; companion range escaped the holomorphy domain";
      }
    }
  }
  return rep;
}

CheckReport verify_excision(const HoloFn& g, const CompactSpec& K, const DomainSpec& omega,
                            const std::vector<std::size_t>& sample_sizes,
                            const CheckOptions& opts) {
  CheckReport rep;
  rep.check_id = "excision";
  rep.tolerance = opts.image_threshold;
  if (g.codomain != 1) fail(errc::invalid_input, "verify_excision expects a scalar map");
  Rng rng(opts.seed);

  // one coupled Omega stream: the full image takes every point, the excised
  // image drops the points inside K, so the distance isolates exactly the
  // values over K rather than independent-sample rim noise
  const std::size_t n_max = *std::max_element(sample_sizes.begin(), sample_sizes.end());
  std::vector<cplx> full;
  std::vector<bool> in_k;
  full.reserve(n_max);
  in_k.reserve(n_max);
  for (std::size_t i = 0; i < n_max; ++i) {
    const CPoint x = sample_in(omega, rng);
    full.push_back(g.eval(x)[0]);
    in_k.push_back(K.contains(x));
  }

  double prev = std::numeric_limits<double>::infinity();
  bool monotone = true;
  double final_d = 0.0;
  for (std::size_t n : sample_sizes) {
    const std::vector<cplx> a(full.begin(), full.begin() + long(n));
    std::vector<cplx> b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!in_k[i]) b.push_back(full[i]);
    if (b.empty()) fail(errc::empty_samples, "no samples outside K");
    const PlanarIndex ia(a), ib(b);
    const double d = std::max(one_sided_image_distance(a, ib), one_sided_image_distance(b, ia));
    rep.metric("hausdorff_" + std::to_string(n), d);
    if (d > prev + 1e-12) monotone = false;
    prev = d;
    final_d = d;
  }
  rep.samples_used = n_max;
  rep.worst_violation = final_d;
  rep.pass = monotone && final_d <= opts.image_threshold;
  if (!monotone) rep.note = "Hausdorff distance not monotone under refinement";
  return rep;
}

CheckReport verify_roundtrips(const HoloFn& g, const CompactSpec& K, const DomainSpec& omega,
                              const GridComplex& grid, std::size_t n_samples,
                              const std::optional<OperatorBoundGeometry>& bound_geometry,
                              const CheckOptions& opts) {
  CheckReport rep;
  rep.check_id = "roundtrips";
  rep.tolerance = opts.identity_tol;
  Rng rng(opts.seed);
  const HoloFn f = restrict_fn(g, K);

  // H(rho(g)) = g on Omega samples; on the Omega \ K portion this is also
  // rho(H(f)) = f for the connected-complement case
  std::size_t used = 0, guard = 0;
  while (used < n_samples && guard++ < 100 * n_samples + 1000) {
    const CPoint x = sample_in(omega, rng);
    try {
      const CompanionResult comp = companion_value(f, K, omega, x, opts.companion);
      const double d = sup_diff(comp.value, g.eval(x));
      if (d > rep.worst_violation) {
        rep.worst_violation = d;
        rep.witness = x;
      }
      ++used;
    } catch (const ToolkitError& e) {
      if (e.code() != errc::synthesis_failed) throw;
    }
  }
  rep.samples_used = used;
  if (used == 0) fail(errc::empty_samples, "no roundtrip samples evaluated");
  rep.pass = rep.worst_violation <= rep.tolerance;

  const bool complement_connected = is_connected(grid, GridRegion::complement_of_k);
  rep.metric("complement_connected", complement_connected ? 1.0 : 0.0);

  if (!complement_connected && K.kind() == CompactSpec::Kind::sphere) {
    // locally constant counterexample: 1 inside the shell, 0 outside
    HoloFn h;
    h.id = "locally-constant";
    h.codomain = 1;
    const CPoint c = K.center();
    const double r = K.radius(), t = K.thickness();
    h.eval = [c, r, t](const CPoint& x) {
      const double d = (x - c).norm();
      if (d < r - t) return std::vector<cplx>{cplx(1.0)};
      if (d > r + t) return std::vector<cplx>{cplx(0.0)};
      const double qnan = std::numeric_limits<double>::quiet_NaN();
      return std::vector<cplx>{cplx(qnan, qnan)};
    };
    const CompanionResult comp = companion_value(h, K, omega, c, opts.companion);
    const double deviation = std::abs(comp.scalar() - cplx(1.0));
    rep.metric("counterexample_deviation", deviation);
    if (deviation < 0.5) {
      rep.pass = false;
      rep.note += "; locally constant counterexample failed to deviate";
    }
  }

  if (bound_geometry) {
    const auto& geo = *bound_geometry;
    Rng brng = rng.fork(3);
    auto embed = [&geo](cplx lam, cplx zeta) { return geo.plane.embed(lam, zeta); };
    double lhs = 0.0;
    for (std::size_t i = 0; i < geo.m_points; ++i) {
      const auto v = brng.on_sphere(4);
      const double u = std::pow(brng.uniform(), 0.25) * geo.omega0_radius * 0.95;
      const CPoint x = embed(cplx(u * v[0], u * v[1]), cplx(u * v[2], u * v[3]));
      const CompanionResult comp = companion_value(f, K, omega, x, opts.companion);
      for (cplx c : comp.value) lhs = std::max(lhs, std::abs(c));
    }
    double rhs = 0.0;
    auto consider = [&](cplx lam, cplx zeta) {
      const CPoint x = embed(lam, zeta);
      if (!omega.contains(x) || K.contains(x)) return;
      for (cplx c : f.eval(x)) rhs = std::max(rhs, std::abs(c));
    };
    for (double radius : {geo.omega0_radius, geo.k0_radius}) {
      consider(radius, 0.0);
      consider(-radius, 0.0);
      consider(cplx(0.0, radius), 0.0);
      consider(cplx(0.0, -radius), 0.0);
      consider(0.0, radius);
      consider(0.0, -radius);
      consider(0.0, cplx(0.0, radius));
      consider(0.0, cplx(0.0, -radius));
      for (std::size_t i = 0; i < geo.shell_samples / 2; ++i) {
        const auto v = brng.on_sphere(4);
        consider(radius * cplx(v[0], v[1]), radius * cplx(v[2], v[3]));
      }
    }
    for (std::size_t i = 0; i < geo.shell_samples; ++i) {
      const double radius = geo.k0_radius + (geo.omega0_radius - geo.k0_radius) * brng.uniform();
      const auto v = brng.on_sphere(4);
      consider(radius * cplx(v[0], v[1]), radius * cplx(v[2], v[3]));
    }
    const double slack = rhs - lhs;
    rep.metric("operator_bound_lhs", lhs);
    rep.metric("operator_bound_rhs", rhs);
    rep.metric("operator_bound_slack", slack);
    if (slack < -1e-8) {
      rep.pass = false;
      rep.note += "; seminorm bound violated";
    }
  }
  return rep;
}

CheckReport verify_composition(const HoloFn& f, const HoloFn& g_outer, const CompactSpec& K,
                               const DomainSpec& omega, std::size_t n_samples,
                               const CheckOptions& opts) {
  CheckReport rep;
  rep.check_id = "composition";
  rep.tolerance = opts.identity_tol;
  Rng rng(opts.seed);
  const HoloFn gf = fn_compose(g_outer, f);

  std::size_t used = 0, guard = 0;
  while (used < n_samples && guard++ < 100 * n_samples + 1000) {
    const CPoint x = sample_in(omega, rng);
    try {
      const cplx lhs = companion_value(gf, K, omega, x, opts.companion).scalar();
      const cplx w = companion_value(f, K, omega, x, opts.companion).scalar();
      CPoint wp = CPoint::zero(1);
      wp.set(0, w);
      const cplx rhs = g_outer.eval(wp)[0];
      const double d = std::abs(lhs - rhs);
      if (d > rep.worst_violation) {
        rep.worst_violation = d;
        rep.witness = x;
      }
      ++used;
    } catch (const ToolkitError& e) {
      if (e.code() != errc::synthesis_failed) throw;
    }
  }
  rep.samples_used = used;
  if (used == 0) fail(errc::empty_samples, "no composition samples evaluated");
  rep.pass = rep.worst_violation <= rep.tolerance;
  return rep;
}

CheckReport verify_boundary(const HoloFn& f, const DomainSpec& omega,
                            const std::vector<PlaneSlice>& slices, std::size_t n_samples,
                            const CheckOptions& opts, const std::optional<SeminormSpec>& p) {
  CheckReport rep;
  rep.check_id = "boundary";
  const double slack_tol = 1e-6;
  rep.tolerance = slack_tol;
  Rng rng(opts.seed);

  auto pval = [&](const std::vector<cplx>& v) {
    if (p) return seminorm_eval(*p, v);
    double s = 0.0;
    for (cplx c : v) s = std::max(s, std::abs(c));
    return s;
  };

  double interior_sup = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const CPoint x = sample_in(omega, rng);
    const double v = pval(f.eval(x));
    if (v > interior_sup) {
      interior_sup = v;
      rep.witness = x;
    }
  }

  const Boundary2Options bopts;
  const std::vector<CPoint> boundary_pts = boundary2_sample(omega, slices, bopts);
  if (boundary_pts.empty()) fail(errc::empty_samples, "no boundary points sampled");
  double boundary_sup = 0.0;
  std::vector<cplx> boundary_vals;
  boundary_vals.reserve(boundary_pts.size());
  for (const auto& b : boundary_pts) {
    const auto v = f.eval(b);
    boundary_sup = std::max(boundary_sup, pval(v));
    if (f.codomain == 1) boundary_vals.push_back(v[0]);
  }

  rep.metric("interior_sup", interior_sup);
  rep.metric("boundary_sup", boundary_sup);
  rep.samples_used = n_samples + boundary_pts.size();
  rep.worst_violation = std::max(0.0, interior_sup - boundary_sup);
  rep.pass = interior_sup <= boundary_sup + slack_tol;

  if (f.codomain == 1 && boundary_vals.size() >= 4) {
    // one-sided image distance f(Omega) -> f(boundary) under boundary refinement
    Rng irng = rng.fork(2);
    std::vector<cplx> interior_vals;
    const std::size_t probes = std::min<std::size_t>(n_samples, 2000);
    interior_vals.reserve(probes);
    for (std::size_t i = 0; i < probes; ++i)
      interior_vals.push_back(f.eval(sample_in(omega, irng))[0]);
    const std::size_t half = boundary_vals.size() / 2;
    const PlanarIndex coarse(
        std::vector<cplx>(boundary_vals.begin(), boundary_vals.begin() + long(half)));
    const PlanarIndex fine(boundary_vals);
    const double d0 = one_sided_image_distance(interior_vals, coarse);
    const double d1 = one_sided_image_distance(interior_vals, fine);
    rep.metric("image_dist_coarse", d0);
    rep.metric("image_dist_fine", d1);
    if (d1 > d0 + 1e-12) {
      rep.pass = false;
      rep.note += "; image distance grew under boundary refinement";
    }
  }
  return rep;
}

CheckReport verify_max_min(const HoloFn& f, const SeminormSpec& p, const DomainSpec& omega,
                           const CPoint& c, std::size_t n_samples, const CheckOptions& opts) {
  CheckReport rep;
  rep.check_id = "max_min";
  rep.tolerance = opts.identity_tol;
  Rng rng(opts.seed);

  const double floor_value = seminorm_eval(p, f.eval(c));
  rep.metric("p_at_c", floor_value);

  std::vector<std::vector<cplx>> values;
  values.reserve(n_samples);
  double min_p = std::numeric_limits<double>::infinity();
  double min_norm = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_samples; ++i) {
    const CPoint x = sample_in(omega, rng);
    const auto v = f.eval(x);
    const double pv = seminorm_eval(p, v);
    if (pv < min_p) {
      min_p = pv;
      rep.witness = x;
    }
    double n2 = 0.0;
    for (cplx cv : v) n2 += std::norm(cv);
    min_norm = std::min(min_norm, std::sqrt(n2));
    values.push_back(v);
  }
  rep.samples_used = n_samples;
  rep.metric("min_p", min_p);
  rep.worst_violation = std::max(0.0, floor_value - min_p);
  rep.pass = min_p >= floor_value - rep.tolerance;

  const double flatness = affine_flatness_residual(values);
  rep.metric("range_flatness", flatness);
  if (flatness > 1e-9 * std::max(1.0, floor_value)) {
    rep.pass = false;
    rep.note += "; sampled range is not hyperplane-flat";
  }

  if (floor_value > 0.0) {
    const double gain = seminorm_gain(p, f.codomain);
    const double threshold = (floor_value - rep.tolerance) / std::max(gain, 1e-12);
    rep.metric("min_norm", min_norm);
    if (min_norm < threshold) {
      rep.pass = false;
      rep.note += "; map approaches zero despite positive seminorm floor";
    }
  }
  return rep;
}

CheckReport verify_identity(const HoloFn& f1, const HoloFn& f2, const DomainSpec& omega,
                            const CPoint& c_center, double c_radius, std::size_t n_samples,
                            const CheckOptions& opts) {
  CheckReport rep;
  rep.check_id = "identity";
  rep.tolerance = opts.identity_tol;
  Rng rng(opts.seed);

  const std::size_t n = c_center.ambient_dim() ? *c_center.ambient_dim() : 1;
  double c_diff = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    CPoint x;
    for (;;) {
      CPoint delta = CPoint::zero(c_center.ambient_dim());
      for (std::size_t j = 0; j < n; ++j)
        delta.set(j, cplx(rng.uniform(-c_radius, c_radius), rng.uniform(-c_radius, c_radius)));
      if (delta.norm() <= c_radius) {
        x = c_center + delta;
        break;
      }
    }
    if (!omega.contains(x)) continue;
    c_diff = std::max(c_diff, sup_diff(f1.eval(x), f2.eval(x)));
  }
  rep.metric("agreement_on_C", c_diff);

  if (c_diff > rep.tolerance) {
    rep.pass = true;  // premise fails, nothing to propagate
    rep.note = "premise not met: maps differ on C";
    rep.samples_used = n_samples;
    return rep;
  }

  double omega_diff = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const CPoint x = sample_in(omega, rng);
    const double d = sup_diff(f1.eval(x), f2.eval(x));
    if (d > omega_diff) {
      omega_diff = d;
      rep.witness = x;
    }
  }
  rep.samples_used = 2 * n_samples;
  rep.metric("agreement_on_Omega", omega_diff);
  rep.worst_violation = omega_diff;
  rep.pass = omega_diff <= 10.0 * rep.tolerance;
  return rep;
}

CheckReport verify_level_sets(const HoloFn& f, const DomainSpec& omega, const PlaneSlice& slice,
                              cplx value, const CheckOptions& opts) {
  CheckReport rep;
  rep.check_id = "level_sets";
  rep.tolerance = 1e-9;
  (void)opts;

  auto h = [&](cplx lam, cplx zeta) { return f.eval(slice.embed(lam, zeta))[0] - value; };
  auto inside = [&](cplx lam, cplx zeta) { return omega.contains(slice.embed(lam, zeta)); };

  double ray_cap = 4.0;
  try {
    ray_cap = 2.0 * omega.sample_box().radius_bound() + slice.base.norm() + 1.0;
  } catch (const ToolkitError&) {
  }

  static const auto ray_dirs = [] {
    std::array<std::array<double, 4>, 16> d{};
    for (int a = 0; a < 4; ++a) {
      d[std::size_t(2 * a)][std::size_t(a)] = 1.0;
      d[std::size_t(2 * a + 1)][std::size_t(a)] = -1.0;
    }
    const double s = 0.7071067811865475;
    std::size_t k = 8;
    for (int a = 0; a < 4 && k < 16; ++a)
      for (int b = a + 1; b < 4 && k < 16; ++b) {
        d[k][std::size_t(a)] = s;
        d[k][std::size_t(b)] = s;
        ++k;
        if (k < 16) {
          d[k][std::size_t(a)] = s;
          d[k][std::size_t(b)] = -s;
          ++k;
        }
      }
    return d;
  }();

  auto exit_distance = [&](cplx lam, cplx zeta, const std::array<double, 4>& d) {
    double t_in = 0.0, t_out = 1e-3;
    while (t_out < ray_cap) {
      if (!inside(lam + t_out * cplx(d[0], d[1]), zeta + t_out * cplx(d[2], d[3]))) break;
      t_in = t_out;
      t_out *= 2.0;
    }
    if (t_out >= ray_cap) return std::numeric_limits<double>::infinity();
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (t_in + t_out);
      if (inside(lam + mid * cplx(d[0], d[1]), zeta + mid * cplx(d[2], d[3]))) t_in = mid;
      else t_out = mid;
    }
    return 0.5 * (t_in + t_out);
  };

  auto boundary_distance = [&](cplx lam, cplx zeta) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& d : ray_dirs) best = std::min(best, exit_distance(lam, zeta, d));
    return best;
  };

  // scan box sized to the cut itself (circumradius from the slice base)
  double radius = 0.0;
  if (inside(0.0, 0.0)) {
    for (const auto& d : ray_dirs) {
      const double t = exit_distance(0.0, 0.0, d);
      if (std::isfinite(t)) radius = std::max(radius, t);
    }
    radius *= 1.25;
  }
  if (radius <= 0.0 || !std::isfinite(radius)) radius = ray_cap / 2.0;

  // grid scan + minimal-norm Newton descent toward the zero manifold
  std::vector<std::pair<cplx, cplx>> zeros;
  const int res = 13;
  const double cell = 2.0 * radius / double(res);
  for (int a = 0; a < res; ++a)
    for (int b = 0; b < res; ++b)
      for (int cc = 0; cc < res; ++cc)
        for (int dd = 0; dd < res; ++dd) {
          cplx lam(-radius + (a + 0.5) * cell, -radius + (b + 0.5) * cell);
          cplx zeta(-radius + (cc + 0.5) * cell, -radius + (dd + 0.5) * cell);
          if (!inside(lam, zeta)) continue;
          cplx hv = h(lam, zeta);
          if (!is_finite(hv)) continue;
          bool ok = false;
          for (int it = 0; it < 40; ++it) {
            if (std::abs(hv) < 1e-10) {
              ok = true;
              break;
            }
            const double step = 1e-6 * std::max(1.0, std::abs(lam) + std::abs(zeta));
            const cplx dl = (h(lam + step, zeta) - h(lam - step, zeta)) / (2.0 * step);
            const cplx dz = (h(lam, zeta + step) - h(lam, zeta - step)) / (2.0 * step);
            const double g2 = std::norm(dl) + std::norm(dz);
            if (g2 < 1e-30) break;
            lam -= hv * std::conj(dl) / g2;
            zeta -= hv * std::conj(dz) / g2;
            if (!inside(lam, zeta)) break;
            hv = h(lam, zeta);
            if (!is_finite(hv)) break;
          }
          if (ok && inside(lam, zeta)) zeros.emplace_back(lam, zeta);
        }

  rep.samples_used = zeros.size();
  if (zeros.empty()) {
    rep.pass = true;
    rep.note = "level set empty on the sampled cut";
    return rep;
  }

  std::vector<double> depths;
  depths.reserve(zeros.size());
  double deepest = 0.0, shallowest = std::numeric_limits<double>::infinity();
  for (const auto& [lam, zeta] : zeros) {
    const double d = boundary_distance(lam, zeta);
    depths.push_back(d);
    deepest = std::max(deepest, d);
    shallowest = std::min(shallowest, d);
  }
  rep.metric("zeros", double(zeros.size()));
  rep.metric("deepest", deepest);
  rep.metric("shallowest", shallowest);

  // bands halving toward the cut boundary, floored at the sampling resolution
  rep.pass = true;
  for (int k = 1; k <= 4; ++k) {
    const double threshold = std::max(deepest * std::pow(0.5, k), 1.1 * cell);
    bool hit = false;
    for (double d : depths) hit = hit || d <= threshold + 1e-12;
    if (!hit) {
      rep.pass = false;
      rep.note = "no level-set point within boundary band " + std::to_string(k);
      break;
    }
  }
  if (rep.pass && shallowest > std::max(1.1 * cell, deepest / 16.0)) {
    rep.pass = false;
    rep.note = "level set stays clear of the cut boundary (relatively compact)";
  }
  return rep;
}

std::optional<CPoint> sampled_local_max(const HoloFn& f, const SeminormSpec& p,
                                        const DomainSpec& omega, std::size_t grid_res) {
  const Box box = omega.sample_box();
  const std::size_t d = box.dim();
  std::vector<std::size_t> strides(d, 1);
  for (std::size_t a = d; a-- > 1;) strides[a - 1] = strides[a] * grid_res;
  const std::size_t total = strides[0] * grid_res;

  auto point_at = [&](std::size_t flat) {
    CPoint x = CPoint::zero(omega.ambient_dim());
    for (std::size_t a = 0; a < d; ++a) {
      const std::size_t i = (flat / strides[a]) % grid_res;
      const double coord =
          box.lo[a] + (double(i) + 0.5) * (box.hi[a] - box.lo[a]) / double(grid_res);
      const std::size_t ci = a / 2;
      cplx v = x[ci];
      v = (a % 2 == 0) ? cplx(coord, v.imag()) : cplx(v.real(), coord);
      x.set(ci, v);
    }
    return x;
  };

  for (std::size_t flat = 0; flat < total; ++flat) {
    const CPoint x = point_at(flat);
    if (!omega.contains(x)) continue;
    bool interior = true;
    bool is_max = true;
    const double here = seminorm_eval(p, f.eval(x));
    for (std::size_t a = 0; a < d && interior && is_max; ++a) {
      const std::size_t i = (flat / strides[a]) % grid_res;
      for (int step : {-1, +1}) {
        if ((step < 0 && i == 0) || (step > 0 && i + 1 == grid_res)) {
          interior = false;
          break;
        }
        const std::size_t nb = step < 0 ? flat - strides[a] : flat + strides[a];
        const CPoint y = point_at(nb);
        if (!omega.contains(y)) {
          interior = false;
          break;
        }
        if (seminorm_eval(p, f.eval(y)) > here + 1e-12) {
          is_max = false;
          break;
        }
      }
    }
    if (interior && is_max) return x;
  }
  return std::nullopt;
}

}  // namespace hartogs::checks
