#include "hartogs/companion.hpp"

#include <cmath>

#include "hartogs/errors.hpp"
#include "hartogs/rng.hpp"

namespace hartogs {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// (1/2 pi i) \oint_{dG} f(base + zeta dir) / zeta dzeta
CompanionResult integrate_representation(const HoloFn& f, const PlanarRegion& G,
                                         const CPoint& base, const CPoint& dir,
                                         const CompanionOptions& opts) {
  CompanionResult out;
  out.admissible_set_used = G;
  out.direction_used = dir;
  const Contour contour = contour_of(G, opts.quad.start_nodes);
  VectorIntegrand integrand = [&f, &base, &dir](cplx zeta) {
    std::vector<cplx> v = f.eval(base + zeta * dir);
    for (auto& c : v) c /= zeta;
    return v;
  };
  out.quadrature = integrate_contour(integrand, contour, opts.quad);
  if (!out.quadrature.converged && !opts.allow_unconverged)
    fail(errc::not_converged, "companion quadrature hit the node cap (est_error " +
                                  std::to_string(out.quadrature.est_error) + ")");
  out.value = out.quadrature.value;
  for (auto& c : out.value) c /= cplx(0.0, kTwoPi);
  return out;
}

std::vector<CPoint> direction_sweep(std::size_t ambient, std::size_t random_count) {
  std::vector<CPoint> dirs;
  for (std::size_t i = 0; i < ambient; ++i) dirs.push_back(CPoint::unit(i, ambient));
  // fixed stream: direction choice is part of the deterministic contract
  Rng rng(0x4861727467730ull);
  for (std::size_t k = 0; k < random_count; ++k) {
    CPoint u = CPoint::zero(ambient);
    double n2 = 0.0;
    for (std::size_t i = 0; i < ambient; ++i) {
      const cplx c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      u.set(i, c);
      n2 += std::norm(c);
    }
    if (n2 < 1e-12) continue;
    dirs.push_back((1.0 / std::sqrt(n2)) * u);
  }
  return dirs;
}

CompanionResult companion_along_line(const HoloFn& f, const CompactSpec& K,
                                     const DomainSpec& omega, const CPoint& x,
                                     const std::vector<CPoint>& directions,
                                     const std::optional<PlanarRegion>& G_opt,
                                     const CompanionOptions& opts) {
  if (!omega.contains(x))
    fail(errc::invalid_input, "companion: evaluation point outside Omega");
  if (G_opt) {
    if (directions.size() != 1)
      fail(errc::invalid_input, "companion: a supplied G needs a single supplied u");
    const AdmissibilityReport rep =
        check_admissible(*G_opt, x, directions[0], K, omega, opts.admissible);
    if (!rep.ok) fail(errc::admissibility_violation, rep.summary());
    return integrate_representation(f, *G_opt, x, directions[0], opts);
  }
  std::string last_failure = "no direction candidates";
  for (const CPoint& u : directions) {
    try {
      const PlanarRegion G = synthesize_admissible(x, u, K, omega, opts.admissible);
      return integrate_representation(f, G, x, u, opts);
    } catch (const ToolkitError& e) {
      if (e.code() != errc::synthesis_failed) throw;
      last_failure = e.what();
    }
  }
  fail(errc::synthesis_failed, "companion: every direction failed synthesis; last: " + last_failure);
}

}  // namespace

CompanionResult companion_1d(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                             cplx z, const CompanionOptions& opts) {
  if (f.ambient && *f.ambient != 1)
    fail(errc::invalid_input, "companion_1d needs a univariate map");
  CPoint x = CPoint::zero(1);
  x.set(0, z);
  // D = z + G with G admissible for (z, 1) gives exactly the 1-companion
  // integral (1/2 pi i) \oint_{dD} f(w)/(w - z) dw.
  return companion_along_line(f, K, omega, x, {CPoint::unit(0, 1)}, std::nullopt, opts);
}

CompanionResult companion_nd(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                             const CPoint& x, std::optional<CPoint> u,
                             std::optional<PlanarRegion> G, const CompanionOptions& opts) {
  std::size_t ambient = 0;
  if (omega.ambient_dim()) ambient = *omega.ambient_dim();
  else if (f.ambient) ambient = *f.ambient;
  if (ambient < 2) fail(errc::invalid_input, "companion_nd needs ambient dimension >= 2");

  std::vector<CPoint> dirs;
  if (u) {
    if (u->is_zero()) fail(errc::invalid_input, "companion_nd: u must be nonzero");
    dirs.push_back(*u);
  } else {
    if (G) fail(errc::invalid_input, "companion_nd: G without u is not meaningful");
    dirs = direction_sweep(ambient, opts.sweep_random_dirs);
  }
  return companion_along_line(f, K, omega, x, dirs, G, opts);
}

CompanionResult companion_outer(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                                const CPoint& u, const CPoint& x, const CompanionOptions& opts) {
  if (u.is_zero()) fail(errc::invalid_input, "companion_outer: u must be nonzero");
  if (!omega.contains(x)) fail(errc::invalid_input, "companion_outer: x outside Omega");

  const LineCut cut = K.line_cut(LineSlice(x, u));
  if (cut.kind == LineCut::Kind::whole_line)
    fail(errc::line_cut_not_compact, "K cuts the whole line L_x(u)");

  if (cut.known_empty()) {
    // the line misses K entirely; the 1-companion of the restriction is f itself
    CompanionResult out;
    out.direction_used = u;
    out.value = f.eval(x);
    for (cplx c : out.value)
      if (!is_finite(c)) fail(errc::non_finite, "companion_outer: f not finite at x");
    out.quadrature.value = out.value;
    out.quadrature.converged = true;
    return out;
  }
  return companion_along_line(f, K, omega, x, {u}, std::nullopt, opts);
}

CompanionResult companion_finitely_open(const HoloFn& f, const CompactSpec& K,
                                        const DomainSpec& omega, const CPoint& x,
                                        const PlaneSlice& plane, const CompanionOptions& opts) {
  if (!omega.contains(x)) fail(errc::invalid_input, "companion_finitely_open: x outside Omega");
  if (!(plane.base - x).is_zero() && (plane.base - x).norm() > 1e-12)
    fail(errc::invalid_input, "companion_finitely_open: plane must pass through x");

  // coarse compactness probe of the K-cut of the plane: members found at
  // ever larger plane radii mean the cut is unbounded
  {
    double outermost = 0.0;
    for (double radius : {1.0, 4.0, 16.0, 64.0, 256.0, 1024.0}) {
      bool hit = false;
      const int spots = 64;
      for (int k = 0; k < spots && !hit; ++k) {
        const double t = kTwoPi * double(k) / double(spots);
        const cplx lam = radius * cplx(std::cos(t), std::sin(t));
        const cplx zeta = radius * cplx(std::cos(3.0 * t + 0.7), std::sin(3.0 * t + 0.7));
        if (K.contains(plane.embed(lam, zeta)) || K.contains(plane.embed(lam, 0.0)) ||
            K.contains(plane.embed(0.0, zeta)))
          hit = true;
      }
      if (hit) outermost = radius;
    }
    if (outermost >= 1024.0)
      fail(errc::cut_not_compact, "plane cut of K appears unbounded");
  }

  // directions inside the plane; the plane representation formula reduces to
  // line integrals along x + C (a dir1 + b dir2)
  std::vector<CPoint> dirs;
  dirs.push_back(plane.dir1);
  dirs.push_back(plane.dir2);
  const double inv_sqrt2 = 0.7071067811865475244;
  dirs.push_back(inv_sqrt2 * (plane.dir1 + plane.dir2));
  dirs.push_back(inv_sqrt2 * (plane.dir1 - plane.dir2));
  Rng rng(0x706c616e65ull);
  for (int k = 0; k < 4; ++k) {
    const cplx a(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const cplx b(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    if (n < 1e-6) continue;
    dirs.push_back((1.0 / n) * (a * plane.dir1 + b * plane.dir2));
  }
  return companion_along_line(f, K, omega, x, dirs, std::nullopt, opts);
}

}  // namespace hartogs
