#include "hartogs/sets.hpp"

#include <algorithm>
#include <cmath>

#include "hartogs/errors.hpp"

namespace hartogs {

// ---------------------------------------------------------------------------
// polynomial helpers
// ---------------------------------------------------------------------------

cplx poly_eval(const std::vector<cplx>& coeffs, cplx z) {
  cplx v = 0.0;
  for (std::size_t i = coeffs.size(); i > 0; --i) v = v * z + coeffs[i - 1];
  return v;
}

namespace {

std::vector<cplx> poly_scale_add(const std::vector<cplx>& a, cplx s, const std::vector<cplx>& b) {
  // a + s * b
  std::vector<cplx> out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += s * b[i];
  return out;
}

void poly_trim(std::vector<cplx>& c, double tol) {
  double scale = 0.0;
  for (auto v : c) scale = std::max(scale, std::abs(v));
  while (!c.empty() && std::abs(c.back()) <= tol * std::max(scale, 1.0)) c.pop_back();
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
  std::vector<cplx> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(double(i) * c[i]);
  return d;
}

}  // namespace

std::vector<cplx> poly_roots(std::vector<cplx> coeffs) {
  poly_trim(coeffs, 1e-14);
  if (coeffs.size() <= 1) return {};
  const std::size_t deg = coeffs.size() - 1;
  if (deg == 1) return {-coeffs[0] / coeffs[1]};
  if (deg == 2) {
    const cplx a = coeffs[2], b = coeffs[1], c = coeffs[0];
    const cplx disc = std::sqrt(b * b - 4.0 * a * c);
    // pick the sign that avoids cancellation
    const cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    std::vector<cplx> roots;
    if (std::abs(q) > 0.0) {
      roots.push_back(q / a);
      roots.push_back(c / q);
    } else {
      roots.push_back(0.0);
      roots.push_back(0.0);
    }
    return roots;
  }

  // Durand-Kerner for the remaining small degrees
  for (auto& v : coeffs) v /= coeffs.back();
  std::vector<cplx> r(deg);
  const cplx seed(0.4, 0.9);
  cplx p = 1.0;
  for (std::size_t i = 0; i < deg; ++i) {
    p *= seed;
    r[i] = p;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      cplx num = poly_eval(coeffs, r[i]);
      cplx den = 1.0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) den *= (r[i] - r[j]);
      if (std::abs(den) < 1e-300) den = 1e-300;
      const cplx delta = num / den;
      r[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  // Newton polish
  const auto d = poly_derivative(coeffs);
  for (auto& root : r) {
    for (int k = 0; k < 4; ++k) {
      const cplx dv = poly_eval(d, root);
      if (std::abs(dv) < 1e-300) break;
      root -= poly_eval(coeffs, root) / dv;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// DomainSpec
// ---------------------------------------------------------------------------

DomainSpec DomainSpec::ball(CPoint center, double radius) {
  if (!(radius > 0.0)) fail(errc::invalid_input, "ball radius must be positive");
  if (!center.ambient_dim()) fail(errc::invalid_input, "ball center must carry an ambient dimension");
  DomainSpec d;
  d.kind_ = Kind::ball;
  d.center_ = std::move(center);
  d.radius_ = radius;
  d.ambient_ = d.center_.ambient_dim();
  return d;
}

DomainSpec DomainSpec::polydisc(CPoint center, double radius, std::size_t dim) {
  if (!(radius > 0.0)) fail(errc::invalid_input, "polydisc radius must be positive");
  DomainSpec d;
  d.kind_ = Kind::polydisc;
  center.set_ambient_dim(dim);
  d.center_ = std::move(center);
  d.radius_ = radius;
  d.ambient_ = dim;
  return d;
}

DomainSpec DomainSpec::halfspace(CPoint functional, double threshold, Box sample_box) {
  if (functional.is_zero()) fail(errc::invalid_input, "halfspace functional must be nonzero");
  if (!sample_box.valid() || sample_box.dim() % 2 != 0)
    fail(errc::invalid_input, "halfspace needs a valid sampling box over R^{2n}");
  DomainSpec d;
  d.kind_ = Kind::halfspace;
  d.ambient_ = functional.ambient_dim() ? functional.ambient_dim()
                                        : std::optional<std::size_t>(sample_box.dim() / 2);
  d.center_ = std::move(functional);
  d.radius_ = threshold;
  d.explicit_box_ = std::move(sample_box);
  return d;
}

DomainSpec DomainSpec::norm_functional(CPoint functional, double alpha, Box sample_box) {
  if (functional.is_zero()) fail(errc::invalid_input, "norm_functional needs a nonzero functional");
  if (!(alpha >= 1.0)) fail(errc::invalid_input, "norm_functional needs alpha >= 1");
  if (!sample_box.valid() || sample_box.dim() % 2 != 0)
    fail(errc::invalid_input, "norm_functional needs a valid sampling box over R^{2n}");
  DomainSpec d;
  d.kind_ = Kind::norm_functional;
  d.ambient_ = functional.ambient_dim() ? functional.ambient_dim()
                                        : std::optional<std::size_t>(sample_box.dim() / 2);
  d.center_ = std::move(functional);
  d.radius_ = alpha;
  d.explicit_box_ = std::move(sample_box);
  return d;
}

DomainSpec DomainSpec::sequence_omega_rho(double rho_default,
                                          std::map<std::size_t, double> rho_overrides) {
  if (!(rho_default > 0.0)) fail(errc::invalid_input, "rho must be positive");
  DomainSpec d;
  d.kind_ = Kind::sequence_omega_rho;
  d.rho_default_ = rho_default;
  d.rho_overrides_ = std::move(rho_overrides);
  for (const auto& [idx, v] : d.rho_overrides_)
    if (!(v > 0.0)) fail(errc::invalid_input, "rho must be positive");
  return d;
}

DomainSpec DomainSpec::union_of(std::vector<DomainSpec> members) {
  if (members.empty()) fail(errc::invalid_input, "union needs at least one member");
  DomainSpec d;
  d.kind_ = Kind::union_of;
  d.ambient_ = members[0].ambient_;
  d.members_ = std::move(members);
  return d;
}

DomainSpec DomainSpec::difference(DomainSpec base, CompactSpec excluded) {
  DomainSpec d;
  d.kind_ = Kind::difference_with_compact;
  d.ambient_ = base.ambient_;
  d.members_.push_back(std::move(base));
  d.excluded_ = std::make_shared<CompactSpec>(std::move(excluded));
  return d;
}

bool DomainSpec::contains(const CPoint& x) const {
  switch (kind_) {
    case Kind::ball:
      return (x - center_).norm() < radius_;
    case Kind::polydisc:
      return (x - center_).sup_norm() < radius_;
    case Kind::halfspace:
      return std::real(dot(center_, x)) > radius_;
    case Kind::norm_functional:
      return x.norm() < std::pow(std::abs(dot(center_, x)), radius_);
    case Kind::sequence_omega_rho:
      for (const auto& e : x.entries())
        if (!(std::abs(e.value) < 2.0 * rho_at(e.index))) return false;
      return true;
    case Kind::union_of:
      for (const auto& m : members_)
        if (m.contains(x)) return true;
      return false;
    case Kind::difference_with_compact:
      return members_[0].contains(x) && !excluded_->contains(x);
  }
  return false;
}

double DomainSpec::rho_at(std::size_t index) const {
  auto it = rho_overrides_.find(index);
  return it == rho_overrides_.end() ? rho_default_ : it->second;
}

Box DomainSpec::sample_box() const {
  switch (kind_) {
    case Kind::ball:
    case Kind::polydisc: {
      const std::size_t n = *ambient_;
      Box b;
      b.lo.resize(2 * n);
      b.hi.resize(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        const cplx c = center_[i];
        b.lo[2 * i] = c.real() - radius_;
        b.hi[2 * i] = c.real() + radius_;
        b.lo[2 * i + 1] = c.imag() - radius_;
        b.hi[2 * i + 1] = c.imag() + radius_;
      }
      return b;
    }
    case Kind::halfspace:
    case Kind::norm_functional:
      return *explicit_box_;
    case Kind::union_of: {
      Box b = members_[0].sample_box();
      for (std::size_t i = 1; i < members_.size(); ++i) b = Box::hull(b, members_[i].sample_box());
      return b;
    }
    case Kind::difference_with_compact:
      return members_[0].sample_box();
    case Kind::sequence_omega_rho:
      fail(errc::unbounded_cut, "sequence-space domain has no finite sampling box");
  }
  fail(errc::invalid_input, "unhandled domain kind");
}

std::string DomainSpec::describe() const {
  switch (kind_) {
    case Kind::ball: return "ball(r=" + std::to_string(radius_) + ")";
    case Kind::polydisc: return "polydisc(r=" + std::to_string(radius_) + ")";
    case Kind::halfspace: return "halfspace";
    case Kind::norm_functional: return "norm<phi^" + std::to_string(radius_);
    case Kind::sequence_omega_rho: return "omega_rho";
    case Kind::union_of: return "union(" + std::to_string(members_.size()) + ")";
    case Kind::difference_with_compact: return members_[0].describe() + " \\ " + excluded_->describe();
  }
  return "?";
}

// ---------------------------------------------------------------------------
// CompactSpec
// ---------------------------------------------------------------------------

CompactSpec CompactSpec::make_empty() {
  CompactSpec k;
  k.kind_ = Kind::empty;
  return k;
}

CompactSpec CompactSpec::closed_ball(CPoint center, double radius) {
  if (!(radius >= 0.0)) fail(errc::invalid_input, "closed ball radius must be nonnegative");
  if (!center.ambient_dim())
    fail(errc::invalid_input, "closed ball center must carry an ambient dimension");
  CompactSpec k;
  k.kind_ = Kind::closed_ball;
  k.center_ = std::move(center);
  k.radius_ = radius;
  k.ambient_ = k.center_.ambient_dim();
  return k;
}

CompactSpec CompactSpec::sphere(CPoint center, double radius, double thickness) {
  if (!(radius > 0.0) || !(thickness > 0.0) || thickness >= radius)
    fail(errc::invalid_input, "sphere needs 0 < thickness < radius");
  if (!center.ambient_dim())
    fail(errc::invalid_input, "sphere center must carry an ambient dimension");
  CompactSpec k;
  k.kind_ = Kind::sphere;
  k.center_ = std::move(center);
  k.radius_ = radius;
  k.thickness_ = thickness;
  k.ambient_ = k.center_.ambient_dim();
  return k;
}

CompactSpec CompactSpec::finite_points(std::vector<CPoint> points, double snap_tol) {
  if (points.empty()) fail(errc::invalid_input, "finite point set must be nonempty (use make_empty)");
  CompactSpec k;
  k.kind_ = Kind::finite_point_set;
  k.points_ = std::move(points);
  k.snap_tol_ = snap_tol;
  k.ambient_ = k.points_[0].ambient_dim();
  return k;
}

CompactSpec CompactSpec::parametric_curve(std::vector<std::vector<cplx>> coeffs,
                                          std::optional<DomainSpec> clip, Box bounding_box,
                                          double snap_tol) {
  if (coeffs.empty()) fail(errc::invalid_input, "parametric curve needs coordinate polynomials");
  if (!bounding_box.valid() || bounding_box.dim() % 2 != 0)
    fail(errc::invalid_input, "parametric curve needs a bounding box over R^{2n}");
  CompactSpec k;
  k.kind_ = Kind::parametric_curve;
  k.coeffs_ = std::move(coeffs);
  if (clip) k.clip_ = std::make_shared<DomainSpec>(std::move(*clip));
  k.explicit_box_ = std::move(bounding_box);
  k.snap_tol_ = snap_tol;
  k.ambient_ = k.explicit_box_->dim() / 2;
  return k;
}

CompactSpec CompactSpec::moment_curve(std::vector<cplx> a_values, std::size_t length) {
  if (a_values.empty() || length == 0) fail(errc::invalid_input, "moment curve needs parameters");
  CompactSpec k;
  k.kind_ = Kind::moment_curve;
  k.ambient_ = length;
  for (cplx a : a_values) {
    CPoint p = CPoint::zero(length);
    cplx pow = 1.0;  // convention z^0 = 1 for every z
    for (std::size_t j = 0; j < length; ++j) {
      p.set(j, pow);
      pow *= a;
    }
    k.points_.push_back(std::move(p));
  }
  return k;
}

CompactSpec CompactSpec::pointwise_bound(double rho_default,
                                         std::map<std::size_t, double> rho_overrides) {
  if (!(rho_default > 0.0)) fail(errc::invalid_input, "rho must be positive");
  CompactSpec k;
  k.kind_ = Kind::pointwise_bound;
  k.rho_default_ = rho_default;
  k.rho_overrides_ = std::move(rho_overrides);
  return k;
}

double CompactSpec::rho_at(std::size_t index) const {
  auto it = rho_overrides_.find(index);
  return it == rho_overrides_.end() ? rho_default_ : it->second;
}

namespace {

// candidate parameters z with curve(z) ~ x, using the lowest-degree
// nonconstant coordinate polynomial
std::vector<cplx> curve_param_candidates(const std::vector<std::vector<cplx>>& coeffs,
                                         const CPoint& x) {
  int best = -1;
  std::size_t best_deg = SIZE_MAX;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<cplx> c = coeffs[i];
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() >= 2 && c.size() - 1 < best_deg) {
      best = static_cast<int>(i);
      best_deg = c.size() - 1;
    }
  }
  if (best < 0) return {};
  std::vector<cplx> shifted = coeffs[best];
  if (shifted.empty()) shifted.push_back(0.0);
  shifted[0] -= x[static_cast<std::size_t>(best)];
  return poly_roots(shifted);
}

}  // namespace

bool CompactSpec::contains(const CPoint& x) const {
  switch (kind_) {
    case Kind::empty:
      return false;
    case Kind::closed_ball:
      return (x - center_).norm() <= radius_;
    case Kind::sphere: {
      const double d = (x - center_).norm();
      return d >= radius_ - thickness_ && d <= radius_ + thickness_;
    }
    case Kind::finite_point_set:
    case Kind::moment_curve:
      for (const auto& p : points_)
        if ((x - p).norm() <= snap_tol_) return true;
      return false;
    case Kind::parametric_curve: {
      for (cplx z : curve_param_candidates(coeffs_, x)) {
        double resid = 0.0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
          resid = std::max(resid, std::abs(poly_eval(coeffs_[i], z) - x[i]));
        for (const auto& e : x.entries())
          if (e.index >= coeffs_.size()) resid = std::max(resid, std::abs(e.value));
        if (resid <= snap_tol_) {
          if (clip_ && !clip_->contains(x)) continue;
          return true;
        }
      }
      return false;
    }
    case Kind::pointwise_bound:
      for (const auto& e : x.entries())
        if (!(std::abs(e.value) <= rho_at(e.index))) return false;
      return true;
  }
  return false;
}

Box CompactSpec::bounding_box() const {
  switch (kind_) {
    case Kind::empty:
      fail(errc::invalid_input, "empty compact has no bounding box");
    case Kind::closed_ball:
    case Kind::sphere: {
      const std::size_t n = *ambient_;
      const double r = radius_ + thickness_;
      Box b;
      b.lo.resize(2 * n);
      b.hi.resize(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        const cplx c = center_[i];
        b.lo[2 * i] = c.real() - r;
        b.hi[2 * i] = c.real() + r;
        b.lo[2 * i + 1] = c.imag() - r;
        b.hi[2 * i + 1] = c.imag() + r;
      }
      return b;
    }
    case Kind::finite_point_set:
    case Kind::moment_curve: {
      std::size_t n = ambient_ ? *ambient_ : 0;
      if (n == 0) {
        for (const auto& p : points_) n = std::max(n, p.max_index() + 1);
      }
      Box b;
      b.lo.assign(2 * n, 1e300);
      b.hi.assign(2 * n, -1e300);
      for (const auto& p : points_) {
        for (std::size_t i = 0; i < n; ++i) {
          const cplx v = p[i];
          b.lo[2 * i] = std::min(b.lo[2 * i], v.real());
          b.hi[2 * i] = std::max(b.hi[2 * i], v.real());
          b.lo[2 * i + 1] = std::min(b.lo[2 * i + 1], v.imag());
          b.hi[2 * i + 1] = std::max(b.hi[2 * i + 1], v.imag());
        }
      }
      return b;
    }
    case Kind::parametric_curve:
      return *explicit_box_;
    case Kind::pointwise_bound:
      fail(errc::unbounded_cut, "pointwise bound set has no finite-dimensional bounding box");
  }
  fail(errc::invalid_input, "unhandled compact kind");
}

LineCut CompactSpec::line_cut(const LineSlice& line) const {
  LineCut cut;
  const CPoint& a = line.base;
  const CPoint& u = line.dir;
  switch (kind_) {
    case Kind::empty:
      return cut;

    case Kind::closed_ball:
    case Kind::sphere: {
      // |v + zeta u|^2 = |u|^2 |zeta - zeta0|^2 + d2
      const CPoint v = a - center_;
      const double u2 = std::norm(u.norm());
      const cplx w = inner(u, v);
      const cplx zeta0 = -std::conj(w) / u2;
      const double d2 = std::max(0.0, v.norm() * v.norm() - std::norm(w) / u2);
      const double r_hi = radius_ + thickness_;
      const double hi2 = r_hi * r_hi - d2;
      if (hi2 < 0.0) return cut;  // line misses K
      const double r_out = std::sqrt(hi2 / u2);
      if (kind_ == Kind::closed_ball) {
        cut.kind = LineCut::Kind::disc;
        cut.center = zeta0;
        cut.r_inner = 0.0;
        cut.r_outer = r_out;
        return cut;
      }
      const double r_lo = radius_ - thickness_;
      const double lo2 = r_lo * r_lo - d2;
      cut.kind = LineCut::Kind::annulus;
      cut.center = zeta0;
      cut.r_inner = lo2 > 0.0 ? std::sqrt(lo2 / u2) : 0.0;
      cut.r_outer = r_out;
      if (cut.r_inner == 0.0) cut.kind = LineCut::Kind::disc;
      return cut;
    }

    case Kind::finite_point_set:
    case Kind::moment_curve: {
      // solve a + zeta u = p per catalog point
      std::size_t j = 0;
      double best = -1.0;
      for (const auto& e : u.entries()) {
        if (std::abs(e.value) > best) {
          best = std::abs(e.value);
          j = e.index;
        }
      }
      cut.kind = LineCut::Kind::points;
      for (const auto& p : points_) {
        const cplx zeta = (p[j] - a[j]) / u[j];
        if ((a + zeta * u - p).norm() <= std::max(snap_tol_, 1e-9)) cut.points.push_back(zeta);
      }
      if (cut.points.empty()) cut.kind = LineCut::Kind::empty;
      return cut;
    }

    case Kind::parametric_curve: {
      // eliminate zeta through the strongest direction coordinate
      std::size_t jz = 0;
      double best = -1.0;
      for (const auto& e : u.entries()) {
        if (std::abs(e.value) > best) {
          best = std::abs(e.value);
          jz = e.index;
        }
      }
      const std::size_t m = coeffs_.size();
      std::size_t top = m;
      for (const auto& e : a.entries()) top = std::max(top, e.index + 1);
      for (const auto& e : u.entries()) top = std::max(top, e.index + 1);

      auto coord_poly = [&](std::size_t i) -> std::vector<cplx> {
        return i < m ? coeffs_[i] : std::vector<cplx>{};
      };
      // zeta(z) = (p_jz(z) - a_jz) / u_jz
      std::vector<cplx> zeta_poly = coord_poly(jz);
      if (zeta_poly.empty()) zeta_poly.push_back(0.0);
      zeta_poly[0] -= a[jz];
      for (auto& cf : zeta_poly) cf /= u[jz];

      std::vector<std::vector<cplx>> constraints;
      for (std::size_t i = 0; i < top; ++i) {
        if (i == jz) continue;
        // p_i(z) - a_i - u_i * zeta(z) = 0
        std::vector<cplx> q = coord_poly(i);
        if (q.empty()) q.push_back(0.0);
        q[0] -= a[i];
        q = poly_scale_add(q, -u[i], zeta_poly);
        poly_trim(q, 1e-13);
        constraints.push_back(std::move(q));
      }

      std::vector<cplx> candidates;
      bool any_nontrivial = false;
      for (const auto& q : constraints) {
        if (q.size() >= 2) {
          any_nontrivial = true;
          for (cplx z : poly_roots(q)) candidates.push_back(z);
        } else if (q.size() == 1 && std::abs(q[0]) > snap_tol_) {
          return cut;  // unsatisfiable constant constraint: empty cut
        }
      }
      if (!any_nontrivial) {
        cut.kind = LineCut::Kind::whole_line;
        return cut;
      }

      cut.kind = LineCut::Kind::points;
      for (cplx z : candidates) {
        double resid = 0.0;
        for (const auto& q : constraints) resid = std::max(resid, std::abs(poly_eval(q, z)));
        if (resid > 1e-7) continue;
        const cplx zeta = poly_eval(zeta_poly, z);
        const CPoint x = a + zeta * u;
        if (clip_ && !clip_->contains(x)) continue;
        bool dup = false;
        for (cplx seen : cut.points)
          if (std::abs(seen - zeta) < 1e-10) dup = true;
        if (!dup) cut.points.push_back(zeta);
      }
      if (cut.points.empty()) cut.kind = LineCut::Kind::empty;
      return cut;
    }

    case Kind::pointwise_bound: {
      for (const auto& e : a.entries()) {
        if (std::abs(u[e.index]) == 0.0 && std::abs(e.value) > rho_at(e.index))
          return cut;  // zeta-free constraint violated: empty
      }
      cut.kind = LineCut::Kind::disc_intersection;
      for (const auto& e : u.entries()) {
        const cplx c = -a[e.index] / e.value;
        cut.discs.push_back(Disc{c, rho_at(e.index) / std::abs(e.value)});
      }
      return cut;
    }
  }
  return cut;
}

std::string CompactSpec::describe() const {
  switch (kind_) {
    case Kind::empty: return "empty";
    case Kind::closed_ball: return "closed_ball(r=" + std::to_string(radius_) + ")";
    case Kind::sphere: return "sphere(r=" + std::to_string(radius_) + ",t=" + std::to_string(thickness_) + ")";
    case Kind::finite_point_set: return "points(" + std::to_string(points_.size()) + ")";
    case Kind::parametric_curve: return "curve";
    case Kind::moment_curve: return "moment_curve(" + std::to_string(points_.size()) + ")";
    case Kind::pointwise_bound: return "K_rho";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// LineCut sampling and covering
// ---------------------------------------------------------------------------

namespace {

void sample_circle(std::vector<cplx>& out, cplx center, double radius, double density,
                   std::size_t cap) {
  if (radius <= 0.0) {
    out.push_back(center);
    return;
  }
  std::size_t n = static_cast<std::size_t>(std::ceil(6.283185307179586 * radius * density));
  n = std::clamp<std::size_t>(n, 16, cap);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 6.283185307179586 * double(k) / double(n);
    out.push_back(center + radius * cplx(std::cos(t), std::sin(t)));
  }
}

void sample_disc_body(std::vector<cplx>& out, cplx center, double r_in, double r_out) {
  // coarse polar fill between the radii; boundary rings are sampled separately
  const int rings = 12, spokes = 48;
  for (int i = 0; i <= rings; ++i) {
    const double r = r_in + (r_out - r_in) * double(i) / double(rings);
    if (r <= 0.0) {
      out.push_back(center);
      continue;
    }
    for (int k = 0; k < spokes; ++k) {
      const double t = 6.283185307179586 * double(k) / double(spokes);
      out.push_back(center + r * cplx(std::cos(t), std::sin(t)));
    }
  }
}

}  // namespace

std::vector<cplx> LineCut::sample(double density) const {
  std::vector<cplx> out;
  const std::size_t cap = 8192;
  switch (kind) {
    case Kind::empty:
    case Kind::whole_line:
      return out;
    case Kind::points:
      return points;
    case Kind::disc:
      sample_circle(out, center, r_outer, density, cap);
      sample_disc_body(out, center, 0.0, r_outer);
      return out;
    case Kind::annulus:
      sample_circle(out, center, r_outer, density, cap);
      sample_circle(out, center, r_inner, density, cap);
      sample_disc_body(out, center, r_inner, r_outer);
      return out;
    case Kind::disc_intersection: {
      const Disc* smallest = nullptr;
      for (const auto& d : discs)
        if (!smallest || d.radius < smallest->radius) smallest = &d;
      if (!smallest) return out;
      std::vector<cplx> raw;
      sample_circle(raw, smallest->center, smallest->radius, density, cap);
      sample_disc_body(raw, smallest->center, 0.0, smallest->radius);
      for (cplx z : raw) {
        bool inside = true;
        for (const auto& d : discs)
          if (std::abs(z - d.center) > d.radius) inside = false;
        if (inside) out.push_back(z);
      }
      return out;
    }
  }
  return out;
}

std::vector<Disc> LineCut::cover_proposal() const {
  switch (kind) {
    case Kind::empty:
    case Kind::whole_line:
      return {};
    case Kind::points: {
      std::vector<Disc> out;
      for (cplx p : points) out.push_back(Disc{p, 0.0});
      return out;
    }
    case Kind::disc:
    case Kind::annulus:
      return {Disc{center, r_outer}};
    case Kind::disc_intersection: {
      const Disc* smallest = nullptr;
      for (const auto& d : discs)
        if (!smallest || d.radius < smallest->radius) smallest = &d;
      return smallest ? std::vector<Disc>{*smallest} : std::vector<Disc>{};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// cut_restrict
// ---------------------------------------------------------------------------

std::function<bool(cplx)> cut_restrict(const DomainSpec& set, const LineSlice& slice) {
  return [set, slice](cplx zeta) { return set.contains(slice.embed(zeta)); };
}

std::function<bool(cplx)> cut_restrict(const CompactSpec& set, const LineSlice& slice) {
  return [set, slice](cplx zeta) { return set.contains(slice.embed(zeta)); };
}

std::function<bool(cplx, cplx)> cut_restrict(const DomainSpec& set, const PlaneSlice& slice) {
  return [set, slice](cplx lam, cplx zeta) { return set.contains(slice.embed(lam, zeta)); };
}

std::function<bool(cplx, cplx)> cut_restrict(const CompactSpec& set, const PlaneSlice& slice) {
  return [set, slice](cplx lam, cplx zeta) { return set.contains(slice.embed(lam, zeta)); };
}

}  // namespace hartogs
