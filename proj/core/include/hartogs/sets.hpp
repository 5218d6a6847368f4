#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hartogs/cpoint.hpp"
#include "hartogs/region.hpp"

namespace hartogs {

// Axis-aligned box in R^{2n}; real coordinates ordered re0, im0, re1, im1, ...
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dim() const { return lo.size(); }
  bool valid() const { return !lo.empty() && lo.size() == hi.size(); }

  bool contains(const std::vector<double>& x) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
  }

  Box dilated(double pad) const {
    Box b = *this;
    for (std::size_t i = 0; i < b.lo.size(); ++i) {
      b.lo[i] -= pad;
      b.hi[i] += pad;
    }
    return b;
  }

  static Box hull(const Box& a, const Box& b) {
    Box out = a;
    for (std::size_t i = 0; i < out.lo.size(); ++i) {
      out.lo[i] = std::min(out.lo[i], b.lo[i]);
      out.hi[i] = std::max(out.hi[i], b.hi[i]);
    }
    return out;
  }

  // enclosing radius around the origin of C^n
  double radius_bound() const {
    double s = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i)
      s += std::max(lo[i] * lo[i], hi[i] * hi[i]);
    return std::sqrt(s);
  }
};

// bilinear pairing sum c_i x_i (no conjugation)
inline cplx dot(const CPoint& c, const CPoint& x) {
  cplx s = 0.0;
  for (const auto& e : c.entries()) s += e.value * x[e.index];
  return s;
}

class CompactSpec;

// Membership predicate with metadata for the open set Omega. Every kind is
// open by construction.
class DomainSpec {
 public:
  enum class Kind {
    ball,
    polydisc,
    halfspace,
    norm_functional,
    sequence_omega_rho,
    union_of,
    difference_with_compact,
  };

  static DomainSpec ball(CPoint center, double radius);
  static DomainSpec polydisc(CPoint center, double radius, std::size_t dim);
  // { x : Re(sum c_i x_i) > threshold }; unbounded, so a sampling box is required
  static DomainSpec halfspace(CPoint functional, double threshold, Box sample_box);
  // { x : |x| < |sum c_i x_i|^alpha }; unbounded with bounded 2-cuts along
  // planes where the functional is constant
  static DomainSpec norm_functional(CPoint functional, double alpha, Box sample_box);
  // { u finitely supported : |u_t| < 2 rho(t) pointwise }
  static DomainSpec sequence_omega_rho(double rho_default,
                                       std::map<std::size_t, double> rho_overrides = {});
  static DomainSpec union_of(std::vector<DomainSpec> members);
  static DomainSpec difference(DomainSpec base, CompactSpec excluded);

  Kind kind() const { return kind_; }
  bool contains(const CPoint& x) const;
  std::optional<std::size_t> ambient_dim() const { return ambient_; }

  // bounded box enclosing the set (for rejection sampling); fails for
  // sequence-space kinds
  Box sample_box() const;

  // rho value at an index (sequence kind only)
  double rho_at(std::size_t index) const;

  const CPoint& center() const { return center_; }
  double radius() const { return radius_; }
  const std::vector<DomainSpec>& members() const { return members_; }
  const CompactSpec* excluded() const { return excluded_.get(); }
  const DomainSpec* base() const { return members_.empty() ? nullptr : &members_[0]; }

  std::string describe() const;

 private:
  DomainSpec() = default;

  Kind kind_ = Kind::ball;
  std::optional<std::size_t> ambient_;
  CPoint center_;        // ball/polydisc center, halfspace functional
  double radius_ = 0.0;  // ball/polydisc radius, halfspace threshold
  double rho_default_ = 1.0;
  std::map<std::size_t, double> rho_overrides_;
  std::vector<DomainSpec> members_;  // union members; [0] = base for difference
  std::shared_ptr<CompactSpec> excluded_;
  std::optional<Box> explicit_box_;
};

// Exact description of K intersected with an affine line, in the line's
// zeta coordinate. Cover synthesis and admissibility certification both
// work from this.
struct LineCut {
  enum class Kind { empty, points, disc, annulus, disc_intersection, whole_line };

  Kind kind = Kind::empty;
  std::vector<cplx> points;   // points kind
  cplx center{0.0, 0.0};      // disc / annulus
  double r_inner = 0.0;
  double r_outer = 0.0;
  std::vector<Disc> discs;    // disc_intersection: cut = intersection of all

  bool known_empty() const { return kind == Kind::empty; }

  // representative points of the cut, spaced at roughly 1/density apart
  std::vector<cplx> sample(double density) const;

  // proposal discs whose union contains the cut
  std::vector<Disc> cover_proposal() const;
};

// Membership predicate with metadata for the compact set K.
class CompactSpec {
 public:
  CompactSpec() = default;  // the empty compact

  enum class Kind {
    empty,
    closed_ball,
    sphere,
    finite_point_set,
    parametric_curve,
    moment_curve,
    pointwise_bound,
  };

  static CompactSpec make_empty();
  static CompactSpec closed_ball(CPoint center, double radius);
  // spherical shell { r - thickness <= |x - c| <= r + thickness }; a genuine
  // thickness keeps grid classification meaningful at finite resolution
  static CompactSpec sphere(CPoint center, double radius, double thickness);
  static CompactSpec finite_points(std::vector<CPoint> points, double snap_tol = 1e-9);
  // coordinates (p_0(z), ..., p_{m-1}(z)), zero beyond; optional clip keeps
  // only points inside a domain (e.g. K = Omega intersect curve)
  static CompactSpec parametric_curve(std::vector<std::vector<cplx>> coeffs,
                                      std::optional<DomainSpec> clip, Box bounding_box,
                                      double snap_tol = 1e-9);
  // (z^0, z^1, ..., z^{length-1}) for z in a finite parameter list
  static CompactSpec moment_curve(std::vector<cplx> a_values, std::size_t length);
  // { u : |u_t| <= rho(t) pointwise }
  static CompactSpec pointwise_bound(double rho_default,
                                     std::map<std::size_t, double> rho_overrides = {});

  Kind kind() const { return kind_; }
  bool is_empty_kind() const { return kind_ == Kind::empty; }
  bool contains(const CPoint& x) const;
  std::optional<std::size_t> ambient_dim() const { return ambient_; }

  // enclosing box; fails for pointwise_bound (sequence mode has no finite box)
  Box bounding_box() const;

  // exact cut with an affine line
  LineCut line_cut(const LineSlice& line) const;

  double rho_at(std::size_t index) const;

  const CPoint& center() const { return center_; }
  double radius() const { return radius_; }
  double thickness() const { return thickness_; }
  const std::vector<CPoint>& point_list() const { return points_; }
  const std::vector<std::vector<cplx>>& curve_coeffs() const { return coeffs_; }
  const DomainSpec* clip() const { return clip_ ? clip_.get() : nullptr; }

  std::string describe() const;

 private:
  Kind kind_ = Kind::empty;
  std::optional<std::size_t> ambient_;
  CPoint center_;
  double radius_ = 0.0;
  double thickness_ = 0.0;
  double snap_tol_ = 1e-9;
  std::vector<CPoint> points_;
  std::vector<std::vector<cplx>> coeffs_;
  std::shared_ptr<DomainSpec> clip_;
  double rho_default_ = 1.0;
  std::map<std::size_t, double> rho_overrides_;
  std::optional<Box> explicit_box_;
};

// restriction of a membership predicate to an affine line
std::function<bool(cplx)> cut_restrict(const DomainSpec& set, const LineSlice& slice);
std::function<bool(cplx)> cut_restrict(const CompactSpec& set, const LineSlice& slice);

// restriction to an affine 2-plane
std::function<bool(cplx, cplx)> cut_restrict(const DomainSpec& set, const PlaneSlice& slice);
std::function<bool(cplx, cplx)> cut_restrict(const CompactSpec& set, const PlaneSlice& slice);

// roots of a complex polynomial given by coefficients c[0] + c[1] z + ...
// (Durand-Kerner with Newton polish; intended for the small degrees of the
// catalog curves)
std::vector<cplx> poly_roots(std::vector<cplx> coeffs);

cplx poly_eval(const std::vector<cplx>& coeffs, cplx z);

}  // namespace hartogs
