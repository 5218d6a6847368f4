#pragma once

#include <cstddef>
#include <vector>

#include "hartogs/cpoint.hpp"

namespace hartogs {

struct Disc {
  cplx center{0.0, 0.0};
  double radius = 0.0;

  bool contains(cplx z) const { return std::abs(z - center) < radius; }
  // inner clearance: positive inside, negative outside
  double depth(cplx z) const { return radius - std::abs(z - center); }
};

// Bounded open G subset of C as a finite union of pairwise disjoint open
// discs. Keeping the closed discs disjoint (gap >= clearance) makes the
// boundary a union of full circles, which the trapezoid quadrature handles
// with spectral accuracy.
class PlanarRegion {
 public:
  PlanarRegion() = default;
  explicit PlanarRegion(std::vector<Disc> discs, double clearance = 1e-12);

  const std::vector<Disc>& discs() const { return discs_; }
  bool empty() const { return discs_.empty(); }

  bool contains(cplx z) const {
    for (const auto& d : discs_)
      if (d.contains(z)) return true;
    return false;
  }

  // signed inner clearance of z within G (max over discs; negative outside)
  double depth(cplx z) const;

  // scale every radius by 1 + eps (used to probe alternative admissible sets)
  PlanarRegion inflated(double delta) const;

 private:
  std::vector<Disc> discs_;
};

struct OrientedCircle {
  cplx center{0.0, 0.0};
  double radius = 0.0;
  int orientation = +1;  // +1 leaves the disc to the left
};

struct Contour {
  std::vector<OrientedCircle> curves;
  std::size_t node_hint = 64;

  double total_length() const {
    double s = 0.0;
    for (const auto& c : curves) s += 6.283185307179586 * c.radius;
    return s;
  }
};

// Positively oriented boundary of G, one circle per disc.
Contour contour_of(const PlanarRegion& region, std::size_t node_hint = 64);

// Smallest disc enclosing all points (Welzl), optionally inflated by pad.
Disc min_enclosing_disc(const std::vector<cplx>& points, double pad = 0.0);

}  // namespace hartogs
