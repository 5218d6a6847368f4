#include "hartogs/region.hpp"

#include <algorithm>

#include "hartogs/errors.hpp"

namespace hartogs {

PlanarRegion::PlanarRegion(std::vector<Disc> discs, double clearance) : discs_(std::move(discs)) {
  for (const auto& d : discs_) {
    if (!(d.radius > 0.0) || !is_finite(d.center))
      fail(errc::invalid_input, "PlanarRegion disc must have finite center and positive radius");
  }
  for (std::size_t i = 0; i < discs_.size(); ++i) {
    for (std::size_t j = i + 1; j < discs_.size(); ++j) {
      const double gap = std::abs(discs_[i].center - discs_[j].center) -
                         (discs_[i].radius + discs_[j].radius);
      if (gap < clearance)
        fail(errc::invalid_input, "PlanarRegion discs must be pairwise disjoint (gap " +
                                      std::to_string(gap) + ")");
    }
  }
}

double PlanarRegion::depth(cplx z) const {
  double best = -1e300;
  for (const auto& d : discs_) best = std::max(best, d.depth(z));
  return best;
}

PlanarRegion PlanarRegion::inflated(double delta) const {
  std::vector<Disc> out = discs_;
  for (auto& d : out) d.radius += delta;
  return PlanarRegion(out);
}

Contour contour_of(const PlanarRegion& region, std::size_t node_hint) {
  Contour c;
  c.node_hint = node_hint;
  for (const auto& d : region.discs()) c.curves.push_back({d.center, d.radius, +1});
  return c;
}

namespace {

Disc disc_from2(cplx a, cplx b) {
  return Disc{0.5 * (a + b), 0.5 * std::abs(a - b)};
}

// circumscribed circle; falls back to the two-point disc when degenerate
Disc disc_from3(cplx a, cplx b, cplx c) {
  const double ax = a.real(), ay = a.imag();
  const double bx = b.real(), by = b.imag();
  const double cx = c.real(), cy = c.imag();
  const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  if (std::abs(d) < 1e-14) {
    Disc d1 = disc_from2(a, b), d2 = disc_from2(a, c), d3 = disc_from2(b, c);
    Disc best = d1;
    if (d2.radius > best.radius) best = d2;
    if (d3.radius > best.radius) best = d3;
    return best;
  }
  const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
  const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
  const cplx center(ux, uy);
  return Disc{center, std::abs(a - center)};
}

bool in_disc(const Disc& d, cplx p) { return std::abs(p - d.center) <= d.radius * (1.0 + 1e-12) + 1e-300; }

Disc welzl(std::vector<cplx>& pts, std::size_t n, std::vector<cplx>& boundary) {
  if (n == 0 || boundary.size() == 3) {
    switch (boundary.size()) {
      case 0: return Disc{0.0, 0.0};
      case 1: return Disc{boundary[0], 0.0};
      case 2: return disc_from2(boundary[0], boundary[1]);
      default: return disc_from3(boundary[0], boundary[1], boundary[2]);
    }
  }
  const cplx p = pts[n - 1];
  Disc d = welzl(pts, n - 1, boundary);
  if (in_disc(d, p)) return d;
  boundary.push_back(p);
  d = welzl(pts, n - 1, boundary);
  boundary.pop_back();
  return d;
}

}  // namespace

Disc min_enclosing_disc(const std::vector<cplx>& points, double pad) {
  if (points.empty()) fail(errc::empty_samples, "min_enclosing_disc needs at least one point");
  std::vector<cplx> pts = points;
  // deterministic shuffle for the expected-linear recursion depth
  std::uint64_t s = 0x2545f4914f6cdd1dull;
  for (std::size_t i = pts.size(); i > 1; --i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    std::swap(pts[i - 1], pts[s % i]);
  }
  std::vector<cplx> boundary;
  Disc d = welzl(pts, pts.size(), boundary);
  d.radius += pad;
  return d;
}

}  // namespace hartogs
