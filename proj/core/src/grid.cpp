#include "hartogs/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <ostream>

#include "hartogs/errors.hpp"
#include "hartogs/format.hpp"
#include "hartogs/rng.hpp"

namespace hartogs {

namespace {

CPoint default_lift(const std::vector<double>& coords) {
  CPoint p = CPoint::zero(coords.size() / 2);
  for (std::size_t i = 0; 2 * i + 1 < coords.size(); ++i)
    p.set(i, cplx(coords[2 * i], coords[2 * i + 1]));
  return p;
}

}  // namespace

GridComplex::GridComplex(RealPred in_k, RealPred in_omega, Box box, std::size_t resolution,
                         PointLift lift)
    : box_(std::move(box)), resolution_(resolution), lift_(std::move(lift)) {
  if (!box_.valid()) fail(errc::invalid_input, "grid box is invalid");
  if (box_.dim() > 4)
    fail(errc::dimension_too_high, "grids cover at most 4 real dimensions; use slice strategies");
  if (resolution_ < 3) fail(errc::invalid_input, "grid resolution must be at least 3");
  if (!lift_) lift_ = default_lift;

  const std::size_t d = box_.dim();
  strides_.assign(d, 1);
  for (std::size_t a = d; a-- > 1;) strides_[a - 1] = strides_[a] * resolution_;
  std::size_t total = strides_[0] * resolution_;
  labels_.resize(total);

  std::vector<double> coords(d);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t a = 0; a < d; ++a) {
      idx[a] = rem / strides_[a];
      rem %= strides_[a];
      coords[a] = box_.lo[a] + (double(idx[a]) + 0.5) * cell_width(a);
    }
    if (in_k(coords)) labels_[flat] = CellLabel::in_k;
    else if (in_omega(coords)) labels_[flat] = CellLabel::in_omega_not_k;
    else labels_[flat] = CellLabel::outside_omega;
  }
}

std::vector<double> GridComplex::cell_center(std::size_t flat) const {
  const std::size_t d = box_.dim();
  std::vector<double> coords(d);
  for (std::size_t a = 0; a < d; ++a) {
    const std::size_t i = (flat / strides_[a]) % resolution_;
    coords[a] = box_.lo[a] + (double(i) + 0.5) * cell_width(a);
  }
  return coords;
}

CPoint GridComplex::cell_point(std::size_t flat) const { return lift_(cell_center(flat)); }

std::optional<std::size_t> GridComplex::locate(const CPoint& x) const {
  const std::size_t d = box_.dim();
  std::size_t flat = 0;
  for (std::size_t a = 0; a < d; ++a) {
    const cplx v = x[a / 2];
    const double coord = (a % 2 == 0) ? v.real() : v.imag();
    const double rel = (coord - box_.lo[a]) / cell_width(a);
    if (rel < 0.0) return std::nullopt;
    std::size_t i = static_cast<std::size_t>(rel);
    if (i >= resolution_) {
      if (coord <= box_.hi[a]) i = resolution_ - 1;
      else return std::nullopt;
    }
    flat += i * strides_[a];
  }
  return flat;
}

bool GridComplex::on_box_boundary(std::size_t flat) const {
  for (std::size_t a = 0; a < box_.dim(); ++a) {
    const std::size_t i = (flat / strides_[a]) % resolution_;
    if (i == 0 || i + 1 == resolution_) return true;
  }
  return false;
}

void GridComplex::neighbors(std::size_t flat, std::vector<std::size_t>& out) const {
  out.clear();
  for (std::size_t a = 0; a < box_.dim(); ++a) {
    const std::size_t i = (flat / strides_[a]) % resolution_;
    if (i > 0) out.push_back(flat - strides_[a]);
    if (i + 1 < resolution_) out.push_back(flat + strides_[a]);
  }
}

GridComplex build_grid(const CompactSpec& K, const DomainSpec& omega, const Box& box,
                       std::size_t resolution) {
  if (box.dim() > 4)
    fail(errc::dimension_too_high, "grids cover at most 4 real dimensions; use slice strategies");
  if (!K.is_empty_kind()) {
    Box kb = K.bounding_box();
    if (kb.dim() != box.dim())
      fail(errc::invalid_input, "K bounding box dimension differs from grid box");
    const double two_cells =
        2.0 * (box.hi[0] - box.lo[0]) / double(resolution);
    for (std::size_t a = 0; a < box.dim(); ++a) {
      if (kb.lo[a] - two_cells < box.lo[a] || kb.hi[a] + two_cells > box.hi[a])
        fail(errc::box_too_small,
             "grid box must contain the K bounding box dilated by two cell widths");
    }
  }
  auto k_pred = [K](const std::vector<double>& c) { return K.contains(default_lift(c)); };
  auto o_pred = [omega](const std::vector<double>& c) { return omega.contains(default_lift(c)); };
  return GridComplex(k_pred, o_pred, box, resolution);
}

ComponentReport components_masked(const GridComplex& grid, const std::vector<bool>& in_region) {
  ComponentReport rep;
  rep.cell_component.assign(grid.cell_count(), -1);
  std::vector<std::size_t> nbrs;
  std::deque<std::size_t> queue;
  int next_id = 0;

  for (std::size_t seed = 0; seed < grid.cell_count(); ++seed) {
    if (!in_region[seed] || rep.cell_component[seed] >= 0) continue;
    ComponentInfo info;
    info.id = next_id;
    info.representative = grid.cell_point(seed);
    queue.push_back(seed);
    rep.cell_component[seed] = next_id;
    while (!queue.empty()) {
      const std::size_t cell = queue.front();
      queue.pop_front();
      ++info.cell_count;
      if (grid.on_box_boundary(cell)) info.touches_box_boundary = true;
      grid.neighbors(cell, nbrs);
      for (std::size_t nb : nbrs) {
        if (in_region[nb] && rep.cell_component[nb] < 0) {
          rep.cell_component[nb] = next_id;
          queue.push_back(nb);
        }
      }
    }
    rep.components.push_back(std::move(info));
    ++next_id;
  }

  rep.connected = rep.components.size() <= 1;
  const ComponentInfo* best = nullptr;
  for (const auto& c : rep.components) {
    if (!c.touches_box_boundary) continue;
    if (!best || c.cell_count > best->cell_count) best = &c;
  }
  if (best) rep.unbounded_component_id = best->id;
  return rep;
}

ComponentReport components(const GridComplex& grid, GridRegion region) {
  std::vector<bool> mask(grid.cell_count());
  for (std::size_t i = 0; i < grid.cell_count(); ++i) mask[i] = grid.in_region(i, region);
  return components_masked(grid, mask);
}

bool is_connected(const GridComplex& grid, GridRegion region) {
  return components(grid, region).connected;
}

namespace {

// shared core of both coincidence strategies: x's cell must sit in the
// unbounded component of the complement of (K cut omega-component-of-x)
bool coincidence_on_grid(const GridComplex& grid, std::size_t flat) {
  const ComponentReport omega_comps = components(grid, GridRegion::omega);
  const std::int32_t omega_id = omega_comps.cell_component[flat];
  if (omega_id < 0)
    fail(errc::indeterminate,
         "cell center classification disagrees with membership; raise the grid resolution");

  std::vector<bool> mask(grid.cell_count());
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    const bool blocked =
        grid.label(i) == CellLabel::in_k && omega_comps.cell_component[i] == omega_id;
    mask[i] = !blocked;
  }
  const ComponentReport comp = components_masked(grid, mask);
  if (!comp.unbounded_component_id) return false;
  return comp.cell_component[flat] == *comp.unbounded_component_id;
}

}  // namespace

bool coincidence_membership(const CPoint& x, const CompactSpec& K, const DomainSpec& omega,
                            const GridComplex& grid) {
  if (!omega.contains(x) || K.contains(x))
    fail(errc::not_in_domain, "coincidence_membership requires x in Omega \\ K");
  const auto flat = grid.locate(x);
  if (!flat) fail(errc::invalid_input, "x lies outside the grid box");
  return coincidence_on_grid(grid, *flat);
}

bool coincidence_membership_slice(const CPoint& x, const CompactSpec& K, const DomainSpec& omega,
                                  const SliceStrategyOptions& opts) {
  if (!omega.contains(x) || K.contains(x))
    fail(errc::not_in_domain, "coincidence_membership requires x in Omega \\ K");

  // candidate plane direction indices: all coordinates in finite ambient,
  // else the support of x padded with fresh sequence indices
  std::vector<std::size_t> idxs;
  if (x.ambient_dim()) {
    for (std::size_t i = 0; i < std::min<std::size_t>(*x.ambient_dim(), 6); ++i)
      idxs.push_back(i);
  } else {
    for (const auto& e : x.entries()) idxs.push_back(e.index);
    std::size_t fresh = x.entries().empty() ? 0 : x.max_index() + 1;
    while (idxs.size() < 4) idxs.push_back(fresh++);
  }
  if (idxs.size() < 2) fail(errc::dimension_too_high, "slice strategy needs ambient dimension >= 2");

  std::vector<PlaneSlice> planes;
  for (std::size_t a = 0; a < idxs.size() && planes.size() < opts.plane_count; ++a)
    for (std::size_t b = a + 1; b < idxs.size() && planes.size() < opts.plane_count; ++b)
      planes.emplace_back(x, CPoint::unit(idxs[a], x.ambient_dim()),
                          CPoint::unit(idxs[b], x.ambient_dim()));

  for (const auto& plane : planes) {
    double radius = opts.plane_radius;
    if (radius <= 0.0) {
      // tightest box that still encloses the K cut: distance to the K box
      // center plus its half diagonal, padded by a few cells
      bool derived = false;
      if (!K.is_empty_kind()) {
        try {
          const Box kb = K.bounding_box();
          CPoint center = CPoint::zero(x.ambient_dim());
          double half_diag2 = 0.0;
          for (std::size_t i = 0; 2 * i + 1 < kb.dim(); ++i) {
            center.set(i, cplx(0.5 * (kb.lo[2 * i] + kb.hi[2 * i]),
                               0.5 * (kb.lo[2 * i + 1] + kb.hi[2 * i + 1])));
            const double hre = 0.5 * (kb.hi[2 * i] - kb.lo[2 * i]);
            const double him = 0.5 * (kb.hi[2 * i + 1] - kb.lo[2 * i + 1]);
            half_diag2 += hre * hre + him * him;
          }
          radius = ((x - center).norm() + std::sqrt(half_diag2)) * 1.15 + 0.25;
          derived = true;
        } catch (const ToolkitError&) {
        }
      }
      if (!derived) {
        radius = 1.0 + x.sup_norm();
        for (const auto& e : plane.dir1.entries())
          radius = std::max(radius, 3.0 * omega.rho_at(e.index));
        for (const auto& e : plane.dir2.entries())
          radius = std::max(radius, 3.0 * omega.rho_at(e.index));
        radius += x.sup_norm() + 1.0;
      }
    }
    Box box;
    box.lo.assign(4, -radius);
    box.hi.assign(4, radius);

    auto embed = [&plane](const std::vector<double>& c) {
      return plane.embed(cplx(c[0], c[1]), cplx(c[2], c[3]));
    };
    // the K cut must be enclosed by the plane box for boundary-touching to
    // mean "unbounded": probe the box shell
    bool escapes = false;
    const int probes = 24;
    for (int a = 0; a < 4 && !escapes; ++a) {
      for (int side = 0; side < 2 && !escapes; ++side) {
        for (int k = 0; k < probes && !escapes; ++k) {
          std::vector<double> c(4);
          std::uint64_t h = std::uint64_t(a * 2 + side) * 1315423911u + std::uint64_t(k) * 2654435761u;
          for (int q = 0; q < 4; ++q) {
            h ^= h << 13; h ^= h >> 7; h ^= h << 17;
            c[q] = radius * (2.0 * double(h % 10007) / 10006.0 - 1.0);
          }
          c[a] = side ? radius : -radius;
          if (K.contains(embed(c))) escapes = true;
        }
      }
    }
    if (escapes) continue;

    GridComplex grid(
        [&K, &embed](const std::vector<double>& c) { return K.contains(embed(c)); },
        [&omega, &embed](const std::vector<double>& c) { return omega.contains(embed(c)); }, box,
        opts.resolution, [&embed](const std::vector<double>& c) { return embed(c); });
    const auto flat = grid.locate(CPoint(std::vector<cplx>{0.0, 0.0}));
    if (!flat) continue;
    try {
      if (coincidence_on_grid(grid, *flat)) return true;
    } catch (const ToolkitError& e) {
      if (e.code() != errc::indeterminate) throw;
    }
  }
  return false;  // not witnessed
}

EquivalenceReport connectedness_report(const GridComplex& grid) {
  EquivalenceReport rep;
  const ComponentReport omega_comps = components(grid, GridRegion::omega);
  const ComponentReport shell_comps = components(grid, GridRegion::omega_minus_k);
  const ComponentReport compl_comps = components(grid, GridRegion::complement_of_k);

  rep.omega_minus_k_connected = shell_comps.connected;
  rep.omega_connected = omega_comps.connected;
  rep.complement_connected = compl_comps.connected;

  rep.per_component_complements = true;
  rep.per_component_shells = true;
  for (const auto& comp : omega_comps.components) {
    std::vector<bool> compl_mask(grid.cell_count());
    std::vector<bool> shell_mask(grid.cell_count());
    for (std::size_t i = 0; i < grid.cell_count(); ++i) {
      const bool k_in_omega =
          grid.label(i) == CellLabel::in_k && omega_comps.cell_component[i] == comp.id;
      compl_mask[i] = !k_in_omega;
      shell_mask[i] =
          omega_comps.cell_component[i] == comp.id && grid.label(i) != CellLabel::in_k;
    }
    if (!components_masked(grid, compl_mask).connected) rep.per_component_complements = false;
    if (!components_masked(grid, shell_mask).connected) rep.per_component_shells = false;
  }

  rep.eq1_holds =
      rep.omega_minus_k_connected == (rep.complement_connected && rep.omega_connected);
  rep.eq2_holds = rep.complement_connected == rep.per_component_complements;
  rep.eq3_holds = rep.complement_connected == rep.per_component_shells;
  rep.all_hold = rep.eq1_holds && rep.eq2_holds && rep.eq3_holds;
  return rep;
}

std::vector<CPoint> boundary2_sample(const DomainSpec& omega, const std::vector<PlaneSlice>& slices,
                                     const Boundary2Options& opts) {
  std::vector<CPoint> out;
  for (const auto& slice : slices) {
    if (!omega.contains(slice.base)) continue;  // empty or unreachable cut

    double scale = 1.0;
    bool have_scale = false;
    try {
      scale = omega.sample_box().radius_bound() + slice.base.norm() + 1.0;
      have_scale = true;
    } catch (const ToolkitError&) {
      scale = 1e6;
    }
    const double t_cap = have_scale ? 4.0 * scale : scale;

    // direction set on S^3 in plane coordinates: axes, diagonal pairs, seeded
    std::vector<std::array<double, 4>> dirs;
    for (int a = 0; a < 4; ++a)
      for (int s = -1; s <= 1; s += 2) {
        std::array<double, 4> d{0, 0, 0, 0};
        d[a] = double(s);
        dirs.push_back(d);
      }
    const double isq = 0.7071067811865475;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int sa = -1; sa <= 1; sa += 2)
          for (int sb = -1; sb <= 1; sb += 2) {
            std::array<double, 4> d{0, 0, 0, 0};
            d[a] = isq * sa;
            d[b] = isq * sb;
            dirs.push_back(d);
          }
    Rng rng(opts.seed);
    while (dirs.size() < opts.rays_per_slice) {
      const auto v = rng.on_sphere(4);
      dirs.push_back({v[0], v[1], v[2], v[3]});
    }

    for (const auto& d : dirs) {
      auto at = [&](double t) {
        return slice.embed(cplx(t * d[0], t * d[1]), cplx(t * d[2], t * d[3]));
      };
      double t_in = 0.0, t_out = 1e-3;
      while (omega.contains(at(t_out))) {
        t_in = t_out;
        t_out *= 2.0;
        if (t_out > t_cap)
          fail(errc::unbounded_cut, "plane cut of Omega is unbounded along a sampled ray");
      }
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (t_in + t_out);
        if (omega.contains(at(mid))) t_in = mid;
        else t_out = mid;
        if (t_out - t_in <= opts.bisect_tol * std::max(1.0, t_out)) break;
      }
      out.push_back(at(0.5 * (t_in + t_out)));
    }
  }
  return out;
}

void dump_cells_csv(std::ostream& os, const GridComplex& grid, const ComponentReport& report) {
  const std::size_t d = grid.dim();
  for (std::size_t a = 0; a < d; ++a) os << (a % 2 == 0 ? "re" : "im") << a / 2 << ",";
  os << "label,component\n";
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    for (double c : grid.cell_center(i)) os << format_double(c) << ",";
    switch (grid.label(i)) {
      case CellLabel::in_k: os << "in_K"; break;
      case CellLabel::in_omega_not_k: os << "in_Omega_not_K"; break;
      case CellLabel::outside_omega: os << "outside_Omega"; break;
    }
    os << "," << report.cell_component[i] << "\n";
  }
}

}  // namespace hartogs
