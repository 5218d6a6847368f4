#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hartogs/cpoint.hpp"
#include "hartogs/sets.hpp"

namespace hartogs {

enum class CellLabel : std::uint8_t { in_k = 0, in_omega_not_k = 1, outside_omega = 2 };

enum class GridRegion { omega, omega_minus_k, complement_of_k };

// Sampled box in R^{2n} (n <= 2, i.e. at most 4 real dimensions) classified
// by cell centers. All connectivity claims of the toolkit run through this;
// the virtual layer outside the box counts as one more "outside" shell, so a
// component touching the box boundary is the unbounded one whenever the box
// dominates K (enforced at construction: box must contain the K bounding box
// dilated by two cell widths).
class GridComplex {
 public:
  using RealPred = std::function<bool(const std::vector<double>&)>;
  using PointLift = std::function<CPoint(const std::vector<double>&)>;

  // predicate-level constructor (used directly by the slice strategy)
  GridComplex(RealPred in_k, RealPred in_omega, Box box, std::size_t resolution,
              PointLift lift = {});

  std::size_t dim() const { return box_.dim(); }
  std::size_t resolution() const { return resolution_; }
  std::size_t cell_count() const { return labels_.size(); }
  const Box& box() const { return box_; }
  double cell_width(std::size_t axis) const {
    return (box_.hi[axis] - box_.lo[axis]) / double(resolution_);
  }

  CellLabel label(std::size_t flat) const { return labels_[flat]; }
  std::vector<double> cell_center(std::size_t flat) const;
  CPoint cell_point(std::size_t flat) const;
  std::optional<std::size_t> locate(const CPoint& x) const;
  bool on_box_boundary(std::size_t flat) const;

  bool in_region(std::size_t flat, GridRegion region) const {
    switch (region) {
      case GridRegion::omega: return labels_[flat] != CellLabel::outside_omega;
      case GridRegion::omega_minus_k: return labels_[flat] == CellLabel::in_omega_not_k;
      case GridRegion::complement_of_k: return labels_[flat] != CellLabel::in_k;
    }
    return false;
  }

  // face-adjacent neighbors of a flat index
  void neighbors(std::size_t flat, std::vector<std::size_t>& out) const;

 private:
  Box box_;
  std::size_t resolution_ = 0;
  std::vector<std::size_t> strides_;
  std::vector<CellLabel> labels_;
  PointLift lift_;
};

// spec-level factory; checks dimensions and the dilated-bounding-box rule
GridComplex build_grid(const CompactSpec& K, const DomainSpec& omega, const Box& box,
                       std::size_t resolution);

struct ComponentInfo {
  int id = -1;
  CPoint representative;
  std::size_t cell_count = 0;
  bool touches_box_boundary = false;
};

struct ComponentReport {
  std::vector<ComponentInfo> components;
  std::optional<int> unbounded_component_id;
  bool connected = false;  // component count <= 1
  std::vector<std::int32_t> cell_component;  // per cell; -1 outside the region

  std::size_t count() const { return components.size(); }
};

// flood fill over the cells of a region (face adjacency)
ComponentReport components(const GridComplex& grid, GridRegion region);

// flood fill over an arbitrary per-cell mask
ComponentReport components_masked(const GridComplex& grid, const std::vector<bool>& in_region);

bool is_connected(const GridComplex& grid, GridRegion region);

// Grid-strategy coincidence test: x lies in its Omega-component omega and in
// the unbounded component of the complement of (K cut omega).
bool coincidence_membership(const CPoint& x, const CompactSpec& K, const DomainSpec& omega,
                            const GridComplex& grid);

// Slice strategy for ambient real dimension > 4: witnesses membership on
// sampled 2-planes through x; false means "not witnessed", never a proof.
struct SliceStrategyOptions {
  std::size_t plane_count = 6;
  std::size_t resolution = 41;
  double plane_radius = 0.0;  // 0: derived from the Omega sampling box
  std::uint64_t seed = 0x736c696365ull;
};
bool coincidence_membership_slice(const CPoint& x, const CompactSpec& K, const DomainSpec& omega,
                                  const SliceStrategyOptions& opts = {});

// Prop-style connectedness equivalences evaluated on both sides.
struct EquivalenceReport {
  bool omega_minus_k_connected = false;   // (1) lhs
  bool complement_connected = false;      //     rhs part 1 / (2),(3) lhs
  bool omega_connected = false;           //     rhs part 2
  bool per_component_complements = false; // (2) rhs
  bool per_component_shells = false;      // (3) rhs
  bool eq1_holds = false;
  bool eq2_holds = false;
  bool eq3_holds = false;
  bool all_hold = false;
};
EquivalenceReport connectedness_report(const GridComplex& grid);

// Boundary points of bounded plane cuts of Omega, located by bisection
// along rays from the slice base (axis directions first, then structured
// and seeded random directions). Returns embedded ambient points.
struct Boundary2Options {
  std::size_t rays_per_slice = 512;
  double bisect_tol = 1e-12;
  std::uint64_t seed = 0x62647279ull;
};
std::vector<CPoint> boundary2_sample(const DomainSpec& omega, const std::vector<PlaneSlice>& slices,
                                     const Boundary2Options& opts = {});

// one row per cell: center coordinates, classification, component id
void dump_cells_csv(std::ostream& os, const GridComplex& grid, const ComponentReport& report);

}  // namespace hartogs
