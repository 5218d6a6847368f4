#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hartogs/companion.hpp"
#include "hartogs/grid.hpp"
#include "hartogs/oracles.hpp"
#include "hartogs/rng.hpp"

namespace hartogs::checks {

struct CheckOptions {
  std::uint64_t seed = 42;
  double identity_tol = 1e-8;     // pointwise companion comparisons
  double image_threshold = 0.05;  // sampled-image distances at the finest level
  CompanionOptions companion;     // quadrature tol defaults to 1e-10
};

struct CheckReport {
  std::string check_id;
  bool pass = false;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  CPoint witness;
  std::optional<CPoint> witness_pair;
  std::size_t samples_used = 0;
  std::vector<std::pair<std::string, double>> metrics;
  std::string note;

  void metric(const std::string& k, double v) { metrics.emplace_back(k, v); }
  double metric_value(const std::string& k) const;
};

// planar open target sets for the inertia clause (domains of holomorphy in C)
struct PlanarSet {
  enum class Kind { disc, halfplane };
  Kind kind = Kind::disc;
  cplx center{0.0, 0.0};  // disc center, or halfplane inward normal
  double param = 1.0;     // radius, or offset: { Re(conj(normal) w) > offset }

  bool contains(cplx w) const {
    if (kind == Kind::disc) return std::abs(w - center) < param;
    return (std::conj(center) * w).real() > param;
  }
};

// rejection samplers over the set sampling boxes
CPoint sample_in(const DomainSpec& omega, Rng& rng);
CPoint sample_in_minus(const DomainSpec& omega, const CompactSpec& K, Rng& rng);

// Caches the Omega components and per-component complement fills so that
// many coincidence queries against one grid stay O(fill) total.
class CoincidenceClassifier {
 public:
  explicit CoincidenceClassifier(const GridComplex& grid);
  // x must already be located on the grid
  bool classify(std::size_t flat) const;
  const ComponentReport& omega_components() const { return omega_comps_; }

 private:
  const GridComplex& grid_;
  ComponentReport omega_comps_;
  mutable std::vector<std::pair<int, ComponentReport>> complement_by_omega_;
};

// |companion - f| on sampled coincidence points
CheckReport verify_coincidence(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                               const GridComplex& grid, std::size_t n_samples,
                               const CheckOptions& opts = {});

// companion values against the sampled image of f (set distance for m = 1,
// hull distance otherwise) with refinement monotonicity over nested sample
// prefixes; optional inertia clause against a planar domain of holomorphy
CheckReport verify_range_and_inertia(const HoloFn& f, const CompactSpec& K,
                                     const DomainSpec& omega,
                                     const std::vector<std::size_t>& sample_sizes,
                                     std::size_t probe_points,
                                     const std::optional<PlanarSet>& D = std::nullopt,
                                     const CheckOptions& opts = {});

// symmetric sampled-image Hausdorff distance between f(Omega) and
// f(Omega \ K); g must be defined on all of Omega
CheckReport verify_excision(const HoloFn& g, const CompactSpec& K, const DomainSpec& omega,
                            const std::vector<std::size_t>& sample_sizes,
                            const CheckOptions& opts = {});

// geometry for the operator-bound clause: everything lives in one 2-plane
struct OperatorBoundGeometry {
  PlaneSlice plane;
  cplx center{0.0, 0.0};      // plane coordinates of the concentric disc pair
  double k0_radius = 0.0;     // inner compact K0 (must contain the K cut)
  double omega0_radius = 0.0; // outer open Omega0 (closure inside the Omega cut)
  std::size_t m_points = 50;
  std::size_t shell_samples = 4000;
};

// restriction round trips: H(rho(g)) = g always; rho(H(f)) = f when the
// complement of K is connected; the locally constant counterexample when it
// is not; optional seminorm bound p_M(H f) <= sup |f| on the shell
CheckReport verify_roundtrips(const HoloFn& g, const CompactSpec& K, const DomainSpec& omega,
                              const GridComplex& grid, std::size_t n_samples,
                              const std::optional<OperatorBoundGeometry>& bound_geometry =
                                  std::nullopt,
                              const CheckOptions& opts = {});

// companion(g o f) against g(companion(f)) on samples
CheckReport verify_composition(const HoloFn& f, const HoloFn& g_outer, const CompactSpec& K,
                               const DomainSpec& omega, std::size_t n_samples,
                               const CheckOptions& opts = {});

// interior sup of p(f) against the sampled 2-boundary sup; for scalar f also
// the one-sided image distance under refinement
CheckReport verify_boundary(const HoloFn& f, const DomainSpec& omega,
                            const std::vector<PlaneSlice>& slices, std::size_t n_samples,
                            const CheckOptions& opts = {},
                            const std::optional<SeminormSpec>& p = std::nullopt);

// max-min seminorm principle at a declared local maximum c: global-minimum
// clause, affine flatness of the sampled range, nonvanishing clause
CheckReport verify_max_min(const HoloFn& f, const SeminormSpec& p, const DomainSpec& omega,
                           const CPoint& c, std::size_t n_samples,
                           const CheckOptions& opts = {});

// agreement on a small ball propagates to agreement on Omega
CheckReport verify_identity(const HoloFn& f1, const HoloFn& f2, const DomainSpec& omega,
                            const CPoint& c_center, double c_radius, std::size_t n_samples,
                            const CheckOptions& opts = {});

// sampled level set {f = value} on a 2-plane cut must reach every annular
// band approaching the cut boundary (non-relative-compactness proxy)
CheckReport verify_level_sets(const HoloFn& f, const DomainSpec& omega, const PlaneSlice& slice,
                              cplx value, const CheckOptions& opts = {});

// sampled search for a tau_1-local maximum of p(f) over a structured grid;
// used by the max-min scenarios and their negative controls
std::optional<CPoint> sampled_local_max(const HoloFn& f, const SeminormSpec& p,
                                        const DomainSpec& omega, std::size_t grid_res);

}  // namespace hartogs::checks
