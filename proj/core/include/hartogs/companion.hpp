#pragma once

#include <optional>

#include "hartogs/admissible.hpp"
#include "hartogs/holofn.hpp"
#include "hartogs/quadrature.hpp"

namespace hartogs {

struct CompanionOptions {
  QuadratureOptions quad;
  AdmissibilityOptions admissible;
  bool allow_unconverged = false;   // return partial results instead of throwing
  std::size_t sweep_random_dirs = 8;
};

struct CompanionResult {
  std::vector<cplx> value;
  PlanarRegion admissible_set_used;
  CPoint direction_used;
  QuadratureResult quadrature;

  cplx scalar() const { return value.empty() ? cplx(0.0) : value[0]; }
};

// Hartogs 1-companion at z: (1/2 pi i) \oint_{dD} f(zeta)/(zeta - z) dzeta
// over a synthesized D with K and z inside and closure inside Omega.
CompanionResult companion_1d(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                             cplx z, const CompanionOptions& opts = {});

// Hartogs companion in C^n via the representation formula
// (1/2 pi i) \oint_{dG} f(x + zeta u) / zeta dzeta over an (x,u)-admissible G.
// When (u, G) are not supplied, u sweeps the coordinate unit vectors and a
// fixed seeded batch of random directions until synthesis succeeds.
CompanionResult companion_nd(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                             const CPoint& x, std::optional<CPoint> u = std::nullopt,
                             std::optional<PlanarRegion> G = std::nullopt,
                             const CompanionOptions& opts = {});

// Per-line construction along L_x(u) = x + C u: the 1-companion of the
// restriction at parameter 0. Requires the line cut of K to be compact;
// an empty cut short-circuits to f(x).
CompanionResult companion_outer(const HoloFn& f, const CompactSpec& K, const DomainSpec& omega,
                                const CPoint& u, const CPoint& x,
                                const CompanionOptions& opts = {});

// Finitely-open slicing: companion of the data restricted to a 2-plane
// through x, evaluated at x. Directions are swept inside the plane.
CompanionResult companion_finitely_open(const HoloFn& f, const CompactSpec& K,
                                        const DomainSpec& omega, const CPoint& x,
                                        const PlaneSlice& plane,
                                        const CompanionOptions& opts = {});

}  // namespace hartogs
