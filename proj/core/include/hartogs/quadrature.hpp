#pragma once

#include <functional>
#include <vector>

#include "hartogs/cpoint.hpp"
#include "hartogs/region.hpp"

namespace hartogs {

struct QuadratureOptions {
  double tol = 1e-10;
  std::size_t start_nodes = 64;
  std::size_t node_cap = 1 << 14;  // per curve
};

struct QuadratureResult {
  std::vector<cplx> value;   // one component per codomain dimension
  double est_error = 0.0;    // difference between the last two refinement levels
  std::size_t nodes_used = 0;
  bool converged = false;

  cplx scalar() const { return value.empty() ? cplx(0.0) : value[0]; }
};

using VectorIntegrand = std::function<std::vector<cplx>(cplx)>;

// Contour integral of the integrand over all curves, trapezoid rule per
// circle with doubling node counts until successive levels differ by at
// most tol (spectrally accurate for integrands analytic near the circle).
// Throws non_finite if the integrand produces a non-finite value; a hit
// node cap is reported through converged=false rather than an exception.
QuadratureResult integrate_contour(const VectorIntegrand& integrand, const Contour& contour,
                                   const QuadratureOptions& opts = {});

// scalar convenience wrapper
QuadratureResult integrate_contour(const std::function<cplx(cplx)>& integrand,
                                   const Contour& contour, const QuadratureOptions& opts = {});

// Index of z with respect to the contour via (1/2 pi i) \oint dzeta/(zeta-z).
// Requires z at distance >= boundary_clearance from every curve and a
// rounding residual of at most 0.01.
int winding_number(const Contour& contour, cplx z, const QuadratureOptions& opts = {},
                   double boundary_clearance = 1e-9);

}  // namespace hartogs
