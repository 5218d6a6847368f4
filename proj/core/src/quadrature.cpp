#include "hartogs/quadrature.hpp"

#include <cmath>

#include "hartogs/errors.hpp"

namespace hartogs {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct CurveSum {
  std::vector<cplx> total;  // sum over current nodes of f(z(t)) * z'(t)
  std::size_t nodes = 0;
};

// trapezoid sum over n equispaced nodes of the 2pi-periodic pullback;
// reuses nothing -- callers double by evaluating only the odd nodes
std::vector<cplx> eval_nodes(const VectorIntegrand& f, const OrientedCircle& c, std::size_t n,
                             std::size_t stride_offset, std::size_t stride) {
  std::vector<cplx> acc;
  for (std::size_t k = stride_offset; k < n; k += stride) {
    const double t = kTwoPi * double(k) / double(n);
    const cplx e(std::cos(t), std::sin(t));
    const cplx z = c.center + c.radius * e;
    const cplx dz = cplx(0.0, 1.0) * c.radius * e;  // z'(t)
    std::vector<cplx> fv = f(z);
    if (acc.empty()) acc.assign(fv.size(), 0.0);
    if (fv.size() != acc.size())
      fail(errc::invalid_input, "integrand returned inconsistent codomain dimension");
    for (std::size_t j = 0; j < fv.size(); ++j) {
      const cplx term = fv[j] * dz;
      if (!is_finite(term))
        fail(errc::non_finite, "integrand produced a non-finite value on a contour node");
      acc[j] += term;
    }
  }
  return acc;
}

double sup_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

QuadratureResult integrate_contour(const VectorIntegrand& integrand, const Contour& contour,
                                   const QuadratureOptions& opts) {
  if (!(opts.tol > 0.0)) fail(errc::invalid_input, "quadrature tolerance must be positive");
  QuadratureResult result;
  if (contour.curves.empty()) {
    result.converged = true;
    return result;
  }
  const double per_curve_tol = opts.tol / double(contour.curves.size());
  result.converged = true;

  for (const auto& curve : contour.curves) {
    std::size_t n = std::max<std::size_t>(opts.start_nodes, contour.node_hint);
    std::vector<cplx> sum = eval_nodes(integrand, curve, n, 0, 1);
    std::vector<cplx> value(sum.size());
    for (std::size_t j = 0; j < sum.size(); ++j) value[j] = sum[j] * (kTwoPi / double(n));
    double err = 1e300;

    while (n < opts.node_cap) {
      // nodes of 2n include the old ones at even positions
      const std::size_t n2 = 2 * n;
      std::vector<cplx> odd = eval_nodes(integrand, curve, n2, 1, 2);
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += odd[j];
      std::vector<cplx> value2(sum.size());
      for (std::size_t j = 0; j < sum.size(); ++j) value2[j] = sum[j] * (kTwoPi / double(n2));
      err = sup_diff(value2, value);
      value = std::move(value2);
      n = n2;
      if (err <= per_curve_tol) break;
    }

    if (err > per_curve_tol) result.converged = false;
    result.est_error += (err >= 1e300 ? 0.0 : err);
    result.nodes_used += n;
    if (result.value.empty()) result.value.assign(value.size(), 0.0);
    const double sign = curve.orientation >= 0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < value.size(); ++j) result.value[j] += sign * value[j];
  }
  return result;
}

QuadratureResult integrate_contour(const std::function<cplx(cplx)>& integrand,
                                   const Contour& contour, const QuadratureOptions& opts) {
  VectorIntegrand wrap = [&integrand](cplx z) { return std::vector<cplx>{integrand(z)}; };
  return integrate_contour(wrap, contour, opts);
}

int winding_number(const Contour& contour, cplx z, const QuadratureOptions& opts,
                   double boundary_clearance) {
  for (const auto& c : contour.curves) {
    const double d = std::abs(std::abs(z - c.center) - c.radius);
    if (d < boundary_clearance)
      fail(errc::on_boundary, "winding number query point lies on a contour curve");
  }
  auto integrand = [z](cplx zeta) { return 1.0 / (zeta - z); };
  const QuadratureResult q = integrate_contour(integrand, contour, opts);
  const cplx index = q.scalar() / cplx(0.0, kTwoPi);
  const double re = index.real();
  const long rounded = std::lround(re);
  const double residual = std::hypot(re - double(rounded), index.imag());
  if (residual > 0.01)
    fail(errc::indeterminate, "winding number residual " + std::to_string(residual));
  return static_cast<int>(rounded);
}

}  // namespace hartogs
