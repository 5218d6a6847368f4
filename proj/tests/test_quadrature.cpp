#include <doctest.h>

#include <cmath>

#include "hartogs/errors.hpp"
#include "hartogs/quadrature.hpp"

using namespace hartogs;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Contour unit_circle() {
  Contour c;
  c.curves.push_back({cplx(0.0, 0.0), 1.0, +1});
  return c;
}

// fixed-node trapezoid value for convergence-rate measurements
cplx trapezoid_fixed(const std::function<cplx(cplx)>& f, const OrientedCircle& c, std::size_t n) {
  cplx sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = kTwoPi * double(k) / double(n);
    const cplx e(std::cos(t), std::sin(t));
    sum += f(c.center + c.radius * e) * cplx(0.0, 1.0) * c.radius * e;
  }
  return sum * (kTwoPi / double(n));
}

}  // namespace

TEST_CASE("Cauchy kernel integrals on the unit circle") {
  const Contour c = unit_circle();

  auto inv = [](cplx z) { return 1.0 / z; };
  const QuadratureResult q1 = integrate_contour(inv, c);
  CHECK(std::abs(q1.scalar() - cplx(0.0, kTwoPi)) < 1e-12);
  CHECK(q1.est_error <= 1e-12);
  CHECK(q1.converged);

  auto lin = [](cplx z) { return z; };
  CHECK(std::abs(integrate_contour(lin, c).scalar()) < 1e-12);

  auto outside_pole = [](cplx z) { return 1.0 / (z - 2.0); };
  CHECK(std::abs(integrate_contour(outside_pole, c).scalar()) < 1e-12);
}

TEST_CASE("exponential convergence for the pole-at-0.3 integrand") {
  const OrientedCircle circle{cplx(0.0, 0.0), 1.0, +1};
  auto f = [](cplx z) { return 1.0 / (z - 0.3); };
  const cplx exact(0.0, kTwoPi);

  const double e8 = std::abs(trapezoid_fixed(f, circle, 8) - exact);
  const double e16 = std::abs(trapezoid_fixed(f, circle, 16) - exact);
  const double e256 = std::abs(trapezoid_fixed(f, circle, 256) - exact);

  // error ~ 0.3^N: doubling squares the error until roundoff
  CHECK(e256 <= 1e-10);
  CHECK(e16 <= e8 * e8 * 100.0 + 1e-15);
  CHECK(std::log(e16) / std::log(e8) > 1.8);
}

TEST_CASE("orientation antisymmetry is exact on the same nodes") {
  Contour pos = unit_circle();
  Contour neg = unit_circle();
  neg.curves[0].orientation = -1;
  auto f = [](cplx z) { return std::exp(z) / (z - 0.2); };
  QuadratureOptions opts;
  opts.node_cap = opts.start_nodes;  // freeze the node count
  const cplx a = integrate_contour(f, pos, opts).scalar();
  const cplx b = integrate_contour(f, neg, opts).scalar();
  CHECK(a == -b);
}

TEST_CASE("linearity within twice the tolerance") {
  const Contour c = unit_circle();
  auto f = [](cplx z) { return 1.0 / (z - 0.4); };
  auto g = [](cplx z) { return std::exp(z) / z; };
  const cplx alpha(0.7, -0.1), beta(-2.0, 0.3);
  auto combo = [&](cplx z) { return alpha * f(z) + beta * g(z); };
  QuadratureOptions opts;
  const cplx lhs = integrate_contour(combo, c, opts).scalar();
  const cplx rhs = alpha * integrate_contour(f, c, opts).scalar() +
                   beta * integrate_contour(g, c, opts).scalar();
  CHECK(std::abs(lhs - rhs) <= 2.0 * opts.tol);
}

TEST_CASE("vector integrands integrate componentwise") {
  const Contour c = unit_circle();
  VectorIntegrand f = [](cplx z) { return std::vector<cplx>{1.0 / z, z * z}; };
  const QuadratureResult q = integrate_contour(f, c);
  REQUIRE(q.value.size() == 2);
  CHECK(std::abs(q.value[0] - cplx(0.0, kTwoPi)) < 1e-12);
  CHECK(std::abs(q.value[1]) < 1e-12);
}

TEST_CASE("non-finite integrand values raise") {
  const Contour c = unit_circle();
  auto bad = [](cplx z) { return 1.0 / (z - 1.0); };  // pole on the contour
  CHECK_THROWS_AS(integrate_contour(bad, c), ToolkitError);
}

TEST_CASE("node cap reports non-convergence without throwing") {
  Contour c;
  c.curves.push_back({cplx(0.0, 0.0), 1.0, +1});
  // pole just off the contour: needs many nodes
  auto f = [](cplx z) { return 1.0 / (z - cplx(1.0 + 1e-7, 0.0)); };
  QuadratureOptions opts;
  opts.node_cap = 128;
  const QuadratureResult q = integrate_contour(f, c, opts);
  CHECK(!q.converged);
  CHECK(q.est_error > opts.tol);
}

TEST_CASE("winding numbers: unit circle and multi-curve additivity") {
  const Contour c = unit_circle();
  CHECK(winding_number(c, cplx(0.0, 0.0)) == 1);
  CHECK(winding_number(c, cplx(3.0, 0.0)) == 0);

  Contour two;
  two.curves.push_back({cplx(0.0, 0.0), 1.0, +1});
  two.curves.push_back({cplx(4.0, 0.0), 1.0, +1});
  CHECK(winding_number(two, cplx(4.0, 0.2)) == 1);

  CHECK_THROWS_AS(winding_number(c, cplx(1.0, 0.0)), ToolkitError);
}

TEST_CASE("winding number follows the orientation sign") {
  Contour neg;
  neg.curves.push_back({cplx(0.0, 0.0), 1.0, -1});
  CHECK(winding_number(neg, cplx(0.0, 0.0)) == -1);
  CHECK(winding_number(neg, cplx(2.5, 0.0)) == 0);
}
