#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hartogs/holofn.hpp"

namespace hartogs {

// Closed function catalog. Every entry ships deterministic metadata (poles,
// known extensions), which is what the oracles run on; a free-form
// expression language would lose that.
//
// ids:
//   constant            {"value": c | [c...], "ambient": n?}
//   coordinate          {"index": i, "ambient": n}
//   exp-plus-square     {"exp_index": i, "square_index": j, "ambient": n}
//   product-plus-square {"i": a, "j": b, "k": c, "ambient": n}    x_a x_b + x_c^2
//   exp-affine          {"index": i, "scale": s, "offset": o, "ambient": n}
//   poly-1d             {"coefficients": [c0, c1, ...]}
//   rational-1d         {"poles": [{"location": p, "principal": [c-1, c-2, ...]}],
//                        "poly": [c0, ...]}
//   piecewise-radial    {"radius": r, "thickness": t, "ambient": n,
//                        "inner": <catalog spec>, "outer": <catalog spec>,
//                        "inner_offset": e?, "outer_offset": e?}
//   seq-reciprocal      {"pole": c, "index": i}                    1/(c - x_i)
//   affine-pair         {"index": i, "constant": c}                x |-> (x_i, c)
//
// complex scalars are encoded as numbers or [re, im].
HoloFn catalog_fn(const std::string& id, const nlohmann::json& params);

std::vector<std::string> catalog_ids();

// exact companion oracle in dimension one: f minus the sum of the principal
// parts of its Laurent expansions
HoloFn regular_part(const HoloFn& f);

// Distance from y to the sample set or to its convex hull (in C^m = R^{2m}).
// Hull mode runs a support-point descent with a decreasing-objective
// stopping rule at the given tolerance.
enum class HullMode { set, convex_hull, closed_convex_hull };
double hull_distance(const std::vector<cplx>& y, const std::vector<std::vector<cplx>>& samples,
                     HullMode mode, double tol = 1e-10);

// Continuous seminorms on C^m used by the max-min checks.
struct SeminormSpec {
  enum class Kind { coordinate_modulus, max_norm, norm_with_functional };
  Kind kind = Kind::max_norm;
  std::size_t index = 0;      // coordinate_modulus / norm_with_functional nu
  std::size_t phi_index = 1;  // norm_with_functional phi
};

// norm_with_functional: p(y) = max{ |(y - phi(y) y0)_index|, |phi(y)| },
// with phi(y) = y_{phi_index} and y0 the phi_index-th basis vector
double seminorm_eval(const SeminormSpec& p, const std::vector<cplx>& y);

}  // namespace hartogs
