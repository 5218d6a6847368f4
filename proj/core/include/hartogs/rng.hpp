#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hartogs {

// splitmix64-based generator. Hand-rolled so that scenario reports are
// bit-reproducible across platforms and standard library versions
// (std::uniform_real_distribution makes no such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::complex<double> in_disc(std::complex<double> center, double radius) {
    for (;;) {
      double re = uniform(-1.0, 1.0), im = uniform(-1.0, 1.0);
      if (re * re + im * im < 1.0) return center + radius * std::complex<double>(re, im);
    }
  }

  std::complex<double> on_circle(std::complex<double> center, double radius) {
    double t = uniform() * 6.283185307179586476925286766559;
    return center + radius * std::complex<double>(std::cos(t), std::sin(t));
  }

  // uniform direction on the unit sphere of R^dim
  std::vector<double> on_sphere(std::size_t dim) {
    // Gaussian components, normalized; rejection keeps the distribution exact.
    std::vector<double> v(dim);
    double nrm2 = 0.0;
    for (;;) {
      nrm2 = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        // Box-Muller from two uniforms
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        nrm2 += v[i] * v[i];
      }
      if (nrm2 > 1e-24) break;
    }
    const double nrm = std::sqrt(nrm2);
    for (auto& x : v) x /= nrm;
    return v;
  }

  // derive an independent stream; handy for nested refinement sampling
  Rng fork(std::uint64_t salt) { return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ull)); }

 private:
  std::uint64_t state_;
};

}  // namespace hartogs
