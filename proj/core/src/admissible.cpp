#include "hartogs/admissible.hpp"

#include <algorithm>
#include <cmath>

#include "hartogs/errors.hpp"

namespace hartogs {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// circumscribing disc of two discs
Disc merge_two(const Disc& a, const Disc& b) {
  const double d = std::abs(a.center - b.center);
  if (d + b.radius <= a.radius) return a;
  if (d + a.radius <= b.radius) return b;
  const double r = 0.5 * (d + a.radius + b.radius);
  const cplx dir = (b.center - a.center) / d;
  return Disc{a.center + dir * (r - a.radius), r};
}

// every dilated closed disc must stay inside the Omega cut; samples the
// dilated boundary densely plus a coarse polar fill of the body (the fill
// matters when the Omega cut has holes)
bool closure_inside_omega(const PlanarRegion& G, double margin, const DomainSpec& omega,
                          const LineSlice& line, double density, cplx* witness) {
  for (const auto& disc : G.discs()) {
    const double r = disc.radius + margin;
    std::size_t n = static_cast<std::size_t>(std::ceil(kTwoPi * r * density));
    n = std::clamp<std::size_t>(n, 32, 8192);
    for (std::size_t k = 0; k < n; ++k) {
      const double t = kTwoPi * double(k) / double(n);
      const cplx zeta = disc.center + r * cplx(std::cos(t), std::sin(t));
      if (!omega.contains(line.embed(zeta))) {
        if (witness) *witness = zeta;
        return false;
      }
    }
    const int rings = 16, spokes = 48;
    for (int i = 0; i <= rings; ++i) {
      const double rr = r * double(i) / double(rings);
      for (int k = 0; k < (i == 0 ? 1 : spokes); ++k) {
        const double t = kTwoPi * double(k) / double(spokes);
        const cplx zeta = disc.center + rr * cplx(std::cos(t), std::sin(t));
        if (!omega.contains(line.embed(zeta))) {
          if (witness) *witness = zeta;
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::string AdmissibilityReport::summary() const {
  if (ok) return "admissible";
  return "not admissible: " + failure;
}

AdmissibilityReport check_admissible(const PlanarRegion& G, const CPoint& a, const CPoint& u,
                                     const CompactSpec& K, const DomainSpec& omega,
                                     const AdmissibilityOptions& opts) {
  AdmissibilityReport rep;
  if (u.is_zero()) {
    rep.failure = "direction u is zero";
    return rep;
  }
  if (G.empty()) {
    rep.failure = "region G is empty";
    return rep;
  }
  const LineSlice line(a, u);

  rep.zero_clearance = G.depth(0.0);
  if (rep.zero_clearance < opts.margin) {
    rep.failure = "0 not inside G with margin clearance (depth " +
                  std::to_string(rep.zero_clearance) + ")";
    return rep;
  }

  rep.omega_ok = closure_inside_omega(G, opts.margin, omega, line, opts.boundary_density,
                                      &rep.witness);
  if (!rep.omega_ok) {
    rep.failure = "closure of G (dilated by margin) leaves the Omega cut";
    return rep;
  }

  const LineCut cut = K.line_cut(line);
  if (cut.kind == LineCut::Kind::whole_line) {
    rep.failure = "line cut of K is not compact";
    return rep;
  }
  rep.cut_clearance = 1e300;
  for (cplx zeta : cut.sample(opts.boundary_density)) {
    const double depth = G.depth(zeta);
    if (depth < rep.cut_clearance) {
      rep.cut_clearance = depth;
      rep.witness = zeta;
    }
  }
  if (rep.cut_clearance >= 1e300) rep.cut_clearance = 0.0;  // empty cut: clause vacuous
  else if (rep.cut_clearance < opts.margin) {
    rep.failure = "K cut escapes G (worst depth " + std::to_string(rep.cut_clearance) + ")";
    return rep;
  }

  rep.ok = true;
  return rep;
}

PlanarRegion synthesize_admissible(const CPoint& a, const CPoint& u, const CompactSpec& K,
                                   const DomainSpec& omega, const AdmissibilityOptions& opts) {
  if (u.is_zero()) fail(errc::invalid_input, "synthesize_admissible: direction u is zero");
  if (!omega.contains(a)) fail(errc::invalid_input, "synthesize_admissible: base point outside Omega");

  const LineSlice line(a, u);
  const LineCut cut = K.line_cut(line);
  if (cut.kind == LineCut::Kind::whole_line)
    fail(errc::synthesis_failed, "line cut of K is not compact along " + K.describe());

  const double merge_gap = opts.merge_gap > 0.0 ? opts.merge_gap : 0.5 * opts.margin;
  std::string last_failure;

  for (double pad : {2.0 * opts.margin, 4.0 * opts.margin, opts.margin}) {
    std::vector<Disc> discs = cut.cover_proposal();
    discs.push_back(Disc{0.0, 0.0});  // 0 in G is mandatory
    for (auto& d : discs) d.radius += pad;

    // merge until pairwise disjoint with the configured gap
    bool merged = true;
    while (merged && discs.size() > 1) {
      merged = false;
      for (std::size_t i = 0; i < discs.size() && !merged; ++i) {
        for (std::size_t j = i + 1; j < discs.size() && !merged; ++j) {
          const double gap = std::abs(discs[i].center - discs[j].center) -
                             (discs[i].radius + discs[j].radius);
          if (gap < merge_gap) {
            discs[i] = merge_two(discs[i], discs[j]);
            discs.erase(discs.begin() + static_cast<std::ptrdiff_t>(j));
            merged = true;
          }
        }
      }
    }

    PlanarRegion G(discs);
    const AdmissibilityReport rep = check_admissible(G, a, u, K, omega, opts);
    if (rep.ok) return G;
    last_failure = rep.failure;
  }

  fail(errc::synthesis_failed, "no disc cover satisfies C_{G,u}(a): " + last_failure);
}

}  // namespace hartogs
