#pragma once

#include <string>

#include "hartogs/cpoint.hpp"
#include "hartogs/region.hpp"
#include "hartogs/sets.hpp"

namespace hartogs {

struct AdmissibilityOptions {
  double margin = 0.05;            // clearance required of every clause
  double boundary_density = 512.0; // membership samples per unit length
  double merge_gap = 0.0;          // discs closer than this merge during synthesis;
                                   // 0 means margin/2
};

// Certification record for the condition C_{G,u}(a):
//   0 in G,   a + cl(G) u  subset  Omega,   K cut (a + C u)  subset  a + G u.
struct AdmissibilityReport {
  bool ok = false;
  double zero_clearance = 0.0;   // depth of 0 inside G
  double cut_clearance = 0.0;    // min depth of K-cut samples inside G
  bool omega_ok = false;         // dilated closure stayed inside the Omega cut
  std::string failure;           // empty when ok
  cplx witness{0.0, 0.0};        // first violating zeta, when any

  std::string summary() const;
};

// Sampled certification of C_{G,u}(a) at the configured density and margin.
// Total: never throws for geometric failures, reports them instead.
AdmissibilityReport check_admissible(const PlanarRegion& G, const CPoint& a, const CPoint& u,
                                     const CompactSpec& K, const DomainSpec& omega,
                                     const AdmissibilityOptions& opts = {});

// Builds an (a,u)-admissible region by covering the exact line cut of K
// with pairwise disjoint discs (merging overlaps into enclosing discs) and
// certifying the result. Throws invalid_input when a is outside Omega or
// u = 0, synthesis_failed when no disc cover passes certification.
PlanarRegion synthesize_admissible(const CPoint& a, const CPoint& u, const CompactSpec& K,
                                   const DomainSpec& omega, const AdmissibilityOptions& opts = {});

}  // namespace hartogs
