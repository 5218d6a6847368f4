#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hartogs/cpoint.hpp"
#include "hartogs/sets.hpp"

namespace hartogs {

// principal part data at one singularity: principal[k] = c_{-(k+1)}, the
// coefficient of (z - location)^{-(k+1)}
struct LaurentPole {
  cplx location{0.0, 0.0};
  std::vector<cplx> principal;
};

struct LaurentData {
  std::vector<LaurentPole> poles;
};

cplx principal_part_eval(const LaurentData& data, cplx z);

// An evaluable holomorphic (or Gateaux holomorphic) map with catalog
// metadata. The evaluator is the ground truth; the metadata feeds oracles
// (known extensions, Laurent poles, known companions for piecewise maps).
struct HoloFn {
  using Evaluator = std::function<std::vector<cplx>(const CPoint&)>;

  std::string id;
  Evaluator eval;
  std::size_t codomain = 1;
  std::optional<std::size_t> ambient;
  std::optional<DomainSpec> domain;
  std::shared_ptr<CompactSpec> excluded;       // set on restrictions to Omega \ K
  std::optional<LaurentData> laurent;          // 1d maps with known poles
  std::shared_ptr<HoloFn> extension;           // known holomorphic extension of this map
  std::shared_ptr<HoloFn> reference_companion; // known companion when no extension exists

  std::vector<cplx> operator()(const CPoint& x) const { return eval(x); }

  cplx eval1(const CPoint& x) const {
    auto v = eval(x);
    return v.empty() ? cplx(0.0) : v[0];
  }

  struct Checked {
    std::vector<cplx> value;
    bool in_domain = true;
  };

  // evaluation that flags points outside the declared domain (in particular
  // points of the excluded compact)
  Checked evaluate_checked(const CPoint& x) const {
    Checked out;
    out.in_domain = !(excluded && excluded->contains(x)) && (!domain || domain->contains(x));
    out.value = eval(x);
    return out;
  }

  // the oracle for companion values: known extension, else known companion
  const HoloFn* reference() const {
    if (extension) return extension.get();
    if (reference_companion) return reference_companion.get();
    return nullptr;
  }
};

// restriction operator rho: same evaluator on Omega \ K, with the excluded
// compact recorded and the original map kept as the known extension
HoloFn restrict_fn(const HoloFn& g, const CompactSpec& K);

// pointwise algebra (used by the morphism checks); metadata narrows to what
// stays valid for the combination
HoloFn fn_sum(const HoloFn& f, const HoloFn& g);
HoloFn fn_product(const HoloFn& f, const HoloFn& g);  // scalar codomains
HoloFn fn_offset(const HoloFn& f, cplx offset);

// post-composition with a scalar 1d map g_outer (codomain of f must be 1)
HoloFn fn_compose(const HoloFn& g_outer, const HoloFn& f);

}  // namespace hartogs
