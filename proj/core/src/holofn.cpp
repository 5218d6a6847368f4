#include "hartogs/holofn.hpp"

#include "hartogs/errors.hpp"

namespace hartogs {

cplx principal_part_eval(const LaurentData& data, cplx z) {
  cplx s = 0.0;
  for (const auto& pole : data.poles) {
    const cplx d = z - pole.location;
    cplx invp = 1.0;
    for (std::size_t k = 0; k < pole.principal.size(); ++k) {
      invp /= d;
      s += pole.principal[k] * invp;
    }
  }
  return s;
}

HoloFn restrict_fn(const HoloFn& g, const CompactSpec& K) {
  HoloFn f = g;
  f.id = g.id + "|restricted";
  f.excluded = std::make_shared<CompactSpec>(K);
  if (g.domain) f.domain = DomainSpec::difference(*g.domain, K);
  f.extension = std::make_shared<HoloFn>(g);
  f.reference_companion.reset();
  return f;
}

HoloFn fn_sum(const HoloFn& f, const HoloFn& g) {
  if (f.codomain != g.codomain) fail(errc::invalid_input, "fn_sum: codomain mismatch");
  HoloFn out;
  out.id = "(" + f.id + "+" + g.id + ")";
  out.codomain = f.codomain;
  out.ambient = f.ambient;
  out.domain = f.domain;
  out.excluded = f.excluded ? f.excluded : g.excluded;
  auto fe = f.eval, ge = g.eval;
  out.eval = [fe, ge](const CPoint& x) {
    auto a = fe(x);
    auto b = ge(x);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  if (f.extension && g.extension) out.extension = std::make_shared<HoloFn>(fn_sum(*f.extension, *g.extension));
  return out;
}

HoloFn fn_product(const HoloFn& f, const HoloFn& g) {
  if (f.codomain != 1 || g.codomain != 1) fail(errc::invalid_input, "fn_product: scalar maps only");
  HoloFn out;
  out.id = "(" + f.id + "*" + g.id + ")";
  out.codomain = 1;
  out.ambient = f.ambient;
  out.domain = f.domain;
  out.excluded = f.excluded ? f.excluded : g.excluded;
  auto fe = f.eval, ge = g.eval;
  out.eval = [fe, ge](const CPoint& x) {
    return std::vector<cplx>{fe(x)[0] * ge(x)[0]};
  };
  if (f.extension && g.extension)
    out.extension = std::make_shared<HoloFn>(fn_product(*f.extension, *g.extension));
  return out;
}

HoloFn fn_offset(const HoloFn& f, cplx offset) {
  HoloFn out = f;
  out.id = f.id + "+const";
  auto fe = f.eval;
  out.eval = [fe, offset](const CPoint& x) {
    auto v = fe(x);
    for (auto& c : v) c += offset;
    return v;
  };
  if (f.extension) out.extension = std::make_shared<HoloFn>(fn_offset(*f.extension, offset));
  if (f.reference_companion)
    out.reference_companion = std::make_shared<HoloFn>(fn_offset(*f.reference_companion, offset));
  return out;
}

HoloFn fn_compose(const HoloFn& g_outer, const HoloFn& f) {
  if (f.codomain != 1) fail(errc::invalid_input, "fn_compose: inner map must be scalar");
  if (g_outer.ambient && *g_outer.ambient != 1)
    fail(errc::invalid_input, "fn_compose: outer map must be univariate");
  HoloFn out;
  out.id = g_outer.id + "o" + f.id;
  out.codomain = g_outer.codomain;
  out.ambient = f.ambient;
  out.domain = f.domain;
  out.excluded = f.excluded;
  auto ge = g_outer.eval, fe = f.eval;
  out.eval = [ge, fe](const CPoint& x) {
    const cplx w = fe(x)[0];
    CPoint p = CPoint::zero(1);
    p.set(0, w);
    return ge(p);
  };
  if (f.extension) out.extension = std::make_shared<HoloFn>(fn_compose(g_outer, *f.extension));
  else if (f.reference_companion)
    out.reference_companion = std::make_shared<HoloFn>(fn_compose(g_outer, *f.reference_companion));
  return out;
}

}  // namespace hartogs
