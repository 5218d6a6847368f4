#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hartogs/errors.hpp"

namespace hartogs {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// A point of C^n (ambient_dim set) or of the space of finitely supported
// complex sequences (ambient_dim empty). Stored sparse and canonical:
// entries are sorted by index and exactly-zero values are dropped, so a
// C^n point and its sequence-space embedding compare equal.
class CPoint {
 public:
  struct Entry {
    std::size_t index;
    cplx value;
  };

  CPoint() = default;

  // dense C^n constructor
  explicit CPoint(const std::vector<cplx>& coords) : ambient_(coords.size()) {
    for (std::size_t i = 0; i < coords.size(); ++i) set(i, coords[i]);
  }

  static CPoint zero(std::optional<std::size_t> ambient = std::nullopt) {
    CPoint p;
    p.ambient_ = ambient;
    return p;
  }

  static CPoint unit(std::size_t index, std::optional<std::size_t> ambient = std::nullopt) {
    CPoint p = zero(ambient);
    p.set(index, 1.0);
    return p;
  }

  std::optional<std::size_t> ambient_dim() const { return ambient_; }
  void set_ambient_dim(std::optional<std::size_t> d) {
    ambient_ = d;
    check_ambient();
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  cplx operator[](std::size_t index) const {
    for (const auto& e : entries_) {
      if (e.index == index) return e.value;
      if (e.index > index) break;
    }
    return 0.0;
  }

  void set(std::size_t index, cplx value) {
    if (!is_finite(value)) fail(errc::invalid_input, "CPoint entry must be finite");
    if (ambient_ && index >= *ambient_)
      fail(errc::invalid_input, "CPoint index " + std::to_string(index) + " exceeds ambient dimension");
    auto it = entries_.begin();
    while (it != entries_.end() && it->index < index) ++it;
    if (it != entries_.end() && it->index == index) {
      if (value == cplx(0.0)) entries_.erase(it);
      else it->value = value;
    } else if (value != cplx(0.0)) {
      entries_.insert(it, Entry{index, value});
    }
  }

  std::size_t max_index() const { return entries_.empty() ? 0 : entries_.back().index; }

  // Euclidean norm (l2 over the support)
  double norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e.value);
    return std::sqrt(s);
  }

  double sup_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s = std::max(s, std::abs(e.value));
    return s;
  }

  // dense view over [0, n): only valid in finite ambient mode or when n
  // covers the support
  std::vector<cplx> dense(std::size_t n) const {
    std::vector<cplx> out(n, 0.0);
    for (const auto& e : entries_) {
      if (e.index < n) out[e.index] = e.value;
    }
    return out;
  }

  friend CPoint operator+(const CPoint& a, const CPoint& b) { return merged(a, b, 1.0); }
  friend CPoint operator-(const CPoint& a, const CPoint& b) { return merged(a, b, -1.0); }

  friend CPoint operator*(cplx s, const CPoint& p) {
    CPoint out = CPoint::zero(p.ambient_);
    if (s == cplx(0.0)) return out;
    for (const auto& e : p.entries_) out.set(e.index, s * e.value);
    return out;
  }

  // Hermitian inner product <a,b> = sum a_i conj(b_i)
  friend cplx inner(const CPoint& a, const CPoint& b) {
    cplx s = 0.0;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
      if (ia->index < ib->index) ++ia;
      else if (ib->index < ia->index) ++ib;
      else {
        s += ia->value * std::conj(ib->value);
        ++ia;
        ++ib;
      }
    }
    return s;
  }

  bool operator==(const CPoint& other) const { return entries_equal(other) && ambient_ == other.ambient_; }

  bool entries_equal(const CPoint& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].index != other.entries_[i].index) return false;
      if (entries_[i].value != other.entries_[i].value) return false;
    }
    return true;
  }

  std::string str() const {
    std::string s = "(";
    bool first = true;
    for (const auto& e : entries_) {
      if (!first) s += ", ";
      first = false;
      s += "[" + std::to_string(e.index) + "]=" + std::to_string(e.value.real()) + "+" +
           std::to_string(e.value.imag()) + "i";
    }
    s += ambient_ ? ")/C^" + std::to_string(*ambient_) : ")/seq";
    return s;
  }

 private:
  static CPoint merged(const CPoint& a, const CPoint& b, double sign) {
    CPoint out = CPoint::zero(a.ambient_ ? a.ambient_ : b.ambient_);
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
      if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->index < ib->index)) {
        out.set(ia->index, ia->value);
        ++ia;
      } else if (ia == a.entries_.end() || ib->index < ia->index) {
        out.set(ib->index, sign * ib->value);
        ++ib;
      } else {
        out.set(ia->index, ia->value + sign * ib->value);
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  void check_ambient() {
    if (!ambient_) return;
    for (const auto& e : entries_) {
      if (e.index >= *ambient_) fail(errc::invalid_input, "CPoint entry outside ambient dimension");
    }
  }

  std::vector<Entry> entries_;
  std::optional<std::size_t> ambient_;
};

// Affine line zeta |-> base + zeta * dir.
struct LineSlice {
  CPoint base;
  CPoint dir;

  LineSlice(CPoint b, CPoint d) : base(std::move(b)), dir(std::move(d)) {
    if (dir.is_zero()) fail(errc::invalid_input, "LineSlice direction must be nonzero");
  }

  CPoint embed(cplx zeta) const { return base + zeta * dir; }
};

// Affine 2-plane (lambda, zeta) |-> base + lambda * dir1 + zeta * dir2.
struct PlaneSlice {
  CPoint base;
  CPoint dir1;
  CPoint dir2;

  PlaneSlice(CPoint b, CPoint d1, CPoint d2)
      : base(std::move(b)), dir1(std::move(d1)), dir2(std::move(d2)) {
    if (dir1.is_zero() || dir2.is_zero())
      fail(errc::invalid_input, "PlaneSlice directions must be nonzero");
    // linear independence over C: Gram determinant of the pair
    const cplx g11 = inner(dir1, dir1), g12 = inner(dir1, dir2), g22 = inner(dir2, dir2);
    const double det = (g11 * g22 - g12 * std::conj(g12)).real();
    if (det <= 1e-14 * std::abs(g11 * g22))
      fail(errc::invalid_input, "PlaneSlice directions must be linearly independent");
  }

  CPoint embed(cplx lambda, cplx zeta) const { return base + lambda * dir1 + zeta * dir2; }
};

}  // namespace hartogs
