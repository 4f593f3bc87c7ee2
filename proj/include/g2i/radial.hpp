#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace g2i {

/// Half-open interval [lo, hi) on the radial axis.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double r) const { return r >= lo && r < hi; }
  Interval intersect(const Interval& o) const {
    return {lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
  }
  bool empty() const { return !(lo < hi); }
};

inline Interval whole_axis() { return {0.0, std::numeric_limits<double>::infinity()}; }

/// A scalar function of the radial coordinate carrying an exact first
/// derivative. Derivatives are built compositionally (sum/product/quotient/
/// chain rules), so taking the derivative of a derivative keeps working as
/// long as the underlying primitives allow it. Values are immutable; every
/// operation returns a new scalar. Evaluation outside the domain throws
/// std::domain_error.
class RadialScalar {
 public:
  using ValueFn = std::function<double(double)>;
  using DerivThunk = std::function<RadialScalar()>;

  RadialScalar() : RadialScalar(constant(0.0)) {}

  static RadialScalar constant(double c) {
    return RadialScalar(
        [c](double) { return c; }, [] { return constant(0.0); }, whole_axis());
  }

  /// The identity map r -> r.
  static RadialScalar coordinate(Interval dom = whole_axis()) {
    return RadialScalar(
        [](double r) { return r; }, [] { return constant(1.0); }, dom);
  }

  /// Wrap an arbitrary evaluable together with a thunk producing its exact
  /// derivative on demand.
  static RadialScalar from_parts(ValueFn value, DerivThunk derivative, Interval dom) {
    return RadialScalar(std::move(value), std::move(derivative), dom);
  }

  double value(double r) const {
    if (!dom_.contains(r)) {
      throw std::domain_error("RadialScalar: r = " + std::to_string(r) +
                              " outside domain [" + std::to_string(dom_.lo) +
                              ", " + std::to_string(dom_.hi) + ")");
    }
    return val_(r);
  }
  double operator()(double r) const { return value(r); }

  /// Exact derivative, as another RadialScalar on the same domain.
  RadialScalar derivative() const {
    RadialScalar d = der_();
    d.dom_ = dom_;
    return d;
  }
  double derivative_value(double r) const {
    if (!dom_.contains(r)) {
      throw std::domain_error("RadialScalar derivative: r outside domain");
    }
    return der_().val_(r);
  }

  const Interval& domain() const { return dom_; }

  RadialScalar restricted(Interval dom) const {
    RadialScalar out = *this;
    out.dom_ = dom_.intersect(dom);
    return out;
  }

 private:
  RadialScalar(ValueFn v, DerivThunk d, Interval dom)
      : val_(std::move(v)), der_(std::move(d)), dom_(dom) {}

  ValueFn val_;
  DerivThunk der_;
  Interval dom_;

  friend RadialScalar operator+(const RadialScalar&, const RadialScalar&);
  friend RadialScalar operator-(const RadialScalar&, const RadialScalar&);
  friend RadialScalar operator*(const RadialScalar&, const RadialScalar&);
  friend RadialScalar operator/(const RadialScalar&, const RadialScalar&);
  friend RadialScalar operator-(const RadialScalar&);
  friend RadialScalar sqrt(const RadialScalar&);
  friend RadialScalar pow(const RadialScalar&, int);
  friend RadialScalar compose(const RadialScalar&, const RadialScalar&);
};

inline RadialScalar operator+(const RadialScalar& a, const RadialScalar& b) {
  auto va = a.val_, vb = b.val_;
  auto da = a.der_, db = b.der_;
  return RadialScalar([va, vb](double r) { return va(r) + vb(r); },
                      [da, db] { return da() + db(); },
                      a.dom_.intersect(b.dom_));
}

inline RadialScalar operator-(const RadialScalar& a, const RadialScalar& b) {
  auto va = a.val_, vb = b.val_;
  auto da = a.der_, db = b.der_;
  return RadialScalar([va, vb](double r) { return va(r) - vb(r); },
                      [da, db] { return da() - db(); },
                      a.dom_.intersect(b.dom_));
}

inline RadialScalar operator-(const RadialScalar& a) {
  auto va = a.val_;
  auto da = a.der_;
  return RadialScalar([va](double r) { return -va(r); },
                      [da] { return -da(); }, a.dom_);
}

inline RadialScalar operator*(const RadialScalar& a, const RadialScalar& b) {
  auto va = a.val_, vb = b.val_;
  RadialScalar ac = a, bc = b;
  return RadialScalar([va, vb](double r) { return va(r) * vb(r); },
                      [ac, bc] { return ac.derivative() * bc + ac * bc.derivative(); },
                      a.dom_.intersect(b.dom_));
}

inline RadialScalar operator/(const RadialScalar& a, const RadialScalar& b) {
  auto va = a.val_, vb = b.val_;
  RadialScalar ac = a, bc = b;
  return RadialScalar(
      [va, vb](double r) { return va(r) / vb(r); },
      [ac, bc] {
        return (ac.derivative() * bc - ac * bc.derivative()) / (bc * bc);
      },
      a.dom_.intersect(b.dom_));
}

inline RadialScalar operator+(const RadialScalar& a, double c) { return a + RadialScalar::constant(c); }
inline RadialScalar operator+(double c, const RadialScalar& a) { return RadialScalar::constant(c) + a; }
inline RadialScalar operator-(const RadialScalar& a, double c) { return a - RadialScalar::constant(c); }
inline RadialScalar operator-(double c, const RadialScalar& a) { return RadialScalar::constant(c) - a; }
inline RadialScalar operator*(const RadialScalar& a, double c) { return a * RadialScalar::constant(c); }
inline RadialScalar operator*(double c, const RadialScalar& a) { return RadialScalar::constant(c) * a; }
inline RadialScalar operator/(const RadialScalar& a, double c) { return a / RadialScalar::constant(c); }
inline RadialScalar operator/(double c, const RadialScalar& a) { return RadialScalar::constant(c) / a; }

inline RadialScalar sqrt(const RadialScalar& a) {
  auto va = a.val_;
  RadialScalar ac = a;
  return RadialScalar([va](double r) { return std::sqrt(va(r)); },
                      [ac] { return ac.derivative() / (2.0 * sqrt(ac)); },
                      a.dom_);
}

/// Integer power; n < 0 requires a nonvanishing base.
inline RadialScalar pow(const RadialScalar& a, int n) {
  if (n == 0) return RadialScalar::constant(1.0);
  auto va = a.val_;
  RadialScalar ac = a;
  return RadialScalar(
      [va, n](double r) { return std::pow(va(r), n); },
      [ac, n] { return static_cast<double>(n) * pow(ac, n - 1) * ac.derivative(); },
      a.dom_);
}

/// Composition outer(inner(r)); the caller is responsible for the range of
/// inner landing in outer's domain.
inline RadialScalar compose(const RadialScalar& outer, const RadialScalar& inner) {
  auto vo = outer.val_, vi = inner.val_;
  RadialScalar oc = outer, ic = inner;
  return RadialScalar(
      [vo, vi](double r) { return vo(vi(r)); },
      [oc, ic] { return compose(oc.derivative(), ic) * ic.derivative(); },
      inner.dom_);
}

}  // namespace g2i
