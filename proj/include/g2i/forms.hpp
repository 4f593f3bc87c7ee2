#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2i/radial.hpp"

namespace g2i {

/// Fixed invariant coframe on R+ x S3 x S3, in the canonical order
/// (dr, e1+, e2+, e3+, e1-, e2-, e3-).
enum class Coframe : std::uint8_t {
  dr = 0,
  e1p = 1,
  e2p = 2,
  e3p = 3,
  e1m = 4,
  e2m = 5,
  e3m = 6,
};

inline constexpr int kCoframeDim = 7;

/// A wedge monomial as a 7-bit set over the canonical coframe order.
using MonomialMask = std::uint8_t;

inline constexpr MonomialMask kFullMask = 0x7f;

inline constexpr MonomialMask mask_of(Coframe e) {
  return static_cast<MonomialMask>(1u << static_cast<unsigned>(e));
}

inline int mask_degree(MonomialMask m) { return std::popcount(static_cast<unsigned>(m)); }

/// Sign of sorting the concatenation of two disjoint ascending index sets
/// into ascending order; 0 if they overlap.
inline int merge_sign(MonomialMask a, MonomialMask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int j = 0; j < kCoframeDim; ++j) {
    if (!(b & (1u << j))) continue;
    // elements of a that must move past this element of b
    unsigned higher = a & ~((1u << (j + 1)) - 1u);
    swaps += std::popcount(higher);
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

inline std::string monomial_name(MonomialMask m) {
  static const char* names[kCoframeDim] = {"dr", "e1+", "e2+", "e3+", "e1-", "e2-", "e3-"};
  if (m == 0) return "1";
  std::string out;
  for (int j = 0; j < kCoframeDim; ++j) {
    if (m & (1u << j)) {
      if (!out.empty()) out += "^";
      out += names[j];
    }
  }
  return out;
}

/// Invariant differential form of fixed degree with RadialScalar
/// coefficients, stored sparsely over canonical (strictly increasing)
/// monomials. Absent monomials mean zero.
class InvariantForm {
 public:
  explicit InvariantForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > kCoframeDim)
      throw std::domain_error("InvariantForm: degree out of range");
  }

  static InvariantForm zero(int degree) { return InvariantForm(degree); }

  static InvariantForm scalar(RadialScalar f) {
    InvariantForm out(0);
    out.coeff_.emplace(MonomialMask{0}, std::move(f));
    return out;
  }

  static InvariantForm generator(Coframe e) {
    InvariantForm out(1);
    out.coeff_.emplace(mask_of(e), RadialScalar::constant(1.0));
    return out;
  }

  /// Monomial given in any order; repeated entries make it zero, reordering
  /// contributes the permutation sign.
  static InvariantForm monomial(std::initializer_list<Coframe> elems, RadialScalar f) {
    InvariantForm out(static_cast<int>(elems.size()));
    MonomialMask m = 0;
    int sign = 1;
    for (Coframe e : elems) {
      int s = merge_sign(m, mask_of(e));
      if (s == 0) return out;  // repeated 1-form
      sign *= s;
      m |= mask_of(e);
    }
    out.coeff_.emplace(m, sign > 0 ? f : -f);
    return out;
  }

  int degree() const { return degree_; }
  const std::map<MonomialMask, RadialScalar>& coefficients() const { return coeff_; }

  /// Coefficient of a canonical monomial (zero scalar if absent).
  RadialScalar coefficient(MonomialMask m) const {
    auto it = coeff_.find(m);
    return it == coeff_.end() ? RadialScalar::constant(0.0) : it->second;
  }

  /// Numeric coefficient relative to the monomial written in the given
  /// order (sign-adjusted against canonical storage).
  double coefficient_at(std::initializer_list<Coframe> elems, double r) const {
    MonomialMask m = 0;
    int sign = 1;
    for (Coframe e : elems) {
      int s = merge_sign(m, mask_of(e));
      if (s == 0) throw std::domain_error("coefficient_at: repeated coframe element");
      sign *= s;
      m |= mask_of(e);
    }
    auto it = coeff_.find(m);
    if (it == coeff_.end()) return 0.0;
    return sign * it->second.value(r);
  }

  void add_term(MonomialMask m, const RadialScalar& f) {
    if (mask_degree(m) != degree_)
      throw std::domain_error("InvariantForm::add_term: degree mismatch");
    auto it = coeff_.find(m);
    if (it == coeff_.end())
      coeff_.emplace(m, f);
    else
      it->second = it->second + f;
  }

  InvariantForm& operator+=(const InvariantForm& o) {
    if (o.degree_ != degree_)
      throw std::domain_error("InvariantForm: adding forms of different degree");
    for (const auto& [m, f] : o.coeff_) add_term(m, f);
    return *this;
  }

  friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }

  friend InvariantForm operator-(const InvariantForm& a) {
    InvariantForm out(a.degree_);
    for (const auto& [m, f] : a.coeff_) out.coeff_.emplace(m, -f);
    return out;
  }
  friend InvariantForm operator-(const InvariantForm& a, const InvariantForm& b) {
    return a + (-b);
  }

  friend InvariantForm operator*(const RadialScalar& s, const InvariantForm& a) {
    InvariantForm out(a.degree_);
    for (const auto& [m, f] : a.coeff_) out.coeff_.emplace(m, s * f);
    return out;
  }
  friend InvariantForm operator*(double s, const InvariantForm& a) {
    return RadialScalar::constant(s) * a;
  }

 private:
  int degree_;
  std::map<MonomialMask, RadialScalar> coeff_;
};

inline InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
  if (a.degree() + b.degree() > kCoframeDim)
    throw std::domain_error("wedge: degree overflow");
  InvariantForm out(a.degree() + b.degree());
  for (const auto& [ma, fa] : a.coefficients()) {
    for (const auto& [mb, fb] : b.coefficients()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      RadialScalar prod = fa * fb;
      out.add_term(static_cast<MonomialMask>(ma | mb), s > 0 ? prod : -prod);
    }
  }
  return out;
}

namespace detail {

/// Maurer-Cartan differentials of the coframe generators:
///   d e_i+ = -2 (e_j+ ^ e_k+  +  e_j- ^ e_k-)
///   d e_i- = -2 (e_j- ^ e_k+  +  e_j+ ^ e_k-)   for (i,j,k) cyclic,
/// and d(dr) = 0.
inline const std::array<InvariantForm, kCoframeDim>& generator_differentials() {
  static const std::array<InvariantForm, kCoframeDim> table = [] {
    auto plus = [](int i) { return static_cast<Coframe>(i); };
    auto minus = [](int i) { return static_cast<Coframe>(i + 3); };
    auto two = RadialScalar::constant(-2.0);
    std::array<InvariantForm, kCoframeDim> t = {
        InvariantForm::zero(2), InvariantForm::zero(2), InvariantForm::zero(2),
        InvariantForm::zero(2), InvariantForm::zero(2), InvariantForm::zero(2),
        InvariantForm::zero(2)};
    constexpr int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (auto [i, j, k] : cyc) {
      t[i] = InvariantForm::monomial({plus(j), plus(k)}, two) +
             InvariantForm::monomial({minus(j), minus(k)}, two);
      t[i + 3] = InvariantForm::monomial({minus(j), plus(k)}, two) +
                 InvariantForm::monomial({plus(j), minus(k)}, two);
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// Exterior derivative driven by the structure constants and exact radial
/// differentiation: d(f e_S) = f' dr ^ e_S + f * d(e_S).
inline InvariantForm exterior_derivative(const InvariantForm& a) {
  if (a.degree() + 1 > kCoframeDim) throw std::domain_error("exterior_derivative: degree overflow");
  InvariantForm out(a.degree() + 1);
  const auto& dgen = detail::generator_differentials();
  for (const auto& [m, f] : a.coefficients()) {
    // radial part
    if (!(m & mask_of(Coframe::dr))) {
      // dr is the lowest index, so it always merges in front with sign +1
      out.add_term(static_cast<MonomialMask>(m | mask_of(Coframe::dr)), f.derivative());
    }
    // structure part, Leibniz over the generators of the monomial
    int pos = 0;
    for (int g = 0; g < kCoframeDim; ++g) {
      if (!(m & (1u << g))) continue;
      const InvariantForm& dg = dgen[g];
      MonomialMask rest = static_cast<MonomialMask>(m & ~(1u << g));
      double leib = (pos % 2 == 0) ? 1.0 : -1.0;
      for (const auto& [m2, c2] : dg.coefficients()) {
        int s = merge_sign(m2, rest);
        if (s == 0) continue;
        RadialScalar term = (leib * s) * (c2 * f);
        out.add_term(static_cast<MonomialMask>(m2 | rest), term);
      }
      ++pos;
    }
  }
  return out;
}

/// Numeric coefficient table of every stored monomial at radius r.
inline std::map<MonomialMask, double> evaluate_form(const InvariantForm& a, double r) {
  std::map<MonomialMask, double> out;
  for (const auto& [m, f] : a.coefficients()) out[m] = f.value(r);
  return out;
}

/// Largest |coefficient| at radius r (0 for an empty form).
inline double max_abs_coefficient(const InvariantForm& a, double r) {
  double m = 0.0;
  for (const auto& [mask, f] : a.coefficients()) {
    double v = std::abs(f.value(r));
    if (v > m) m = v;
  }
  return m;
}

}  // namespace g2i
