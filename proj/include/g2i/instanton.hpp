#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2i/forms.hpp"
#include "g2i/geometry.hpp"

namespace g2i {

/// Invariant abelian connection A = f1 e1+ + f2 e2+ + f3 e3+.
struct ConnectionAnsatz {
  RadialScalar f1, f2, f3;

  Interval domain() const {
    return f1.domain().intersect(f2.domain()).intersect(f3.domain());
  }

  /// Boundary criterion for extending smoothly across the zero section:
  /// all coefficients must vanish there.
  bool extends_across_zero_section(double r_min, double tol = 0.0) const {
    return std::abs(f1.value(r_min)) <= tol && std::abs(f2.value(r_min)) <= tol &&
           std::abs(f3.value(r_min)) <= tol;
  }
};

inline ConnectionAnsatz zero_ansatz(Interval dom = whole_axis()) {
  RadialScalar z = RadialScalar::constant(0.0).restricted(dom);
  return {z, z, z};
}

/// Abelian curvature F = dA, computed through the exterior derivative.
inline InvariantForm curvature(const ConnectionAnsatz& a) {
  InvariantForm conn =
      InvariantForm::monomial({Coframe::e1p}, a.f1) +
      InvariantForm::monomial({Coframe::e2p}, a.f2) +
      InvariantForm::monomial({Coframe::e3p}, a.f3);
  return exterior_derivative(conn);
}

enum class InstantonMode { g2, deformed };

/// 6-form residual (eps2/6) F^3 - F ^ psi. The connection is an instanton of
/// the requested kind iff every coefficient vanishes on the domain
/// (eps2 = 0 for the linear equation, 1 for the deformed one).
inline InvariantForm form_residual_scaled(const ConnectionAnsatz& a, const ProfileSet& p,
                                          double eps2) {
  InvariantForm f = curvature(a);
  InvariantForm psi = g2_forms(p).psi;
  InvariantForm res = -wedge(f, psi);
  if (eps2 != 0.0) {
    InvariantForm f3 = wedge(wedge(f, f), f);
    res += (eps2 / 6.0) * f3;
  }
  return res;
}

inline InvariantForm form_residual(const ConnectionAnsatz& a, const ProfileSet& p,
                                   InstantonMode mode) {
  return form_residual_scaled(a, p, mode == InstantonMode::deformed ? 1.0 : 0.0);
}

/// Thrown when the reduced ODE system degenerates at the requested radius
/// (the coefficient of f' vanishes at the singular orbit).
struct singular_point_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Which quadratic coefficient the second/third components of the deformed
/// bggg system carry: the system as given ties both rows to f2^2
/// (second_component); the symmetric alternative uses f_i^2 per row
/// (per_component). crosscheck_equivalence adjudicates between them.
enum class SecondaryQuadratic { second_component, per_component };

using ValueDerivative = std::pair<double, double>;

/// Left-hand sides of the reduced instanton ODE systems, evaluated verbatim.
/// The zero triple at r is equivalent to the printed system holding there.
inline std::array<double, 3> ode_residual(
    Geometry tag, InstantonMode mode, const std::array<ValueDerivative, 3>& f, double r,
    SecondaryQuadratic variant = SecondaryQuadratic::second_component) {
  const auto [f1, d1] = f[0];
  const auto [f2, d2] = f[1];
  const auto [f3, d3] = f[2];
  const bool deformed = mode == InstantonMode::deformed;

  switch (tag) {
    case Geometry::bs_cone: {
      if (r == 0.0) throw singular_point_error("cone system singular at r = 0");
      if (!deformed) return {d1 * r - 2.0 * f1, d2 * r - 2.0 * f2, d3 * r - 2.0 * f3};
      auto row = [&](double fi, double di, double fj, double dj, double fk, double dk) {
        return di * (r * r * r * r + 6.75 * fi * fi) - 2.0 * fi * r * r * r +
               6.75 * fi * fj * dj + 6.75 * fi * fk * dk;
      };
      return {row(f1, d1, f2, d2, f3, d3), row(f2, d2, f3, d3, f1, d1),
              row(f3, d3, f1, d1, f2, d2)};
    }
    case Geometry::bs_complete: {
      if (r == 0.0 || r == 1.0)
        throw singular_point_error("bs system singular at r = 0 and r = 1");
      double r3 = r * r * r, r4 = r3 * r;
      if (!deformed) {
        auto row = [&](double fi, double di) { return (r4 - r) * di - (2.0 * r3 + 1.0) * fi; };
        return {row(f1, d1), row(f2, d2), row(f3, d3)};
      }
      auto row = [&](double fi, double di, double fj, double dj, double fk, double dk) {
        return di * (r4 + 6.75 * fi * fi - r) - fi * (2.0 * r3 + 1.0) +
               6.75 * fi * (fj * dj + fk * dk);
      };
      return {row(f1, d1, f2, d2, f3, d3), row(f2, d2, f3, d3, f1, d1),
              row(f3, d3, f1, d1, f2, d2)};
    }
    case Geometry::bggg: {
      if (r == 2.25) throw singular_point_error("bggg system singular at r = 9/4");
      double p81 = 16.0 * r * r - 81.0;
      double p9 = 16.0 * r * r - 9.0;
      double lin = (4.0 * r + 3.0) * (4.0 * r * r - 9.0 * r + 13.5);
      if (!deformed) {
        return {p81 * p9 * d1 - 2304.0 * r * f1, r * p81 * d2 - lin * f2,
                r * p81 * d3 - lin * f3};
      }
      double first = (p81 * p9 + 576.0 * f1 * f1) * d1 +
                     576.0 * (f2 * d2 + f3 * d3 - 4.0 * r) * f1;
      auto row = [&](double fi, double di, double fj, double dj) {
        double q = variant == SecondaryQuadratic::second_component ? f2 : fi;
        return (16.0 * r * r * r + 18.0 * q * q - 81.0 * r) * di -
               (lin - 18.0 * (d1 * f1 + dj * fj)) * fi;
      };
      return {first, row(f2, d2, f3, d3), row(f3, d3, f2, d2)};
    }
  }
  throw std::domain_error("ode_residual: unknown geometry");
}

/// Sum of |term| magnitudes of the same left-hand sides, for relative
/// normalization of residuals.
inline std::array<double, 3> ode_residual_scale(
    Geometry tag, InstantonMode mode, const std::array<ValueDerivative, 3>& f, double r) {
  const auto [f1, d1] = f[0];
  const auto [f2, d2] = f[1];
  const auto [f3, d3] = f[2];
  auto A = [](double x) { return std::abs(x); };
  const bool deformed = mode == InstantonMode::deformed;
  switch (tag) {
    case Geometry::bs_cone: {
      double r3 = r * r * r, r4 = r3 * r;
      if (!deformed)
        return {A(d1 * r) + A(2 * f1), A(d2 * r) + A(2 * f2), A(d3 * r) + A(2 * f3)};
      auto row = [&](double fi, double di, double fj, double dj, double fk, double dk) {
        return A(di) * (r4 + 6.75 * fi * fi) + A(2 * fi * r3) + 6.75 * A(fi) * (A(fj * dj) + A(fk * dk));
      };
      return {row(f1, d1, f2, d2, f3, d3), row(f2, d2, f3, d3, f1, d1),
              row(f3, d3, f1, d1, f2, d2)};
    }
    case Geometry::bs_complete: {
      double r3 = r * r * r, r4 = r3 * r;
      auto lin = [&](double fi, double di) { return A((r4 + r) * di) + A((2 * r3 + 1) * fi); };
      if (!deformed) return {lin(f1, d1), lin(f2, d2), lin(f3, d3)};
      auto row = [&](double fi, double di, double fj, double dj, double fk, double dk) {
        return A(di) * (r4 + 6.75 * fi * fi + r) + A(fi * (2 * r3 + 1)) +
               6.75 * A(fi) * (A(fj * dj) + A(fk * dk));
      };
      return {row(f1, d1, f2, d2, f3, d3), row(f2, d2, f3, d3, f1, d1),
              row(f3, d3, f1, d1, f2, d2)};
    }
    case Geometry::bggg: {
      double p81 = A(16.0 * r * r - 81.0);
      double p9 = 16.0 * r * r + 9.0;
      double lin = (4 * r + 3) * (4 * r * r + 9 * r + 13.5);
      if (!deformed) {
        return {p81 * p9 * A(d1) + A(2304 * r * f1), r * p81 * A(d2) + lin * A(f2),
                r * p81 * A(d3) + lin * A(f3)};
      }
      double first = (p81 * p9 + 576 * f1 * f1) * A(d1) +
                     576 * (A(f2 * d2) + A(f3 * d3) + 4 * r) * A(f1);
      auto row = [&](double fi, double di, double fj, double dj) {
        return (16 * r * r * r + 18 * f2 * f2 + 81 * r) * A(di) +
               (lin + 18 * (A(d1 * f1) + A(dj * fj))) * A(fi);
      };
      return {first, row(f2, d2, f3, d3), row(f3, d3, f2, d2)};
    }
  }
  throw std::domain_error("ode_residual_scale: unknown geometry");
}

inline std::array<ValueDerivative, 3> sample_ansatz(const ConnectionAnsatz& a, double r) {
  return {ValueDerivative{a.f1.value(r), a.f1.derivative_value(r)},
          ValueDerivative{a.f2.value(r), a.f2.derivative_value(r)},
          ValueDerivative{a.f3.value(r), a.f3.derivative_value(r)}};
}

/// Masks of the residual 6-form monomials that the reduced system controls:
/// component i pairs with the monomial missing e_i^-.
inline std::array<MonomialMask, 3> matched_monomials() {
  return {static_cast<MonomialMask>(kFullMask & ~mask_of(Coframe::e1m)),
          static_cast<MonomialMask>(kFullMask & ~mask_of(Coframe::e2m)),
          static_cast<MonomialMask>(kFullMask & ~mask_of(Coframe::e3m))};
}

struct CrosscheckPoint {
  double r = 0.0;
  std::array<double, 3> form_coeff{};    // residual coefficients on the matched monomials
  std::array<double, 3> ode{};           // per-component variant of the reduced system
  std::array<double, 3> ode_as_given{};  // system exactly as given (differs only for deformed bggg)
  double max_unmatched = 0.0;            // largest |coeff| on any non-matched monomial, normalized
  double psi_norm = 1.0;                 // 1 + max|psi coefficient| at r
};

struct CrosscheckReport {
  Geometry tag{};
  InstantonMode mode{};
  std::array<MonomialMask, 3> monomials = matched_monomials();
  std::vector<CrosscheckPoint> points;
};

/// Evaluate, per grid point, the 6-form residual coefficients next to the
/// reduced-ODE left-hand sides; monomials outside the matched triple are
/// reported so a nonzero one can be flagged.
inline CrosscheckReport crosscheck_equivalence(const ConnectionAnsatz& a, const ProfileSet& p,
                                               InstantonMode mode,
                                               std::span<const double> grid) {
  CrosscheckReport report;
  report.tag = p.tag;
  report.mode = mode;
  InvariantForm res = form_residual(a, p, mode);
  InvariantForm psi = g2_forms(p).psi;
  auto matched = matched_monomials();
  for (double r : grid) {
    CrosscheckPoint pt;
    pt.r = r;
    pt.psi_norm = 1.0 + max_abs_coefficient(psi, r);
    for (int i = 0; i < 3; ++i) pt.form_coeff[i] = res.coefficient(matched[i]).value(r);
    for (const auto& [m, f] : res.coefficients()) {
      if (m == matched[0] || m == matched[1] || m == matched[2]) continue;
      double v = std::abs(f.value(r)) / pt.psi_norm;
      if (v > pt.max_unmatched) pt.max_unmatched = v;
    }
    auto fd = sample_ansatz(a, r);
    pt.ode = ode_residual(p.tag, mode, fd, r, SecondaryQuadratic::per_component);
    pt.ode_as_given = ode_residual(p.tag, mode, fd, r, SecondaryQuadratic::second_component);
    report.points.push_back(pt);
  }
  return report;
}

}  // namespace g2i
