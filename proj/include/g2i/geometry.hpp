#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "g2i/forms.hpp"
#include "g2i/radial.hpp"

namespace g2i {

enum class Geometry { bggg, bs_complete, bs_cone };

inline const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::bggg: return "bggg";
    case Geometry::bs_complete: return "bs-complete";
    case Geometry::bs_cone: return "bs-cone";
  }
  return "?";
}

/// Half-lengths of the invariant coframe plus the arclength density
/// ds/dr. The induced metric is
///   g = warp^2 dr^2 + (2A1)^2 (e1+)^2 + (2A2)^2 ((e2+)^2 + (e3+)^2)
///              + (2B1)^2 (e1-)^2 + (2B2)^2 ((e2-)^2 + (e3-)^2).
struct ProfileSet {
  RadialScalar a1, a2, b1, b2;
  RadialScalar warp;  // ds/dr
  Interval domain;
  Geometry tag;
  double scale = 1.0;
};

/// Construct the profile functions of the three explicit geometries.
///
/// bggg: complete ALC structure on [9/4, inf). The diagonal fibre radii
///   A1, A2 vanish at r = 9/4 while the base stays round, B1 = B2 = 3/2;
///   A1 -> 1 at infinity while the remaining coefficients grow linearly.
/// bs_complete: complete AC structure on [c, inf), c = scale > 0.
/// bs_cone: the c = 0 cone over S3 x S3, warp identically 1.
inline ProfileSet make_profiles(Geometry tag, double scale = 1.0) {
  switch (tag) {
    case Geometry::bggg: {
      Interval dom{2.25, std::numeric_limits<double>::infinity()};
      RadialScalar r = RadialScalar::coordinate(dom);
      RadialScalar diag = sqrt((r - 2.25) * (r + 2.25));   // sqrt((r-9/4)(r+9/4))
      RadialScalar anti = sqrt((r - 0.75) * (r + 0.75));   // sqrt((r-3/4)(r+3/4))
      RadialScalar a1 = diag / anti;
      RadialScalar a2 = sqrt((r - 2.25) * (r + 0.75) / 3.0);
      RadialScalar b1 = 2.0 * r / 3.0;
      RadialScalar b2 = sqrt((r + 2.25) * (r - 0.75) / 3.0);
      RadialScalar warp = anti / diag;
      return {a1, a2, b1, b2, warp, dom, tag, scale};
    }
    case Geometry::bs_complete: {
      if (!(scale > 0.0))
        throw std::domain_error("make_profiles: bs_complete needs scale > 0");
      Interval dom{scale, std::numeric_limits<double>::infinity()};
      RadialScalar r = RadialScalar::coordinate(dom);
      double c3 = scale * scale * scale;
      RadialScalar root = sqrt(1.0 - c3 / (r * r * r));
      RadialScalar a = r / 3.0 * root;
      RadialScalar b = r / std::sqrt(3.0);
      return {a, a, b, b, 1.0 / root, dom, tag, scale};
    }
    case Geometry::bs_cone: {
      Interval dom{0.0, std::numeric_limits<double>::infinity()};
      RadialScalar r = RadialScalar::coordinate(dom);
      return {r / 3.0, r / 3.0, r / std::sqrt(3.0), r / std::sqrt(3.0),
              RadialScalar::constant(1.0).restricted(dom), dom, tag, 0.0};
    }
  }
  throw std::domain_error("make_profiles: unknown geometry");
}

struct Su3Structure {
  InvariantForm omega;        // 2-form
  InvariantForm omega_plus;   // 3-form
  InvariantForm omega_minus;  // 3-form
  std::array<RadialScalar, 6> metric_diag;  // ((2A1)^2, (2A2)^2, (2A2)^2, (2B1)^2, (2B2)^2, (2B2)^2)
};

/// The SU(3)-structure on the S3 x S3 slices:
///   omega  = 4 A1 B1 e11^{-+} + 4 A2 B2 (e22^{-+} + e33^{-+})
///   Omega+ = 8 B1 B2^2 e123^{---} - 8 A1 A2 B2 (e123^{++-} + e123^{+-+}) - 8 A2^2 B1 e123^{-++}
///   Omega- = -8 A2^2 A1 e123^{+++} + 8 B1 B2 A2 (e123^{--+} + e123^{-+-}) + 8 A1 B2^2 e123^{+--}
inline Su3Structure su3_structure(const ProfileSet& p) {
  using C = Coframe;
  const auto& [a1, a2, b1, b2, warp, dom, tag, scale] = p;

  InvariantForm omega =
      InvariantForm::monomial({C::e1m, C::e1p}, 4.0 * a1 * b1) +
      InvariantForm::monomial({C::e2m, C::e2p}, 4.0 * a2 * b2) +
      InvariantForm::monomial({C::e3m, C::e3p}, 4.0 * a2 * b2);

  InvariantForm omega_plus =
      InvariantForm::monomial({C::e1m, C::e2m, C::e3m}, 8.0 * b1 * b2 * b2) +
      InvariantForm::monomial({C::e1p, C::e2p, C::e3m}, -8.0 * a1 * a2 * b2) +
      InvariantForm::monomial({C::e1p, C::e2m, C::e3p}, -8.0 * a1 * a2 * b2) +
      InvariantForm::monomial({C::e1m, C::e2p, C::e3p}, -8.0 * a2 * a2 * b1);

  InvariantForm omega_minus =
      InvariantForm::monomial({C::e1p, C::e2p, C::e3p}, -8.0 * a2 * a2 * a1) +
      InvariantForm::monomial({C::e1m, C::e2m, C::e3p}, 8.0 * b1 * b2 * a2) +
      InvariantForm::monomial({C::e1m, C::e2p, C::e3m}, 8.0 * b1 * b2 * a2) +
      InvariantForm::monomial({C::e1p, C::e2m, C::e3m}, 8.0 * a1 * b2 * b2);

  std::array<RadialScalar, 6> h = {4.0 * a1 * a1, 4.0 * a2 * a2, 4.0 * a2 * a2,
                                   4.0 * b1 * b1, 4.0 * b2 * b2, 4.0 * b2 * b2};
  return {omega, omega_plus, omega_minus, h};
}

struct G2Forms {
  InvariantForm phi;  // 3-form: warp dr ^ omega + Omega+
  InvariantForm psi;  // 4-form: 1/2 omega ^ omega - warp dr ^ Omega-
};

inline G2Forms g2_forms(const ProfileSet& p) {
  Su3Structure s = su3_structure(p);
  InvariantForm dr = InvariantForm::generator(Coframe::dr);
  InvariantForm phi = p.warp * wedge(dr, s.omega) + s.omega_plus;
  InvariantForm psi = 0.5 * wedge(s.omega, s.omega) - p.warp * wedge(dr, s.omega_minus);
  return {phi, psi};
}

struct TorsionResidual {
  double max_dphi = 0.0;  // max over the grid of max|dphi coeff| / (1 + max|phi coeff|)
  double max_dpsi = 0.0;
};

/// Largest normalized coefficient of d(phi) and d(psi) over the grid; both
/// vanish for a torsion-free structure.
inline TorsionResidual torsion_residual(const ProfileSet& p, std::span<const double> grid) {
  G2Forms g = g2_forms(p);
  InvariantForm dphi = exterior_derivative(g.phi);
  InvariantForm dpsi = exterior_derivative(g.psi);
  TorsionResidual out;
  for (double r : grid) {
    double nphi = max_abs_coefficient(dphi, r) / (1.0 + max_abs_coefficient(g.phi, r));
    double npsi = max_abs_coefficient(dpsi, r) / (1.0 + max_abs_coefficient(g.psi, r));
    if (nphi > out.max_dphi) out.max_dphi = nphi;
    if (npsi > out.max_dpsi) out.max_dpsi = npsi;
  }
  return out;
}

/// Log-spaced grid on [lo, hi], inclusive of both endpoints.
inline std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw std::domain_error("log_grid: need 0 < lo < hi and count >= 2");
  std::vector<double> out(count);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    out[i] = std::exp(llo + (lhi - llo) * i / (count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

inline std::vector<double> linear_grid(double lo, double hi, int count) {
  if (!(hi > lo) || count < 2)
    throw std::domain_error("linear_grid: need lo < hi and count >= 2");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

}  // namespace g2i
