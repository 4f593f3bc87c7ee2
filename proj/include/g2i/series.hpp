#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace g2i {

using BigRational = boost::multiprecision::cpp_rational;

/// Signals the a = 0 case of the series ansatz, which is the identically
/// zero profile rather than a power series with nonzero leading term.
struct zero_branch : std::domain_error {
  zero_branch() : std::domain_error("series_expand: a = 0 selects the zero profile") {}
};

/// Truncated power-series solution p(z) = sum c_k z^k of the deformed
/// instanton equation on the bggg geometry, rewritten at z = r - 9/4.
/// Coefficients are exact rationals in the leading value a = c_0.
struct SeriesExpansion {
  BigRational leading;
  std::vector<BigRational> coeffs;  // c_0 .. c_order
  double base_point = 2.25;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  double evaluate(double z) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * z + static_cast<double>(*it);
    return acc;
  }

  double evaluate_derivative(double z) const {
    double acc = 0.0;
    for (int k = order(); k >= 1; --k)
      acc = acc * z + k * static_cast<double>(coeffs[k]);
    return acc;
  }
};

/// Solve ((16r^2-81)(16r^2-9) + 576 p^2) p' - 2304 r p = 0 order by order at
/// z = r - 9/4 in exact rational arithmetic. Dividing the equation by 64 it
/// becomes (q(z) + 9 p^2) p' - (36 z + 81) p = 0 with
/// q(z) = 4z^4 + 36z^3 + 99z^2 + 81z; at order n only c_{n+1} is new, with
/// coefficient 9 a^2 (n+1).
inline SeriesExpansion series_expand(const BigRational& a, int order) {
  if (a == 0) throw zero_branch();
  if (order < 1) throw std::domain_error("series_expand: order must be >= 1");

  const int n_c = order + 1;
  std::vector<BigRational> c(n_c, BigRational(0));
  c[0] = a;

  std::vector<BigRational> q(n_c, BigRational(0));
  if (n_c > 1) q[1] = 81;
  if (n_c > 2) q[2] = 99;
  if (n_c > 3) q[3] = 36;
  if (n_c > 4) q[4] = 4;

  // running coefficients of p^2 (orders filled as c becomes known)
  std::vector<BigRational> p2(n_c, BigRational(0));
  p2[0] = a * a;

  const BigRational nine_a2 = 9 * a * a;
  for (int n = 0; n + 1 < n_c; ++n) {
    // [ (q + 9 p^2) p' ]_n = sum_{j+k=n} (q_j + 9 p2_j) (k+1) c_{k+1};
    // pull out the j = 0, k = n term that carries c_{n+1}.
    BigRational acc = 0;
    for (int j = 1; j <= n; ++j) {
      BigRational g = q[j] + 9 * p2[j];
      acc += g * (n - j + 1) * c[n - j + 1];
    }
    BigRational rhs = 81 * c[n];
    if (n >= 1) rhs += 36 * c[n - 1];
    c[n + 1] = (rhs - acc) / (nine_a2 * (n + 1));

    // extend p^2 through order n+1 now that c_{n+1} is known
    int m = n + 1;
    BigRational s = 0;
    for (int u = 0; u <= m; ++u) s += c[u] * c[m - u];
    p2[m] = s;
  }

  return SeriesExpansion{a, std::move(c)};
}

/// Least-squares slope of log|y| against log|x|.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::domain_error("loglog_slope: need matching sizes >= 2");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(std::abs(y[i]) > 0.0)) continue;
    double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++n;
  }
  if (n < 2) throw std::domain_error("loglog_slope: not enough usable points");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace g2i
