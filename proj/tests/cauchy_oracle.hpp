#pragma once

// Independent Taylor-coefficient oracle: the Cauchy integral
//   a_k = (2 pi i)^{-1} oint f(z) z^{-k-1} dz
// discretized by the P-point trapezoid rule on |z| = rho,
//   a_k ~= (P rho^k)^{-1} sum_p f(rho e^{i th_p}) e^{-i k th_p}.
// The rule is exact up to aliasing (error sum_{j>=1} a_{k+jP} rho^{jP},
// negligible for P = 2048 and rho < 1) plus roundoff amplified by rho^{-k},
// which is why callers keep k moderate and rho away from 0.
//
// This header deliberately evaluates functions directly (no series
// arithmetic), so it shares no code with the library paths it cross-checks.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline std::vector<std::complex<double>> cauchy_coeffs(
    const std::function<std::complex<double>(std::complex<double>)>& f, int k_max, double rho,
    int points = 2048) {
  std::vector<std::complex<double>> out(k_max + 1);
  std::vector<std::complex<double>> samples(points);
  for (int p = 0; p < points; ++p) {
    const double th = 2.0 * std::numbers::pi * p / points;
    samples[p] = f(rho * std::complex<double>{std::cos(th), std::sin(th)});
  }
  for (int k = 0; k <= k_max; ++k) {
    std::complex<double> acc = 0.0;
    for (int p = 0; p < points; ++p) {
      const double th = -2.0 * std::numbers::pi * k * p / points;
      acc += samples[p] * std::complex<double>{std::cos(th), std::sin(th)};
    }
    out[k] = acc / (static_cast<double>(points) * std::pow(rho, k));
  }
  return out;
}

// Direct pointwise evaluation of u * prod_j (z_j - z)/(1 - conj(z_j) z).
inline std::complex<double> blaschke_eval(const std::vector<std::complex<double>>& zeros,
                                          std::complex<double> unimodular,
                                          std::complex<double> z) {
  std::complex<double> acc = unimodular;
  for (const auto& zj : zeros) acc *= (zj - z) / (1.0 - std::conj(zj) * z);
  return acc;
}

}  // namespace oracle
