#include "brr/series.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace brr {

namespace {

void require_radius(double r) {
  if (!(r >= 0.0) || r >= 1.0) throw std::domain_error("radius must satisfy 0 <= r < 1");
}

}  // namespace

std::string fmt_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::optional<double> Series::tail_bound(double r) const {
  if (!tail) return std::nullopt;
  if (tail->first == 0.0) return 0.0;
  const double q = tail->ratio * r;
  if (!(q < 1.0)) return std::nullopt;
  const double b = tail->first * std::pow(r, order() + 1) / (1.0 - q);
  if (!std::isfinite(b)) return std::nullopt;
  return b;
}

cplx eval(const Series& f, cplx z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("evaluation point must satisfy |z| < 1");
  cplx acc = 0.0;
  for (int k = f.order(); k >= 0; --k) acc = acc * z + f.coeffs[k];
  return acc;
}

Certified modulus_upper(const Series& f, cplx z) {
  const double v = std::abs(eval(f, z));
  if (auto t = f.tail_bound(std::abs(z))) return {v + *t, true};
  return {v, false};
}

Certified bohr_sum(const Series& f, double r) {
  require_radius(r);
  double acc = 0.0, rk = 1.0;
  for (int k = 0; k <= f.order(); ++k, rk *= r) acc += std::abs(f.coeffs[k]) * rk;
  if (auto t = f.tail_bound(r)) return {acc + *t, true};
  return {acc, false};
}

Certified tail_sum(const Series& f, int N, double r) {
  if (N < 1) throw std::domain_error("tail index N must be >= 1");
  require_radius(r);
  double acc = 0.0;
  double rk = std::pow(r, N);
  for (int k = N; k <= f.order(); ++k, rk *= r) acc += std::abs(f.coeffs[k]) * rk;
  if (auto t = f.tail_bound(r)) return {acc + *t, true};
  return {acc, false};
}

Certified square_sum(const Series& f, double s) {
  require_radius(s);
  double acc = 0.0, sk = s;
  for (int k = 1; k <= f.order(); ++k, sk *= s) acc += std::norm(f.coeffs[k]) * sk;
  // Tail: |a_{M+1+i}|^2 s^{M+1+i} <= first^2 (ratio^2 s)^i s^{M+1}.
  if (f.tail) {
    if (f.tail->first == 0.0) return {acc, true};
    const double q = f.tail->ratio * f.tail->ratio * s;
    if (q < 1.0) {
      const double t = f.tail->first * f.tail->first * std::pow(s, f.order() + 1) / (1.0 - q);
      if (std::isfinite(t)) return {acc + t, true};
    }
  }
  return {acc, false};
}

Certified area_functional(const Series& f, double r) {
  require_radius(r);
  const double s = r * r;
  double acc = 0.0, sk = s;
  for (int k = 1; k <= f.order(); ++k, sk *= s) acc += k * std::norm(f.coeffs[k]) * sk;
  // Tail: sum_i (M+1+i) first^2 (ratio^2 s)^i s^{M+1}
  //     = first^2 s^{M+1} [ (M+1)/(1-x) + x/(1-x)^2 ],  x = ratio^2 s.
  if (f.tail) {
    if (f.tail->first == 0.0) return {acc, true};
    const double x = f.tail->ratio * f.tail->ratio * s;
    if (x < 1.0) {
      const double m1 = f.order() + 1;
      const double t = f.tail->first * f.tail->first * std::pow(s, f.order() + 1) *
                       (m1 / (1.0 - x) + x / ((1.0 - x) * (1.0 - x)));
      if (std::isfinite(t)) return {acc + t, true};
    }
  }
  return {acc, false};
}

Series partial_sum(const Series& f, int N) {
  if (N < 1 || N > f.order() + 1) throw std::domain_error("partial sum index out of range");
  Series s;
  s.coeffs.assign(f.coeffs.begin(), f.coeffs.begin() + N);
  s.tail = TailMajorant{0.0, 0.0};  // exact polynomial
  s.self_map = false;
  s.label = "S_" + std::to_string(N) + "(" + f.label + ")";
  return s;
}

Series series_mul(const Series& f, const Series& g) {
  const int M = std::min(f.order(), g.order());
  Series h;
  h.coeffs.assign(M + 1, cplx{0.0, 0.0});
  for (int k = 0; k <= M; ++k) {
    cplx acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += f.coeffs[i] * g.coeffs[k - i];
    h.coeffs[k] = acc;
  }
  h.self_map = f.self_map && g.self_map;
  h.label = "(" + f.label + ")*(" + g.label + ")";

  // Conservative certified majorant for everything beyond order M.  Bound each
  // factor by an envelope C * rho^k valid for every k (stored coefficients and
  // majorant tail alike), with a common rho >= 1 so the stored part needs only
  // C >= max|coeff|.  Then |h_k| <= C_f C_g (k+1) rho^k, and with Bernoulli's
  // inequality (k+1) <= (M+2) ((M+3)/(M+2))^{k-M-1} for k > M this fits the
  // first/ratio form.
  if (f.tail && g.tail) {
    double rho = std::max({1.0, f.tail->ratio, g.tail->ratio});
    auto envelope = [&](const Series& s) {
      double c = 0.0;
      double rk = 1.0;
      for (int k = 0; k <= s.order(); ++k, rk *= rho) c = std::max(c, std::abs(s.coeffs[k]) / rk);
      return std::max(c, s.tail->first / rk);  // rk == rho^{order+1} here
    };
    const double cf = envelope(f), cg = envelope(g);
    const double first = cf * cg * (M + 2) * std::pow(rho, M + 1);
    const double ratio = rho * (M + 3.0) / (M + 2.0);
    if (std::isfinite(first) && std::isfinite(ratio)) h.tail = TailMajorant{first, ratio};
  }
  return h;
}

Series series_reciprocal_one_minus(cplx a, int M) {
  if (!(std::abs(a) < 1.0)) throw std::domain_error("geometric series requires |a| < 1");
  if (M < 0) throw std::domain_error("truncation order must be >= 0");
  Series s;
  s.coeffs.resize(M + 1);
  cplx ak = 1.0;
  for (int k = 0; k <= M; ++k, ak *= a) s.coeffs[k] = ak;
  const double r = std::abs(a);
  s.tail = TailMajorant{std::pow(r, M + 1), r};
  s.self_map = false;
  s.label = "1/(1-(" + fmt_num(a.real()) + (a.imag() < 0 ? "-" : "+") + fmt_num(std::abs(a.imag())) + "i)z)";
  return s;
}

}  // namespace brr
