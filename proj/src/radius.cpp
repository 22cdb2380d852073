#include "brr/radius.hpp"

#include <cmath>
#include <stdexcept>

namespace brr {

const double SQRT_11_27 = std::sqrt(11.0 / 27.0);

RadiusEquation psi(int N) { return {Family::PsiN, N, 0}; }
RadiusEquation prime(int N) { return {Family::PrimeN, N, 0}; }
RadiusEquation mn(int N, int m) { return {Family::MN, N, m}; }
RadiusEquation an(int N) { return {Family::AN, N, 0}; }
RadiusEquation univalent_sub() { return {Family::UnivalentSub, 0, 0}; }
RadiusEquation convex_sub() { return {Family::ConvexSub, 0, 0}; }

namespace {

void validate(const RadiusEquation& eq) {
  switch (eq.family) {
    case Family::PsiN:
    case Family::PrimeN:
    case Family::AN:
      if (eq.N < 1) throw std::invalid_argument("family requires N >= 1");
      break;
    case Family::MN:
      if (eq.N < 1 || eq.m < 1) throw std::invalid_argument("family requires N >= 1 and m >= 1");
      break;
    case Family::UnivalentSub:
    case Family::ConvexSub:
      break;
  }
}

}  // namespace

double equation_value(const RadiusEquation& eq, double r) {
  switch (eq.family) {
    case Family::PsiN:
      return 2.0 * (1.0 + r) * std::pow(r, eq.N) - (1.0 - r) * (1.0 - r);
    case Family::PrimeN:
      return (1.0 + r) * std::pow(r, eq.N) - (1.0 - r) * (1.0 - r);
    case Family::MN:
      return 2.0 * std::pow(r, eq.N) * (1.0 + std::pow(r, eq.m)) -
             (1.0 - r) * (1.0 - std::pow(r, eq.m));
    case Family::AN:
      return 2.0 * std::pow(r, eq.N) - (1.0 - r);
    case Family::UnivalentSub:
      return 8.0 * r - (1.0 - r) * (1.0 - r);
    case Family::ConvexSub:
      return 4.0 * r - (1.0 - r);
  }
  throw std::invalid_argument("unknown equation family");
}

RootResult solve(const RadiusEquation& eq, double tol) {
  validate(eq);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  // Sign scan: every equation here is negative near 0 and positive near 1;
  // assert exactly one negative-to-positive transition at 1e-3 resolution.
  const double lo0 = 1e-9, hi0 = 1.0 - 1e-9;
  const int scan_points = 1000;
  int transitions = 0;
  double lo = lo0, hi = hi0;
  double prev_x = lo0, prev_v = equation_value(eq, lo0);
  if (!(prev_v < 0.0)) throw std::runtime_error("equation not negative near r = 0");
  for (int i = 1; i <= scan_points; ++i) {
    const double x = lo0 + (hi0 - lo0) * i / scan_points;
    const double v = equation_value(eq, x);
    if (prev_v < 0.0 && v >= 0.0) {
      ++transitions;
      lo = prev_x;
      hi = x;
    } else if (prev_v >= 0.0 && v < 0.0) {
      throw std::runtime_error("equation sign pattern is not a single change on (0,1)");
    }
    prev_x = x;
    prev_v = v;
  }
  if (transitions != 1) throw std::runtime_error("equation has no certified sign change on (0,1)");

  RootResult res;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    (equation_value(eq, mid) < 0.0 ? lo : hi) = mid;
    ++res.iterations;
  }
  res.lo = lo;
  res.hi = hi;
  res.value = 0.5 * (lo + hi);
  res.residual = equation_value(eq, res.value);
  return res;
}

std::optional<double> closed_form(const RadiusEquation& eq) {
  switch (eq.family) {
    case Family::PsiN:
      if (eq.N == 1) return std::sqrt(5.0) - 2.0;
      return std::nullopt;
    case Family::PrimeN:
      if (eq.N == 1) return 1.0 / 3.0;
      return std::nullopt;
    case Family::AN:
      if (eq.N == 1) return 1.0 / 3.0;
      if (eq.N == 2) return 0.5;
      return std::nullopt;
    case Family::UnivalentSub:
      return 5.0 - 2.0 * std::sqrt(6.0);
    case Family::ConvexSub:
      return 0.2;
    case Family::MN:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void check(LimitReport& rep, const std::string& what, bool ok) {
  rep.checks.push_back(what);
  if (!ok) {
    rep.all_ok = false;
    rep.violations.push_back(what);
  }
}

}  // namespace

LimitReport limit_checks(int n_max, int m_max) {
  if (n_max < 1 || m_max < 1) throw std::invalid_argument("limit check ranges must be nonempty");
  LimitReport rep;

  std::vector<double> r_psi(n_max + 1), r_prime(n_max + 1), r_an(n_max + 1), r_mn(n_max + 1);
  for (int N = 1; N <= n_max; ++N) {
    r_psi[N] = solve(psi(N)).value;
    r_prime[N] = solve(prime(N)).value;
    r_an[N] = solve(an(N)).value;
    r_mn[N] = solve(mn(N, m_max)).value;
  }
  for (int N = 2; N <= n_max; ++N) {
    check(rep, "psi radius strictly increasing at N=" + std::to_string(N), r_psi[N] > r_psi[N - 1]);
    check(rep, "prime radius strictly increasing at N=" + std::to_string(N), r_prime[N] > r_prime[N - 1]);
    check(rep, "AN radius strictly increasing at N=" + std::to_string(N), r_an[N] > r_an[N - 1]);
    check(rep, "composite radius (m fixed) strictly increasing at N=" + std::to_string(N), r_mn[N] > r_mn[N - 1]);
  }
  for (int N = 1; N <= n_max; ++N) {
    check(rep, "prime root exceeds psi root at N=" + std::to_string(N), r_prime[N] > r_psi[N]);
    check(rep, "m=1 composite reproduces psi root at N=" + std::to_string(N),
          std::abs(solve(mn(N, 1)).value - r_psi[N]) <= 1e-12);
    check(rep, "composite approaches AN root at m=" + std::to_string(m_max) + ", N=" + std::to_string(N),
          std::abs(r_mn[N] - r_an[N]) <= 1e-3);
  }
  check(rep, "psi radius within 0.1 of 1 at N=64", 1.0 - solve(psi(64)).value < 0.1);
  const double a1 = solve(an(1)).value;
  check(rep, "composite-to-AN gap shrinks in m (m=8 vs m=32, N=1)",
        std::abs(solve(mn(1, 32)).value - a1) < std::abs(solve(mn(1, 8)).value - a1));
  return rep;
}

}  // namespace brr
