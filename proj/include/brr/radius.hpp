#pragma once

#include <optional>
#include <string>
#include <vector>

namespace brr {

// Families of radius-defining equations, each with a single sign change on
// (0,1) for the supported parameters:
//   PsiN:         2 (1+r) r^N - (1-r)^2 = 0
//   PrimeN:       (1+r) r^N - (1-r)^2 = 0
//   MN:           2 r^N (1 + r^m) - (1-r)(1 - r^m) = 0
//   AN:           2 r^N - (1-r) = 0
//   UnivalentSub: 8 r - (1-r)^2 = 0    (root 5 - 2 sqrt 6)
//   ConvexSub:    4 r - (1-r) = 0      (root 1/5)
enum class Family { PsiN, PrimeN, MN, AN, UnivalentSub, ConvexSub };

struct RadiusEquation {
  Family family = Family::PsiN;
  int N = 0;  // required by PsiN, PrimeN, MN, AN
  int m = 0;  // required by MN only
};

// Convenience constructors that produce parameter-valid equations.
RadiusEquation psi(int N);
RadiusEquation prime(int N);
RadiusEquation mn(int N, int m);
RadiusEquation an(int N);
RadiusEquation univalent_sub();
RadiusEquation convex_sub();

struct RootResult {
  double value = 0.0;
  double lo = 0.0, hi = 0.0;  // final bracket, sign change certified, hi - lo <= tol
  double residual = 0.0;      // equation value at `value`
  int iterations = 0;
};

// Left-hand side of the defining equation at radius r.
double equation_value(const RadiusEquation& eq, double r);

// Certified bisection on (0,1): a sign scan at resolution 1e-3 first asserts a
// unique negative-to-positive transition, then bisection narrows it to `tol`.
// Throws std::invalid_argument on bad parameters and std::runtime_error when
// the sign pattern is not the expected single change.
RootResult solve(const RadiusEquation& eq, double tol = 1e-12);

// Exact algebraic value when one is known; otherwise absent.
std::optional<double> closed_form(const RadiusEquation& eq);

// The sharp radius of the squared-coefficient bound |f(z)|^2 +
// sum |a_k|^2 r^{2k} <= 1, exposed as a named constant: sqrt(11/27).
extern const double SQRT_11_27;

// Asymptotic and cross-family consistency checks on solver output.
struct LimitReport {
  bool all_ok = true;
  std::vector<std::string> checks;      // description of every check performed
  std::vector<std::string> violations;  // empty when all_ok
};

// Verifies, over N = 1..n_max (and m up to m_max where relevant):
//  - each family's radius increases strictly in N,
//  - the prime-family root exceeds the psi-family root for every N,
//  - the m = 1 composite equation reproduces the psi root to 1e-12,
//  - the composite root converges to the AN root as m grows (m = m_max),
//  - 1 - (psi root) falls below 0.1 by N = 64,
//  - composite-vs-AN distance shrinks: |R(32,1) - A_1| < |R(8,1) - A_1|.
LimitReport limit_checks(int n_max = 8, int m_max = 64);

}  // namespace brr
