#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace brr {

using cplx = std::complex<double>;

// Certified geometric majorant of the coefficients dropped by truncation:
//   |a_{M+1+i}| <= first * ratio^i   for all i >= 0,
// where M is the truncation order of the owning series.  `ratio` may exceed 1
// (coefficients that grow, e.g. like k for the Koebe function); certification
// of a radius-r tail then requires ratio * r < 1.
struct TailMajorant {
  double first = 0.0;
  double ratio = 0.0;
};

// A numeric result together with a flag saying whether the discarded tail of
// the series was accounted for (value is then a rigorous upper bound).
struct Certified {
  double value = 0.0;
  bool certified = false;
};

// Truncated Taylor series sum_{k=0}^{M} coeffs[k] z^k of an analytic function
// on the unit disk.  `self_map` marks series known to satisfy |f| <= 1 on the
// disk (constructors that set it enforce the Wiener coefficient bound
// |a_k| <= 1 - |a_0|^2).  Unbounded functions (Koebe-type) leave it false.
struct Series {
  std::vector<cplx> coeffs;          // index k holds a_k, k = 0..order()
  std::optional<TailMajorant> tail;  // absent => tail unknown, results uncertified
  bool self_map = false;
  std::string label;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  // Certified bound on sum_{k>M} |a_k| r^k, when the majorant yields one.
  std::optional<double> tail_bound(double r) const;
};

// sum_{k=0}^{M} a_k z^k by Horner evaluation; |z| < 1 required.  Truncation
// error is bounded by tail_bound(|z|) when available.
cplx eval(const Series& f, cplx z);

// |f(z)| with the truncation tail added on top: a certified upper bound on
// the true modulus when the majorant covers |z|.
Certified modulus_upper(const Series& f, cplx z);

// Bohr sum  sum_k |a_k| r^k  (majorant series of f at radius r).
Certified bohr_sum(const Series& f, double r);

// sum_{k>=N} |a_k| r^k, N >= 1.
Certified tail_sum(const Series& f, int N, double r);

// sum_{k>=1} |a_k|^2 s^k  (pass s = r*r for the sum over |a_k|^2 r^{2k}).
Certified square_sum(const Series& f, double s);

// Normalized image-area functional  sum_{k>=1} k |a_k|^2 r^{2k}.
Certified area_functional(const Series& f, double r);

// Partial sum S_N(z) = sum_{k=0}^{N-1} a_k z^k as an exact polynomial series.
Series partial_sum(const Series& f, int N);

// Cauchy product truncated at the smaller order.  Coefficients up to that
// order are exact; the discarded tail gets a conservative certified majorant
// whenever both factors carry one.
Series series_mul(const Series& f, const Series& g);

// Geometric series sum_{k=0}^{M} a^k z^k = 1/(1 - a z) truncated at M, with
// the exact geometric tail majorant; requires |a| < 1.
Series series_reciprocal_one_minus(cplx a, int M);

// Shared formatting helper: shortest practical decimal form used in labels
// and CLI output (15 significant digits).
std::string fmt_num(double x);

}  // namespace brr
