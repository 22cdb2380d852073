#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brr/series.hpp"

namespace brr {

// Bohr-type functionals.  Every kind compares a coefficient/modulus
// expression on a self-map of the disk against its sharp bound:
//   BohrClassic:          sum |a_k| r^k                          <= 1
//   RogosinskiPartial:    |S_N(z)|                               <= 1
//   BohrRogosinski:       |f(z)| + sum_{k>=N} |a_k| r^k          <= 1
//   BohrRogosinskiSq:     |f(z)|^2 + sum_{k>=N} |a_k| r^k        <= 1
//   BohrRogosinskiPower:  |f(z^m)| + sum_{k>=N} |a_k| r^k        <= 1
//   BohrArea:             sum |a_k| r^k + lam * area             <= 1   (lam default 16/9)
//   BohrAreaSq:           |a_0|^2 + sum_{k>=1} |a_k| r^k + lam * area <= 1  (lam default 9/8)
//   BohrQuadratic:        |a_0| + sum_{k>=1} (|a_k| + |a_k|^2/2) r^k  <= 1
//   BohrDistSq:           sum |a_k| r^k + |f(z) - a_0|^2         <= 1
//   SquareSum:            |f(z)|^2 + sum_{k>=1} |a_k|^2 r^{2k}   <= 1
//   AreaBound:            sum k |a_k|^2 r^{2k}  <=  r^2 (1-|a_0|^2)^2 / (1-|a_0|^2 r^2)^2
//                         (valid for r <= 1/sqrt 2)
//   TailBoundA:           sum_{k>=1} |a_k| r^k  <=  r (1-|a_0|^2) / (1 - r |a_0|)
//                         (applicable when |a_0| >= r)
//   TailBoundB:           sum_{k>=1} |a_k| r^k  <=  r sqrt(1-|a_0|^2) / sqrt(1-r^2)
//                         (applicable when |a_0| < r)
//   CoeffSquareSum:       sum_{k>=1} |a_k|^2 r^k  <=  r (1-|a_0|^2)^2 / (1 - |a_0|^2 r)
//   SchwarzPick:          |f(z)|  <=  (r + |a_0|) / (1 + |a_0| r)
//   Wiener:               max_{k>=1} |a_k|  <=  1 - |a_0|^2
// where area = sum k |a_k|^2 r^{2k} (image area over pi, counted with
// multiplicity).
enum class Kind {
  BohrClassic,
  RogosinskiPartial,
  BohrRogosinski,
  BohrRogosinskiSq,
  BohrRogosinskiPower,
  BohrArea,
  BohrAreaSq,
  BohrQuadratic,
  BohrDistSq,
  SquareSum,
  AreaBound,
  TailBoundA,
  TailBoundB,
  CoeffSquareSum,
  SchwarzPick,
  Wiener,
};

struct Functional {
  Kind kind = Kind::BohrRogosinski;
  int N = 1;          // tail start / partial-sum length where applicable
  int m = 1;          // inner power for BohrRogosinskiPower
  double lam = -1.0;  // area-term weight; negative selects the per-kind default
};

// CLI-facing identifiers (bohr, rogosinski, br1, br1-sq, br-power, bohr-area,
// bohr-area-sq, bohr-quad, bohr-dist-sq, square-sum, area-bound, tail-a,
// tail-b, coeff-sq, schwarz-pick, wiener).
std::optional<Kind> kind_from_string(const std::string& s);
std::string kind_to_string(Kind k);
std::vector<std::string> kind_names();

// Effective area weight: lam when set, else 16/9 (BohrArea) or 9/8 (BohrAreaSq).
double effective_lam(const Functional& id);

struct VerificationReport {
  double value = 0.0;   // certified upper value of the left-hand side
  double bound = 0.0;
  double margin = 0.0;  // bound - value
  bool pass = false;    // margin >= -tol
  bool certified = false;
  double r = 0.0;
  cplx z = 0.0;
  std::string kind;
  std::string function_descriptor;
};

// Evaluates the functional on f at radius r.  z defaults to -r (the witness
// every extremal-family equality uses); when supplied it must satisfy
// |z| = r.  Kinds are defined for self-maps only, so f.self_map must be set;
// AreaBound additionally requires r <= 1/sqrt 2, and the TailBound kinds
// their |a_0|-vs-r applicability condition.
VerificationReport evaluate(const Functional& id, const Series& f, double r,
                            std::optional<cplx> z = std::nullopt, double tol = 1e-9);

struct SharpnessScanResult {
  double r = 0.0;
  double sup_value = 0.0;
  double argmax_a = 0.0;
  bool exceeded = false;  // max over the grid of (value - bound) > tol
  std::string grid;
};

// Maximizes the functional over the automorphism family: (a - z)/(1 - a z)
// at z = -r, except SquareSum which uses (z + a)/(1 + a z) at z = +r (its
// equality case lives there).  The parameter grid covers [0, 0.9] uniformly
// with half the budget and accumulates at a = 1 in half-decade steps
// a = 1 - 10^{-(2 + j/2)} with the rest, mirroring the a -> 1 sharpness
// arguments.
SharpnessScanResult sharpness_scan(const Functional& id, double r, int grid_size = 40,
                                   double tol = 1e-9, int M = 200);

struct FuzzFailure {
  int trial = 0;
  std::uint64_t seed = 0;
  int degree = 0;
  double value = 0.0, bound = 0.0, margin = 0.0;
};

struct FuzzReport {
  std::string kind;
  double r = 0.0;
  int trials = 0;
  std::vector<FuzzFailure> failures;
  bool pass = true;
};

// Evaluates the functional on `trials` random Blaschke products (degrees
// cycling 1..5, per-trial seeds derived from `seed`), taking the worst z over
// 64 equally spaced points on |z| = r for the z-dependent kinds.  The
// TailBound kinds auto-select the branch applicable to each sample.
FuzzReport property_fuzz(const Functional& id, double r, int trials, std::uint64_t seed,
                         double tol = 1e-9, int M = 200);

}  // namespace brr
