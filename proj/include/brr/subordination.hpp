#pragma once

#include <string>
#include <vector>

#include "brr/series.hpp"
#include "brr/verify.hpp"

namespace brr {

// Distance-to-boundary form of the Bohr--Rogosinski inequality for functions
// subordinate to a univalent (or convex) majorant f:
//   |g(z)| + sum_{k>=1} |b_k| r^k  <=  |f(0)| + dist(f(0), boundary of f(D)).
enum class Majorant { Univalent, Convex };

struct SubordinationCase {
  Majorant majorant = Majorant::Univalent;
  double f0_modulus = 0.0;      // |f(0)|
  double dist0 = 0.0;           // dist(f(0), boundary of the image domain)
  double deriv0_modulus = 0.0;  // |f'(0)|
};

// Koebe distortion pins dist0 to [deriv0/4, deriv0] for univalent majorants
// and [deriv0/2, deriv0] for convex ones; throws std::domain_error otherwise.
void validate(const SubordinationCase& c);

// Built-in cases with their exact boundary distances.
SubordinationCase koebe_case();                    // univalent, dist0 = 1/4
SubordinationCase half_plane_case();               // convex, dist0 = 1/2
SubordinationCase disk_automorphism_case(double a);  // convex, dist0 = 1 - a

// The proof-side majorant of the subordination left-hand side:
//   f0 + dist0 * 8 r / (1-r)^2   (univalent)
//   f0 + dist0 * 4 r / (1-r)     (convex)
// It stays below f0 + dist0 exactly up to r = 5 - 2 sqrt 6 (univalent) and
// r = 1/5 (convex).
double sub_bound(const SubordinationCase& c, double r);

// Certified check of the subordination inequality for a concrete subordinate
// series g at |z| = r.  Subordination of g to the case's majorant is the
// caller's assertion; the built-in extremals satisfy it structurally.
VerificationReport verify_subordinate(const Series& g, const SubordinationCase& c, double r, cplx z);

// Coefficient consequences of subordination: |b_k| <= k |f'(0)| (univalent),
// |b_k| <= |f'(0)| (convex), checked for every stored k >= 1.
struct CoefficientBoundReport {
  bool pass = true;
  std::vector<int> violations;  // offending indices k
  double worst_excess = 0.0;    // max over k of |b_k| - allowed_k
};

CoefficientBoundReport coefficient_bound_check(const Series& g, const SubordinationCase& c);

}  // namespace brr
