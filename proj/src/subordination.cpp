#include "brr/subordination.hpp"

#include <cmath>
#include <stdexcept>

namespace brr {

void validate(const SubordinationCase& c) {
  if (!(c.f0_modulus >= 0.0) || !(c.dist0 > 0.0) || !(c.deriv0_modulus >= 0.0))
    throw std::domain_error("subordination case requires f0 >= 0, dist0 > 0, deriv0 >= 0");
  const double lo = (c.majorant == Majorant::Univalent ? 0.25 : 0.5) * c.deriv0_modulus;
  const double hi = c.deriv0_modulus;
  if (c.dist0 < lo - 1e-12 || c.dist0 > hi + 1e-12)
    throw std::domain_error("dist0 outside the range the distortion theorem allows for |f'(0)|");
}

SubordinationCase koebe_case() { return {Majorant::Univalent, 0.0, 0.25, 1.0}; }
SubordinationCase half_plane_case() { return {Majorant::Convex, 0.0, 0.5, 1.0}; }

SubordinationCase disk_automorphism_case(double a) {
  if (!(a >= 0.0) || a >= 1.0) throw std::domain_error("automorphism parameter must satisfy 0 <= a < 1");
  return {Majorant::Convex, a, 1.0 - a, 1.0 - a * a};
}

double sub_bound(const SubordinationCase& c, double r) {
  validate(c);
  if (!(r >= 0.0) || r >= 1.0) throw std::domain_error("radius must satisfy 0 <= r < 1");
  const double growth = c.majorant == Majorant::Univalent ? 8.0 * r / ((1.0 - r) * (1.0 - r))
                                                          : 4.0 * r / (1.0 - r);
  return c.f0_modulus + c.dist0 * growth;
}

VerificationReport verify_subordinate(const Series& g, const SubordinationCase& c, double r, cplx z) {
  validate(c);
  if (!(r >= 0.0) || r >= 1.0) throw std::domain_error("radius must satisfy 0 <= r < 1");
  if (std::abs(std::abs(z) - r) > 1e-9) throw std::domain_error("witness point must satisfy |z| = r");
  const double tol = 1e-9;

  const Certified m = modulus_upper(g, z);
  const Certified tail = tail_sum(g, 1, r);

  VerificationReport rep;
  rep.value = m.value + tail.value;
  rep.bound = c.f0_modulus + c.dist0;
  rep.margin = rep.bound - rep.value;
  rep.pass = rep.margin >= -tol;
  rep.certified = m.certified && tail.certified;
  rep.r = r;
  rep.z = z;
  rep.kind = c.majorant == Majorant::Univalent ? "sub-univalent" : "sub-convex";
  rep.function_descriptor = g.label;
  return rep;
}

CoefficientBoundReport coefficient_bound_check(const Series& g, const SubordinationCase& c) {
  validate(c);
  CoefficientBoundReport rep;
  for (int k = 1; k <= g.order(); ++k) {
    const double allowed =
        (c.majorant == Majorant::Univalent ? k * c.deriv0_modulus : c.deriv0_modulus);
    const double excess = std::abs(g.coeffs[k]) - allowed;
    rep.worst_excess = std::max(rep.worst_excess, excess);
    if (excess > 1e-12) {
      rep.pass = false;
      rep.violations.push_back(k);
    }
  }
  return rep;
}

}  // namespace brr
