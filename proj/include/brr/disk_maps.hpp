#pragma once

#include <cstdint>
#include <vector>

#include "brr/series.hpp"

namespace brr {

// Finite Blaschke product data: unimodular_factor * prod_j
// (z_j - z)/(1 - conj(z_j) z).  Every |z_j| < 1; |unimodular_factor| = 1
// within 1e-12.  The factor sign convention makes a single real zero a
// reproduce (a - z)/(1 - a z) exactly.
struct BlaschkeSpec {
  std::vector<cplx> zeros;
  cplx unimodular_factor = 1.0;
};

// (a - z)/(1 - a z), 0 <= a < 1: the disk automorphism whose coefficient
// moduli (1 - a^2) a^{k-1} drive every sharpness scan.  Exact geometric tail.
Series moebius_extremal(double a, int M);

// (z + a)/(1 + a z), 0 <= a < 1: the mirror automorphism used by the
// squared-coefficient sharpness witness (evaluated at z = +r).
Series reflected_moebius(double a, int M);

// Koebe function z/(1-z)^2 = sum k z^k: extremal for univalent distortion;
// unbounded on the disk, so self_map stays false.
Series koebe(int M);

// Half-plane map z/(1-z) = sum_{k>=1} z^k: the convex extremal; unbounded.
Series half_plane(int M);

// Taylor coefficients of the Blaschke product to order M, built by repeated
// series multiplication.  Result is structurally a self-map; the Wiener bound
// |a_k| <= 1 - |a_0|^2 is asserted post-hoc and installed as the tail
// majorant.
Series blaschke_product(const BlaschkeSpec& spec, int M);

// Deterministic random Blaschke spec: `degree` zeros uniform in |z| <= 0.9,
// unimodular factor uniform on the circle, all drawn from a fixed-width
// generator so the same seed reproduces identical bits on every platform.
BlaschkeSpec random_blaschke_spec(std::uint64_t seed, int degree);

// random_blaschke_spec composed with blaschke_product.
Series random_self_map(std::uint64_t seed, int degree, int M = 200);

}  // namespace brr
