#include "brr/disk_maps.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace brr {

namespace {

void require_param(double a) {
  if (!(a >= 0.0) || a >= 1.0) throw std::domain_error("extremal parameter must satisfy 0 <= a < 1");
}

void require_order(int M) {
  if (M < 1) throw std::domain_error("truncation order must be >= 1");
}

// 53-bit uniform in [0,1) from a 64-bit draw; spelled out so the stream does
// not depend on the standard library's distribution implementations.
double uniform01(std::mt19937_64& gen) { return (gen() >> 11) * 0x1.0p-53; }

}  // namespace

Series moebius_extremal(double a, int M) {
  require_param(a);
  require_order(M);
  Series f;
  f.coeffs.resize(M + 1);
  f.coeffs[0] = a;
  const double w = 1.0 - a * a;
  double ak = 1.0;  // a^{k-1}
  for (int k = 1; k <= M; ++k, ak *= a) f.coeffs[k] = -w * ak;
  f.tail = TailMajorant{w * std::pow(a, M), a};  // |a_{M+1+i}| = w a^{M+i}, exact
  f.self_map = true;
  f.label = "moebius:a=" + fmt_num(a);
  return f;
}

Series reflected_moebius(double a, int M) {
  require_param(a);
  require_order(M);
  Series f;
  f.coeffs.resize(M + 1);
  f.coeffs[0] = a;
  const double w = 1.0 - a * a;
  double ak = 1.0;  // (-a)^{k-1} tracked with alternating sign
  for (int k = 1; k <= M; ++k, ak *= -a) f.coeffs[k] = w * ak;
  f.tail = TailMajorant{w * std::pow(a, M), a};
  f.self_map = true;
  f.label = "reflected:a=" + fmt_num(a);
  return f;
}

Series koebe(int M) {
  require_order(M);
  Series f;
  f.coeffs.resize(M + 1);
  for (int k = 0; k <= M; ++k) f.coeffs[k] = static_cast<double>(k);
  // |a_{M+1+i}| = M+1+i <= (M+1) ((M+2)/(M+1))^i by Bernoulli's inequality.
  f.tail = TailMajorant{static_cast<double>(M + 1), (M + 2.0) / (M + 1.0)};
  f.self_map = false;
  f.label = "koebe";
  return f;
}

Series half_plane(int M) {
  require_order(M);
  Series f;
  f.coeffs.assign(M + 1, cplx{1.0, 0.0});
  f.coeffs[0] = 0.0;
  f.tail = TailMajorant{1.0, 1.0};
  f.self_map = false;
  f.label = "halfplane";
  return f;
}

Series blaschke_product(const BlaschkeSpec& spec, int M) {
  require_order(M);
  if (std::abs(std::abs(spec.unimodular_factor) - 1.0) > 1e-12)
    throw std::domain_error("blaschke factor must be unimodular");
  for (const cplx& z : spec.zeros)
    if (!(std::abs(z) < 1.0)) throw std::domain_error("blaschke zeros must lie inside the disk");

  Series prod;
  prod.coeffs.assign(M + 1, cplx{0.0, 0.0});
  prod.coeffs[0] = spec.unimodular_factor;
  prod.tail = TailMajorant{0.0, 0.0};
  prod.self_map = true;
  prod.label = "blaschke";

  for (const cplx& zj : spec.zeros) {
    Series lin;  // z_j - z, padded to order M so the product keeps full order
    lin.coeffs.assign(M + 1, cplx{0.0, 0.0});
    lin.coeffs[0] = zj;
    lin.coeffs[1] = -1.0;
    lin.tail = TailMajorant{0.0, 0.0};
    lin.label = "lin";
    Series factor = series_mul(lin, series_reciprocal_one_minus(std::conj(zj), M));
    prod = series_mul(prod, factor);
  }

  // Structurally |f| <= 1 on the disk, so the Wiener bound certifies every
  // dropped coefficient; it is also asserted on the stored ones as a guard
  // against arithmetic bugs.
  const double w = 1.0 - std::norm(prod.coeffs[0]);
  for (int k = 1; k <= M; ++k)
    if (std::abs(prod.coeffs[k]) > w + 1e-12)
      throw std::runtime_error("blaschke product violates the Wiener coefficient bound");
  prod.tail = TailMajorant{w, 1.0};
  prod.self_map = true;
  prod.label = "blaschke[deg=" + std::to_string(spec.zeros.size()) + "]";
  return prod;
}

BlaschkeSpec random_blaschke_spec(std::uint64_t seed, int degree) {
  if (degree < 1) throw std::domain_error("degree must be >= 1");
  std::mt19937_64 gen(seed);
  BlaschkeSpec spec;
  spec.zeros.reserve(degree);
  for (int j = 0; j < degree; ++j) {
    const double rad = 0.9 * std::sqrt(uniform01(gen));  // area-uniform in |z| <= 0.9
    const double th = 2.0 * std::numbers::pi * uniform01(gen);
    spec.zeros.emplace_back(rad * std::cos(th), rad * std::sin(th));
  }
  const double phi = 2.0 * std::numbers::pi * uniform01(gen);
  spec.unimodular_factor = cplx{std::cos(phi), std::sin(phi)};
  return spec;
}

Series random_self_map(std::uint64_t seed, int degree, int M) {
  Series f = blaschke_product(random_blaschke_spec(seed, degree), M);
  f.label = "random[seed=" + std::to_string(seed) + ",deg=" + std::to_string(degree) + "]";
  return f;
}

}  // namespace brr
