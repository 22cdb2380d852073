#include "brr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "brr/disk_maps.hpp"

namespace brr {

namespace {

struct KindName {
  Kind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {Kind::BohrClassic, "bohr"},
    {Kind::RogosinskiPartial, "rogosinski"},
    {Kind::BohrRogosinski, "br1"},
    {Kind::BohrRogosinskiSq, "br1-sq"},
    {Kind::BohrRogosinskiPower, "br-power"},
    {Kind::BohrArea, "bohr-area"},
    {Kind::BohrAreaSq, "bohr-area-sq"},
    {Kind::BohrQuadratic, "bohr-quad"},
    {Kind::BohrDistSq, "bohr-dist-sq"},
    {Kind::SquareSum, "square-sum"},
    {Kind::AreaBound, "area-bound"},
    {Kind::TailBoundA, "tail-a"},
    {Kind::TailBoundB, "tail-b"},
    {Kind::CoeffSquareSum, "coeff-sq"},
    {Kind::SchwarzPick, "schwarz-pick"},
    {Kind::Wiener, "wiener"},
};

cplx pow_int(cplx z, int m) {
  cplx acc = 1.0;
  for (int i = 0; i < m; ++i) acc *= z;
  return acc;
}

bool z_dependent(Kind k) {
  switch (k) {
    case Kind::RogosinskiPartial:
    case Kind::BohrRogosinski:
    case Kind::BohrRogosinskiSq:
    case Kind::BohrRogosinskiPower:
    case Kind::BohrDistSq:
    case Kind::SquareSum:
    case Kind::SchwarzPick:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::optional<Kind> kind_from_string(const std::string& s) {
  for (const auto& kn : kKindNames)
    if (s == kn.name) return kn.kind;
  return std::nullopt;
}

std::string kind_to_string(Kind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "?";
}

std::vector<std::string> kind_names() {
  std::vector<std::string> out;
  for (const auto& kn : kKindNames) out.emplace_back(kn.name);
  return out;
}

double effective_lam(const Functional& id) {
  if (id.lam >= 0.0) return id.lam;
  if (id.kind == Kind::BohrArea) return 16.0 / 9.0;
  if (id.kind == Kind::BohrAreaSq) return 9.0 / 8.0;
  return 0.0;
}

VerificationReport evaluate(const Functional& id, const Series& f, double r,
                            std::optional<cplx> z_opt, double tol) {
  if (!(r >= 0.0) || r >= 1.0) throw std::domain_error("radius must satisfy 0 <= r < 1");
  if (!f.self_map)
    throw std::domain_error("functional is defined for self-maps of the disk only; input is not flagged as one");
  if (id.N < 1) throw std::domain_error("parameter N must be >= 1");
  if (id.m < 1) throw std::domain_error("parameter m must be >= 1");

  const cplx z = z_opt.value_or(cplx{-r, 0.0});
  if (std::abs(std::abs(z) - r) > 1e-9)
    throw std::domain_error("witness point must satisfy |z| = r");

  const double a0 = std::abs(f.coeffs[0]);
  double value = 0.0, bound = 1.0;
  bool certified = true;
  auto add = [&certified, &value](const Certified& c) {
    value += c.value;
    certified = certified && c.certified;
  };

  switch (id.kind) {
    case Kind::BohrClassic:
      add(bohr_sum(f, r));
      break;
    case Kind::RogosinskiPartial: {
      if (id.N > f.order() + 1)
        throw std::domain_error("partial-sum length exceeds available coefficients");
      value = std::abs(eval(partial_sum(f, id.N), z));
      break;
    }
    case Kind::BohrRogosinski:
      add(modulus_upper(f, z));
      add(tail_sum(f, id.N, r));
      break;
    case Kind::BohrRogosinskiSq: {
      const Certified m = modulus_upper(f, z);
      value = m.value * m.value;
      certified = m.certified;
      add(tail_sum(f, id.N, r));
      break;
    }
    case Kind::BohrRogosinskiPower:
      add(modulus_upper(f, pow_int(z, id.m)));
      add(tail_sum(f, id.N, r));
      break;
    case Kind::BohrArea: {
      add(bohr_sum(f, r));
      Certified area = area_functional(f, r);
      area.value *= effective_lam(id);
      add(area);
      break;
    }
    case Kind::BohrAreaSq: {
      value = a0 * a0;
      add(tail_sum(f, 1, r));
      Certified area = area_functional(f, r);
      area.value *= effective_lam(id);
      add(area);
      break;
    }
    case Kind::BohrQuadratic: {
      add(tail_sum(f, 1, r));
      Certified sq = square_sum(f, r);
      sq.value *= 0.5;
      add(sq);
      value += a0;
      break;
    }
    case Kind::BohrDistSq: {
      add(bohr_sum(f, r));
      double d = std::abs(eval(f, z) - f.coeffs[0]);
      if (auto t = f.tail_bound(std::abs(z)))
        d += *t;
      else
        certified = false;
      value += d * d;
      break;
    }
    case Kind::SquareSum: {
      const Certified m = modulus_upper(f, z);
      value = m.value * m.value;
      certified = m.certified;
      add(square_sum(f, r * r));
      break;
    }
    case Kind::AreaBound: {
      if (r > 1.0 / std::numbers::sqrt2 + 1e-15)
        throw std::domain_error("area bound requires r <= 1/sqrt(2)");
      add(area_functional(f, r));
      const double w = 1.0 - a0 * a0, d = 1.0 - a0 * a0 * r * r;
      bound = r * r * w * w / (d * d);
      break;
    }
    case Kind::TailBoundA:
      if (a0 < r) throw std::domain_error("this tail bound applies when |a_0| >= r");
      add(tail_sum(f, 1, r));
      bound = r * (1.0 - a0 * a0) / (1.0 - r * a0);
      break;
    case Kind::TailBoundB:
      if (a0 >= r) throw std::domain_error("this tail bound applies when |a_0| < r");
      add(tail_sum(f, 1, r));
      bound = r * std::sqrt(1.0 - a0 * a0) / std::sqrt(1.0 - r * r);
      break;
    case Kind::CoeffSquareSum:
      add(square_sum(f, r));
      bound = r * (1.0 - a0 * a0) * (1.0 - a0 * a0) / (1.0 - a0 * a0 * r);
      break;
    case Kind::SchwarzPick:
      add(modulus_upper(f, z));
      bound = (r + a0) / (1.0 + a0 * r);
      break;
    case Kind::Wiener: {
      for (int k = 1; k <= f.order(); ++k) value = std::max(value, std::abs(f.coeffs[k]));
      bound = 1.0 - a0 * a0;
      // The verdict covers dropped coefficients when they are bounded (ratio
      // <= 1) by a head that itself respects the bound.
      certified = f.tail && (f.tail->first == 0.0 ||
                             (f.tail->ratio <= 1.0 &&
                              f.tail->first <= std::max(value, bound) + tol));
      break;
    }
  }

  VerificationReport rep;
  rep.value = value;
  rep.bound = bound;
  rep.margin = bound - value;
  rep.pass = rep.margin >= -tol;
  rep.certified = certified;
  rep.r = r;
  rep.z = z;
  rep.kind = kind_to_string(id.kind);
  rep.function_descriptor = f.label;
  return rep;
}

SharpnessScanResult sharpness_scan(const Functional& id, double r, int grid_size, double tol, int M) {
  if (grid_size < 10) throw std::domain_error("scan grid must have at least 10 points");
  if (!(r > 0.0) || r >= 1.0) throw std::domain_error("scan radius must satisfy 0 < r < 1");

  // Coarse sweep of [0, 0.9] plus half-decade accumulation at a = 1.
  std::set<double> grid;
  const int n_coarse = grid_size / 2;
  for (int i = 0; i < n_coarse; ++i) grid.insert(0.9 * i / (n_coarse - 1));
  for (int j = 0; j < grid_size - n_coarse; ++j) {
    const double e = std::min(2.0 + 0.5 * j, 15.0);
    grid.insert(1.0 - std::pow(10.0, -e));
  }

  const bool reflected = id.kind == Kind::SquareSum;
  SharpnessScanResult out;
  out.r = r;
  out.grid = "uniform[0,0.9]:" + std::to_string(n_coarse) +
             "+half-decade@1:" + std::to_string(grid_size - n_coarse);
  double worst_excess = -1e300;
  bool first_pt = true;
  for (double a : grid) {
    const Series f = reflected ? reflected_moebius(a, M) : moebius_extremal(a, M);
    const cplx z = reflected ? cplx{r, 0.0} : cplx{-r, 0.0};
    const VerificationReport rep = evaluate(id, f, r, z, tol);
    if (first_pt || rep.value > out.sup_value) {
      out.sup_value = rep.value;
      out.argmax_a = a;
      first_pt = false;
    }
    worst_excess = std::max(worst_excess, rep.value - rep.bound);
  }
  out.exceeded = worst_excess > tol;
  return out;
}

FuzzReport property_fuzz(const Functional& id, double r, int trials, std::uint64_t seed,
                         double tol, int M) {
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  FuzzReport rep;
  rep.kind = kind_to_string(id.kind);
  rep.r = r;
  rep.trials = trials;

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed ^ (0x9E3779B97F4A7C15ull * (t + 1));
    const int degree = 1 + t % 5;
    const Series f = random_self_map(trial_seed, degree, M);

    Functional eff = id;
    if (id.kind == Kind::TailBoundA || id.kind == Kind::TailBoundB)
      eff.kind = std::abs(f.coeffs[0]) >= r ? Kind::TailBoundA : Kind::TailBoundB;

    VerificationReport worst;
    if (z_dependent(eff.kind)) {
      for (int j = 0; j < 64; ++j) {
        const double th = 2.0 * std::numbers::pi * j / 64;
        const VerificationReport v = evaluate(eff, f, r, cplx{r * std::cos(th), r * std::sin(th)}, tol);
        if (j == 0 || v.margin < worst.margin) worst = v;
      }
    } else {
      worst = evaluate(eff, f, r, std::nullopt, tol);
    }

    if (!worst.pass) {
      rep.failures.push_back({t, trial_seed, degree, worst.value, worst.bound, worst.margin});
      rep.pass = false;
    }
  }
  return rep;
}

}  // namespace brr
