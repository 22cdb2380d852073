// Python bindings: a thin dict-returning layer over the series, radius,
// verification, and subordination APIs.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "brr/disk_maps.hpp"
#include "brr/radius.hpp"
#include "brr/series.hpp"
#include "brr/subordination.hpp"
#include "brr/verify.hpp"

namespace py = pybind11;

namespace {

brr::RadiusEquation make_equation(const std::string& family, int n, int m) {
  if (family == "psi") return brr::psi(n);
  if (family == "prime") return brr::prime(n);
  if (family == "mn") return brr::mn(n, m);
  if (family == "an") return brr::an(n);
  if (family == "univalent") return brr::univalent_sub();
  if (family == "convex") return brr::convex_sub();
  throw std::invalid_argument("unknown radius family: " + family);
}

brr::Kind parse_kind(const std::string& s) {
  const auto k = brr::kind_from_string(s);
  if (!k) throw std::invalid_argument("unknown functional kind: " + s);
  return *k;
}

brr::Functional make_functional(const std::string& kind, int n, int m, double lam) {
  brr::Functional id;
  id.kind = parse_kind(kind);
  id.N = n;
  id.m = m;
  id.lam = lam;
  return id;
}

brr::Majorant parse_majorant(const std::string& s) {
  if (s == "univalent") return brr::Majorant::Univalent;
  if (s == "convex") return brr::Majorant::Convex;
  throw std::invalid_argument("majorant must be 'univalent' or 'convex'");
}

py::dict report_dict(const brr::VerificationReport& rep) {
  py::dict d;
  d["value"] = rep.value;
  d["bound"] = rep.bound;
  d["margin"] = rep.margin;
  d["pass"] = rep.pass;
  d["certified"] = rep.certified;
  d["r"] = rep.r;
  d["z"] = rep.z;
  d["kind"] = rep.kind;
  d["fn"] = rep.function_descriptor;
  return d;
}

py::dict certified_dict(const brr::Certified& c) {
  py::dict d;
  d["value"] = c.value;
  d["certified"] = c.certified;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Bohr-type radii and Bohr-Rogosinski functionals on analytic self-maps "
      "of the unit disk: truncated series with certified tails, a bracketing "
      "radius solver, sharpness scans, and randomized property checks.";

  py::class_<brr::Series>(mod, "Series")
      .def_property_readonly("coeffs", [](const brr::Series& s) { return s.coeffs; })
      .def_property_readonly("self_map", [](const brr::Series& s) { return s.self_map; })
      .def_property_readonly("label", [](const brr::Series& s) { return s.label; })
      .def_property_readonly("order", &brr::Series::order)
      .def_property_readonly("has_tail", [](const brr::Series& s) { return s.tail.has_value(); })
      .def("tail_bound", &brr::Series::tail_bound, py::arg("r"),
           "Upper bound for the dropped tail sum at radius r.")
      .def("__repr__",
           [](const brr::Series& s) { return "<Series " + s.label + " order=" +
                                             std::to_string(s.order()) + ">"; });

  // --- constructors
  mod.def("moebius", &brr::moebius_extremal, py::arg("a"), py::arg("M") = 200,
          "(a - z)/(1 - a z), the extremal disk automorphism.");
  mod.def("reflected", &brr::reflected_moebius, py::arg("a"), py::arg("M") = 200,
          "(z + a)/(1 + a z), the mirror automorphism.");
  mod.def("koebe", &brr::koebe, py::arg("M") = 200, "z/(1-z)^2.");
  mod.def("half_plane", &brr::half_plane, py::arg("M") = 200, "z/(1-z).");
  mod.def(
      "blaschke",
      [](const std::vector<brr::cplx>& zeros, brr::cplx unimodular, int M) {
        brr::BlaschkeSpec spec;
        spec.zeros = zeros;
        spec.unimodular_factor = unimodular;
        return brr::blaschke_product(spec, M);
      },
      py::arg("zeros"), py::arg("unimodular") = brr::cplx{1.0, 0.0}, py::arg("M") = 200,
      "Finite Blaschke product with the given zeros (all |z_j| < 1).");
  mod.def("random_self_map", &brr::random_self_map, py::arg("seed"), py::arg("degree"),
          py::arg("M") = 200, "Deterministic random Blaschke product.");
  mod.def(
      "from_coeffs",
      [](const std::vector<brr::cplx>& coeffs, bool self_map) {
        brr::Series f;
        f.coeffs = coeffs;
        f.self_map = self_map;
        f.label = "coeffs[n=" + std::to_string(coeffs.size()) + "]";
        return f;
      },
      py::arg("coeffs"), py::arg("self_map") = false,
      "Series from raw coefficients; no tail metadata, so results are uncertified.");

  // --- series operations
  mod.def(
      "eval", [](const brr::Series& f, brr::cplx z) { return brr::eval(f, z); }, py::arg("f"),
      py::arg("z"), "Truncated-series value at z (|z| < 1).");
  mod.def(
      "bohr_sum", [](const brr::Series& f, double r) { return certified_dict(brr::bohr_sum(f, r)); },
      py::arg("f"), py::arg("r"), "sum_k |a_k| r^k with tail certificate.");
  mod.def(
      "tail_sum",
      [](const brr::Series& f, int N, double r) { return certified_dict(brr::tail_sum(f, N, r)); },
      py::arg("f"), py::arg("N"), py::arg("r"), "sum_{k>=N} |a_k| r^k with tail certificate.");
  mod.def(
      "square_sum",
      [](const brr::Series& f, double s) { return certified_dict(brr::square_sum(f, s)); },
      py::arg("f"), py::arg("s"), "sum_k |a_k|^2 s^k with tail certificate.");
  mod.def(
      "area_functional",
      [](const brr::Series& f, double r) { return certified_dict(brr::area_functional(f, r)); },
      py::arg("f"), py::arg("r"),
      "sum_k k |a_k|^2 r^{2k}: image area over pi, with multiplicity.");
  mod.def("partial_sum", &brr::partial_sum, py::arg("f"), py::arg("N"),
          "First N terms a_0 .. a_{N-1} as a new series.");

  // --- radii
  mod.def(
      "solve_radius",
      [](const std::string& family, int n, int m, double tol) {
        const auto eq = make_equation(family, n, m);
        const auto res = brr::solve(eq, tol);
        py::dict d;
        d["value"] = res.value;
        d["lo"] = res.lo;
        d["hi"] = res.hi;
        d["residual"] = res.residual;
        d["iterations"] = res.iterations;
        const auto cf = brr::closed_form(eq);
        d["closed_form"] = cf ? py::cast(*cf) : py::none();
        return d;
      },
      py::arg("family"), py::arg("n") = 1, py::arg("m") = 1, py::arg("tol") = 1e-12,
      "Certified bisection root of one radius-defining equation "
      "(family: psi|prime|mn|an|univalent|convex).");

  // --- verification
  mod.def(
      "evaluate_functional",
      [](const std::string& kind, const brr::Series& f, double r, std::optional<brr::cplx> z,
         int n, int m, double lam, double tol) {
        return report_dict(brr::evaluate(make_functional(kind, n, m, lam), f, r, z, tol));
      },
      py::arg("kind"), py::arg("f"), py::arg("r"), py::arg("z") = std::nullopt, py::arg("n") = 1,
      py::arg("m") = 1, py::arg("lam") = -1.0, py::arg("tol") = 1e-9,
      "Evaluate one functional on f at radius r (z defaults to -r).");
  mod.def(
      "sharpness_scan",
      [](const std::string& kind, double r, int grid, int n, int m, double lam, double tol,
         int M) {
        const auto res = brr::sharpness_scan(make_functional(kind, n, m, lam), r, grid, tol, M);
        py::dict d;
        d["r"] = res.r;
        d["sup_value"] = res.sup_value;
        d["argmax_a"] = res.argmax_a;
        d["exceeded"] = res.exceeded;
        d["grid"] = res.grid;
        return d;
      },
      py::arg("kind"), py::arg("r"), py::arg("grid") = 40, py::arg("n") = 1, py::arg("m") = 1,
      py::arg("lam") = -1.0, py::arg("tol") = 1e-9, py::arg("M") = 200,
      "Maximize the functional over the extremal automorphism family.");
  mod.def(
      "property_fuzz",
      [](const std::string& kind, double r, int trials, std::uint64_t seed, int n, int m,
         double lam, double tol, int M) {
        const auto rep = brr::property_fuzz(make_functional(kind, n, m, lam), r, trials, seed,
                                            tol, M);
        py::list failures;
        for (const auto& f : rep.failures) {
          py::dict fd;
          fd["trial"] = f.trial;
          fd["seed"] = f.seed;
          fd["degree"] = f.degree;
          fd["value"] = f.value;
          fd["bound"] = f.bound;
          fd["margin"] = f.margin;
          failures.append(fd);
        }
        py::dict d;
        d["kind"] = rep.kind;
        d["r"] = rep.r;
        d["trials"] = rep.trials;
        d["failures"] = failures;
        d["pass"] = rep.pass;
        return d;
      },
      py::arg("kind"), py::arg("r"), py::arg("trials") = 100, py::arg("seed") = 12345,
      py::arg("n") = 1, py::arg("m") = 1, py::arg("lam") = -1.0, py::arg("tol") = 1e-9,
      py::arg("M") = 200, "Check the functional on random Blaschke products.");
  mod.def("kind_names", &brr::kind_names, "All functional identifiers.");

  // --- subordination
  mod.def(
      "verify_subordinate",
      [](const brr::Series& g, double r, std::optional<brr::cplx> z, const std::string& majorant,
         double f0, double dist0, double deriv0) {
        brr::SubordinationCase c;
        c.majorant = parse_majorant(majorant);
        c.f0_modulus = f0;
        c.dist0 = dist0;
        c.deriv0_modulus = deriv0;
        return report_dict(brr::verify_subordinate(g, c, r, z.value_or(brr::cplx{r, 0.0})));
      },
      py::arg("g"), py::arg("r"), py::arg("z") = std::nullopt,
      py::arg("majorant") = "univalent", py::arg("f0") = 0.0, py::arg("dist0") = 0.25,
      py::arg("deriv0") = 1.0,
      "Distance-form inequality for g subordinate to a univalent/convex majorant "
      "(defaults describe the Koebe function).");
  mod.def(
      "coefficient_bound_check",
      [](const brr::Series& g, const std::string& majorant, double deriv0) {
        brr::SubordinationCase c;
        c.majorant = parse_majorant(majorant);
        c.deriv0_modulus = deriv0;
        c.dist0 = c.majorant == brr::Majorant::Univalent ? deriv0 / 4.0 : deriv0 / 2.0;
        const auto rep = brr::coefficient_bound_check(g, c);
        py::dict d;
        d["pass"] = rep.pass;
        d["violations"] = rep.violations;
        d["worst_excess"] = rep.worst_excess;
        return d;
      },
      py::arg("g"), py::arg("majorant"), py::arg("deriv0") = 1.0,
      "Coefficient consequences of subordination: |b_k| <= k|f'(0)| (univalent) "
      "or |b_k| <= |f'(0)| (convex).");
}
