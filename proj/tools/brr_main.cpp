// Command-line front end: certified radius computation (`radius`, `table`),
// functional verification on concrete disk self-maps (`verify`), sharpness
// scans over the extremal automorphism family (`scan`), and randomized
// property campaigns (`fuzz`).  Output is deterministic CSV or JSON with all
// numerics at 15 significant digits.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brr/disk_maps.hpp"
#include "brr/radius.hpp"
#include "brr/series.hpp"
#include "brr/subordination.hpp"
#include "brr/verify.hpp"

namespace {

using brr::cplx;
using brr::Series;
using ojson = nlohmann::ordered_json;

// A self-map assertion requested on the command line failed: exit code 3.
struct SelfMapAssertionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputRecord {
  std::string command;
  double tolerance = 1e-9;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void emit(const OutputRecord& rec, const std::string& format) {
  if (format == "json") {
    ojson j;
    j["schema_version"] = "1.0";
    j["command"] = rec.command;
    j["tolerance"] = brr::fmt_num(rec.tolerance);
    ojson params = ojson::object();
    for (const auto& [k, v] : rec.parameters) params[k] = v;
    j["parameters"] = params;
    ojson rows = ojson::array();
    for (const auto& row : rec.rows) {
      ojson obj = ojson::object();
      for (size_t i = 0; i < rec.columns.size(); ++i) obj[rec.columns[i]] = row[i];
      rows.push_back(obj);
    }
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "# schema_version,1.0\n";
  std::cout << "# command," << rec.command << "\n";
  std::cout << "# tolerance," << brr::fmt_num(rec.tolerance) << "\n";
  for (const auto& [k, v] : rec.parameters) std::cout << "# " << k << "," << v << "\n";
  for (size_t i = 0; i < rec.columns.size(); ++i)
    std::cout << rec.columns[i] << (i + 1 < rec.columns.size() ? "," : "\n");
  for (const auto& row : rec.rows)
    for (size_t i = 0; i < row.size(); ++i) std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

brr::RadiusEquation make_equation(const std::string& family, int n, int m) {
  if (family == "psi") return brr::psi(n);
  if (family == "prime") return brr::prime(n);
  if (family == "mn") return brr::mn(n, m);
  if (family == "an") return brr::an(n);
  if (family == "univalent") return brr::univalent_sub();
  if (family == "convex") return brr::convex_sub();
  throw std::invalid_argument("unknown radius family: " + family +
                              " (expected psi|prime|mn|an|univalent|convex)");
}

cplx parse_complex(std::string s) {
  auto parse_real = [](const std::string& t) {
    size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad number: " + t);
    return v;
  };
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i' && s.back() != 'I') return cplx{parse_real(s), 0.0};
  s.pop_back();  // drop the i; what remains is re+im or just im
  // Split at the last sign that is not leading and not part of an exponent.
  size_t split = std::string::npos;
  for (size_t p = s.size(); p-- > 1;) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) {
    if (s.empty() || s == "+") return cplx{0.0, 1.0};
    if (s == "-") return cplx{0.0, -1.0};
    return cplx{0.0, parse_real(s)};
  }
  std::string im = s.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return cplx{parse_real(s.substr(0, split)), parse_real(im)};
}

std::vector<cplx> parse_complex_list(const std::string& s) {
  std::vector<cplx> out;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!item.empty()) out.push_back(parse_complex(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty zero list");
  return out;
}

Series load_coeffs_file(const std::string& path, bool self_map_assert, double tol) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coefficient file: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("coefficient file must be a nonempty JSON array of [re, im] pairs");
  Series f;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw std::invalid_argument("coefficient entries must be [re, im] number pairs");
    f.coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  f.tail = std::nullopt;  // user data: dropped tail unknown, results flagged uncertified
  f.label = "coeffs:" + path;
  // Raw coefficient data carries no self-map property of its own: the bound
  // checks demand an explicit --self-map assertion, which is Wiener-checked
  // here.  Without it the data is only usable where no self-map is required
  // (the subordination path with explicit case data).
  if (self_map_assert) {
    const double w = 1.0 - std::norm(f.coeffs[0]);
    if (std::abs(f.coeffs[0]) > 1.0 + tol)
      throw SelfMapAssertionError("self-map asserted but |a_0| > 1");
    for (size_t k = 1; k < f.coeffs.size(); ++k)
      if (std::abs(f.coeffs[k]) > w + tol)
        throw SelfMapAssertionError("self-map asserted but the Wiener bound |a_k| <= 1-|a_0|^2 fails at k=" +
                                    std::to_string(k));
    f.self_map = true;
  }
  return f;
}

struct FnSpec {
  Series series;
  std::optional<double> automorphism_a;  // set for moebius:/reflected: inputs
};

FnSpec parse_fn(const std::string& spec, int M, bool self_map_assert, double tol) {
  auto starts = [&](const char* p) { return spec.rfind(p, 0) == 0; };
  if (spec == "koebe") return {brr::koebe(M), std::nullopt};
  if (spec == "halfplane") return {brr::half_plane(M), std::nullopt};
  if (starts("moebius:a=")) {
    const double a = std::stod(spec.substr(10));
    return {brr::moebius_extremal(a, M), a};
  }
  if (starts("reflected:a=")) {
    const double a = std::stod(spec.substr(12));
    return {brr::reflected_moebius(a, M), a};
  }
  if (starts("blaschke:zeros=")) {
    brr::BlaschkeSpec bs;
    bs.zeros = parse_complex_list(spec.substr(15));
    return {brr::blaschke_product(bs, M), std::nullopt};
  }
  if (starts("coeffs:")) return {load_coeffs_file(spec.substr(7), self_map_assert, tol), std::nullopt};
  throw std::invalid_argument(
      "unknown function spec: " + spec +
      " (expected moebius:a=<v>|reflected:a=<v>|blaschke:zeros=<list>|koebe|halfplane|coeffs:<file>)");
}

double env_default_tol() {
  if (const char* s = std::getenv("BRR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end && *end == '\0' && v > 0.0) return v;
    std::cerr << "warning: ignoring invalid BRR_TOL value\n";
  }
  return 1e-9;
}

void add_report_row(OutputRecord& rec, const brr::VerificationReport& rep, const brr::Functional& id) {
  rec.rows.push_back({rep.kind, rep.function_descriptor, brr::fmt_num(rep.r),
                      brr::fmt_num(rep.z.real()), brr::fmt_num(rep.z.imag()),
                      std::to_string(id.N), std::to_string(id.m),
                      brr::fmt_num(brr::effective_lam(id)), brr::fmt_num(rep.value),
                      brr::fmt_num(rep.bound), brr::fmt_num(rep.margin), fmt_bool(rep.certified),
                      fmt_bool(rep.pass)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bohr-type radii and Bohr-Rogosinski functionals on disk self-maps"};
  app.require_subcommand(1);
  const double default_tol = env_default_tol();

  // --- radius
  auto* cmd_radius = app.add_subcommand("radius", "solve one radius-defining equation");
  std::string rad_family;
  int rad_n = 1, rad_m = 1;
  double rad_root_tol = 1e-12, rad_tol = default_tol;
  std::string rad_format = "csv";
  cmd_radius->add_option("--family", rad_family, "psi|prime|mn|an|univalent|convex")->required();
  cmd_radius->add_option("--n", rad_n, "tail index N");
  cmd_radius->add_option("--m", rad_m, "inner power m (family mn)");
  cmd_radius->add_option("--root-tol", rad_root_tol, "bisection bracket width");
  cmd_radius->add_option("--tol", rad_tol, "comparison tolerance (reported)");
  cmd_radius->add_option("--format", rad_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  // --- table
  auto* cmd_table = app.add_subcommand("table", "radius vs N table for one family");
  std::string tab_family;
  int tab_nmax = 8, tab_m = 1;
  double tab_root_tol = 1e-12, tab_tol = default_tol;
  std::string tab_format = "csv";
  cmd_table->add_option("--family", tab_family, "psi|prime|mn|an")->required();
  cmd_table->add_option("--n-max", tab_nmax, "last N (from 1)");
  cmd_table->add_option("--m", tab_m, "inner power m (family mn)");
  cmd_table->add_option("--root-tol", tab_root_tol, "bisection bracket width");
  cmd_table->add_option("--tol", tab_tol, "comparison tolerance (reported)");
  cmd_table->add_option("--format", tab_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  // --- verify
  auto* cmd_verify = app.add_subcommand("verify", "evaluate one functional on one function");
  std::string ver_theorem, ver_fn, ver_class, ver_sweep, ver_format = "csv";
  double ver_r = -1.0, ver_zre = 0.0, ver_zim = 0.0, ver_lam = -1.0, ver_tol = default_tol;
  double ver_f0 = -1.0, ver_dist0 = -1.0, ver_deriv0 = -1.0;
  int ver_n = 1, ver_m = 1, ver_M = 200;
  bool ver_self_map = false, ver_classical = false;
  cmd_verify->add_option("--theorem", ver_theorem, "functional id (see kind list in README)");
  cmd_verify->add_option("--fn", ver_fn, "function spec")->required();
  auto* opt_r = cmd_verify->add_option("--r", ver_r, "radius");
  cmd_verify->add_option("--r-sweep", ver_sweep, "lo:hi:steps radius sweep");
  auto* opt_zre = cmd_verify->add_option("--z-re", ver_zre, "witness point, real part");
  auto* opt_zim = cmd_verify->add_option("--z-im", ver_zim, "witness point, imaginary part");
  cmd_verify->add_option("--n", ver_n, "tail index N");
  cmd_verify->add_option("--m", ver_m, "inner power m");
  cmd_verify->add_option("--lam", ver_lam, "area-term weight");
  cmd_verify->add_option("--M", ver_M, "truncation order");
  cmd_verify->add_option("--tol", ver_tol, "comparison tolerance");
  cmd_verify->add_flag("--self-map", ver_self_map, "assert coeffs-file input is a self-map (Wiener-checked)");
  cmd_verify->add_flag("--classical", ver_classical,
                       "classical Bohr-Rogosinski check: |f(z)| + tail from N=1 vs 1");
  cmd_verify->add_option("--class", ver_class, "subordination class: univalent|convex")
      ->check(CLI::IsMember({"univalent", "convex"}));
  cmd_verify->add_option("--f0", ver_f0, "|f(0)| of the subordination majorant");
  cmd_verify->add_option("--dist0", ver_dist0, "dist(f(0), boundary)");
  cmd_verify->add_option("--deriv0", ver_deriv0, "|f'(0)|");
  cmd_verify->add_option("--format", ver_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  // --- scan
  auto* cmd_scan = app.add_subcommand("scan", "sharpness scan over the extremal family");
  std::string scan_theorem, scan_format = "csv";
  double scan_r = -1.0, scan_lam = -1.0, scan_tol = default_tol;
  int scan_n = 1, scan_m = 1, scan_M = 200, scan_grid = 40;
  cmd_scan->add_option("--theorem", scan_theorem, "functional id")->required();
  cmd_scan->add_option("--r", scan_r, "radius")->required();
  cmd_scan->add_option("--grid", scan_grid, "grid size (>= 10)");
  cmd_scan->add_option("--n", scan_n, "tail index N");
  cmd_scan->add_option("--m", scan_m, "inner power m");
  cmd_scan->add_option("--lam", scan_lam, "area-term weight");
  cmd_scan->add_option("--M", scan_M, "truncation order");
  cmd_scan->add_option("--tol", scan_tol, "comparison tolerance");
  cmd_scan->add_option("--format", scan_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  // --- fuzz
  auto* cmd_fuzz = app.add_subcommand("fuzz", "property campaign on random Blaschke products");
  std::string fuzz_theorem, fuzz_format = "csv";
  double fuzz_r = -1.0, fuzz_lam = -1.0, fuzz_tol = default_tol;
  int fuzz_n = 1, fuzz_m = 1, fuzz_M = 200, fuzz_trials = 500;
  std::uint64_t fuzz_seed = 12345;
  cmd_fuzz->add_option("--theorem", fuzz_theorem, "functional id")->required();
  cmd_fuzz->add_option("--r", fuzz_r, "radius")->required();
  cmd_fuzz->add_option("--trials", fuzz_trials, "number of random maps");
  cmd_fuzz->add_option("--seed", fuzz_seed, "campaign seed");
  cmd_fuzz->add_option("--n", fuzz_n, "tail index N");
  cmd_fuzz->add_option("--m", fuzz_m, "inner power m");
  cmd_fuzz->add_option("--lam", fuzz_lam, "area-term weight");
  cmd_fuzz->add_option("--M", fuzz_M, "truncation order");
  cmd_fuzz->add_option("--tol", fuzz_tol, "comparison tolerance");
  cmd_fuzz->add_option("--format", fuzz_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_radius->parsed()) {
      const auto eq = make_equation(rad_family, rad_n, rad_m);
      const auto res = brr::solve(eq, rad_root_tol);
      const auto cf = brr::closed_form(eq);
      OutputRecord rec;
      rec.command = "radius";
      rec.tolerance = rad_tol;
      rec.parameters = {{"family", rad_family},
                        {"n", std::to_string(rad_n)},
                        {"m", std::to_string(rad_m)},
                        {"root_tol", brr::fmt_num(rad_root_tol)}};
      rec.columns = {"family", "n",        "m",          "value",      "bracket_lo",
                     "bracket_hi", "residual", "iterations", "closed_form"};
      rec.rows.push_back({rad_family, std::to_string(rad_n), std::to_string(rad_m),
                          brr::fmt_num(res.value), brr::fmt_num(res.lo), brr::fmt_num(res.hi),
                          brr::fmt_num(res.residual), std::to_string(res.iterations),
                          cf ? brr::fmt_num(*cf) : std::string{}});
      emit(rec, rad_format);
      return 0;
    }

    if (cmd_table->parsed()) {
      if (tab_nmax < 1) throw std::invalid_argument("--n-max must be >= 1");
      if (tab_family == "univalent" || tab_family == "convex")
        throw std::invalid_argument("table needs an N-indexed family (psi|prime|mn|an)");
      OutputRecord rec;
      rec.command = "table";
      rec.tolerance = tab_tol;
      rec.parameters = {{"family", tab_family},
                        {"n_max", std::to_string(tab_nmax)},
                        {"m", std::to_string(tab_m)},
                        {"root_tol", brr::fmt_num(tab_root_tol)}};
      rec.columns = {"n", "radius", "residual"};
      for (int N = 1; N <= tab_nmax; ++N) {
        const auto res = brr::solve(make_equation(tab_family, N, tab_m), tab_root_tol);
        rec.rows.push_back({std::to_string(N), brr::fmt_num(res.value), brr::fmt_num(res.residual)});
      }
      emit(rec, tab_format);
      return 0;
    }

    if (cmd_verify->parsed()) {
      // Radii to evaluate: single --r or an inclusive sweep.
      std::vector<double> radii;
      if (!ver_sweep.empty()) {
        const size_t c1 = ver_sweep.find(':'), c2 = ver_sweep.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
          throw std::invalid_argument("--r-sweep expects lo:hi:steps");
        const double lo = std::stod(ver_sweep.substr(0, c1));
        const double hi = std::stod(ver_sweep.substr(c1 + 1, c2 - c1 - 1));
        const int steps = std::stoi(ver_sweep.substr(c2 + 1));
        if (steps < 1) throw std::invalid_argument("--r-sweep steps must be >= 1");
        for (int i = 0; i < steps; ++i)
          radii.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
      } else if (*opt_r) {
        radii.push_back(ver_r);
      } else {
        throw std::invalid_argument("one of --r or --r-sweep is required");
      }

      const FnSpec fn = parse_fn(ver_fn, ver_M, ver_self_map, ver_tol);
      bool all_pass = true;
      OutputRecord rec;
      rec.command = "verify";
      rec.tolerance = ver_tol;

      if (!ver_class.empty()) {
        // Subordination mode: distance form of the inequality.
        brr::SubordinationCase sc;
        sc.majorant = ver_class == "univalent" ? brr::Majorant::Univalent : brr::Majorant::Convex;
        if (ver_fn == "koebe") {
          sc.f0_modulus = 0.0;
          sc.dist0 = 0.25;
          sc.deriv0_modulus = 1.0;
        } else if (ver_fn == "halfplane") {
          sc.f0_modulus = 0.0;
          sc.dist0 = 0.5;
          sc.deriv0_modulus = 1.0;
        } else if (fn.automorphism_a) {
          const double a = *fn.automorphism_a;
          sc.f0_modulus = a;
          sc.dist0 = 1.0 - a;
          sc.deriv0_modulus = 1.0 - a * a;
        } else if (ver_f0 < 0.0 || ver_dist0 < 0.0 || ver_deriv0 < 0.0) {
          throw std::invalid_argument("--class with this --fn needs --f0, --dist0 and --deriv0");
        }
        if (ver_f0 >= 0.0) sc.f0_modulus = ver_f0;
        if (ver_dist0 >= 0.0) sc.dist0 = ver_dist0;
        if (ver_deriv0 >= 0.0) sc.deriv0_modulus = ver_deriv0;

        const auto cb = brr::coefficient_bound_check(fn.series, sc);
        rec.parameters = {{"class", ver_class},
                          {"fn", ver_fn},
                          {"f0", brr::fmt_num(sc.f0_modulus)},
                          {"dist0", brr::fmt_num(sc.dist0)},
                          {"deriv0", brr::fmt_num(sc.deriv0_modulus)},
                          {"M", std::to_string(ver_M)}};
        rec.columns = {"kind", "fn",     "r",         "z_re", "z_im", "value",
                       "bound", "margin", "certified", "pass", "coeff_bound_pass"};
        for (double r : radii) {
          cplx z{r, 0.0};
          if (*opt_zre || *opt_zim) z = cplx{ver_zre, ver_zim};
          const auto rep = brr::verify_subordinate(fn.series, sc, r, z);
          all_pass = all_pass && rep.pass;
          rec.rows.push_back({rep.kind, rep.function_descriptor, brr::fmt_num(rep.r),
                              brr::fmt_num(rep.z.real()), brr::fmt_num(rep.z.imag()),
                              brr::fmt_num(rep.value), brr::fmt_num(rep.bound),
                              brr::fmt_num(rep.margin), fmt_bool(rep.certified),
                              fmt_bool(rep.pass), fmt_bool(cb.pass)});
        }
        emit(rec, ver_format);
        return all_pass ? 0 : 1;
      }

      brr::Functional id;
      if (ver_classical) {
        id.kind = brr::Kind::BohrRogosinski;
        id.N = 1;
      } else {
        if (ver_theorem.empty())
          throw std::invalid_argument("--theorem is required (or use --classical / --class)");
        const auto k = brr::kind_from_string(ver_theorem);
        if (!k) throw std::invalid_argument("unknown theorem id: " + ver_theorem);
        id.kind = *k;
        id.N = ver_n;
      }
      id.m = ver_m;
      id.lam = ver_lam;

      rec.parameters = {{"theorem", ver_classical ? "br1(classical)" : ver_theorem},
                        {"fn", ver_fn},
                        {"M", std::to_string(ver_M)}};
      rec.columns = {"kind",  "fn",    "r",      "z_re",      "z_im", "n",   "m",
                     "lam",   "value", "bound",  "margin",    "certified", "pass"};
      for (double r : radii) {
        std::optional<cplx> z;
        if (*opt_zre || *opt_zim) z = cplx{ver_zre, ver_zim};
        const auto rep = brr::evaluate(id, fn.series, r, z, ver_tol);
        all_pass = all_pass && rep.pass;
        add_report_row(rec, rep, id);
      }
      emit(rec, ver_format);
      return all_pass ? 0 : 1;
    }

    if (cmd_scan->parsed()) {
      const auto k = brr::kind_from_string(scan_theorem);
      if (!k) throw std::invalid_argument("unknown theorem id: " + scan_theorem);
      brr::Functional id;
      id.kind = *k;
      id.N = scan_n;
      id.m = scan_m;
      id.lam = scan_lam;
      const auto res = brr::sharpness_scan(id, scan_r, scan_grid, scan_tol, scan_M);
      OutputRecord rec;
      rec.command = "scan";
      rec.tolerance = scan_tol;
      rec.parameters = {{"theorem", scan_theorem},
                        {"n", std::to_string(scan_n)},
                        {"m", std::to_string(scan_m)},
                        {"lam", brr::fmt_num(brr::effective_lam(id))},
                        {"grid_size", std::to_string(scan_grid)},
                        {"M", std::to_string(scan_M)}};
      rec.columns = {"kind", "r", "sup_value", "argmax_a", "exceeded", "grid"};
      rec.rows.push_back({scan_theorem, brr::fmt_num(res.r), brr::fmt_num(res.sup_value),
                          brr::fmt_num(res.argmax_a), fmt_bool(res.exceeded), res.grid});
      emit(rec, scan_format);
      return 0;
    }

    if (cmd_fuzz->parsed()) {
      const auto k = brr::kind_from_string(fuzz_theorem);
      if (!k) throw std::invalid_argument("unknown theorem id: " + fuzz_theorem);
      brr::Functional id;
      id.kind = *k;
      id.N = fuzz_n;
      id.m = fuzz_m;
      id.lam = fuzz_lam;
      const auto rep = brr::property_fuzz(id, fuzz_r, fuzz_trials, fuzz_seed, fuzz_tol, fuzz_M);
      OutputRecord rec;
      rec.command = "fuzz";
      rec.tolerance = fuzz_tol;
      rec.parameters = {{"theorem", fuzz_theorem},
                        {"r", brr::fmt_num(fuzz_r)},
                        {"n", std::to_string(fuzz_n)},
                        {"m", std::to_string(fuzz_m)},
                        {"trials", std::to_string(fuzz_trials)},
                        {"seed", std::to_string(fuzz_seed)},
                        {"M", std::to_string(fuzz_M)},
                        {"failures", std::to_string(rep.failures.size())},
                        {"pass", fmt_bool(rep.pass)}};
      rec.columns = {"trial", "seed", "degree", "value", "bound", "margin"};
      for (const auto& f : rep.failures)
        rec.rows.push_back({std::to_string(f.trial), std::to_string(f.seed),
                            std::to_string(f.degree), brr::fmt_num(f.value), brr::fmt_num(f.bound),
                            brr::fmt_num(f.margin)});
      emit(rec, fuzz_format);
      return rep.pass ? 0 : 1;
    }
  } catch (const SelfMapAssertionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
