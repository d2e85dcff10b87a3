// Command-line front end: exact polynomial tables, root certification,
// saddle-point asymptotics, contour oracle, generating-tree counts, and the
// full verification battery, with CSV or JSON output.

#include <CLI11.hpp>
#include <json.hpp>

#include "sheffer/gentree.hpp"
#include "sheffer/poly.hpp"
#include "sheffer/riordan.hpp"
#include "sheffer/saddle.hpp"
#include "sheffer/verify.hpp"
#include "sheffer/zero_locus.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace sheffer;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;  // check/locus/verify failure
constexpr int kExitNumerical = 3;   // nonconvergence
constexpr int kExitBadInput = 4;

unsigned default_precision() {
  if (const char* env = std::getenv("SHEFFER_PRECISION")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 32 && v <= 1 << 20) return static_cast<unsigned>(v);
  }
  return 256;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::complex<double> parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0, im = 0;
  char sep = 0;
  if (!(is >> re)) throw std::invalid_argument("bad complex literal: " + text);
  if (is >> sep) {
    if (sep != ',' || !(is >> im)) throw std::invalid_argument("bad complex literal: " + text);
  }
  return {re, im};
}

/// Table rows buffered so that CSV and JSON share one emission path.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void emit_csv(std::ostream& os) const {
    for (size_t j = 0; j < columns.size(); ++j) os << (j ? "," : "") << columns[j];
    os << "\n";
    for (const auto& row : rows) {
      for (size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
      os << "\n";
    }
  }

  json to_json() const {
    json out = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (size_t j = 0; j < columns.size() && j < row.size(); ++j) obj[columns[j]] = row[j];
      out.push_back(obj);
    }
    return out;
  }
};

struct Output {
  std::string format = "csv";
  std::string path;

  void write(const Table& table, const json& meta = json::object()) const {
    std::ostringstream buf;
    if (format == "json") {
      json doc = json::object();
      for (auto it = meta.begin(); it != meta.end(); ++it) doc[it.key()] = it.value();
      doc["rows"] = table.to_json();
      buf << doc.dump(2) << "\n";
    } else {
      table.emit_csv(buf);
    }
    if (path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot open output path: " + path);
      f << buf.str();
    }
  }
};

Params parse_params(const std::string& a, const std::string& b) {
  return Params(parse_rational(a), parse_rational(b));
}

// --- gen ------------------------------------------------------------------

int cmd_gen(const std::string& a_s, const std::string& b_s, int n, const std::string& method,
            bool check, const Output& out) {
  const Params p = parse_params(a_s, b_s);

  std::vector<ExactPoly> seq;
  if (method == "recurrence") {
    seq = build_recurrence(n, p);
  } else if (method == "explicit") {
    for (int i = 0; i <= n; ++i) seq.push_back(build_explicit(i, p));
  } else if (method == "riordan") {
    const RationalMatrix A = build_riordan(n + 1, p);
    for (int i = 0; i <= n; ++i) {
      ExactPoly poly(i);
      for (int k = 0; k <= i; ++k) poly.coeffs[k] = A(i, k);
      seq.push_back(std::move(poly));
    }
  } else {
    std::cerr << "unknown method: " << method << "\n";
    return kExitBadInput;
  }

  if (check) {
    const auto rec = build_recurrence(n, p);
    const RationalMatrix A = build_riordan(n + 1, p);
    for (int i = 0; i <= n; ++i) {
      const ExactPoly ex = build_explicit(i, p);
      for (int k = 0; k <= i; ++k) {
        if (ex.coeffs[k] != rec[i].coeffs[k] || ex.coeffs[k] != A(i, k)) {
          std::cerr << "route mismatch at n=" << i << " k=" << k << "\n";
          return kExitValidation;
        }
      }
    }
  }

  Table t;
  t.columns = {"n", "k", "coeff"};
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= i; ++k)
      t.rows.push_back({std::to_string(i), std::to_string(k),
                        rational_to_string(seq[i].coeffs[k])});
  out.write(t, {{"a", rational_to_string(p.a)},
                {"b", rational_to_string(p.b)},
                {"method", method},
                {"checked", check}});
  return kExitOk;
}

// --- roots ----------------------------------------------------------------

int cmd_roots(const std::string& a_s, const std::string& b_s, int n, bool certify, int max_n,
              unsigned precision, double tol, const Output& out) {
  const Params p = parse_params(a_s, b_s);
  Table t;
  t.columns = {"n", "re", "im", "class", "residual"};

  if (certify) {
    const CertifyReport rep = certify_theorem(max_n, p, precision, tol);
    Table summary;
    summary.columns = {"n", "off_axis", "max_residual", "max_reduced_imag", "solver_ok"};
    for (const DegreeReport& d : rep.degrees)
      summary.rows.push_back({std::to_string(d.n), std::to_string(d.off_axis),
                              fmt_double(d.max_residual), fmt_double(d.max_reduced_imag),
                              d.solver_ok ? "1" : "0"});
    out.write(summary, {{"a", rational_to_string(p.a)},
                        {"b", rational_to_string(p.b)},
                        {"hypothesis_met", rep.hypothesis_met},
                        {"total_off_axis", rep.total_off_axis},
                        {"all_solved", rep.all_solved}});
    if (!rep.all_solved) return kExitNumerical;
    if (!rep.hypothesis_met) {
      std::cerr << "hypothesis not met (b >= 0): classification is informational\n";
      return kExitOk;
    }
    return rep.total_off_axis == 0 ? kExitOk : kExitValidation;
  }

  const ExactPoly poly = build_explicit(n, p);
  RootSet rs;
  try {
    rs = find_roots(poly, precision, tol);
  } catch (const std::exception& e) {
    std::cerr << "root finding failed: " << e.what() << "\n";
    return kExitNumerical;
  }
  if (!rs.converged) {
    std::cerr << "root finding did not converge: " << rs.message << "\n";
    return kExitNumerical;
  }
  for (const Root& r : rs.roots) {
    const auto z = r.value.to_double();
    t.rows.push_back({std::to_string(n), fmt_double(z.real()), fmt_double(z.imag()),
                      to_string(r.cls), fmt_double(r.residual.convert_to<double>())});
  }
  out.write(t, {{"a", rational_to_string(p.a)},
                {"b", rational_to_string(p.b)},
                {"precision_bits", rs.precision_bits},
                {"tol", rs.tol}});
  return kExitOk;
}

// --- saddle ---------------------------------------------------------------

int cmd_saddle(int m, const std::string& s_text, double a, int grid, const std::string& axis,
               const Output& out) {
  std::vector<std::complex<double>> points;
  if (grid > 0) {
    const double end = axis == "imag" ? j2_endpoint(a, m) : j1_endpoint(a, m);
    for (int j = 1; j <= grid; ++j) {
      const double t = end * j / (grid + 1);
      points.emplace_back(axis == "imag" ? std::complex<double>(0, t)
                                         : std::complex<double>(t, 0));
    }
  } else {
    points.push_back(parse_complex(s_text));
  }

  Table t;
  t.columns = {"m", "s_re", "s_im", "zeta_re", "zeta_im", "residual", "closed_form_dist"};
  bool any_failure = false;
  for (const auto& s : points) {
    const ScaledQuery q{m, s, a};
    try {
      const SaddleSolution sol = solve_saddle(q);
      t.rows.push_back({std::to_string(m), fmt_double(s.real()), fmt_double(s.imag()),
                        fmt_double(sol.zeta.real()), fmt_double(sol.zeta.imag()),
                        fmt_double(sol.residual), fmt_double(validate_closed_form(q, sol))});
    } catch (const SaddleSelectionError& e) {
      any_failure = true;
      t.rows.push_back({std::to_string(m), fmt_double(s.real()), fmt_double(s.imag()), "nan",
                        "nan", "nan", "nan"});
      std::cerr << "saddle selection failed at s=(" << s.real() << "," << s.imag()
                << "): " << e.what() << "\n";
    }
  }
  out.write(t, {{"a", a}});
  return any_failure ? kExitNumerical : kExitOk;
}

// --- asym -----------------------------------------------------------------

int cmd_asym(const std::vector<int>& ms, const std::string& s_text, double a, bool with_exact,
             const Output& out) {
  const std::complex<double> s = parse_complex(s_text);
  Table t;
  t.columns = {"m",       "s_re",    "s_im",    "zeta_re", "zeta_im",
               "residual", "log_mag", "phase",   "regime_j1", "regime_j2", "regime_s",
               "log_mag_exact", "rel_error"};
  for (int m : ms) {
    try {
      const MainTerm mt = main_term({m, s, a});
      const SaddleSolution sol = solve_saddle({m, s, a});
      std::string log_exact = "", rel = "";
      if (with_exact) {
        const TrendPoint tp = main_term_error(m, s, a);
        log_exact = fmt_double(tp.log_mag_exact);
        rel = fmt_double(tp.rel_error);
      }
      t.rows.push_back({std::to_string(m), fmt_double(s.real()), fmt_double(s.imag()),
                        fmt_double(mt.zeta.real()), fmt_double(mt.zeta.imag()),
                        fmt_double(sol.residual), fmt_double(mt.log_magnitude),
                        fmt_double(mt.phase), mt.regime[0] ? "1" : "0", mt.regime[1] ? "1" : "0",
                        mt.regime[2] ? "1" : "0", log_exact, rel});
    } catch (const std::exception& e) {
      std::cerr << "asymptotics failed at m=" << m << ": " << e.what() << "\n";
      return kExitNumerical;
    }
  }
  out.write(t, {{"a", a}});
  return kExitOk;
}

// --- oracle ---------------------------------------------------------------

int cmd_oracle(int m, const std::string& s_text, const std::string& a_s, const std::string& b_s,
               double radius, int nodes, unsigned precision, bool compare, const Output& out) {
  const Params p = parse_params(a_s, b_s);
  const std::complex<double> s = parse_complex(s_text);
  const BComplex sb(s);
  Table t;
  t.columns = {"m",     "s_re",  "s_im",           "re",       "im",
               "nodes", "radius", "last_rel_change", "exact_re", "exact_im", "rel_diff"};
  try {
    const ContourResult r = contour_oracle(m, sb, BigFloat(p.a), BigFloat(p.b), radius, nodes,
                                           precision);
    std::string ex_re = "", ex_im = "", rel = "";
    if (compare) {
      const BComplex exact = eval_exact(m, sb, p);
      ex_re = fmt_double(exact.re.convert_to<double>());
      ex_im = fmt_double(exact.im.convert_to<double>());
      rel = fmt_double((abs(r.value - exact) / abs(exact)).convert_to<double>());
    }
    t.rows.push_back({std::to_string(m), fmt_double(s.real()), fmt_double(s.imag()),
                      fmt_double(r.value.re.convert_to<double>()),
                      fmt_double(r.value.im.convert_to<double>()), std::to_string(r.nodes),
                      fmt_double(r.radius), fmt_double(r.last_rel_change), ex_re, ex_im, rel});
  } catch (const QuadratureError& e) {
    std::cerr << "quadrature did not stabilize: " << e.what() << "\n";
    return kExitNumerical;
  }
  out.write(t, {{"a", rational_to_string(p.a)}, {"b", rational_to_string(p.b)}});
  return kExitOk;
}

// --- tree -----------------------------------------------------------------

int cmd_tree(const std::string& a_s, const std::string& b_s, int n, bool verify,
             const Output& out) {
  const Params p = parse_params(a_s, b_s);
  if (!is_integer(p.a) || !is_integer(p.b)) {
    std::cerr << "tree counts require integer a and b\n";
    return kExitBadInput;
  }
  if (verify) {
    const InterpretationReport rep = verify_interpretation(n, p);
    if (!rep.ok) {
      std::cerr << "count/coefficient mismatch at n=" << rep.first_n << " k=" << rep.first_k
                << ": " << rep.detail << "\n";
      return kExitValidation;
    }
  }
  Table t;
  t.columns = {"level", "k", "signed_count"};
  for (const TreeLevelCounts& lv : counts_to_level(n, p))
    for (const auto& [k, c] : lv.signed_counts)
      t.rows.push_back({std::to_string(lv.level), std::to_string(k), c.str()});
  out.write(t, {{"a", rational_to_string(p.a)},
                {"b", rational_to_string(p.b)},
                {"verified", verify}});
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(bool quick, int max_n, const std::string& a_s, const std::string& b_s,
               unsigned precision, double tol, const Output& out) {
  VerifyOptions opt;
  opt.quick = quick;
  opt.max_n = max_n;
  opt.precision_bits = precision;
  opt.root_tol = tol;
  if (!a_s.empty() != !b_s.empty()) {
    std::cerr << "--a and --b must be given together\n";
    return kExitBadInput;
  }
  if (!a_s.empty()) opt.params = parse_params(a_s, b_s);

  const auto results = run_acceptance(opt);
  Table t;
  t.columns = {"criterion", "name", "pass", "hypothesis_met", "detail"};
  int failures = 0;
  for (const auto& r : results) {
    t.rows.push_back({std::to_string(r.id), r.name, r.pass ? "PASS" : "FAIL",
                      r.hypothesis_met ? "yes" : "no", r.detail});
    if (!r.pass) ++failures;
  }
  out.write(t, {{"quick", quick}, {"failures", failures}});
  return failures == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact and asymptotic analysis of the polynomial family with exponential\n"
      "generating function e^{xz + a z^2 + b z^4} (leading coefficient normalized\n"
      "to 1; the general normalization c follows by rescaling x -> c x)."};
  app.require_subcommand(1);
  app.fallthrough();  // global options (--format/--out/--precision) may trail a subcommand

  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out.path, "Write output to this path instead of stdout");

  unsigned precision = default_precision();
  app.add_option("--precision", precision,
                 "Working precision in bits (env SHEFFER_PRECISION overrides the default)")
      ->capture_default_str();

  std::string a_s = "0", b_s = "-1", s_text = "1", method = "recurrence", axis = "real";
  int n = 10, max_n = 50, m = 100, grid = 0, nodes = 64;
  double tol = 1e-10, a_real = 0, radius = 0;
  bool check = false, certify = false, verify_tree = false, quick = false, with_exact = false,
       compare = true;
  std::vector<int> ms;

  auto* gen = app.add_subcommand("gen", "Exact coefficient table of P_0..P_n");
  gen->add_option("--a", a_s, "Parameter a (integer or p/q)")->required();
  gen->add_option("--b", b_s, "Parameter b (integer or p/q)")->required();
  gen->add_option("--n", n, "Largest degree")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--method", method, "Construction route")
      ->check(CLI::IsMember({"explicit", "recurrence", "riordan"}))
      ->capture_default_str();
  gen->add_flag("--check", check, "Build by all three routes and compare exactly");

  auto* roots = app.add_subcommand("roots", "Roots of P_n with axis classification");
  roots->add_option("--a", a_s)->required();
  roots->add_option("--b", b_s)->required();
  roots->add_option("--n", n, "Degree (table mode)");
  roots->add_flag("--certify", certify, "Sweep n <= max-n; nonzero exit iff off-axis roots");
  roots->add_option("--max-n", max_n, "Certification sweep bound")->capture_default_str();
  roots->add_option("--tol", tol, "Classification tolerance")->capture_default_str();

  auto* saddle = app.add_subcommand("saddle", "Fourth-quadrant saddle of the scaled integrand");
  saddle->add_option("--m", m, "Degree")->required();
  saddle->add_option("--s", s_text, "Scaled argument re[,im]")->capture_default_str();
  saddle->add_option("--a-real", a_real, "Real parameter a (b normalized to -1)")
      ->capture_default_str();
  saddle->add_option("--grid", grid, "Sweep this many interior grid points instead of --s");
  saddle->add_option("--axis", axis, "Grid axis")->check(CLI::IsMember({"real", "imag"}));

  auto* asym = app.add_subcommand("asym", "Leading-order asymptotics of H_m(m^{3/4} s)");
  asym->add_option("--m", ms, "Degrees (repeatable)")->required();
  asym->add_option("--s", s_text, "Scaled argument re[,im]")->capture_default_str();
  asym->add_option("--a-real", a_real, "Real parameter a (b normalized to -1)")
      ->capture_default_str();
  asym->add_flag("--exact", with_exact, "Also evaluate exactly and report relative error");

  auto* oracle = app.add_subcommand("oracle", "Contour-integral evaluation of H_m");
  oracle->add_option("--m", m, "Degree")->required();
  oracle->add_option("--s", s_text, "Argument re[,im]")->capture_default_str();
  oracle->add_option("--a", a_s)->capture_default_str();
  oracle->add_option("--b", b_s)->capture_default_str();
  oracle->add_option("--radius", radius, "Contour radius (0 = automatic)");
  oracle->add_option("--nodes", nodes, "Initial trapezoid node count")->capture_default_str();
  oracle->add_flag("!--no-compare", compare, "Skip the exact cross-check columns");

  auto* tree = app.add_subcommand("tree", "Signed generating-tree level counts");
  tree->add_option("--a", a_s)->required();
  tree->add_option("--b", b_s)->required();
  tree->add_option("--n", n, "Deepest level")->required()->check(CLI::NonNegativeNumber);
  tree->add_flag("--verify", verify_tree, "Cross-check counts against the coefficients");

  auto* verify = app.add_subcommand("verify", "Run the full verification battery");
  int verify_max_n = 0;  // 0 keeps the per-criterion defaults
  verify->add_flag("--quick", quick, "Reduced grids and degree bounds");
  verify->add_option("--max-n", verify_max_n, "Cap exact-construction degree bounds");
  std::string va_s, vb_s;
  verify->add_option("--a", va_s, "Restrict parameter grids to one (a,b)");
  verify->add_option("--b", vb_s);
  verify->add_option("--tol", tol, "Root classification tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(a_s, b_s, n, method, check, out);
    if (roots->parsed()) return cmd_roots(a_s, b_s, n, certify, max_n, precision, tol, out);
    if (saddle->parsed()) return cmd_saddle(m, s_text, a_real, grid, axis, out);
    if (asym->parsed()) return cmd_asym(ms, s_text, a_real, with_exact, out);
    if (oracle->parsed())
      return cmd_oracle(m, s_text, a_s, b_s, radius, nodes, precision, compare, out);
    if (tree->parsed()) return cmd_tree(a_s, b_s, n, verify_tree, out);
    if (verify->parsed()) return cmd_verify(quick, verify_max_n, va_s, vb_s, precision, tol, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitBadInput;
}
