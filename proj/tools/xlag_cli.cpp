#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "xlag/errors.hpp"
#include "xlag/exactnum.hpp"
#include "xlag/exactnum/serialize.hpp"
#include "xlag/factorization/chain.hpp"
#include "xlag/factorization/verify.hpp"
#include "xlag/quadrature.hpp"
#include "xlag/schrodinger.hpp"
#include "xlag/xcore.hpp"

using namespace xlag;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240501;

struct RunConfig {
  std::string k = "2";
  int m1 = 1;
  int m2 = 2;
  std::string n_range;
  int n_max = -1;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-8;
  bool inject_fault = false;
  std::string grid = "0.05:20:400";
  int count = 5;
  double length = 20.0;
  int points = 999;
  std::string target = "eta12";
};

struct Range {
  int lo, hi;
};

Range parse_range(const std::string& text, int default_lo, int default_hi) {
  if (text.empty()) return {default_lo, default_hi};
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InvalidParams("bad index range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  Range r{};
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw InvalidParams("empty index range '" + text + "'");
  return r;
}

struct GridSpec {
  double a, b;
  int count;
};

GridSpec parse_grid(const std::string& text) {
  std::stringstream ss(text);
  std::string a, b, n;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n) || n.find(':') != std::string::npos)
    throw InvalidParams("grid must be a:b:N");
  GridSpec g{};
  try {
    std::size_t ua = 0, ub = 0, un = 0;
    g.a = std::stod(a, &ua);
    g.b = std::stod(b, &ub);
    g.count = std::stoi(n, &un);
    if (ua != a.size() || ub != b.size() || un != n.size()) throw InvalidParams("grid must be a:b:N");
  } catch (const std::logic_error&) {
    throw InvalidParams("grid must be a:b:N");
  }
  if (!(g.a > 0) || !(g.b > g.a) || g.count < 2) throw InvalidParams("grid needs 0 < a < b and N >= 2");
  return g;
}

XLParams make_params(const RunConfig& cfg) { return XLParams(parse_rat(cfg.k), cfg.m1, cfg.m2); }

json meta(const std::string& command, const XLParams& p) {
  json m = params_to_json(p);
  m["command"] = command;
  return m;
}

std::string meta_line(const json& m) {
  std::string line = "#";
  for (const auto& [key, value] : m.items())
    line += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  return line + "\n";
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InvalidParams("cannot open output file " + cfg.out);
  f << text;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_gen(const RunConfig& cfg) {
  const XLParams p = make_params(cfg);
  const Range r = parse_range(cfg.n_range, p.ell(), p.ell() + 8);
  json records = json::array();
  std::string csv = meta_line(meta("gen", p)) + "n,degree,leading,coeffs\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    p.require_index(n);
    const Poly y = xlaguerre(n, p);
    if (y.degree() != n || y.leading() != expected_leading_coefficient(n, p))
      throw IdentityFailure("degree or leading coefficient law violated at n=" + std::to_string(n));
    records.push_back({{"k", to_string(p.k())},
                       {"m1", p.m1()},
                       {"m2", p.m2()},
                       {"n", n},
                       {"coeffs", poly_to_json(y)},
                       {"degree", y.degree()},
                       {"leading", to_string(y.leading())}});
    csv += std::to_string(n) + "," + std::to_string(y.degree()) + "," + to_string(y.leading()) + ",";
    for (std::size_t i = 0; i < y.coeffs().size(); ++i) csv += (i ? " " : "") + to_string(y.coeffs()[i]);
    csv += "\n";
  }
  emit(cfg, cfg.format == "csv" ? csv : json{{"meta", meta("gen", p)}, {"records", records}}.dump(2) + "\n");
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const XLParams p = make_params(cfg);
  const Range r = parse_range(cfg.n_range, p.ell(), p.ell() + 8);
  std::vector<Certificate> certs;
  for (int n = r.lo; n <= r.hi; ++n) {
    p.require_index(n);
    Poly y = xlaguerre(n, p);
    if (cfg.inject_fault && n == r.lo) {
      std::vector<Rat> c = y.coeffs();
      c[0] += Rat(1, 1000);
      y = Poly(c);
    }
    certs.push_back(verify_eigen_for(y, n, p));
    certs.push_back(constraint_certificate(y, n, p, cfg.tol));
  }
  const FactorizationChain ch = make_chain(p);
  certs.push_back(verify_step(ch.step1, "step1", p));
  certs.push_back(verify_step(ch.step2, "step2", p));
  for (auto& c : verify_intertwining(p, 5, ch)) certs.push_back(c);
  certs.push_back(verify_composite_A(p, 5, ch));
  certs.push_back(verify_exceptional_operator(p, ch));
  certs.push_back(verify_eta12_ode(p));
  if (p.weight_regular()) certs.push_back(sturm_certificate(p));

  if (p.ell() > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Rat> c(r.hi + p.ell() + 1);
    for (auto& x : c) x = coeff(rng);
    c.back() = 1;
    const Poly random(c);
    const ConstraintReport rep = constraint_check(random, p, cfg.tol);
    Certificate control{"random polynomial violates the constraints", p, std::nullopt,
                        rep.passes ? Status::Failed : Status::WithinTol, json::array(), {}};
    control.extra = {{"seed", cfg.seed}, {"degree", random.degree()}, {"max_relative", rep.max_relative}};
    certs.push_back(control);
  }

  bool ok = true;
  json bundle = json::array();
  std::string csv = meta_line(meta("verify", p)) + "identity,n,status\n";
  for (const auto& c : certs) {
    ok = ok && c.passed();
    bundle.push_back(to_json(c));
    csv += "\"" + c.identity + "\"," + (c.n ? std::to_string(*c.n) : "") + "," + to_string(c.status) + "\n";
  }
  emit(cfg, cfg.format == "csv" ? csv : bundle.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_gram(const RunConfig& cfg) {
  const XLParams p = make_params(cfg);
  if (!p.weight_regular()) throw InvalidParams("weight not regular: gram needs k > m2 - 2");
  const int n_max = cfg.n_max < 0 ? p.ell() + 5 : cfg.n_max;
  if (n_max < p.ell()) throw InvalidParams("nmax must be at least ell");
  for (int n = p.ell(); n <= n_max; ++n) p.require_index(n);
  const GramReport rep = gram_matrix(p, n_max, QuadConfig::defaults_for(n_max));
  if (cfg.format == "csv") {
    emit(cfg, to_csv(rep));
  } else {
    emit(cfg, json{{"meta", meta("gram", p)}, {"gram", to_json(rep)}}.dump(2) + "\n");
  }
  return rep.max_offdiag_ratio <= cfg.tol && rep.max_diag_rel_error <= cfg.tol ? 0 : 1;
}

int cmd_potential(const RunConfig& cfg) {
  const XLParams p = make_params(cfg);
  const GridSpec g = parse_grid(cfg.grid);
  const GaugeData data = build_potentials(p);
  json m = meta("potential", p);
  m["grid"] = cfg.grid;
  std::vector<double> xs, u0, u2;
  for (int i = 0; i < g.count; ++i) {
    const double x = g.a + (g.b - g.a) * i / (g.count - 1);
    xs.push_back(x);
    u0.push_back(eval_potential(data.U0, x));
    u2.push_back(eval_potential(data.U2, x));
    if (!std::isfinite(u0.back()) || !std::isfinite(u2.back()))
      throw IdentityFailure("non-finite potential value at x=" + num(x));
  }
  if (cfg.format == "csv") {
    std::string csv = meta_line(m) + "x,U0,U2\n";
    for (std::size_t i = 0; i < xs.size(); ++i) csv += num(xs[i]) + "," + num(u0[i]) + "," + num(u2[i]) + "\n";
    emit(cfg, csv);
  } else {
    std::ostringstream e0, e2;
    e0 << data.U0;
    e2 << data.U2;
    emit(cfg, json{{"meta", m},
                   {"U0", ratfunc_to_json(data.U0)},
                   {"U2", ratfunc_to_json(data.U2)},
                   {"U0_text", e0.str()},
                   {"U2_text", e2.str()},
                   {"x", xs},
                   {"U0_values", u0},
                   {"U2_values", u2}}
                  .dump(2) +
                  "\n");
  }
  return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
  const XLParams p = make_params(cfg);
  const GaugeData data = build_potentials(p);
  const FdGrid grid{cfg.length, cfg.points};
  if (!(cfg.length > 0)) throw InvalidParams("length must be positive");
  const Spectrum s0 = fd_spectrum(data.U0, grid, cfg.count);
  const Spectrum s2 = fd_spectrum(data.U2, grid, cfg.count);
  const double h = grid.step();
  const double bound = 10 * h * h + 1e-6;
  double worst = 0.0;
  for (int i = 0; i < cfg.count; ++i) worst = std::max(worst, std::abs(s0.eigenvalues[i] - s2.eigenvalues[i]));
  json m = meta("spectrum", p);
  m["length"] = cfg.length;
  m["points"] = cfg.points;
  m["step"] = h;
  if (cfg.format == "csv") {
    std::string csv = meta_line(m) + "level,E0,E2\n";
    for (int i = 0; i < cfg.count; ++i)
      csv += std::to_string(i) + "," + num(s0.eigenvalues[i]) + "," + num(s2.eigenvalues[i]) + "\n";
    emit(cfg, csv);
  } else {
    emit(cfg, json{{"meta", m},
                   {"U0", to_json(s0)},
                   {"U2", to_json(s2)},
                   {"max_discrepancy", worst},
                   {"bound", bound},
                   {"ground_state_offset", s0.eigenvalues[0]}}
                  .dump(2) +
                  "\n");
  }
  return worst <= bound ? 0 : 1;
}

int cmd_roots(const RunConfig& cfg) {
  const XLParams p = make_params(cfg);
  Poly target;
  std::optional<int> n;
  if (cfg.target == "eta12") {
    target = eta12(p);
  } else if (cfg.target == "xlaguerre") {
    n = parse_range(cfg.n_range, p.ell(), p.ell()).lo;
    p.require_index(*n);
    target = xlaguerre(*n, p);
  } else {
    throw InvalidParams("unknown target " + cfg.target);
  }
  json m = meta("roots", p);
  m["target"] = cfg.target;
  if (n) m["n"] = *n;
  std::vector<std::complex<double>> roots;
  if (target.degree() >= 1) roots = complex_roots(target);
  json list = json::array();
  std::string csv = meta_line(m) + "re,im,residual\n";
  for (const auto& z : roots) {
    const double res = relative_residual(target.to_double(), z);
    list.push_back({{"re", z.real()}, {"im", z.imag()}, {"residual", res}});
    csv += num(z.real()) + "," + num(z.imag()) + "," + num(res) + "\n";
  }
  if (cfg.format == "csv") {
    emit(cfg, csv);
  } else {
    std::ostringstream text;
    text << target;
    emit(cfg, json{{"meta", m},
                   {"polynomial", poly_to_json(target)},
                   {"polynomial_text", text.str()},
                   {"roots", list},
                   {"nonneg_real_roots", target.is_zero() ? 0 : sturm_nonneg_root_count(target)}}
                  .dump(2) +
                  "\n");
  }
  return 0;
}

void add_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k", cfg.k, "rational parameter k as p or p/q")->capture_default_str();
  sub->add_option("--m1", cfg.m1, "first seed degree")->capture_default_str();
  sub->add_option("--m2", cfg.m2, "second seed degree")->capture_default_str();
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", cfg.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Two-step exceptional Laguerre polynomials: tables, certificates and potentials"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "polynomial table");
  add_params(gen, cfg);
  gen->add_option("--n", cfg.n_range, "index range a..b (default ell..ell+8)");

  auto* verify = app.add_subcommand("verify", "certificate bundle");
  add_params(verify, cfg);
  verify->add_option("--n", cfg.n_range, "index range a..b (default ell..ell+8)");
  verify->add_option("--tol", cfg.tol, "tolerance of numerical checks")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed of the random negative control")->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault, "perturb one coefficient of the first polynomial");

  auto* gram = app.add_subcommand("gram", "Gram matrix under the exceptional weight");
  add_params(gram, cfg);
  gram->add_option("--nmax", cfg.n_max, "largest index (default ell+5)");
  gram->add_option("--tol", cfg.tol, "orthogonality tolerance")->capture_default_str();

  auto* potential = app.add_subcommand("potential", "U0 and U2 sampled on a grid");
  add_params(potential, cfg);
  potential->add_option("--grid", cfg.grid, "a:b:N sample points")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "finite-difference spectra of U0 and U2");
  add_params(spectrum, cfg);
  spectrum->add_option("--count", cfg.count, "number of levels")->capture_default_str();
  spectrum->add_option("--length", cfg.length, "interval length")->capture_default_str();
  spectrum->add_option("--points", cfg.points, "interior grid points")->capture_default_str();

  auto* roots = app.add_subcommand("roots", "complex roots of eta12 or of one polynomial");
  add_params(roots, cfg);
  roots->add_option("--target", cfg.target, "eta12 or xlaguerre")
      ->check(CLI::IsMember({"eta12", "xlaguerre"}))
      ->capture_default_str();
  roots->add_option("--n", cfg.n_range, "index for --target xlaguerre (default ell)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*gram) return cmd_gram(cfg);
    if (*potential) return cmd_potential(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*roots) return cmd_roots(cfg);
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PoleInC& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
