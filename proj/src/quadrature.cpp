#include "xlag/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "xlag/errors.hpp"
#include "xlag/exactnum/sturm.hpp"

namespace xlag {

namespace {

// Double-precision evaluator for a rational function with fixed coefficients.
class DoubleRatFunc {
 public:
  explicit DoubleRatFunc(const RatFunc& f) : num_(f.num().to_double()), den_(f.den().to_double()) {}
  double operator()(double x) const { return horner(num_, x) / horner(den_, x); }

 private:
  static double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  std::vector<double> num_;
  std::vector<double> den_;
};

// Integrand z^power * f(z) * e^{-z} with f rational; z^power is evaluated
// in double, so z = 0 is never sampled (Gauss nodes are interior).
std::function<double(double)> density_integrand(const Density& d) {
  const DoubleRatFunc f(d.factor);
  const double power = d.power.get_d();
  return [f, power](double z) { return std::pow(z, power) * f(z) * std::exp(-z); };
}

void require_no_pole_on_halfline(const Poly& den, const char* what) {
  if (den.degree() <= 0) return;
  if (sturm_nonneg_root_count(den) != 0)
    throw InvalidParams(std::string(what) + " has a pole on [0, inf)");
}

}  // namespace

Weight Weight::classical(const Rat& k) {
  if (!(k > -1)) throw InvalidParams("classical weight needs k > -1, got k=" + to_string(k));
  return Weight{k, WeightKind::Classical, Poly(1)};
}

Weight Weight::exceptional(const XLParams& params) {
  if (!params.weight_regular())
    throw InvalidParams("exceptional weight needs k > m2 - 2 (k=" + to_string(params.k()) +
                        ", m2=" + std::to_string(params.m2()) + ")");
  Poly e12 = xlag::eta12(params);
  if (sturm_nonneg_root_count(e12) != 0)
    throw InvalidParams("eta12 vanishes on [0, inf)");
  return Weight{params.k(), WeightKind::Exceptional, std::move(e12)};
}

Density Weight::density() const {
  if (kind == WeightKind::Classical) return Density{k, RatFunc(1)};
  return Density{k, RatFunc(Poly(1), eta12 * eta12)}.canonical();
}

QuadConfig QuadConfig::defaults_for(int n_max) {
  QuadConfig cfg;
  cfg.radius = std::max(60.0, 8.0 * n_max);
  return cfg;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw InvalidParams("Gauss-Legendre rule needs n >= 1");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      // p1 = P_n(x), p2 = P_{n-1}(x)
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

std::pair<double, double> composite_integral(const std::function<double(double)>& f, double a,
                                             double b, int panels, const GaussLegendreRule& rule,
                                             int grading_levels) {
  double sum = 0.0;
  double abs_sum = 0.0;
  auto panel = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double v = f(mid + half * rule.nodes[i]) * rule.weights[i] * half;
      sum += v;
      abs_sum += std::abs(v);
    }
  };
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == panels) ? b : lo + h;
    if (p == 0 && a == 0.0 && grading_levels > 0) {
      double top = hi;
      for (int g = 0; g < grading_levels; ++g) {
        panel(0.5 * top, top);
        top *= 0.5;
      }
      panel(0.0, top);
    } else {
      panel(lo, hi);
    }
  }
  return {sum, abs_sum};
}

double tail_bound(const Poly& num, const Poly& den, const Rat& power, double R) {
  if (num.is_zero()) return 0.0;
  const int dn = num.degree();
  const int dd = den.degree();
  double cn = 0.0;
  for (int j = 0; j <= dn; ++j) cn += std::abs(num.coeff(j).get_d()) * std::pow(R, j - dn);
  double cd = std::abs(den.leading().get_d());
  for (int j = 0; j < dd; ++j) cd -= std::abs(den.coeff(j).get_d()) * std::pow(R, j - dd);
  if (cd <= 0.0) return std::numeric_limits<double>::infinity();
  // |num/den| z^power <= (cn/cd) z^s on [R, inf), and
  // Gamma(s+1, R) <= R^s e^{-R} / (1 - s/R) for R > s > 0.
  const double s = dn - dd + power.get_d();
  double log_bound = std::log(cn / cd) + s * std::log(R) - R;
  if (s > 0.0) {
    if (R <= s) return std::numeric_limits<double>::infinity();
    log_bound -= std::log1p(-s / R);
  }
  return std::exp(log_bound);
}

QuadResult inner(const Poly& f, const Poly& g, const Weight& w, const QuadConfig& cfg) {
  const Density d = w.density();
  const RatFunc integrand_factor = d.factor * RatFunc(f * g);
  const auto integrand = density_integrand(Density{d.power, integrand_factor});
  const GaussLegendreRule rule = gauss_legendre(cfg.nodes);
  const auto [value, abs_value] =
      composite_integral(integrand, 0.0, cfg.radius, cfg.panels, rule, cfg.grading_levels);
  const auto [coarse, coarse_abs] =
      composite_integral(integrand, 0.0, cfg.radius, std::max(1, cfg.panels / 2), rule, cfg.grading_levels);
  (void)coarse_abs;
  QuadResult r;
  r.value = value;
  r.abs_integral = abs_value;
  r.tail_bound = tail_bound(integrand_factor.num(), integrand_factor.den(), d.power, cfg.radius);
  const double scale = std::max(abs_value, std::numeric_limits<double>::min());
  if (r.tail_bound > cfg.tol * scale) {
    std::ostringstream msg;
    msg << "tail bound " << r.tail_bound << " beyond radius " << cfg.radius
        << " exceeds tolerance " << cfg.tol << " relative to " << abs_value;
    throw TailBoundExceeded(msg.str());
  }
  r.error = std::abs(value - coarse) + r.tail_bound + 64.0 * std::numeric_limits<double>::epsilon() * abs_value;
  return r;
}

Gram gram_of(const std::vector<Poly>& polys, const Weight& w, const QuadConfig& cfg) {
  const std::size_t n = polys.size();
  Gram g{std::vector<std::vector<double>>(n, std::vector<double>(n)),
         std::vector<std::vector<double>>(n, std::vector<double>(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const QuadResult r = inner(polys[i], polys[j], w, cfg);
      g.value[i][j] = g.value[j][i] = r.value;
      g.error[i][j] = g.error[j][i] = r.error;
    }
  return g;
}

double expected_gram_diagonal(int n, const XLParams& params) {
  const int j = n - params.ell();
  const Rat prefactor = norm_constant_C(n, params) / (params.m1() - params.m2());
  const double k = params.k().get_d();
  return prefactor.get_d() * std::exp(std::lgamma(k + n + 3 - params.ell()) - std::lgamma(j + 1.0));
}

GramReport gram_matrix(const XLParams& params, int n_max, const QuadConfig& cfg) {
  const Weight w = Weight::exceptional(params);
  if (n_max < params.ell()) throw InvalidParams("n_max below ell");
  std::vector<Poly> polys;
  for (int n = params.ell(); n <= n_max; ++n) polys.push_back(xlaguerre(n, params));
  GramReport rep{params, params.ell(), n_max, gram_of(polys, w, cfg), {}, {}, 0.0, 0.0};
  const std::size_t size = polys.size();
  for (std::size_t i = 0; i < size; ++i) {
    const double expected = expected_gram_diagonal(params.ell() + static_cast<int>(i), params);
    rep.expected_diagonal.push_back(expected);
    rep.diagonal_rel_error.push_back(std::abs(rep.gram.value[i][i] - expected) / std::abs(expected));
    rep.max_diag_rel_error = std::max(rep.max_diag_rel_error, rep.diagonal_rel_error.back());
    for (std::size_t j = 0; j < size; ++j) {
      if (i == j) continue;
      const double ratio = std::abs(rep.gram.value[i][j]) /
                           std::sqrt(std::abs(rep.gram.value[i][i] * rep.gram.value[j][j]));
      rep.max_offdiag_ratio = std::max(rep.max_offdiag_ratio, ratio);
    }
  }
  return rep;
}

nlohmann::json to_json(const GramReport& r) {
  return {{"params", {{"k", to_string(r.params.k())}, {"m1", r.params.m1()}, {"m2", r.params.m2()},
                      {"ell", r.params.ell()}}},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"matrix", r.gram.value},
          {"error", r.gram.error},
          {"expected_diagonal", r.expected_diagonal},
          {"diagonal_rel_error", r.diagonal_rel_error},
          {"max_offdiag_ratio", r.max_offdiag_ratio},
          {"max_diag_rel_error", r.max_diag_rel_error}};
}

std::string to_csv(const GramReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "# gram k=" << to_string(r.params.k()) << " m1=" << r.params.m1() << " m2=" << r.params.m2()
      << " n=" << r.n_min << ".." << r.n_max << " max_offdiag_ratio=" << r.max_offdiag_ratio
      << " max_diag_rel_error=" << r.max_diag_rel_error << "\n";
  out << "n,j,value,error\n";
  for (std::size_t i = 0; i < r.gram.value.size(); ++i)
    for (std::size_t j = 0; j < r.gram.value.size(); ++j)
      out << r.n_min + static_cast<int>(i) << "," << r.n_min + static_cast<int>(j) << ","
          << r.gram.value[i][j] << "," << r.gram.error[i][j] << "\n";
  return out.str();
}

AdjointResult adjoint_boundary_check(const Poly& f, const Poly& g, const FactorizationStep& step,
                                     double R, const QuadConfig& cfg) {
  const Density first = step.W_hat.times(step.A.apply(RatFunc(f)) * RatFunc(g));
  const Density second = step.W.times(step.B.apply(RatFunc(g)) * RatFunc(f));
  const Density boundary = step.W.times(step.B.beta * RatFunc(f * g));
  require_no_pole_on_halfline(first.factor.den(), "A[f] g W_hat");
  require_no_pole_on_halfline(second.factor.den(), "B[g] f W");
  require_no_pole_on_halfline(boundary.factor.den(), "b_hat W f g");
  if (!first.factor.is_zero() && !(first.power > -1))
    throw InvalidParams("A[f] g W_hat is not integrable at 0");
  if (!second.factor.is_zero() && !(second.power > -1))
    throw InvalidParams("B[g] f W is not integrable at 0");

  const GaussLegendreRule rule = gauss_legendre(cfg.nodes);
  const auto [ia, ia_abs] =
      composite_integral(density_integrand(first), 0.0, R, cfg.panels, rule, cfg.grading_levels);
  const auto [ib, ib_abs] =
      composite_integral(density_integrand(second), 0.0, R, cfg.panels, rule, cfg.grading_levels);

  double at_zero = 0.0;
  if (!boundary.factor.is_zero()) {
    if (boundary.power < 0) throw InvalidParams("boundary term diverges at 0");
    if (boundary.power == 0) at_zero = boundary.factor.eval(0.0);
  }
  const double at_R = boundary.eval(R);

  AdjointResult res;
  res.integral_A = ia;
  res.integral_B = ib;
  res.boundary = at_R - at_zero;
  res.residual = ia + ib - res.boundary;
  res.relative = std::abs(res.residual) /
                 std::max(1.0, ia_abs + ib_abs + std::abs(at_R) + std::abs(at_zero));
  return res;
}

}  // namespace xlag
