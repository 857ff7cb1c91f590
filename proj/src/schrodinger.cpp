#include "xlag/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xlag/errors.hpp"
#include "xlag/exactnum/serialize.hpp"
#include "xlag/exactnum/sturm.hpp"

namespace xlag {

namespace {

// zeta'(x) = x / 2
RatFunc zeta_prime() { return RatFunc(Poly{Rat(0), Rat(1, 2)}); }

// zeta'(x) / zeta(x) = 2 / x
RatFunc zeta_log_derivative() { return RatFunc(Poly(2), Poly::z()); }

}  // namespace

Poly zeta_poly() { return Poly::monomial(Rat(1, 4), 2); }

RatFunc Gauge::log_derivative_z() const {
  RatFunc d = RatFunc(exp_rate) + RatFunc(Poly(power), Poly::z());
  if (!factor.is_polynomial() || factor.num().degree() > 0) d += factor.derivative() / factor;
  return d;
}

RatFunc Gauge::log_derivative_x() const {
  RatFunc d = RatFunc(exp_rate) * zeta_prime() + RatFunc(power) * zeta_log_derivative();
  if (!factor.is_polynomial() || factor.num().degree() > 0) {
    const RatFunc f = factor.compose(zeta_poly());
    d += f.derivative() / f;
  }
  return d;
}

double Gauge::eval(double z) const {
  return std::exp(exp_rate.get_d() * z) * std::pow(z, power.get_d()) * factor.eval(z);
}

RatFunc potential_from(const RatFunc& r, const Gauge& mu) {
  const RatFunc d = mu.log_derivative_x();
  return -r.compose(zeta_poly()) + d.derivative() + d * d;
}

GaugeData build_potentials(const XLParams& params, const FactorizationChain& chain) {
  if (!params.weight_regular())
    throw InvalidParams("potentials need k > m2 - 2 (k=" + to_string(params.k()) + ")");
  const Poly e12 = eta12(params);
  if (sturm_nonneg_root_count(e12) != 0) throw PoleOnAxis("eta12(zeta(x)) vanishes for some x > 0");
  const Rat& k = params.k();
  GaugeData g{params,
              Gauge{Rat(-1, 2), Rat(5, 4) + k / 2, RatFunc(1)},
              Gauge{Rat(-1, 2), k / 2 + Rat(1, 4), RatFunc(Poly(1), e12)},
              {}, {}, {}, {}};
  g.U0 = potential_from(chain.step1.T.r, g.mu0);
  g.U2 = potential_from(chain.step2.T_partner.r, g.mu2);
  const RatFunc e12x(e12.compose(zeta_poly()));
  g.log_wronskian_x = e12x.derivative() / e12x - RatFunc(k + 1) * zeta_log_derivative() - zeta_prime();
  g.U2_crum = g.U0 - RatFunc(2) * g.log_wronskian_x.derivative();
  return g;
}

GaugeData build_potentials(const XLParams& params) {
  return build_potentials(params, make_chain(params));
}

Certificate verify_gauge(const GaugeData& g, const FactorizationChain& chain) {
  Certificate c{"U2 = U0 - 2 (log W[psi1, psi2])''; gauge laws", g.params, std::nullopt,
                Status::ExactZero, {}, {}};
  nlohmann::json failures = nlohmann::json::object();
  if (!(g.U2 == g.U2_crum)) failures["crum"] = ratfunc_to_json(g.U2 - g.U2_crum);
  auto mu_law = [](const Gauge& mu, const SecondOrderOp& T) {
    return mu.log_derivative_z() - (RatFunc(2) * T.q - T.p.derivative()) / (RatFunc(4) * T.p);
  };
  const RatFunc law0 = mu_law(g.mu0, chain.step1.T);
  const RatFunc law2 = mu_law(g.mu2, chain.step2.T_partner);
  if (!law0.is_zero()) failures["mu0"] = ratfunc_to_json(law0);
  if (!law2.is_zero()) failures["mu2"] = ratfunc_to_json(law2);
  const RatFunc zeta_law = chain.step1.T.p.compose(zeta_poly()) - zeta_prime() * zeta_prime();
  if (!zeta_law.is_zero()) failures["zeta"] = ratfunc_to_json(zeta_law);
  if (!failures.empty()) {
    c.status = Status::Failed;
    c.residual = failures;
  }
  return c;
}

std::vector<double> eigenfunction_samples(int n, const XLParams& params, std::span<const double> xs) {
  const Poly y = xlaguerre(n, params);
  const Gauge mu2{Rat(-1, 2), params.k() / 2 + Rat(1, 4), RatFunc(Poly(1), eta12(params))};
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    const double z = 0.25 * x * x;
    out.push_back(mu2.eval(z) * y.eval(z));
  }
  return out;
}

double eval_potential(const RatFunc& U, double x) { return U.eval(x); }

namespace {

// Number of eigenvalues below lambda of the symmetric tridiagonal matrix
// with diagonal d and constant off-diagonal e.
int count_below(const std::vector<double>& d, double e, double lambda) {
  int count = 0;
  double q = 1.0;
  const double e2 = e * e;
  for (std::size_t i = 0; i < d.size(); ++i) {
    q = d[i] - lambda - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(d[i]) + std::abs(lambda) + 1.0);
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

Spectrum fd_spectrum(const std::function<double(double)>& U, const FdGrid& grid, int count) {
  if (count < 1 || count > 10) throw InvalidParams("fd_spectrum supports 1..10 levels");
  if (grid.points < count) throw InvalidParams("grid has fewer points than requested levels");
  const double h = grid.step();
  const double off = -1.0 / (h * h);
  std::vector<double> diag(static_cast<std::size_t>(grid.points));
  for (int i = 0; i < grid.points; ++i) {
    diag[i] = 2.0 / (h * h) + U(grid.x(i));
    if (!std::isfinite(diag[i])) throw PoleOnAxis("potential is not finite on the grid");
  }
  const double lo0 = *std::min_element(diag.begin(), diag.end()) - 2.0 * std::abs(off);
  const double hi0 = *std::max_element(diag.begin(), diag.end()) + 2.0 * std::abs(off);
  Spectrum s{grid, {}};
  for (int level = 0; level < count; ++level) {
    double lo = level == 0 ? lo0 : s.eigenvalues.back();
    double hi = hi0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(diag, off, mid) > level)
        hi = mid;
      else
        lo = mid;
    }
    s.eigenvalues.push_back(0.5 * (lo + hi));
  }
  return s;
}

Spectrum fd_spectrum(const RatFunc& U, const FdGrid& grid, int count) {
  const std::vector<double> num = U.num().to_double();
  const std::vector<double> den = U.den().to_double();
  auto horner = [](const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  return fd_spectrum([&](double x) { return horner(num, x) / horner(den, x); }, grid, count);
}

RefinedSpectrum fd_spectrum_refined(const RatFunc& U, const FdGrid& grid, int count) {
  RefinedSpectrum r{fd_spectrum(U, grid, count), fd_spectrum(U, grid.refined(), count),
                    fd_spectrum(U, grid.refined().refined(), count), {}, {}};
  for (int i = 0; i < count; ++i) {
    const double d1 = std::abs(r.coarse.eigenvalues[i] - r.fine.eigenvalues[i]);
    const double d2 = std::abs(r.fine.eigenvalues[i] - r.finest.eigenvalues[i]);
    if (!(d2 < d1)) throw NonConvergence("finite-difference eigenvalue " + std::to_string(i) +
                                         " does not contract under refinement");
    r.observed_order.push_back(std::log2(d1 / d2));
    r.extrapolated.push_back(r.finest.eigenvalues[i] +
                             (r.finest.eigenvalues[i] - r.fine.eigenvalues[i]) / 3.0);
  }
  return r;
}

nlohmann::json to_json(const Spectrum& s) {
  return {{"grid", {{"x_min", s.grid.x(0)},
                    {"x_max", s.grid.x(s.grid.points - 1)},
                    {"length", s.grid.length},
                    {"points", s.grid.points},
                    {"step", s.grid.step()},
                    {"boundary", "dirichlet"}}},
          {"eigenvalues", s.eigenvalues}};
}

}  // namespace xlag
