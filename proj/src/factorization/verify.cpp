#include "xlag/factorization/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "xlag/errors.hpp"
#include "xlag/exactnum/roots.hpp"
#include "xlag/exactnum/serialize.hpp"
#include "xlag/exactnum/sturm.hpp"

namespace xlag {

std::string to_string(Status s) {
  switch (s) {
    case Status::ExactZero: return "exact-zero";
    case Status::WithinTol: return "within-tol";
    case Status::Failed: return "failed";
  }
  return "failed";
}

nlohmann::json params_to_json(const XLParams& params) {
  return {{"k", to_string(params.k())}, {"m1", params.m1()}, {"m2", params.m2()}, {"ell", params.ell()}};
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j{{"identity", c.identity}, {"params", params_to_json(c.params)},
                   {"status", to_string(c.status)}};
  if (c.n) j["n"] = *c.n;
  if (!c.residual.is_null()) j["residual"] = c.residual;
  if (!c.extra.is_null()) j["extra"] = c.extra;
  return j;
}

void require(const Certificate& c) {
  if (!c.passed()) throw IdentityFailure(to_json(c).dump());
}

namespace {

using Action = std::function<RatFunc(const RatFunc&)>;

// Compares two operator actions on z^0..z^N; on mismatch records the
// first failing monomial and the difference.
Certificate compare_actions(std::string identity, const XLParams& params, const Action& lhs,
                            const Action& rhs, int N) {
  Certificate c{std::move(identity), params, std::nullopt, Status::ExactZero, {}, {}};
  const auto basis = monomial_basis(N);
  for (int j = 0; j <= N; ++j) {
    const RatFunc d = lhs(basis[j]) - rhs(basis[j]);
    if (!d.is_zero()) {
      c.status = Status::Failed;
      c.residual = {{"monomial_degree", j}, {"difference", ratfunc_to_json(d)}};
      return c;
    }
  }
  c.extra = {{"basis", "z^j, j=0.." + std::to_string(N)}};
  return c;
}

Certificate exact_poly_certificate(std::string identity, const XLParams& params,
                                   std::optional<int> n, const Poly& residual) {
  Certificate c{std::move(identity), params, n, Status::ExactZero, {}, {}};
  if (!residual.is_zero()) {
    c.status = Status::Failed;
    c.residual = poly_to_json(residual);
  }
  return c;
}

Action with_lambda(Action f, const Rat& lambda) {
  return [f = std::move(f), lambda](const RatFunc& y) { return f(y) + RatFunc(lambda) * y; };
}

}  // namespace

Poly eigen_residual(const Poly& y, int n, const XLParams& params) {
  const Poly e12 = eta12(params);
  const Poly de12 = e12.derivative();
  const Poly z = Poly::z();
  const Poly dy = y.derivative();
  const Rat eig = 2 * params.ell() - n;
  return e12 * (z * dy.derivative() + Poly{params.k() + 1, Rat(-1)} * dy) -
         z * de12 * dy * Rat(2) + z * (de12 + eta12_prime_wronskian(params)) * y * Rat(2) -
         e12 * y * eig;
}

Certificate verify_eigen_for(const Poly& y, int n, const XLParams& params) {
  return exact_poly_certificate("exceptional-eigen-equation", params, n, eigen_residual(y, n, params));
}

Certificate verify_eigen(int n, const XLParams& params) {
  return verify_eigen_for(xlaguerre(n, params), n, params);
}

Certificate verify_partner_eigen(int n, const XLParams& params, const FactorizationChain& chain) {
  const Poly y = xlaguerre(n, params);
  const RatFunc d = chain.step2.T_partner.apply(RatFunc(y)) - RatFunc(y * Rat(params.ell() - n));
  Certificate c{"T2-eigen-equation", params, n, Status::ExactZero, {}, {}};
  if (!d.is_zero()) {
    c.status = Status::Failed;
    c.residual = ratfunc_to_json(d);
  }
  return c;
}

Certificate verify_step(const FactorizationStep& step, const std::string& name,
                        const XLParams& params) {
  const Action T = [&](const RatFunc& y) { return step.T.apply(y); };
  const Action Tp = [&](const RatFunc& y) { return step.T_partner.apply(y); };
  const Action BA = with_lambda([&](const RatFunc& y) { return step.B.apply(step.A.apply(y)); }, step.lambda);
  const Action AB = with_lambda([&](const RatFunc& y) { return step.A.apply(step.B.apply(y)); }, step.lambda);

  Certificate c = compare_actions(name + ": T = BA + lambda", params, T, BA, 2);
  if (!c.passed()) return c;
  c = compare_actions(name + ": T_partner = AB + lambda", params, Tp, AB, 2);
  if (!c.passed()) return c;

  const RatFunc& p = step.T.p;
  const RatFunc& b = step.gauge;
  const RatFunc q_hat = step.T.q + p.derivative() - RatFunc(2) * p * b.derivative() / b;
  const RatFunc& w_hat = step.B.w;
  const RatFunc r_hat = -p * (w_hat.derivative() + w_hat * w_hat) - q_hat * w_hat + RatFunc(step.lambda);
  const RatFunc density_law = step.W.log_derivative() - (step.T.q - p.derivative()) / p;
  const RatFunc partner_density_law =
      step.W_hat.log_derivative() - (step.T_partner.q - step.T_partner.p.derivative()) / step.T_partner.p;
  Certificate out{name, params, std::nullopt, Status::ExactZero, {}, {}};
  nlohmann::json failures = nlohmann::json::object();
  if (!(q_hat == step.T_partner.q)) failures["q_hat"] = ratfunc_to_json(q_hat - step.T_partner.q);
  if (!(r_hat == step.T_partner.r)) failures["r_hat"] = ratfunc_to_json(r_hat - step.T_partner.r);
  if (!density_law.is_zero()) failures["W"] = ratfunc_to_json(density_law);
  if (!partner_density_law.is_zero()) failures["W_hat"] = ratfunc_to_json(partner_density_law);
  if (!(step.T.apply(step.phi) == QuasiRat(step.phi.shift, step.phi.body * RatFunc(step.lambda))))
    failures["T_phi"] = "T[phi] != lambda phi";
  if (!step.A.apply(step.phi).canonical().body.is_zero()) failures["A_phi"] = "A[phi] != 0";
  if (!failures.empty()) {
    out.status = Status::Failed;
    out.residual = failures;
  }
  out.extra = {{"checks", {"T=BA+lambda", "T_partner=AB+lambda", "q_hat law", "r_hat law",
                           "W'/W=(q-p')/p", "W_hat'/W_hat=(q_hat-p')/p", "T[phi]=lambda phi",
                           "A[phi]=0"}}};
  return out;
}

std::vector<Certificate> verify_intertwining(const XLParams& params, int N,
                                             const FactorizationChain& chain) {
  if (N < 5) throw InvalidParams("intertwining check needs N >= 5");
  const auto& s1 = chain.step1;
  const auto& s2 = chain.step2;
  const auto& T0 = s1.T;
  const auto& T1 = s1.T_partner;
  const auto& T2 = s2.T_partner;
  std::vector<Certificate> out;
  out.push_back(compare_actions(
      "A1 T0 = T1 A1", params, [&](const RatFunc& y) { return s1.A.apply(T0.apply(y)); },
      [&](const RatFunc& y) { return T1.apply(s1.A.apply(y)); }, N));
  out.push_back(compare_actions(
      "T0 B1 = B1 T1", params, [&](const RatFunc& y) { return T0.apply(s1.B.apply(y)); },
      [&](const RatFunc& y) { return s1.B.apply(T1.apply(y)); }, N));
  out.push_back(compare_actions(
      "A2 T1 = T2 A2", params, [&](const RatFunc& y) { return s2.A.apply(T1.apply(y)); },
      [&](const RatFunc& y) { return T2.apply(s2.A.apply(y)); }, N));
  out.push_back(compare_actions(
      "T1 B2 = B2 T2", params, [&](const RatFunc& y) { return T1.apply(s2.B.apply(y)); },
      [&](const RatFunc& y) { return s2.B.apply(T2.apply(y)); }, N));
  out.push_back(compare_actions(
      "T2 A2 A1 = A2 A1 T0", params,
      [&](const RatFunc& y) { return T2.apply(s2.A.apply(s1.A.apply(y))); },
      [&](const RatFunc& y) { return s2.A.apply(s1.A.apply(T0.apply(y))); }, N));
  return out;
}

Certificate verify_composite_A(const XLParams& params, int N, const FactorizationChain& chain) {
  Certificate c{"A2 A1 [y] = z^{-k} W[eta1, eta2, z^{k+2} y]", params, std::nullopt,
                Status::ExactZero, {}, {{"basis", "z^j, j=0.." + std::to_string(N)}}};
  for (int j = 0; j <= N; ++j) {
    const Poly y = Poly::monomial(1, static_cast<std::size_t>(j));
    const RatFunc lhs = chain.step2.A.apply(chain.step1.A.apply(RatFunc(y)));
    const ShiftedPoly rhs = two_step_wronskian(y, params);
    if (!(QuasiRat(lhs) == QuasiRat(rhs.shift, RatFunc(rhs.body)))) {
      c.status = Status::Failed;
      c.residual = {{"monomial_degree", j}, {"lhs", ratfunc_to_json(lhs)}, {"rhs", shifted_to_json(rhs)}};
      return c;
    }
  }
  return c;
}

Certificate verify_exceptional_operator(const XLParams& params, const FactorizationChain& chain) {
  const SecondOrderOp L = exceptional_operator(params);
  const SecondOrderOp& T2 = chain.step2.T_partner;
  Certificate c = compare_actions(
      "Lhat_k = T2 + ell", params, [&](const RatFunc& y) { return L.apply(y); },
      with_lambda([&](const RatFunc& y) { return T2.apply(y); }, Rat(params.ell())), 2);
  if (!c.passed()) return c;

  const Poly e12 = eta12(params);
  const Poly z = Poly::z();
  const RatFunc r2_eta(z * e12.derivative(2) + Poly{-params.k(), Rat(1)} * e12.derivative(), e12);
  const RatFunc r2_wronskian =
      RatFunc(z * (e12.derivative() + eta12_prime_wronskian(params)) * Rat(2), e12) - RatFunc(params.ell());
  c.identity = "Lhat_k = T2 + ell; r2 closed forms";
  nlohmann::json failures = nlohmann::json::object();
  if (!(T2.r == r2_eta)) failures["r2_eta"] = ratfunc_to_json(T2.r - r2_eta);
  if (!(T2.r == r2_wronskian)) failures["r2_wronskian"] = ratfunc_to_json(T2.r - r2_wronskian);
  const RatFunc q2 = RatFunc(Poly{params.k() + 1, Rat(-1)}) - RatFunc(z * e12.derivative() * Rat(2), e12);
  if (!(T2.q == q2)) failures["q2"] = ratfunc_to_json(T2.q - q2);
  if (!failures.empty()) {
    c.status = Status::Failed;
    c.residual = failures;
  }
  return c;
}

Certificate verify_eta12_ode(const XLParams& params) {
  return exact_poly_certificate("z eta12' - (k+1+z) eta12 + (m2-m1) eta1 eta2 = 0", params,
                                std::nullopt, eta12_ode_residual(params));
}

Certificate sturm_certificate(const XLParams& params) {
  const Poly e12 = eta12(params);
  const int count = sturm_nonneg_root_count(e12);
  const Rat at0 = e12(Rat(0));
  Certificate c{"eta12 has no zero on [0, inf)", params, std::nullopt,
                (count == 0 && at0 != 0) ? Status::ExactZero : Status::Failed, {}, {}};
  c.extra = {{"nonneg_real_roots", count},
             {"eta12_at_0", to_string(at0)},
             {"weight_regular", params.weight_regular()}};
  if (c.passed()) c.extra["sign_on_halfline"] = sgn(at0);
  return c;
}

ConstraintReport constraint_check(const Poly& y, const XLParams& params, double tol) {
  ConstraintReport rep;
  const Poly e12 = eta12(params);
  if (e12.degree() < 1) {
    rep.passes = true;
    return rep;
  }
  const Poly d1 = e12.derivative();
  const Poly d2 = d1.derivative();
  const Poly dy = y.derivative();
  const double k = params.k().get_d();
  rep.roots = complex_roots(e12);
  for (const auto& zi : rep.roots) {
    double scale = 0.0;
    for (int j = d1.degree(); j >= 0; --j) scale = scale * std::abs(zi) + std::abs(d1.coeff(j).get_d());
    const std::complex<double> de = d1.eval(zi);
    if (std::abs(de) <= tol * std::max(scale, 1e-300))
      throw MultipleRoot("eta12 has a (numerically) multiple root near " +
                         std::to_string(zi.real()) + (zi.imag() < 0 ? "-" : "+") +
                         std::to_string(std::abs(zi.imag())) + "i");
    const std::complex<double> yv = y.eval(zi);
    const std::complex<double> zdy = zi * dy.eval(zi);
    const std::complex<double> res = -2.0 * zdy + (zi - k + zi * d2.eval(zi) / de) * yv;
    const double norm = std::max({1.0, std::abs(yv), std::abs(zdy)});
    rep.residuals.push_back(res);
    rep.relative.push_back(std::abs(res) / norm);
    rep.max_relative = std::max(rep.max_relative, rep.relative.back());
  }
  rep.passes = rep.max_relative <= tol;
  return rep;
}

Certificate constraint_certificate(const Poly& y, int n, const XLParams& params, double tol) {
  const ConstraintReport rep = constraint_check(y, params, tol);
  Certificate c{"subspace constraints at zeros of eta12", params, n,
                rep.passes ? Status::WithinTol : Status::Failed, {}, {}};
  auto res = nlohmann::json::array();
  for (const auto& r : rep.residuals) res.push_back({r.real(), r.imag()});
  c.residual = res;
  c.extra = {{"max_relative", rep.max_relative}, {"tol", tol}};
  return c;
}

}  // namespace xlag
