#include <cmath>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "xlag/errors.hpp"
#include "xlag/factorization/chain.hpp"
#include "xlag/laguerre.hpp"
#include "xlag/quadrature.hpp"

using namespace xlag;

namespace {
const Poly z = Poly::z();
}

TEST_CASE("gauss-legendre rule") {
  const auto rule = gauss_legendre(16);
  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
  for (int deg = 0; deg <= 31; ++deg) {
    double q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) q += rule.weights[i] * std::pow(rule.nodes[i], deg);
    const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
    CHECK(q == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("classical inner products") {
  const QuadConfig cfg;
  const Weight w0 = Weight::classical(Rat(0));
  CHECK(inner(Poly(1), Poly(1), w0, cfg).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(inner(laguerre_poly(0, 0), laguerre_poly(1, 0), w0, cfg).value) <= 1e-10);
  for (Rat k : {Rat(0), Rat(3, 2)}) {
    const Weight w = Weight::classical(k);
    const double n0 = inner(Poly(1), Poly(1), w, cfg).value;
    const double n2 = inner(laguerre_poly(2, k), laguerre_poly(2, k), w, cfg).value;
    CHECK(n2 / n0 == doctest::Approx(classical_norm_ratio(2, k).get_d()).epsilon(1e-10));
  }
  CHECK_THROWS_AS(Weight::classical(Rat(-1)), InvalidParams);
}

TEST_CASE("gamma moments") {
  QuadConfig cfg;
  cfg.radius = 90.0;
  cfg.panels = 96;
  for (Rat k : {Rat(0), Rat(1, 2), Rat(-1, 3), Rat(3)}) {
    const Weight w = Weight::classical(k);
    for (std::size_t j = 0; j <= 12; ++j) {
      const double exact = std::exp(std::lgamma(j + k.get_d() + 1));
      const QuadResult r = inner(Poly::monomial(1, j), Poly(1), w, cfg);
      CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
      CHECK(std::abs(r.value - exact) <= r.error + 1e-13 * exact);
    }
  }
}

TEST_CASE("panel doubling stays within the error estimate") {
  const XLParams p(Rat(2), 1, 2);
  const Weight w = Weight::exceptional(p);
  QuadConfig cfg = QuadConfig::defaults_for(7);
  QuadConfig doubled = cfg;
  doubled.panels *= 2;
  for (int n = 2; n <= 7; ++n)
    for (int j = n; j <= 7; ++j) {
      const Poly f = xlaguerre(n, p), g = xlaguerre(j, p);
      const QuadResult a = inner(f, g, w, cfg), b = inner(f, g, w, doubled);
      CHECK(std::abs(a.value - b.value) <= a.error);
    }
}

TEST_CASE("tail bound") {
  QuadConfig cfg;
  cfg.radius = 10.0;
  CHECK_THROWS_AS(inner(Poly::monomial(1, 6), Poly(1), Weight::classical(Rat(0)), cfg), TailBoundExceeded);
  CHECK(tail_bound(Poly(1), Poly(1), Rat(0), 30.0) == doctest::Approx(std::exp(-30.0)).epsilon(1e-12));
  const double t = tail_bound(Poly::monomial(1, 3), Poly(1), Rat(1, 2), 40.0);
  CHECK(t >= std::pow(40.0, 3.5) * std::exp(-40.0));
}

TEST_CASE("exceptional gram matrix") {
  const XLParams p(Rat(2), 1, 2);
  const GramReport r = gram_matrix(p, p.ell() + 5, QuadConfig::defaults_for(p.ell() + 5));
  REQUIRE(r.gram.value.size() == 6);
  const std::vector<double> diag = {4, 10, 18, 28, 40, 54};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(r.gram.value[i][i] == doctest::Approx(diag[i]).epsilon(1e-8));
    CHECK(r.expected_diagonal[i] == doctest::Approx(diag[i]).epsilon(1e-12));
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(r.gram.value[i][j] == r.gram.value[j][i]);
      if (i != j) CHECK(std::abs(r.gram.value[i][j]) <= 1e-8 * std::sqrt(diag[i] * diag[j]));
    }
  }
  CHECK(r.max_offdiag_ratio <= 1e-8);
  CHECK(r.max_diag_rel_error <= 1e-8);

  std::istringstream csv(to_csv(r));
  std::string line;
  std::getline(csv, line);
  CHECK(line.rfind("# gram", 0) == 0);
  std::getline(csv, line);
  CHECK(line == "n,j,value,error");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 36);

  CHECK_THROWS_AS(gram_matrix(XLParams(Rat(0), 1, 2), 4, QuadConfig{}), InvalidParams);
  CHECK_THROWS_AS(Weight::exceptional(XLParams(Rat(1), 1, 3)), InvalidParams);
}

TEST_CASE("classical reduction of the gram matrix") {
  const Rat k(1, 2);
  const GramReport r = gram_matrix(XLParams(k, 0, 1), 5, QuadConfig::defaults_for(5));
  for (int n = 0; n <= 5; ++n) {
    const double expected = std::exp(std::lgamma(k.get_d() + n + 1) - std::lgamma(n + 1.0));
    CHECK(r.gram.value[n][n] == doctest::Approx(expected).epsilon(1e-10));
    CHECK(r.expected_diagonal[n] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("gram scale covariance") {
  const XLParams p(Rat(5, 2), 1, 3);
  const Weight w = Weight::exceptional(p);
  const QuadConfig cfg = QuadConfig::defaults_for(p.ell() + 3);
  std::vector<Poly> polys, scaled;
  for (int n = p.ell(); n <= p.ell() + 3; ++n) polys.push_back(xlaguerre(n, p));
  scaled = polys;
  scaled[1] = scaled[1] * Rat(2);
  const Gram g = gram_of(polys, w, cfg), gs = gram_of(scaled, w, cfg);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < polys.size(); ++j) {
      const double factor = (i == 1 ? 2.0 : 1.0) * (j == 1 ? 2.0 : 1.0);
      CHECK(gs.value[i][j] == doctest::Approx(factor * g.value[i][j]).epsilon(1e-14).scale(1e-12));
    }
}

TEST_CASE("adjoint boundary identity") {
  const XLParams p(Rat(2), 1, 2);
  const FactorizationChain ch = make_chain(p);
  const AdjointResult unit = adjoint_boundary_check(Poly(1), Poly(1), ch.step1, 30.0);
  CHECK(unit.relative <= 1e-8);
  const AdjointResult mono = adjoint_boundary_check(z, z * z, ch.step1, 30.0);
  CHECK(mono.relative <= 1e-8);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const Poly f = testing::random_poly(rng, trial % 5), g = testing::random_poly(rng, 4 - trial % 5);
    CHECK(adjoint_boundary_check(f, g, ch.step1, 30.0).relative <= 1e-8);
    CHECK(adjoint_boundary_check(f, g, ch.step2, 30.0).relative <= 1e-8);
  }
}
