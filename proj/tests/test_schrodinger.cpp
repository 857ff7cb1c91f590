#include <cmath>

#include "doctest.h"
#include "xlag/errors.hpp"
#include "xlag/factorization/chain.hpp"
#include "xlag/quadrature.hpp"
#include "xlag/schrodinger.hpp"

using namespace xlag;

namespace {

const Poly x = Poly::z();

std::vector<XLParams> grid() {
  return {XLParams(Rat(2), 1, 2), XLParams(Rat(5, 2), 1, 3), XLParams(Rat(3), 2, 3),
          XLParams(Rat(1), 0, 2), XLParams(Rat(1), 0, 1)};
}

}  // namespace

TEST_CASE("gauge identities and the Crum formula") {
  CHECK(zeta_poly() == Rat(1, 4) * x * x);
  for (const auto& p : grid()) {
    const FactorizationChain ch = make_chain(p);
    const GaugeData g = build_potentials(p, ch);
    CHECK(g.U2 == g.U2_crum);
    CHECK(verify_gauge(g, ch).status == Status::ExactZero);
  }
}

TEST_CASE("log-wronskian bridge") {
  for (const auto& p : grid()) {
    const GaugeData g = build_potentials(p);
    const Poly zeta = zeta_poly();
    const RatFunc e = RatFunc(eta12(p).compose(zeta));
    const RatFunc expected = e.derivative() / e -
                             RatFunc(1 + p.k()) * RatFunc(zeta.derivative()) / RatFunc(zeta) -
                             RatFunc(zeta.derivative());
    CHECK(g.log_wronskian_x == expected);
    CHECK(g.U2 - g.U0 == RatFunc(-2) * g.log_wronskian_x.derivative());
  }
}

TEST_CASE("radial oscillator potential") {
  for (Rat k : {Rat(0), Rat(2), Rat(7, 3)}) {
    const GaugeData g = build_potentials(XLParams(k, 0, 1));
    // -psi'' + (x^2/16 + (k+3/2)(k+5/2)/x^2 - c) psi for T0 with parameter k+2
    const RatFunc u0 = RatFunc(Rat(1, 16) * x * x) +
                       RatFunc(Poly((k + Rat(3, 2)) * (k + Rat(5, 2))), x * x) -
                       RatFunc((k + 3) / 2);
    CHECK(g.U0 == u0);
    CHECK(g.U2 - g.U0 == RatFunc(1) - RatFunc(Poly(4 * (k + 1)), x * x));
  }
  CHECK_THROWS_AS(build_potentials(XLParams(Rat(0), 1, 2)), InvalidParams);
}

TEST_CASE("finite-difference spectra") {
  const XLParams p(Rat(2), 1, 2);
  const GaugeData g = build_potentials(p);
  const FdGrid fd{20.0, 999};
  const double h = fd.step();
  const Spectrum s0 = fd_spectrum(g.U0, fd, 5), s2 = fd_spectrum(g.U2, fd, 5);
  for (int n = 0; n < 5; ++n) {
    CHECK(std::abs(s0.eigenvalues[n] - s2.eigenvalues[n]) <= 10 * h * h + 1e-6);
    CHECK(std::abs(s0.eigenvalues[n] - n) <= 5e-3);
    if (n > 0) CHECK(std::abs(s2.eigenvalues[n] - s2.eigenvalues[n - 1] - 1.0) <= 5e-3);
  }

  const double c = 0.375;
  const Spectrum shifted = fd_spectrum(g.U2 + RatFunc(Rat(3, 8)), fd, 5);
  for (int n = 0; n < 5; ++n) CHECK(shifted.eigenvalues[n] - s2.eigenvalues[n] == doctest::Approx(c).epsilon(1e-9));

  const RefinedSpectrum r = fd_spectrum_refined(g.U2, FdGrid{20.0, 499}, 5);
  for (double order : r.observed_order) CHECK(order == doctest::Approx(2.0).epsilon(0.1));
  for (int n = 0; n < 5; ++n) CHECK(std::abs(r.extrapolated[n] - n) <= 1e-6);

  CHECK_THROWS_AS(fd_spectrum(g.U2, fd, 0), InvalidParams);
  CHECK_THROWS_AS(fd_spectrum(g.U2, fd, 11), InvalidParams);
}

TEST_CASE("eigenfunctions") {
  const XLParams p(Rat(2), 1, 2);
  std::vector<double> xs;
  for (int i = 1; i <= 4000; ++i) xs.push_back(i * 0.005);
  const auto ground = eigenfunction_samples(p.ell(), p, xs);
  const double sign = ground.front() > 0 ? 1.0 : -1.0;
  for (double v : ground) CHECK(sign * v > 0);

  double peak = 0.0;
  for (int n = p.ell(); n <= p.ell() + 4; ++n) {
    const auto psi = eigenfunction_samples(n, p, xs);
    for (double v : psi) peak = std::max(peak, std::abs(v));
    CHECK(std::abs(psi.back()) <= 1e-6 * peak);
    CHECK(std::abs(psi.front()) <= 1e-3 * peak);
  }
}

TEST_CASE("discrete inner products match the gram matrix") {
  const XLParams p(Rat(2), 1, 2);
  const int n_max = p.ell() + 3;
  const GramReport gram = gram_matrix(p, n_max, QuadConfig::defaults_for(n_max));
  const double xmax = 30.0;
  const int steps = 60000;
  std::vector<double> xs;
  for (int i = 0; i <= steps; ++i) xs.push_back(xmax * i / steps);
  std::vector<std::vector<double>> psi;
  for (int n = p.ell(); n <= n_max; ++n) psi.push_back(eigenfunction_samples(n, p, xs));
  const double dx = xmax / steps;
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) {
      double sum = 0.0;
      for (int t = 0; t <= steps; ++t) sum += (t == 0 || t == steps ? 0.5 : 1.0) * psi[i][t] * psi[j][t];
      const double scale = std::sqrt(gram.gram.value[i][i] * gram.gram.value[j][j]);
      CHECK(std::abs(sum * dx - gram.gram.value[i][j]) <= 1e-6 * scale);
    }
}
