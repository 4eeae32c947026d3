#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ahym/chebyshev.hpp"

#include <cmath>

using namespace ahym;

TEST_CASE("cgl nodes and differentiation") {
  int M = 31;
  auto x = cgl_nodes(M);
  CHECK(x(0) == doctest::Approx(1.0));
  CHECK(x(M) == doctest::Approx(-1.0));
  auto D = cgl_diff_matrix(M);
  // exact on polynomials: d/dx x^5 = 5x^4
  Eigen::VectorXd f = x.pow(5).matrix();
  Eigen::VectorXd df = D * f;
  for (int i = 0; i <= M; ++i) CHECK(df(i) == doctest::Approx(5.0 * std::pow(x(i), 4)).epsilon(1e-10));
}

TEST_CASE("half grid fold differentiates even/odd functions") {
  auto g = make_half_grid(32, 3);
  CHECK(g.r(0) == doctest::Approx(1.0));
  CHECK(g.r.minCoeff() > 0.0);
  Eigen::VectorXd fe = g.r.square().matrix();           // even
  Eigen::VectorXd dfe = g.D_even * fe;
  Eigen::VectorXd fo = (g.r * g.r.square()).matrix();   // odd, r^3
  Eigen::VectorXd dfo = g.D_odd * fo;
  for (int i = 0; i < g.K; ++i) {
    CHECK(dfe(i) == doctest::Approx(2.0 * g.r(i)).epsilon(1e-10));
    CHECK(dfo(i) == doctest::Approx(3.0 * g.r(i) * g.r(i)).epsilon(1e-10));
  }
}

TEST_CASE("radial volume quadrature exact for even polynomials") {
  auto g = make_half_grid(24, 3);
  // int_0^1 r^{2k} r^3 dr = 1/(2k+4)
  for (int k = 0; k <= 20; ++k) {
    double got = (g.quad_rn * g.r.pow(2 * k)).sum();
    CHECK(got == doctest::Approx(1.0 / (2.0 * k + 4.0)).epsilon(1e-12));
  }
}

TEST_CASE("radial volume quadrature for even boundary dimension") {
  auto g = make_half_grid(20, 4);
  for (int k = 0; k <= 12; ++k) {
    double got = (g.quad_rn * g.r.pow(2 * k)).sum();
    CHECK(got == doctest::Approx(1.0 / (2.0 * k + 5.0)).epsilon(1e-12));
  }
}

TEST_CASE("gauss rules") {
  Eigen::ArrayXd x, w;
  gauss_legendre(8, x, w);
  // int_{-1}^1 x^k dx
  for (int k = 0; k <= 15; ++k) {
    double ex = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    CHECK((w * x.pow(k)).sum() == doctest::Approx(ex).epsilon(1e-13));
  }
  gauss_chebyshev2(10, x, w);
  // int x^2 sqrt(1-x^2) = pi/8
  CHECK((w * x.square()).sum() == doctest::Approx(M_PI / 8.0).epsilon(1e-13));
}

TEST_CASE("barycentric interpolation") {
  auto x = cgl_nodes(20);
  auto bw = barycentric_weights(x);
  Eigen::ArrayXd f = (2.0 * x).cos();
  CHECK(barycentric_eval(x, bw, f, 0.3) == doctest::Approx(std::cos(0.6)).epsilon(1e-12));
}
