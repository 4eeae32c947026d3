#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ahym/geometry.hpp"

using namespace ahym;

TEST_CASE("build_geometry basic contract") {
  auto geo = build_geometry(3, 64, 0.5);
  CHECK(geo->n() == 3);
  CHECK(geo->nodes() == 64);
  // rho = (1-r^2)/2: rho(0) = 1/2, rho(1) = 0
  CHECK(Geometry::rho_of(0.0) == doctest::Approx(0.5));
  CHECK(Geometry::rho_of(1.0) == doctest::Approx(0.0));
  CHECK(geo->rho()(0) == doctest::Approx(0.0)); // boundary node
  CHECK(geo->rho().tail(geo->nodes() - 1).minCoeff() > 0.0);
}

TEST_CASE("rejects dimension below 3") {
  CHECK_THROWS_AS(build_geometry(2, 64, 0.5), Error);
  try {
    build_geometry(2, 64, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionTooLow);
  }
}

TEST_CASE("collar bdf is special to round-off") {
  auto geo = build_geometry(3, 64, 0.5);
  CHECK(geo->special_bdf_residual() < 1e-12);
}

TEST_CASE("collar coefficient functions") {
  auto geo = build_geometry(3, 32, 0.5);
  auto rof = geo->fn_rho_over_f();
  auto al = geo->fn_alpha();
  CHECK(rof.bl == 0.0);
  CHECK(al.bl == -1.0);
  // identities: rho_c/f = rho/r, alpha = -(1+r^2)/(2r)
  for (int i = 0; i < geo->nodes(); ++i) {
    double r = geo->r()(i);
    CHECK(rof.v(i) == doctest::Approx(geo->rho()(i) / r));
    CHECK(al.v(i) == doctest::Approx(-(1.0 + r * r) / (2.0 * r)));
  }
  // D = rho d/drho on center-regular field samples: D rho_c^s = s rho_c^s,
  // checked on the even combination rho_c^2 + rho_c(-r)^2 wiped below; instead
  // verify on polynomial fields where the fold is exact.
  Eigen::ArrayXd w = geo->r() * geo->rho().square(); // odd, smooth
  Eigen::VectorXd dw = geo->ddrho_log(-1) * w.matrix();
  for (int i = 0; i < geo->nodes(); ++i) {
    double r = geo->r()(i), rb = geo->rho()(i);
    double ddr = rb * rb + r * 2.0 * rb * (-r); // d/dr (r rho^2)
    CHECK(dw(i) == doctest::Approx(-rb * ddr).epsilon(1e-9));
  }
}

TEST_CASE("rho_collar and rho agree to first order at the boundary") {
  auto geo = build_geometry(3, 48, 0.5);
  // ratio rho_c/rho -> 1 as r -> 1
  double ratio0 = geo->rho_collar()(1) / geo->rho()(1);
  CHECK(ratio0 == doctest::Approx(1.0).epsilon(1e-3));
}
