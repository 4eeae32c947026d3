#include "ahym/geometry.hpp"

#include <cmath>
#include <complex>

namespace ahym {

Geometry::Geometry(int n, int grid_points, double epsilon) : n_(n), eps_(epsilon) {
  require(n >= 3, ErrorCode::DimensionTooLow, "boundary dimension must be >= 3");
  require(grid_points >= 8, ErrorCode::BadGrid, "grid_points must be >= 8");
  require(epsilon > 0.0 && epsilon <= 0.5, ErrorCode::BadGrid, "epsilon must lie in (0, 1/2]");
  grid_ = make_half_grid(grid_points, n);
  const auto& r = grid_.r;
  for (int i = 0; i + 1 < grid_.K; ++i)
    require(r(i) > r(i + 1), ErrorCode::BadGrid, "radial nodes not strictly monotone");
  rho_ball_ = 0.5 * (1.0 - r.square());
  rho_ = rho_ball_;
  rho_c_ = 2.0 * (1.0 - r) / (1.0 + r);
}

RadialFn Geometry::fn_const(double c) const {
  return RadialFn{Eigen::ArrayXd::Constant(grid_.K, c), c, +1};
}

RadialFn Geometry::fn_rho_over_f() const {
  return RadialFn{(1.0 - grid_.r.square()) / (2.0 * grid_.r), 0.0, -1};
}

RadialFn Geometry::fn_alpha() const {
  return RadialFn{-(1.0 + grid_.r.square()) / (2.0 * grid_.r), -1.0, -1};
}

RadialFn Geometry::fn_samples(const Eigen::ArrayXd& v, double bl, int parity) const {
  require(v.size() == grid_.K, ErrorCode::BadGrid, "sample size mismatch");
  return RadialFn{v, bl, parity};
}

Eigen::MatrixXd Geometry::ddrho_log(int parity) const {
  // rho_c d/drho_c = -rho_ball d/dr
  return (-rho_ball_).matrix().asDiagonal() * grid_.diff(parity);
}

Eigen::RowVectorXd Geometry::ddrho_boundary_row(int parity) const {
  // d/drho_c = (1/rho_c'(r)) d/dr with rho_c'(1) = -1
  return -grid_.diff(parity).row(0);
}

Eigen::ArrayXd Geometry::hyperbolic_density() const {
  return (2.0 / (1.0 - grid_.r.square())).pow(n_ + 1);
}

double Geometry::special_bdf_residual() const {
  // |d rho_c|_{rho_c^2 g} = (rho_ball/rho_c) |rho_c'(r)| pointwise; the radial
  // derivative is taken by complex step so the check is exact to round-off,
  // and the ratio rho_ball/rho_c = (1+r)^2/4 avoids 0/0 at the boundary node.
  const double h = 1e-100;
  double worst = 0.0;
  for (int i = 0; i < grid_.K; ++i) {
    std::complex<double> z(grid_.r(i), h);
    std::complex<double> rc = 2.0 * (1.0 - z) / (1.0 + z);
    double drc = rc.imag() / h;
    double val = 0.25 * (1.0 + grid_.r(i)) * (1.0 + grid_.r(i)) * std::abs(drc);
    worst = std::max(worst, std::abs(val - 1.0));
  }
  return worst;
}

GeometryPtr build_geometry(int n, int grid_points, double epsilon) {
  return std::make_shared<const Geometry>(n, grid_points, epsilon);
}

} // namespace ahym
