#ifndef AHYM_GEOMETRY_HPP
#define AHYM_GEOMETRY_HPP

#include "ahym/chebyshev.hpp"
#include "ahym/errors.hpp"

#include <Eigen/Dense>
#include <memory>

namespace ahym {

// Radial coefficient function: samples on the half-grid (descending, node 0 at
// the conformal boundary r = 1), exact boundary limit, and parity under the
// diameter fold r -> -r.  Operator coefficients and indicial data are built
// from these.
struct RadialFn {
  Eigen::ArrayXd v;
  double bl = 0.0;
  int parity = +1;
};

struct WeightedNormSpec {
  double delta = 1.5;
  int p = 2; // 2 or large (>= 1000 means sup norm); use p_inf() for sup
  int derivative_order = 0;
};
inline WeightedNormSpec sup_norm_spec(double delta, int order = 0) {
  return WeightedNormSpec{delta, 1000, order};
}

// The closed hyperbolic ball in collar form.  The metric is
//   g = (d rho_c^2 + f(rho_c)^2 h_round) / rho_c^2,   f = 1 - rho_c^2/4,
// where rho_c = 2(1-r)/(1+r) is the special boundary defining function of the
// ball and r the Euclidean radius.  The sampled bdf `rho` = (1-r^2)/2 (the
// classical ball bdf, rho^2 g Euclidean) drives all weights and exports; both
// vanish simply at the boundary with ratio -> 1.
class Geometry {
public:
  Geometry(int n, int grid_points, double epsilon);

  int n() const { return n_; }
  int nodes() const { return grid_.K; }
  double epsilon() const { return eps_; }

  const HalfGrid& grid() const { return grid_; }
  const Eigen::ArrayXd& r() const { return grid_.r; } // descending, r(0) = 1
  const Eigen::ArrayXd& rho() const { return rho_; }
  const Eigen::ArrayXd& rho_collar() const { return rho_c_; }

  // bdf formulas off the grid
  static double rho_of(double r) { return 0.5 * (1.0 - r * r); }
  static double rho_collar_of(double r) { return 2.0 * (1.0 - r) / (1.0 + r); }

  // collar coefficient functions (exact boundary limits)
  RadialFn fn_const(double c) const;
  RadialFn fn_rho_over_f() const;    // rho_c/f = (1-r^2)/(2r), odd, -> 0
  RadialFn fn_alpha() const;         // rho_c f'/f - 1 = -(1+r^2)/(2r), odd, -> -1
  RadialFn fn_samples(const Eigen::ArrayXd& v, double bl, int parity) const;

  // rho*d/drho on coefficient samples of known parity (rho*d/drho = -rho_ball d/dr)
  Eigen::MatrixXd ddrho_log(int parity) const; // matrix of rho d/drho
  // d/drho row at the boundary node (for boundary-condition rows): d/drho = dr/drho_c * d/dr
  Eigen::RowVectorXd ddrho_boundary_row(int parity) const;

  // radial volume quadrature: sum_i w_i G(r_i) ~ int_0^1 G r^n dr (plain, smooth measure)
  const Eigen::ArrayXd& quad_weights() const { return grid_.quad_rn; }
  // hyperbolic radial volume density divided by r^n: (2/(1-r^2))^{n+1}
  Eigen::ArrayXd hyperbolic_density() const;

  // max over nodes of | |d rho_c|_{rho_c^2 g} - 1 | for the collar bdf,
  // with the derivative taken spectrally (round-off-level for the ball)
  double special_bdf_residual() const;

private:
  int n_;
  double eps_;
  HalfGrid grid_;
  Eigen::ArrayXd rho_, rho_c_, rho_ball_;
};

using GeometryPtr = std::shared_ptr<const Geometry>;

GeometryPtr build_geometry(int n, int grid_points, double epsilon);

} // namespace ahym

#endif
