#ifndef AHYM_CHEBYSHEV_HPP
#define AHYM_CHEBYSHEV_HPP

#include <Eigen/Dense>

namespace ahym {

// Chebyshev-Gauss-Lobatto nodes x_j = cos(j*pi/M), j = 0..M, descending from 1 to -1.
Eigen::ArrayXd cgl_nodes(int M);

// Spectral differentiation matrix on the CGL nodes (Trefethen's formulas).
Eigen::MatrixXd cgl_diff_matrix(int M);

// Radial half-grid on (0,1] built from a full CGL diameter grid of odd order
// M = 2K-1.  Functions are stored by their K samples on the positive nodes
// (descending, r(0) = 1) and extended to the full diameter by a declared
// parity; differentiation folds the full spectral matrix accordingly.
struct HalfGrid {
  int K = 0;
  int M = 0;
  Eigen::ArrayXd r;       // K positive nodes, descending, r(0) = 1
  Eigen::MatrixXd D_even; // d/dr acting on even samples
  Eigen::MatrixXd D_odd;  // d/dr acting on odd samples
  Eigen::ArrayXd quad_rn; // weights: sum_i w_i G(r_i) ~ int_0^1 G(r) r^n dr for even G

  const Eigen::MatrixXd& diff(int parity) const { return parity > 0 ? D_even : D_odd; }
};

HalfGrid make_half_grid(int K, int n_dim);

// Gauss rules on [-1,1].  gauss_jacobi uses weight (1-x)^a (1+x)^b.
void gauss_legendre(int m, Eigen::ArrayXd& x, Eigen::ArrayXd& w);
void gauss_jacobi(int m, double a, double b, Eigen::ArrayXd& x, Eigen::ArrayXd& w);
// weight sqrt(1-x^2) (Chebyshev second kind), closed form
void gauss_chebyshev2(int m, Eigen::ArrayXd& x, Eigen::ArrayXd& w);

// Barycentric interpolation at arbitrary points.
Eigen::ArrayXd barycentric_weights(const Eigen::ArrayXd& x);
double barycentric_eval(const Eigen::ArrayXd& x, const Eigen::ArrayXd& bw,
                        const Eigen::ArrayXd& f, double xq);

} // namespace ahym

#endif
