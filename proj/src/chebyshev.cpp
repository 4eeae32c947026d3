#include "ahym/chebyshev.hpp"

#include "ahym/errors.hpp"

#include <cmath>

namespace ahym {

Eigen::ArrayXd cgl_nodes(int M) {
  Eigen::ArrayXd x(M + 1);
  for (int j = 0; j <= M; ++j) x(j) = std::cos(M_PI * j / M);
  return x;
}

Eigen::MatrixXd cgl_diff_matrix(int M) {
  const Eigen::ArrayXd x = cgl_nodes(M);
  Eigen::MatrixXd D(M + 1, M + 1);
  Eigen::ArrayXd c(M + 1);
  for (int j = 0; j <= M; ++j) c(j) = (j == 0 || j == M) ? 2.0 : 1.0;
  for (int i = 0; i <= M; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j <= M; ++j) {
      if (i == j) continue;
      double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      D(i, j) = (c(i) / c(j)) * sgn / (x(i) - x(j));
      rowsum += D(i, j);
    }
    D(i, i) = -rowsum; // negative sum trick
  }
  return D;
}

namespace {

// Chebyshev-Vandermonde row evaluation T_0..T_{K-1} at t by recurrence.
void cheb_row(int K, double t, Eigen::VectorXd& out) {
  out.resize(K);
  double tm2 = 1.0, tm1 = t;
  if (K > 0) out(0) = 1.0;
  if (K > 1) out(1) = t;
  for (int m = 2; m < K; ++m) {
    double tm = 2.0 * t * tm1 - tm2;
    out(m) = tm;
    tm2 = tm1;
    tm1 = tm;
  }
}

// sum_i w_i p(u_i) = int_0^1 p(u) u^q du for p of degree <= K-1,
// solved in the Chebyshev basis T_m(2u-1) to keep the system well conditioned.
Eigen::ArrayXd moment_weights(const Eigen::ArrayXd& u, double q) {
  const int K = static_cast<int>(u.size());
  Eigen::ArrayXd tg, wg;
  const int m = K / 2 + 2;
  gauss_jacobi(m, 0.0, q, tg, wg);
  const double scale = std::pow(2.0, -q - 1.0); // from u = (1+t)/2
  Eigen::VectorXd mom = Eigen::VectorXd::Zero(K);
  Eigen::VectorXd row;
  for (int l = 0; l < m; ++l) {
    cheb_row(K, tg(l), row);
    mom += scale * wg(l) * row;
  }
  Eigen::MatrixXd B(K, K);
  for (int i = 0; i < K; ++i) {
    cheb_row(K, 2.0 * u(i) - 1.0, row);
    B.col(i) = row;
  }
  Eigen::VectorXd w = B.partialPivLu().solve(mom);
  return w.array();
}

} // namespace

HalfGrid make_half_grid(int K, int n_dim) {
  require(K >= 8, ErrorCode::BadGrid, "need at least 8 radial nodes");
  HalfGrid g;
  g.K = K;
  g.M = 2 * K - 1;
  const Eigen::ArrayXd x = cgl_nodes(g.M);
  const Eigen::MatrixXd D = cgl_diff_matrix(g.M);
  g.r = x.head(K);
  g.D_even.resize(K, K);
  g.D_odd.resize(K, K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      g.D_even(i, j) = D(i, j) + D(i, g.M - j);
      g.D_odd(i, j) = D(i, j) - D(i, g.M - j);
    }
  // int_0^1 G(r) r^n dr = (1/2) int_0^1 G(sqrt(u)) u^{(n-1)/2} du at u_i = r_i^2
  Eigen::ArrayXd u = g.r.square();
  g.quad_rn = 0.5 * moment_weights(u, 0.5 * (n_dim - 1));
  return g;
}

void gauss_jacobi(int m, double a, double b, Eigen::ArrayXd& x, Eigen::ArrayXd& w) {
  // Golub-Welsch on the Jacobi recurrence.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  auto diag = [&](int k) -> double {
    double s = 2.0 * k + a + b;
    if (k == 0) return (b - a) / (a + b + 2.0);
    return (b * b - a * a) / (s * (s + 2.0));
  };
  auto offd = [&](int k) -> double { // k >= 1
    double s = 2.0 * k + a + b;
    double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
    double den = s * s * (s + 1.0) * (s - 1.0);
    if (k == 1) {
      num = 4.0 * (1.0 + a) * (1.0 + b);
      den = (2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b);
    }
    return std::sqrt(num / den);
  };
  for (int k = 0; k < m; ++k) {
    J(k, k) = diag(k);
    if (k >= 1) J(k, k - 1) = J(k - 1, k) = offd(k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  x = es.eigenvalues().array();
  double mu0 = std::pow(2.0, a + b + 1.0) *
               std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  w.resize(m);
  for (int k = 0; k < m; ++k) {
    double v = es.eigenvectors()(0, k);
    w(k) = mu0 * v * v;
  }
}

void gauss_legendre(int m, Eigen::ArrayXd& x, Eigen::ArrayXd& w) {
  gauss_jacobi(m, 0.0, 0.0, x, w);
}

void gauss_chebyshev2(int m, Eigen::ArrayXd& x, Eigen::ArrayXd& w) {
  x.resize(m);
  w.resize(m);
  for (int i = 1; i <= m; ++i) {
    double th = M_PI * i / (m + 1.0);
    x(i - 1) = std::cos(th);
    double s = std::sin(th);
    w(i - 1) = M_PI / (m + 1.0) * s * s;
  }
}

Eigen::ArrayXd barycentric_weights(const Eigen::ArrayXd& x) {
  const int n = static_cast<int>(x.size());
  // scale differences by the inverse capacity of the interval to avoid under/overflow
  const double cap = 4.0 / (x.maxCoeff() - x.minCoeff());
  Eigen::ArrayXd w = Eigen::ArrayXd::Ones(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      w(i) /= ((x(i) - x(j)) * cap);
    }
  }
  return w;
}

double barycentric_eval(const Eigen::ArrayXd& x, const Eigen::ArrayXd& bw,
                        const Eigen::ArrayXd& f, double xq) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    double d = xq - x(i);
    if (d == 0.0) return f(i);
    double t = bw(i) / d;
    num += t * f(i);
    den += t;
  }
  return num / den;
}

} // namespace ahym
