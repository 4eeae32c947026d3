#include "ahym/lie.hpp"

#include "ahym/errors.hpp"

#include <cmath>

namespace ahym {

namespace {

double ip(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return -((a * b).trace()).real();
}

void finish(LieAlgebraSpec& L) {
  const int d = L.dim();
  L.gram.resize(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) L.gram(a, b) = ip(L.basis[a], L.basis[b]);
  Eigen::LLT<Eigen::MatrixXd> llt(L.gram);
  L.structure.assign(d, Eigen::MatrixXd::Zero(d, d));
  L.abelian = true;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Eigen::MatrixXcd br = L.basis[a] * L.basis[b] - L.basis[b] * L.basis[a];
      if (br.norm() > 1e-14) L.abelian = false;
      Eigen::VectorXd rhs(d);
      for (int c = 0; c < d; ++c) rhs(c) = ip(br, L.basis[c]);
      Eigen::VectorXd coef = llt.solve(rhs);
      for (int c = 0; c < d; ++c) L.structure[c](a, b) = (std::abs(coef(c)) < 1e-14) ? 0.0 : coef(c);
    }
}

} // namespace

double LieAlgebraSpec::jacobi_residual() const {
  const int d = dim();
  double worst = 0.0;
  auto br = [&](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) { return x * y - y * x; };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Eigen::MatrixXcd res = br(basis[a], br(basis[b], basis[c])) +
                               br(basis[b], br(basis[c], basis[a])) +
                               br(basis[c], br(basis[a], basis[b]));
        worst = std::max(worst, res.norm());
      }
  return worst;
}

double LieAlgebraSpec::gram_identity_residual() const {
  return (gram - Eigen::MatrixXd::Identity(dim(), dim())).norm();
}

Eigen::MatrixXd LieAlgebraSpec::bracket_matrix(int a) const {
  const int d = dim();
  Eigen::MatrixXd B(d, d);
  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c) B(c, b) = structure[c](a, b);
  return B;
}

Eigen::VectorXd LieAlgebraSpec::project(const Eigen::MatrixXcd& m) const {
  Eigen::VectorXd rhs(dim());
  for (int c = 0; c < dim(); ++c) rhs(c) = ip(m, basis[c]);
  return Eigen::LLT<Eigen::MatrixXd>(gram).solve(rhs);
}

Eigen::MatrixXcd LieAlgebraSpec::synthesize(const Eigen::VectorXd& coeff) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
  for (int c = 0; c < dim(); ++c) m += coeff(c) * basis[c];
  return m;
}

LiePtr make_lie(int r) {
  require(r == 1 || r == 2, ErrorCode::UnsupportedDimension, "default generator sets exist for r = 1, 2");
  auto L = std::make_shared<LieAlgebraSpec>();
  L->r = r;
  using cd = std::complex<double>;
  const cd I(0.0, 1.0);
  if (r == 1) {
    Eigen::MatrixXcd t(1, 1);
    t(0, 0) = I;
    L->basis = {t};
  } else {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd t0(2, 2), t1(2, 2), t2(2, 2), t3(2, 2);
    t0 << I * s, cd(0), cd(0), I * s;         // center of u(2)
    t1 << cd(0), -I * s, -I * s, cd(0);       // -i sigma_1 / sqrt(2)
    t2 << cd(0), cd(-s), cd(s), cd(0);        // -i sigma_2 / sqrt(2)
    t3 << -I * s, cd(0), cd(0), I * s;        // -i sigma_3 / sqrt(2)
    L->basis = {t0, t1, t2, t3};
  }
  finish(*L);
  return L;
}

} // namespace ahym
