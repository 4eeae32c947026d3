#ifndef AHYM_LIE_HPP
#define AHYM_LIE_HPP

#include <Eigen/Dense>
#include <memory>
#include <vector>

namespace ahym {

// u(r) with the inner product <A,B> = -tr(AB) and a fixed real generator
// basis.  The default bases are orthonormal, so structure constants are
// fully antisymmetric.
struct LieAlgebraSpec {
  int r = 1;
  std::vector<Eigen::MatrixXcd> basis;       // r^2 skew-Hermitian generators
  Eigen::MatrixXd gram;                      // gram(a,b) = -tr(T_a T_b)
  std::vector<Eigen::MatrixXd> structure;    // structure[c](a,b): [T_a,T_b] = sum_c (...) T_c
  bool abelian = true;

  int dim() const { return static_cast<int>(basis.size()); }
  double jacobi_residual() const;
  double gram_identity_residual() const;
  // bracket matrix B_a: coefficients of [T_a, .] acting on generator coefficients
  Eigen::MatrixXd bracket_matrix(int a) const;
  // coefficients of a matrix in the generator basis (gram solve)
  Eigen::VectorXd project(const Eigen::MatrixXcd& m) const;
  Eigen::MatrixXcd synthesize(const Eigen::VectorXd& coeff) const;
};

using LiePtr = std::shared_ptr<const LieAlgebraSpec>;

LiePtr make_lie(int r); // r = 1: u(1); r = 2: u(2); others unsupported

} // namespace ahym

#endif
