#ifndef AHYM_HARMONICS_HPP
#define AHYM_HARMONICS_HPP

#include <Eigen/Dense>
#include <array>
#include <memory>
#include <vector>

namespace ahym {

// Homogeneous polynomial in the four ambient coordinates of R^4.
struct Poly4 {
  struct Term {
    std::array<int, 4> e;
    double c;
  };
  std::vector<Term> terms;

  static Poly4 monomial(const std::array<int, 4>& e, double c = 1.0);
  Poly4 derivative(int var) const;
  Poly4 mul_var(int var) const;
  Poly4 laplacian() const;
  void add(const Poly4& other, double scale = 1.0);
  void compress();
  Eigen::ArrayXd eval(const Eigen::Matrix<double, 4, Eigen::Dynamic>& pts) const;
};

// Product-angle quadrature grid on the round S^3 with the left-invariant
// orthonormal coframe sigma^a attached at every node.  Form values are stored
// in that frame: 1-forms by the three components on e_a, 2-forms by the three
// components of the star-dual, 0/3-forms by a scalar.
struct S3Grid {
  int degree = 0;                                // ambient-polynomial exactness
  Eigen::Matrix<double, 4, Eigen::Dynamic> x;    // nodes
  Eigen::ArrayXd w;                              // weights, sum = 2 pi^2
  std::array<Eigen::Matrix<double, 4, Eigen::Dynamic>, 3> frame; // e_a ambient components

  long size() const { return x.cols(); }
};

std::shared_ptr<const S3Grid> make_s3_grid(int degree);

enum class ModeKind { Scalar, Exact1, Coexact1, InvariantSu2 };
enum class BasisClass { Full, EquivariantSu2 };

struct Mode {
  ModeKind kind = ModeKind::Scalar;
  int ell = 0;              // harmonic degree (coefficient degree for coexact)
  int m = 0;                // index within the (kind, ell) family
  double eigenvalue = 0.0;  // boundary Hodge Laplacian eigenvalue
  int pullback_parity = 1;  // behaviour under the antipodal map
  int partner = -1;         // exact mode <-> scalar mode pairing, -1 if none
};

struct CouplingTriplet {
  int i, j, k;
  double v;
};

// Truncated boundary-harmonic basis on S^3: scalar modes, exact and coexact
// 1-form modes, all L2-orthonormal.  2-form modes are the star-duals of the
// 1-form modes and 3-form modes the duals of the scalars, so one table of
// frame components serves every degree.
class ModeBasis {
public:
  int n = 3;
  int L_max = 0;
  BasisClass cls = BasisClass::Full;
  std::shared_ptr<const S3Grid> grid;

  std::vector<Mode> modes0, modes1;
  Eigen::MatrixXd val0;                     // (P x m0)
  std::array<Eigen::MatrixXd, 3> val1;      // components (P x m1)

  // exterior derivative in the mode bases; d2 = -d0^T by duality
  Eigen::MatrixXd d0; // (m1 x m0)
  Eigen::MatrixXd d1; // (m1 x m1), columns: 2-mode coefficients of d(1-mode)

  // wedge/coupling tensors (entries below 1e-12 dropped)
  std::vector<CouplingTriplet> w00;    // Y_i Y_j -> Y_k
  std::vector<CouplingTriplet> w01;    // Y_i b_j -> b_k  (also serves 0 x 2 -> 2)
  std::vector<CouplingTriplet> w11;    // b_i ^ b_j -> star-dual 2-mode k
  std::vector<CouplingTriplet> w11dot; // <b_i, b_j> -> Y_k (serves 1 x 2 -> 3)

  int m0() const { return static_cast<int>(modes0.size()); }
  int m1() const { return static_cast<int>(modes1.size()); }

  // radial-coefficient parity of a stored block: pullback parity times (-1)^deg
  int coeff_parity0(int i, int deg) const { return modes0[i].pullback_parity * ((deg % 2) ? -1 : 1); }
  int coeff_parity1(int j, int deg) const { return modes1[j].pullback_parity * ((deg % 2) ? -1 : 1); }

  // synthesis / analysis between mode coefficients and grid values
  Eigen::ArrayXd synth0(const Eigen::VectorXd& c) const;
  Eigen::VectorXd analyze0(const Eigen::ArrayXd& vals) const;
  std::array<Eigen::ArrayXd, 3> synth1(const Eigen::VectorXd& c) const;
  Eigen::VectorXd analyze1(const std::array<Eigen::ArrayXd, 3>& vals) const;

  double orthonormality_residual() const;
};

using BasisPtr = std::shared_ptr<const ModeBasis>;

// class = full: all scalar + 1-form harmonics with ell <= L_max (n = 3);
// class = equivariant_su2: the three left-invariant coframe modes and the
// constant scalar.
BasisPtr build_mode_basis(int n, int L_max, BasisClass cls, int quadrature_degree = -1);

// Standalone coupling-tensor assembly at a requested quadrature degree.
struct CouplingTensors {
  int quadrature_degree = 0;
  std::vector<CouplingTriplet> wedge_scalar_1form;
  std::vector<CouplingTriplet> wedge_1form_1form;
  std::vector<CouplingTriplet> dot_1form_1form;
  std::vector<CouplingTriplet> scalar_scalar;
};
CouplingTensors coupling_tensors(const ModeBasis& basis, int quadrature_degree);

// dimensions of harmonic spaces on S^3 (enumeration oracle lives in tests)
int scalar_harmonic_dim_s3(int ell);
int coexact_harmonic_dim_s3(int d);

double s3_volume();

} // namespace ahym

#endif
