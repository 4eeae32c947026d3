#ifndef AHYM_FIELDS_HPP
#define AHYM_FIELDS_HPP

#include "ahym/geometry.hpp"
#include "ahym/harmonics.hpp"
#include "ahym/lie.hpp"

#include <optional>

namespace ahym {

// Shared plumbing for fields and operators.
struct Context {
  GeometryPtr geo;
  BasisPtr basis;
  LiePtr lie;

  int gens() const { return lie->dim(); }
  int nodes() const { return geo->nodes(); }
  // boundary mode count at form degree p (2/3-modes are star duals of 1/0-modes)
  int mcount(int p) const;
  // pullback parity of the labeling mode of index `mode` at boundary degree p
  int mode_pullback(int p, int mode) const;
};

Context make_context(GeometryPtr geo, BasisPtr basis, LiePtr lie);

// Graded Lie-algebra-valued 0-form in collar decomposition.  Blocks hold
// radial coefficient arrays with rows indexed by (mode, generator) and one
// column per radial node (node 0 at the conformal boundary).  The normal
// block of a degree-k form is labeled by (k-1)-modes, the tangential block by
// k-modes; all coefficients are taken w.r.t. the orthonormal 0-frame.
struct ZeroForm {
  int degree = 0;
  Context ctx;
  Eigen::MatrixXd normal;     // ((m_{k-1}*gens) x K), absent for k = 0
  Eigen::MatrixXd tangential; // ((m_k*gens) x K), absent for k = n+1
  std::optional<double> weight_tag;

  bool finite() const;
  double coeff_abs_max() const;
  // radial parity of a block row (block: 0 = normal, 1 = tangential)
  int row_parity(int block, int row) const;

  ZeroForm& operator+=(const ZeroForm& o);
  ZeroForm& operator-=(const ZeroForm& o);
  ZeroForm& operator*=(double s);
};

ZeroForm zero_form(const Context& ctx, int degree);
ZeroForm operator+(ZeroForm a, const ZeroForm& b);
ZeroForm operator-(ZeroForm a, const ZeroForm& b);
ZeroForm operator*(double s, ZeroForm a);

// componentwise Hodge star in the orthonormal 0-frame
ZeroForm hodge_star(const Geometry& geo, const ZeroForm& omega);

// graded bracket-wedge [u ^ v] using coupling tensors and structure constants
ZeroForm wedge_bracket(const ZeroForm& u, const ZeroForm& v);

// plain componentwise wedge (no Lie bracket); shares the coupling tensors
ZeroForm wedge_plain(const ZeroForm& u, const ZeroForm& v);

// a .| omega = (-1)^{(n+1)(k+1)+1} star(a ^ star omega), componentwise in the
// Lie factor (the geometric contraction; the bracket version lives in zerodiff)
ZeroForm interior_product(const ZeroForm& a, const ZeroForm& omega);

// pointwise inner product <u, v>_g as coefficients over scalar modes
Eigen::MatrixXd pointwise_inner(const ZeroForm& u, const ZeroForm& v);

// weighted norms (discrete surrogates of the rho^delta spaces)
double weighted_norm(const Geometry& geo, const ZeroForm& field, const WeightedNormSpec& spec);

// volume L2 pairing int <u,v> dVol_g (integrand must decay; boundary node skipped)
double volume_pairing(const ZeroForm& u, const ZeroForm& v);

// boundary 1-form data gamma: coefficients over (1-mode, generator),
// row = mode*gens + gen
using BoundaryData = Eigen::VectorXd;

struct Connection {
  Context ctx;
  BoundaryData gamma;  // tangential boundary modes only
  ZeroForm a;          // degree-1 correction with declared decay
  double delta = 1.5;  // working weight
};

Connection make_connection(const Context& ctx, const BoundaryData& gamma, const ZeroForm& a,
                           double delta);
Connection trivial_connection(const Context& ctx, double delta = 1.5);

} // namespace ahym

#endif
