#ifndef AHYM_TEST_UTIL_HPP
#define AHYM_TEST_UTIL_HPP

#include "ahym/fields.hpp"

#include <random>

namespace ahym::testutil {

inline Context default_context(int K = 32, int L = 1, int r = 2,
                               BasisClass cls = BasisClass::Full) {
  auto geo = build_geometry(3, K, 0.5);
  auto basis = build_mode_basis(3, L, cls);
  auto lie = make_lie(r);
  return make_context(geo, basis, lie);
}

// smooth center-regular random field: per row r^reg * rho^decay * (even poly)
inline ZeroForm random_field(const Context& ctx, int degree, int decay_pow,
                             std::mt19937_64& rng, double amp = 1.0) {
  ZeroForm f = zero_form(ctx, degree);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const auto& r = ctx.geo->r();
  const auto& rho = ctx.geo->rho();
  auto fill = [&](int block, Eigen::MatrixXd& m) {
    const int g = ctx.gens();
    for (int row = 0; row < m.rows(); ++row) {
      int p = (block == 0) ? degree - 1 : degree;
      int mode = row / g;
      int ell = (p == 0 || p == 3) ? ctx.basis->modes0[mode].ell : ctx.basis->modes1[mode].ell;
      int parity = f.row_parity(block, row);
      int reg = ell + 2; // generous center regularity
      if ((reg % 2 == 0) != (parity > 0)) ++reg;
      Eigen::ArrayXd prof = Eigen::ArrayXd::Zero(r.size());
      for (int k = 0; k < 3; ++k) prof += U(rng) * r.pow(2 * k);
      m.row(row) = (amp * r.pow(reg) * rho.pow(decay_pow) * prof).matrix().transpose();
    }
  };
  fill(0, f.normal);
  fill(1, f.tangential);
  return f;
}

// single-mode field with a given radial profile on one (mode, generator) row
inline ZeroForm mode_field(const Context& ctx, int degree, int block, int mode, int gen,
                           const Eigen::ArrayXd& profile) {
  ZeroForm f = zero_form(ctx, degree);
  auto& m = (block == 0) ? f.normal : f.tangential;
  m.row(mode * ctx.gens() + gen) = profile.matrix().transpose();
  return f;
}

// index of the first invariant sigma mode among the 1-modes
inline int first_sigma_index(const ModeBasis& B) {
  for (int j = 0; j < B.m1(); ++j)
    if ((B.modes1[j].kind == ModeKind::Coexact1 || B.modes1[j].kind == ModeKind::InvariantSu2) &&
        B.modes1[j].ell == 1 && B.modes1[j].m == 0)
      return j;
  return -1;
}

} // namespace ahym::testutil

#endif
