#include "ahym/harmonics.hpp"

#include "ahym/chebyshev.hpp"
#include "ahym/errors.hpp"
#include "ahym/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ahym {

double s3_volume() { return 2.0 * M_PI * M_PI; }

int scalar_harmonic_dim_s3(int ell) { return (ell + 1) * (ell + 1); }
int coexact_harmonic_dim_s3(int d) { return 2 * d * (d + 2); }

// ---------------------------------------------------------------------------
// Poly4

Poly4 Poly4::monomial(const std::array<int, 4>& e, double c) {
  Poly4 p;
  p.terms.push_back({e, c});
  return p;
}

Poly4 Poly4::derivative(int var) const {
  Poly4 out;
  for (const auto& t : terms) {
    if (t.e[var] == 0) continue;
    auto e = t.e;
    double c = t.c * e[var];
    e[var] -= 1;
    out.terms.push_back({e, c});
  }
  out.compress();
  return out;
}

Poly4 Poly4::mul_var(int var) const {
  Poly4 out;
  for (const auto& t : terms) {
    auto e = t.e;
    e[var] += 1;
    out.terms.push_back({e, t.c});
  }
  return out;
}

Poly4 Poly4::laplacian() const {
  Poly4 out;
  for (int v = 0; v < 4; ++v) out.add(derivative(v).derivative(v));
  out.compress();
  return out;
}

void Poly4::add(const Poly4& other, double scale) {
  for (const auto& t : other.terms) terms.push_back({t.e, t.c * scale});
}

void Poly4::compress() {
  std::map<std::array<int, 4>, double> acc;
  for (const auto& t : terms) acc[t.e] += t.c;
  terms.clear();
  for (const auto& [e, c] : acc)
    if (std::abs(c) > 0.0) terms.push_back({e, c});
}

Eigen::ArrayXd Poly4::eval(const Eigen::Matrix<double, 4, Eigen::Dynamic>& pts) const {
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(pts.cols());
  for (const auto& t : terms) {
    Eigen::ArrayXd term = Eigen::ArrayXd::Constant(pts.cols(), t.c);
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < t.e[v]; ++k) term *= pts.row(v).transpose().array();
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// grid

std::shared_ptr<const S3Grid> make_s3_grid(int degree) {
  degree = std::max(degree, 6);
  auto g = std::make_shared<S3Grid>();
  g->degree = degree;
  const int m1 = degree / 2 + 1, m2 = degree / 2 + 1, m3 = degree + 1;
  Eigen::ArrayXd u1, w1, u2, w2;
  gauss_chebyshev2(m1, u1, w1);
  gauss_legendre(m2, u2, w2);
  const long P = static_cast<long>(m1) * m2 * m3;
  g->x.resize(4, P);
  g->w.resize(P);
  long p = 0;
  for (int i = 0; i < m1; ++i) {
    double c1 = u1(i), s1 = std::sqrt(std::max(0.0, 1.0 - c1 * c1));
    for (int j = 0; j < m2; ++j) {
      double c2 = u2(j), s2 = std::sqrt(std::max(0.0, 1.0 - c2 * c2));
      for (int k = 0; k < m3; ++k, ++p) {
        double ph = 2.0 * M_PI * k / m3;
        g->x(0, p) = c1;
        g->x(1, p) = s1 * c2;
        g->x(2, p) = s1 * s2 * std::cos(ph);
        g->x(3, p) = s1 * s2 * std::sin(ph);
        g->w(p) = w1(i) * w2(j) * (2.0 * M_PI / m3);
      }
    }
  }
  // left-invariant orthonormal frame: rows of the quaternion rotation pattern
  for (int a = 0; a < 3; ++a) g->frame[a].resize(4, P);
  for (long q = 0; q < P; ++q) {
    double x0 = g->x(0, q), x1 = g->x(1, q), x2 = g->x(2, q), x3 = g->x(3, q);
    g->frame[0].col(q) << -x1, x0, x3, -x2;
    g->frame[1].col(q) << -x2, -x3, x0, x1;
    g->frame[2].col(q) << -x3, x2, -x1, x0;
  }
  return g;
}

// ---------------------------------------------------------------------------
// harmonic polynomial spaces

namespace {

std::vector<std::array<int, 4>> monomials_of_degree(int d) {
  std::vector<std::array<int, 4>> out;
  if (d < 0) return out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d - a; ++b)
      for (int c = 0; c <= d - a - b; ++c) out.push_back({a, b, c, d - a - b - c});
  return out;
}

int monomial_index(const std::vector<std::array<int, 4>>& mons, const std::array<int, 4>& e) {
  auto it = std::find(mons.begin(), mons.end(), e);
  return it == mons.end() ? -1 : static_cast<int>(it - mons.begin());
}

// basis of harmonic homogeneous polynomials of degree ell in 4 variables
std::vector<Poly4> harmonic_polys(int ell) {
  auto mons = monomials_of_degree(ell);
  const int nm = static_cast<int>(mons.size());
  std::vector<Poly4> out;
  if (ell <= 1) {
    for (const auto& e : mons) out.push_back(Poly4::monomial(e));
    return out;
  }
  auto lowm = monomials_of_degree(ell - 2);
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(lowm.size(), nm);
  for (int j = 0; j < nm; ++j) {
    Poly4 lap = Poly4::monomial(mons[j]).laplacian();
    for (const auto& t : lap.terms) L(monomial_index(lowm, t.e), j) += t.c;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(L, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double tol = 1e-10 * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  for (int j = rank; j < nm; ++j) {
    Poly4 p;
    for (int i = 0; i < nm; ++i)
      if (std::abs(svd.matrixV()(i, j)) > 1e-13) p.add(Poly4::monomial(mons[i], svd.matrixV()(i, j)));
    p.compress();
    out.push_back(p);
  }
  return out;
}

using Covector = std::array<Poly4, 4>; // ambient 1-form with polynomial coefficients

// frame components of an ambient covector restricted to S^3
std::array<Eigen::ArrayXd, 3> frame_components(const S3Grid& g, const Covector& B) {
  std::array<Eigen::ArrayXd, 4> amb;
  for (int mu = 0; mu < 4; ++mu) amb[mu] = B[mu].eval(g.x);
  std::array<Eigen::ArrayXd, 3> out;
  for (int a = 0; a < 3; ++a) {
    out[a] = Eigen::ArrayXd::Zero(g.size());
    for (int mu = 0; mu < 4; ++mu)
      out[a] += amb[mu] * g.frame[a].row(mu).transpose().array();
  }
  return out;
}

// star-dual components of the intrinsic exterior derivative of the restriction
std::array<Eigen::ArrayXd, 3> frame_d_components(const S3Grid& g, const Covector& B) {
  // dB = sum_{nu,mu} dB_mu/dx_nu dx_nu ^ dx_mu evaluated on frame pairs
  std::array<std::array<Eigen::ArrayXd, 4>, 4> dB;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) dB[nu][mu] = B[mu].derivative(nu).eval(g.x);
  auto pair_val = [&](int a, int b) {
    Eigen::ArrayXd v = Eigen::ArrayXd::Zero(g.size());
    for (int nu = 0; nu < 4; ++nu)
      for (int mu = 0; mu < 4; ++mu)
        v += dB[nu][mu] * (g.frame[a].row(nu).transpose().array() * g.frame[b].row(mu).transpose().array() -
                           g.frame[b].row(nu).transpose().array() * g.frame[a].row(mu).transpose().array());
    return v;
  };
  // t_c = (dB)(e_a, e_b), (c,a,b) cyclic
  return {pair_val(1, 2), pair_val(2, 0), pair_val(0, 1)};
}

// left-invariant coframe sigma^a (components of x^bar dx) or its right-invariant
// partner tau^a (components of dx x^bar); rows match the grid frame for "left"
Covector sigma_covector(int a, bool left) {
  auto X = [](int v, double c) { return Poly4::monomial({v == 0, v == 1, v == 2, v == 3}, c); };
  // component tables: row a gives (coeff of dx0, dx1, dx2, dx3) as (var, sign)
  static const int var_left[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const double sg_left[3][4] = {{-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}};
  static const double sg_right[3][4] = {{-1, 1, -1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}};
  Covector B;
  for (int mu = 0; mu < 4; ++mu) {
    double s = left ? sg_left[a][mu] : sg_right[a][mu];
    B[mu] = X(var_left[a][mu], s);
  }
  return B;
}

} // namespace

// ---------------------------------------------------------------------------
// ModeBasis

Eigen::ArrayXd ModeBasis::synth0(const Eigen::VectorXd& c) const {
  return (val0 * c).array();
}

Eigen::VectorXd ModeBasis::analyze0(const Eigen::ArrayXd& vals) const {
  return val0.transpose() * (grid->w * vals).matrix();
}

std::array<Eigen::ArrayXd, 3> ModeBasis::synth1(const Eigen::VectorXd& c) const {
  return {(val1[0] * c).array(), (val1[1] * c).array(), (val1[2] * c).array()};
}

Eigen::VectorXd ModeBasis::analyze1(const std::array<Eigen::ArrayXd, 3>& vals) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m1());
  for (int a = 0; a < 3; ++a) out += val1[a].transpose() * (grid->w * vals[a]).matrix();
  return out;
}

double ModeBasis::orthonormality_residual() const {
  double worst = 0.0;
  {
    Eigen::MatrixXd G = val0.transpose() * grid->w.matrix().asDiagonal() * val0;
    worst = std::max(worst, (G - Eigen::MatrixXd::Identity(m0(), m0())).cwiseAbs().maxCoeff());
  }
  {
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(m1(), m1());
    for (int a = 0; a < 3; ++a) G += val1[a].transpose() * grid->w.matrix().asDiagonal() * val1[a];
    worst = std::max(worst, (G - Eigen::MatrixXd::Identity(m1(), m1())).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

void orthonormalize(const S3Grid& g, Eigen::MatrixXd& vals, std::vector<Covector>* covs,
                    std::array<Eigen::MatrixXd, 3>* comps) {
  // Cholesky orthonormalization with the quadrature Gram matrix
  Eigen::MatrixXd G;
  if (comps) {
    G = Eigen::MatrixXd::Zero(comps->at(0).cols(), comps->at(0).cols());
    for (int a = 0; a < 3; ++a) G += (*comps)[a].transpose() * g.w.matrix().asDiagonal() * (*comps)[a];
  } else {
    G = vals.transpose() * g.w.matrix().asDiagonal() * vals;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(G);
  Eigen::MatrixXd Linv = llt.matrixL().solve(Eigen::MatrixXd::Identity(G.rows(), G.cols()));
  Eigen::MatrixXd T = Linv.transpose(); // new = old * T
  if (comps)
    for (int a = 0; a < 3; ++a) (*comps)[a] = (*comps)[a] * T;
  else
    vals = vals * T;
  if (covs) {
    std::vector<Covector> nc(covs->size());
    for (size_t j = 0; j < covs->size(); ++j)
      for (int mu = 0; mu < 4; ++mu) {
        Poly4 p;
        for (size_t i = 0; i < covs->size(); ++i)
          if (std::abs(T(i, j)) > 0.0) p.add((*covs)[i][mu], T(i, j));
        p.compress();
        nc[j][mu] = p;
      }
    *covs = nc;
  }
}

struct WedgeWork {
  const ModeBasis* B;
  Eigen::MatrixXd dot0;                 // (m0 x P) rows: w-weighted scalar values
  std::array<Eigen::MatrixXd, 3> c1;    // (m1 x P) components
  std::array<Eigen::MatrixXd, 3> c1w;   // weighted
};

void append_triplets(std::vector<CouplingTriplet>& out, int i, int j, const Eigen::VectorXd& v,
                     double tol) {
  for (int k = 0; k < v.size(); ++k)
    if (std::abs(v(k)) > tol) out.push_back({i, j, k, v(k)});
}

} // namespace

static void assemble_wedges(ModeBasis& B, Exec mode) {
  const auto& g = *B.grid;
  const long P = g.size();
  const int m0 = B.m0(), m1 = B.m1();
  Eigen::MatrixXd v0w = (B.val0.array().colwise() * g.w).matrix(); // (P x m0)
  std::array<Eigen::MatrixXd, 3> v1, v1w;
  for (int a = 0; a < 3; ++a) {
    v1[a] = B.val1[a];
    v1w[a] = (B.val1[a].array().colwise() * g.w).matrix();
  }
  const double tol = 1e-12;

  // w00: scalar products
  std::vector<std::vector<CouplingTriplet>> buf0(m0);
  parallel_for(m0, mode, [&](long i) {
    for (int j = 0; j < m0; ++j) {
      Eigen::VectorXd prod = (B.val0.col(i).array() * B.val0.col(j).array()).matrix();
      Eigen::VectorXd c = v0w.transpose() * prod;
      append_triplets(buf0[i], static_cast<int>(i), j, c, tol);
    }
  });
  for (auto& v : buf0) B.w00.insert(B.w00.end(), v.begin(), v.end());

  // w01: scalar times 1-form
  std::vector<std::vector<CouplingTriplet>> buf01(m0);
  parallel_for(m0, mode, [&](long i) {
    for (int j = 0; j < m1; ++j) {
      Eigen::VectorXd c = Eigen::VectorXd::Zero(m1);
      for (int a = 0; a < 3; ++a)
        c += v1w[a].transpose() * (B.val0.col(i).array() * v1[a].col(j).array()).matrix();
      append_triplets(buf01[i], static_cast<int>(i), j, c, tol);
    }
  });
  for (auto& v : buf01) B.w01.insert(B.w01.end(), v.begin(), v.end());

  // w11 (cross into star-dual 2-modes) and w11dot (dot into scalars)
  std::vector<std::vector<CouplingTriplet>> bufx(m1), bufd(m1);
  parallel_for(m1, mode, [&](long i) {
    for (int j = 0; j < m1; ++j) {
      Eigen::ArrayXd x0 = v1[1].col(i).array() * v1[2].col(j).array() - v1[2].col(i).array() * v1[1].col(j).array();
      Eigen::ArrayXd x1 = v1[2].col(i).array() * v1[0].col(j).array() - v1[0].col(i).array() * v1[2].col(j).array();
      Eigen::ArrayXd x2 = v1[0].col(i).array() * v1[1].col(j).array() - v1[1].col(i).array() * v1[0].col(j).array();
      Eigen::VectorXd c = v1w[0].transpose() * x0.matrix() + v1w[1].transpose() * x1.matrix() +
                          v1w[2].transpose() * x2.matrix();
      append_triplets(bufx[i], static_cast<int>(i), j, c, tol);
      Eigen::ArrayXd dot = Eigen::ArrayXd::Zero(P);
      for (int a = 0; a < 3; ++a) dot += v1[a].col(i).array() * v1[a].col(j).array();
      Eigen::VectorXd cd = v0w.transpose() * dot.matrix();
      append_triplets(bufd[i], static_cast<int>(i), j, cd, tol);
    }
  });
  for (auto& v : bufx) B.w11.insert(B.w11.end(), v.begin(), v.end());
  for (auto& v : bufd) B.w11dot.insert(B.w11dot.end(), v.begin(), v.end());
}

BasisPtr build_mode_basis(int n, int L_max, BasisClass cls, int quadrature_degree) {
  require(n >= 3, ErrorCode::DimensionTooLow, "boundary dimension must be >= 3");
  require(L_max >= 0, ErrorCode::BadGrid, "L_max must be >= 0");
  require(n == 3, ErrorCode::UnsupportedDimension,
          "boundary harmonics with coupling tensors are implemented for n = 3");
  auto B = std::make_shared<ModeBasis>();
  B->n = n;
  B->L_max = L_max;
  B->cls = cls;
  int qdeg = quadrature_degree > 0 ? quadrature_degree
                                   : std::max(2 * L_max + 2, 3 * L_max + 8);
  B->grid = make_s3_grid(qdeg);
  const auto& g = *B->grid;
  const double V = s3_volume();

  std::vector<Covector> covs1; // ambient polynomial covectors of the 1-modes

  if (cls == BasisClass::EquivariantSu2) {
    B->modes0.push_back({ModeKind::Scalar, 0, 0, 0.0, +1, -1});
    B->val0 = Eigen::MatrixXd::Constant(g.size(), 1, 1.0 / std::sqrt(V));
    for (int a = 0; a < 3; ++a) {
      B->modes1.push_back({ModeKind::InvariantSu2, 1, a, 4.0, +1, -1});
      Covector cv = sigma_covector(a, true);
      for (auto& p : cv)
        for (auto& t : p.terms) t.c /= std::sqrt(V);
      covs1.push_back(cv);
    }
    for (int a = 0; a < 3; ++a) B->val1[a].resize(g.size(), 3);
    for (int j = 0; j < 3; ++j) {
      auto fc = frame_components(g, covs1[j]);
      for (int a = 0; a < 3; ++a) B->val1[a].col(j) = fc[a].matrix();
    }
  } else {
    // scalar modes, ell = 0..L_max
    std::vector<Eigen::MatrixXd> scalar_vals;
    std::vector<std::vector<Poly4>> scalar_polys;
    for (int ell = 0; ell <= L_max; ++ell) {
      auto polys = harmonic_polys(ell);
      Eigen::MatrixXd vals(g.size(), polys.size());
      for (size_t i = 0; i < polys.size(); ++i) vals.col(i) = polys[i].eval(g.x).matrix();
      // orthonormalize values and carry the transform onto the polynomials
      Eigen::MatrixXd G = vals.transpose() * g.w.matrix().asDiagonal() * vals;
      Eigen::LLT<Eigen::MatrixXd> llt(G);
      Eigen::MatrixXd T = llt.matrixL().solve(Eigen::MatrixXd::Identity(G.rows(), G.cols())).transpose();
      vals = vals * T;
      std::vector<Poly4> np(polys.size());
      for (size_t j = 0; j < polys.size(); ++j) {
        Poly4 p;
        for (size_t i = 0; i < polys.size(); ++i)
          if (std::abs(T(i, j)) > 0.0) p.add(polys[i], T(i, j));
        p.compress();
        np[j] = p;
      }
      scalar_vals.push_back(vals);
      scalar_polys.push_back(np);
      for (size_t m = 0; m < polys.size(); ++m)
        B->modes0.push_back({ModeKind::Scalar, ell, static_cast<int>(m),
                             double(ell) * (ell + n - 1), (ell % 2) ? -1 : +1, -1});
    }
    B->val0.resize(g.size(), B->m0());
    {
      int c = 0;
      for (auto& v : scalar_vals)
        for (int j = 0; j < v.cols(); ++j) B->val0.col(c++) = v.col(j);
    }

    // exact 1-form modes: tangential gradients of the ell >= 1 scalars
    int scal_index = 0;
    for (int ell = 0; ell <= L_max; ++ell) {
      const auto& polys = scalar_polys[ell];
      for (size_t m = 0; m < polys.size(); ++m, ++scal_index) {
        if (ell == 0) continue;
        Covector Gc;
        for (int mu = 0; mu < 4; ++mu) {
          Gc[mu] = polys[m].derivative(mu);
          Gc[mu].add(polys[m].mul_var(mu), -double(ell));
          Gc[mu].compress();
        }
        double lam = double(ell) * (ell + n - 1);
        for (auto& p : Gc)
          for (auto& t : p.terms) t.c /= std::sqrt(lam);
        int j = static_cast<int>(B->modes1.size());
        B->modes1.push_back({ModeKind::Exact1, ell, static_cast<int>(m), lam,
                             (ell % 2) ? -1 : +1, scal_index});
        B->modes0[scal_index].partner = j;
        covs1.push_back(Gc);
      }
    }

    // coexact 1-form modes, coefficient degree d = 1..L_max
    for (int d = 1; d <= L_max; ++d) {
      std::vector<Covector> set;
      if (d == 1) {
        for (int a = 0; a < 3; ++a) set.push_back(sigma_covector(a, true));
        for (int a = 0; a < 3; ++a) set.push_back(sigma_covector(a, false));
        for (auto& cv : set)
          for (auto& p : cv)
            for (auto& t : p.terms) t.c /= std::sqrt(V);
      } else {
        auto hp = harmonic_polys(d);
        const int nh = static_cast<int>(hp.size());
        auto monsT = monomials_of_degree(d + 1);
        auto monsD = monomials_of_degree(d - 1);
        Eigen::MatrixXd C = Eigen::MatrixXd::Zero(monsT.size() + monsD.size(), 4 * nh);
        for (int mu = 0; mu < 4; ++mu)
          for (int b = 0; b < nh; ++b) {
            int col = mu * nh + b;
            Poly4 xp = hp[b].mul_var(mu);
            for (const auto& t : xp.terms) C(monomial_index(monsT, t.e), col) += t.c;
            Poly4 dp = hp[b].derivative(mu);
            for (const auto& t : dp.terms)
              C(static_cast<int>(monsT.size()) + monomial_index(monsD, t.e), col) += t.c;
          }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        double tol = 1e-10 * sv(0);
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
          if (sv(i) > tol) ++rank;
        for (int jcol = rank; jcol < 4 * nh; ++jcol) {
          Covector cv;
          for (int mu = 0; mu < 4; ++mu) {
            Poly4 p;
            for (int b = 0; b < nh; ++b) {
              double c = svd.matrixV()(mu * nh + b, jcol);
              if (std::abs(c) > 1e-13) p.add(hp[b], c);
            }
            p.compress();
            cv[mu] = p;
          }
          set.push_back(cv);
        }
        require(static_cast<int>(set.size()) == coexact_harmonic_dim_s3(d),
                ErrorCode::BadGrid, "coexact space dimension mismatch");
        // orthonormalize within the degree
        std::array<Eigen::MatrixXd, 3> comps;
        for (int a = 0; a < 3; ++a) comps[a].resize(g.size(), set.size());
        for (size_t j = 0; j < set.size(); ++j) {
          auto fc = frame_components(g, set[j]);
          for (int a = 0; a < 3; ++a) comps[a].col(j) = fc[a].matrix();
        }
        Eigen::MatrixXd dummy;
        orthonormalize(g, dummy, &set, &comps);
      }
      double mu_eig = double(d) * (d + n - 1) + (n - 2); // = (d+1)^2 for n = 3
      for (size_t m = 0; m < set.size(); ++m) {
        B->modes1.push_back({ModeKind::Coexact1, d, static_cast<int>(m), mu_eig,
                             (d % 2) ? +1 : -1, -1});
        covs1.push_back(set[m]);
      }
    }

    // tabulate 1-mode components
    for (int a = 0; a < 3; ++a) B->val1[a].resize(g.size(), B->m1());
    for (int j = 0; j < B->m1(); ++j) {
      auto fc = frame_components(g, covs1[j]);
      for (int a = 0; a < 3; ++a) B->val1[a].col(j) = fc[a].matrix();
    }
  }

  // exterior-derivative matrices
  B->d0 = Eigen::MatrixXd::Zero(B->m1(), B->m0());
  for (int j = 0; j < B->m1(); ++j)
    if (B->modes1[j].kind == ModeKind::Exact1)
      B->d0(j, B->modes1[j].partner) = std::sqrt(B->modes1[j].eigenvalue);
  B->d1 = Eigen::MatrixXd::Zero(B->m1(), B->m1());
  for (int j = 0; j < B->m1(); ++j) {
    if (B->modes1[j].kind == ModeKind::Exact1) continue; // d of exact modes vanishes
    auto t = frame_d_components(*B->grid, covs1[j]);
    Eigen::VectorXd col = B->analyze1({t[0], t[1], t[2]});
    for (int k = 0; k < B->m1(); ++k) B->d1(k, j) = (std::abs(col(k)) < 1e-12) ? 0.0 : col(k);
  }

  assemble_wedges(*B, Exec::Parallel);
  return B;
}

CouplingTensors coupling_tensors(const ModeBasis& basis, int quadrature_degree) {
  require(quadrature_degree >= 2 * basis.L_max + 2, ErrorCode::QuadratureTooCoarse,
          "coupling tensors need quadrature degree >= 2*L_max + 2");
  CouplingTensors out;
  out.quadrature_degree = quadrature_degree;
  if (quadrature_degree >= basis.grid->degree) {
    out.wedge_scalar_1form = basis.w01;
    out.wedge_1form_1form = basis.w11;
    out.dot_1form_1form = basis.w11dot;
    out.scalar_scalar = basis.w00;
    return out;
  }
  // rebuild at the requested quadrature degree
  auto rb = build_mode_basis(basis.n, basis.L_max, basis.cls, quadrature_degree);
  out.wedge_scalar_1form = rb->w01;
  out.wedge_1form_1form = rb->w11;
  out.dot_1form_1form = rb->w11dot;
  out.scalar_scalar = rb->w00;
  return out;
}

} // namespace ahym
