#include "ahym/fields.hpp"

#include <cmath>

namespace ahym {

int Context::mcount(int p) const {
  switch (p) {
    case 0: return basis->m0();
    case 1: return basis->m1();
    case 2: return basis->m1(); // star duals of the 1-modes
    case 3: return basis->m0(); // star duals of the scalars
    default: return 0;
  }
}

int Context::mode_pullback(int p, int mode) const {
  if (p == 0 || p == 3) return basis->modes0[mode].pullback_parity;
  return basis->modes1[mode].pullback_parity;
}

Context make_context(GeometryPtr geo, BasisPtr basis, LiePtr lie) {
  require(geo && basis && lie, ErrorCode::BadGrid, "context needs geometry, basis and lie data");
  require(geo->n() == basis->n, ErrorCode::DimensionTooLow, "geometry/basis dimension mismatch");
  return Context{std::move(geo), std::move(basis), std::move(lie)};
}

bool ZeroForm::finite() const { return normal.allFinite() && tangential.allFinite(); }

double ZeroForm::coeff_abs_max() const {
  double m = 0.0;
  if (normal.size()) m = std::max(m, normal.cwiseAbs().maxCoeff());
  if (tangential.size()) m = std::max(m, tangential.cwiseAbs().maxCoeff());
  return m;
}

int ZeroForm::row_parity(int block, int row) const {
  int p = (block == 0) ? degree - 1 : degree;
  int mode = row / ctx.gens();
  int pb = ctx.mode_pullback(p, mode);
  return (degree % 2) ? -pb : pb;
}

ZeroForm zero_form(const Context& ctx, int degree) {
  const int n = ctx.geo->n();
  require(degree >= 0 && degree <= n + 1, ErrorCode::DegreeMismatch, "degree out of range");
  ZeroForm f;
  f.degree = degree;
  f.ctx = ctx;
  const int g = ctx.gens(), K = ctx.nodes();
  int mn = (degree >= 1) ? ctx.mcount(degree - 1) : 0;
  int mt = ctx.mcount(degree);
  f.normal = Eigen::MatrixXd::Zero(mn * g, K);
  f.tangential = Eigen::MatrixXd::Zero(mt * g, K);
  return f;
}

namespace {

void check_same(const ZeroForm& a, const ZeroForm& b) {
  require(a.degree == b.degree, ErrorCode::DegreeMismatch, "zero-form degrees differ");
  require(a.normal.rows() == b.normal.rows() && a.tangential.rows() == b.tangential.rows(),
          ErrorCode::DegreeMismatch, "zero-form shapes differ");
}

} // namespace

ZeroForm& ZeroForm::operator+=(const ZeroForm& o) {
  check_same(*this, o);
  normal += o.normal;
  tangential += o.tangential;
  return *this;
}

ZeroForm& ZeroForm::operator-=(const ZeroForm& o) {
  check_same(*this, o);
  normal -= o.normal;
  tangential -= o.tangential;
  return *this;
}

ZeroForm& ZeroForm::operator*=(double s) {
  normal *= s;
  tangential *= s;
  return *this;
}

ZeroForm operator+(ZeroForm a, const ZeroForm& b) { return a += b; }
ZeroForm operator-(ZeroForm a, const ZeroForm& b) { return a -= b; }
ZeroForm operator*(double s, ZeroForm a) { return a *= s; }

ZeroForm hodge_star(const Geometry& geo, const ZeroForm& omega) {
  const int n = geo.n();
  const int k = omega.degree;
  require(k >= 0 && k <= n + 1, ErrorCode::DegreeMismatch, "degree out of range");
  ZeroForm out = zero_form(omega.ctx, n + 1 - k);
  double sgn = (k % 2) ? -1.0 : 1.0;
  // star(theta^0 ^ i(v) + i(w)) = (-1)^k theta^0 ^ i(star w) + i(star v);
  // 2/3-modes are labeled by their 1/0-mode duals, so coefficients carry over
  if (omega.tangential.size()) out.normal = sgn * omega.tangential;
  if (omega.normal.size()) out.tangential = omega.normal;
  out.weight_tag = omega.weight_tag;
  return out;
}

namespace {

// boundary-degree pair -> coupling tensor dispatch
enum class WType { None, W00, W01, W01swap, W11, W11dot, W11dotSwap };

WType wtype(int p, int q) {
  if (p == 0 && q == 0) return WType::W00;
  if (p == 0 && (q == 1 || q == 2)) return WType::W01;
  if ((p == 1 || p == 2) && q == 0) return WType::W01swap;
  if (p == 1 && q == 1) return WType::W11;
  if (p == 1 && q == 2) return WType::W11dot;
  if (p == 2 && q == 1) return WType::W11dotSwap;
  if (p == 0 && q == 3) return WType::W00; // scalar times 3-form, w00 is symmetric
  if (p == 3 && q == 0) return WType::W00;
  return WType::None;
}

struct LieProduct {
  // list of (alpha, beta, gamma, c): T_alpha * T_beta -> c T_gamma under the product rule
  std::vector<std::array<int, 3>> idx;
  std::vector<double> c;
};

LieProduct bracket_product(const LieAlgebraSpec& lie) {
  LieProduct P;
  const int d = lie.dim();
  for (int g = 0; g < d; ++g)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        double v = lie.structure[g](a, b);
        if (v != 0.0) {
          P.idx.push_back({a, b, g});
          P.c.push_back(v);
        }
      }
  return P;
}

LieProduct diagonal_product(const LieAlgebraSpec& lie) {
  LieProduct P;
  for (int a = 0; a < lie.dim(); ++a) {
    P.idx.push_back({a, a, a});
    P.c.push_back(1.0);
  }
  return P;
}

// contract coefficient blocks A (over p-modes) and B (over q-modes) into
// out (over (p+q)-modes) with sign s
void boundary_wedge(const Context& ctx, int p, int q, const Eigen::MatrixXd& A,
                    const Eigen::MatrixXd& B, const LieProduct& lp, double s,
                    Eigen::MatrixXd& out) {
  if (!A.size() || !B.size() || !out.size()) return;
  const int g = ctx.gens();
  const auto& bs = *ctx.basis;
  WType t = wtype(p, q);
  auto run = [&](const std::vector<CouplingTriplet>& W, bool swap) {
    for (const auto& w : W) {
      int ia = swap ? w.j : w.i;
      int ib = swap ? w.i : w.j;
      for (size_t l = 0; l < lp.idx.size(); ++l) {
        const auto& li = lp.idx[l];
        out.row(w.k * g + li[2]) +=
            (s * w.v * lp.c[l]) *
            (A.row(ia * g + li[0]).array() * B.row(ib * g + li[1]).array()).matrix();
      }
    }
  };
  switch (t) {
    case WType::W00: run(bs.w00, false); break;
    case WType::W01: run(bs.w01, false); break;
    case WType::W01swap: run(bs.w01, true); break;
    case WType::W11: run(bs.w11, false); break;
    case WType::W11dot: run(bs.w11dot, false); break;
    case WType::W11dotSwap: run(bs.w11dot, true); break;
    case WType::None: break;
  }
}

ZeroForm wedge_impl(const ZeroForm& u, const ZeroForm& v, const LieProduct& lp) {
  const Context& ctx = u.ctx;
  const int n = ctx.geo->n();
  const int j = u.degree, k = v.degree;
  require(j + k <= n + 1, ErrorCode::DegreeOverflow, "wedge degree exceeds n+1");
  ZeroForm out = zero_form(ctx, j + k);
  double sj = (j % 2) ? -1.0 : 1.0;
  // normal part: nu_u ^ tau_v + (-1)^j tau_u ^ nu_v
  if (out.normal.size()) {
    if (u.normal.size() && v.tangential.size())
      boundary_wedge(ctx, j - 1, k, u.normal, v.tangential, lp, 1.0, out.normal);
    if (u.tangential.size() && v.normal.size())
      boundary_wedge(ctx, j, k - 1, u.tangential, v.normal, lp, sj, out.normal);
  }
  if (out.tangential.size() && u.tangential.size() && v.tangential.size())
    boundary_wedge(ctx, j, k, u.tangential, v.tangential, lp, 1.0, out.tangential);
  return out;
}

} // namespace

ZeroForm wedge_bracket(const ZeroForm& u, const ZeroForm& v) {
  return wedge_impl(u, v, bracket_product(*u.ctx.lie));
}

ZeroForm wedge_plain(const ZeroForm& u, const ZeroForm& v) {
  return wedge_impl(u, v, diagonal_product(*u.ctx.lie));
}

ZeroForm interior_product(const ZeroForm& a, const ZeroForm& omega) {
  require(a.degree == 1, ErrorCode::DegreeMismatch, "contraction needs a 1-form");
  require(omega.degree >= 1, ErrorCode::DegreeMismatch, "cannot contract a 0-form");
  const int n = a.ctx.geo->n();
  const int k = omega.degree;
  int e = (n + 1) * (k + 1) + 1;
  double s = (e % 2) ? -1.0 : 1.0;
  ZeroForm res = hodge_star(*a.ctx.geo, wedge_plain(a, hodge_star(*a.ctx.geo, omega)));
  return s * res;
}

Eigen::MatrixXd pointwise_inner(const ZeroForm& u, const ZeroForm& v) {
  check_same(u, v);
  const Context& ctx = u.ctx;
  const int g = ctx.gens(), K = ctx.nodes(), m0 = ctx.basis->m0();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m0, K);
  auto accum = [&](int p, const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    if (!A.size()) return;
    const std::vector<CouplingTriplet>& W = (p == 0 || p == 3) ? ctx.basis->w00 : ctx.basis->w11dot;
    for (const auto& w : W)
      for (int a = 0; a < g; ++a)
        out.row(w.k) += w.v * (A.row(w.i * g + a).array() * B.row(w.j * g + a).array()).matrix();
  };
  if (u.degree >= 1) accum(u.degree - 1, u.normal, v.normal);
  accum(u.degree, u.tangential, v.tangential);
  return out;
}

namespace {

Eigen::ArrayXd radius_magnitude(const ZeroForm& f) {
  Eigen::ArrayXd sq = Eigen::ArrayXd::Zero(f.ctx.nodes());
  if (f.normal.size()) sq += f.normal.array().square().colwise().sum().transpose();
  if (f.tangential.size()) sq += f.tangential.array().square().colwise().sum().transpose();
  return sq.sqrt();
}

// one 0-derivative level: radial part D row-wise, tangential part as the
// eigenvalue multiplier (rho/f) sqrt(lambda)
ZeroForm zero_derivative_level(const ZeroForm& f) {
  const Context& ctx = f.ctx;
  ZeroForm out = f;
  auto apply = [&](int block, const Eigen::MatrixXd& src, Eigen::MatrixXd& dst) {
    if (!src.size()) return;
    const int g = ctx.gens();
    Eigen::ArrayXd rof = ctx.geo->fn_rho_over_f().v;
    for (int row = 0; row < src.rows(); ++row) {
      int parity = f.row_parity(block, row);
      Eigen::VectorXd d = ctx.geo->ddrho_log(parity) * src.row(row).transpose();
      int p = (block == 0) ? f.degree - 1 : f.degree;
      int mode = row / g;
      double eig = (p == 0 || p == 3) ? ctx.basis->modes0[mode].eigenvalue
                                      : ctx.basis->modes1[mode].eigenvalue;
      Eigen::ArrayXd tpart = rof * std::sqrt(std::max(eig, 0.0)) * src.row(row).transpose().array();
      dst.row(row) = (d.array().square() + tpart.square()).sqrt().matrix().transpose();
    }
  };
  apply(0, f.normal, out.normal);
  apply(1, f.tangential, out.tangential);
  return out;
}

} // namespace

double weighted_norm(const Geometry& geo, const ZeroForm& field, const WeightedNormSpec& spec) {
  require(field.finite(), ErrorCode::NonFinite, "field contains non-finite samples");
  const int K = geo.nodes();
  double total = 0.0;
  ZeroForm level = field;
  for (int j = 0; j <= spec.derivative_order; ++j) {
    Eigen::ArrayXd mag = radius_magnitude(level);
    if (spec.p >= 1000) {
      double m = 0.0;
      for (int i = 1; i < K; ++i) // interior nodes; rho = 0 exactly at node 0
        m = std::max(m, std::pow(geo.rho()(i), -spec.delta) * mag(i));
      total += m;
    } else {
      Eigen::ArrayXd hyp = geo.hyperbolic_density();
      double s = 0.0;
      for (int i = 1; i < K; ++i)
        s += geo.quad_weights()(i) * hyp(i) * std::pow(geo.rho()(i), -2.0 * spec.delta) * mag(i) * mag(i);
      total += std::sqrt(std::max(0.0, s));
    }
    if (j < spec.derivative_order) level = zero_derivative_level(level);
  }
  require(std::isfinite(total), ErrorCode::NonFinite, "weighted norm overflowed");
  return total;
}

double volume_pairing(const ZeroForm& u, const ZeroForm& v) {
  check_same(u, v);
  const Geometry& geo = *u.ctx.geo;
  Eigen::ArrayXd hyp = geo.hyperbolic_density();
  double s = 0.0;
  for (int i = 1; i < geo.nodes(); ++i) {
    double dot = 0.0;
    if (u.normal.size()) dot += u.normal.col(i).dot(v.normal.col(i));
    if (u.tangential.size()) dot += u.tangential.col(i).dot(v.tangential.col(i));
    s += geo.quad_weights()(i) * hyp(i) * dot;
  }
  return s;
}

Connection make_connection(const Context& ctx, const BoundaryData& gamma, const ZeroForm& a,
                           double delta) {
  require(a.degree == 1, ErrorCode::DegreeMismatch, "connection correction must be a 1-form");
  require(a.finite(), ErrorCode::NonFinite, "connection correction not finite");
  require(gamma.size() == ctx.basis->m1() * ctx.gens(), ErrorCode::DegreeMismatch,
          "boundary data size mismatch");
  Connection c;
  c.ctx = ctx;
  c.gamma = gamma;
  c.a = a;
  c.a.weight_tag = delta;
  c.delta = delta;
  return c;
}

Connection trivial_connection(const Context& ctx, double delta) {
  return make_connection(ctx, Eigen::VectorXd::Zero(ctx.basis->m1() * ctx.gens()),
                         zero_form(ctx, 1), delta);
}

} // namespace ahym
