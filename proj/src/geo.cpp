#include "paraslant/geo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace paraslant {

namespace {

Vec vsub(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec vadd(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Matrix<Jet3> const_jets(const Mat& a, int vars) {
  Matrix<Jet3> out(a.rows(), a.cols(), Jet3::constant(0.0, vars));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = Jet3::constant(a(i, j), vars);
  return out;
}

// Jet picture of the frame near one point: entries of E are valid to
// order 2 (one derivative below the component jets), everything built
// from them one order less per extra derivative taken.
struct JetFrame {
  int m = 0, n2 = 0;
  Matrix<Jet3> E, G, P, g, J;
};

JetFrame build_jet_frame(const PointFrame& f) {
  JetFrame jf;
  jf.m = f.tangent_dim();
  jf.n2 = f.ambient_dim();
  jf.E = Matrix<Jet3>(jf.n2, jf.m, Jet3::constant(0.0, jf.m));
  for (int a = 0; a < jf.n2; ++a)
    for (int i = 0; i < jf.m; ++i) jf.E(a, i) = derivative_jet(f.component_jets[a], i);
  jf.g = const_jets(f.gAmb, jf.m);
  jf.J = const_jets(f.JAmb, jf.m);
  Matrix<Jet3> Etg = matmul(transpose(jf.E), jf.g);
  jf.G = matmul(Etg, jf.E);
  jf.P = solve(jf.G, matmul(Etg, matmul(jf.J, jf.E)));
  return jf;
}

std::vector<Jet3> field_jets(const FieldSpec& X, const ImmersionChart& chart,
                             const std::vector<double>& u) {
  if (static_cast<int>(X.size()) != chart.param_count())
    throw InputError("vector field needs one coefficient per parameter");
  std::map<std::string, double> vv;
  for (int i = 0; i < chart.param_count(); ++i) vv[chart.params[i]] = u[i];
  std::vector<Jet3> out;
  out.reserve(X.size());
  for (const auto& e : X) out.push_back(eval_jet(e, chart.params, vv, chart.constants));
  return out;
}

std::vector<Jet3> jet_matvec(const Matrix<Jet3>& a, const std::vector<Jet3>& x) {
  const int vars = x.empty() ? 0 : x[0].vars();
  std::vector<Jet3> out(a.rows(), Jet3::constant(0.0, vars));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] = out[i] + a(i, j) * x[j];
  return out;
}

Vec jet_values(const std::vector<Jet3>& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
  return out;
}

// Value of the directional derivative along coefficient values xc.
Vec dir_deriv(const std::vector<Jet3>& amb, const Vec& xc) {
  Vec out(amb.size(), 0.0);
  for (size_t a = 0; a < amb.size(); ++a)
    for (size_t i = 0; i < xc.size(); ++i) out[a] += xc[i] * amb[a].grad(static_cast<int>(i));
  return out;
}

double g_inner(const Mat& g, const Vec& a, const Vec& b) { return form(a, g, b); }

// Everything the covariant identities and the geodesy/integrability
// theorems need for a pair of fields at one point.
struct CovBundle {
  Vec xv, yv;            // coefficient values
  Vec hXY;               // ambient normal h(X,Y)
  Vec nablaXY_coeff;     // induced connection, tangent coefficients
  Vec nablaP_amb;        // (nabla_X P)Y ambient
  Vec nablaX_PY_coeff;   // coefficients of nabla_X (PY)
  Vec A_FY_X_coeff;      // coefficients of A_{FY} X
  Vec A_FX_Y_coeff;      // coefficients of A_{FX} Y
  Vec t_hXY_amb;         // tangential ambient part of J h(X,Y)
  Vec f_hXY;             // normal ambient part of J h(X,Y)
  Vec rP_vec;            // (nabla_X P)Y - A_{FY}X - t h(X,Y)
  Vec nablaF_amb;        // (nabla_X F)Y ambient (normal)
  Vec h_XPY;             // h(X, PY)
  Vec rF_vec;            // (nabla_X F)Y + h(X,PY) - f h(X,Y)
};

CovBundle cov_bundle(const ImmersionChart& chart, const PointFrame& f,
                     const JetFrame& jf, const SecondFundamentalForm& sff,
                     const FieldSpec& X, const FieldSpec& Y) {
  CovBundle b;
  auto xj = field_jets(X, chart, f.u);
  auto yj = field_jets(Y, chart, f.u);
  b.xv = jet_values(xj);
  b.yv = jet_values(yj);

  auto Yamb = jet_matvec(jf.E, yj);
  auto PYc = jet_matvec(jf.P, yj);
  auto PYamb = jet_matvec(jf.E, PYc);

  Vec DX_Y = dir_deriv(Yamb, b.xv);
  TangentSplit sY = tangential_project(f, DX_Y);
  b.hXY = sY.normal_part;
  b.nablaXY_coeff = sY.tangent_coeffs;

  Vec DX_PY = dir_deriv(PYamb, b.xv);
  TangentSplit sPY = tangential_project(f, DX_PY);
  b.nablaX_PY_coeff = sPY.tangent_coeffs;
  b.h_XPY = sPY.normal_part;
  Vec PnXY = matvec(f.E, matvec(f.P, b.nablaXY_coeff));
  b.nablaP_amb = vsub(matvec(f.E, b.nablaX_PY_coeff), PnXY);

  Vec FYv = matvec(f.Fcols, b.yv);
  Vec FXv = matvec(f.Fcols, b.xv);
  Mat A_FY = shape_operator(f, sff, FYv);
  Mat A_FX = shape_operator(f, sff, FXv);
  b.A_FY_X_coeff = matvec(A_FY, b.xv);
  b.A_FX_Y_coeff = matvec(A_FX, b.yv);

  Vec Jh = matvec(f.JAmb, b.hXY);
  TangentSplit sJh = tangential_project(f, Jh);
  b.t_hXY_amb = matvec(f.E, sJh.tangent_coeffs);
  b.f_hXY = sJh.normal_part;

  b.rP_vec = vsub(vsub(b.nablaP_amb, matvec(f.E, b.A_FY_X_coeff)), b.t_hXY_amb);

  // FY as a jet field: J (E y) - E (P y)
  auto JYamb = jet_matvec(jf.J, Yamb);
  auto EPY = jet_matvec(jf.E, PYc);
  std::vector<Jet3> FYj;
  FYj.reserve(JYamb.size());
  for (size_t a = 0; a < JYamb.size(); ++a) FYj.push_back(JYamb[a] - EPY[a]);
  Vec DX_FY = dir_deriv(FYj, b.xv);
  TangentSplit sFY = tangential_project(f, DX_FY);
  Vec FnXY = matvec(f.Fcols, b.nablaXY_coeff);
  b.nablaF_amb = vsub(sFY.normal_part, FnXY);

  b.rF_vec = vsub(vadd(b.nablaF_amb, b.h_XPY), b.f_hXY);
  return b;
}

// h(x,y) for coefficient value vectors, bilinear in the coordinate h.
Vec h_bilinear(const SecondFundamentalForm& sff, const Vec& x, const Vec& y, int n2) {
  Vec out(n2, 0.0);
  for (int i = 0; i < sff.m; ++i)
    for (int j = 0; j < sff.m; ++j) {
      const double c = x[i] * y[j];
      if (c == 0.0) continue;
      const Vec& hij = sff.at(i, j);
      for (int a = 0; a < n2; ++a) out[a] += c * hij[a];
    }
  return out;
}

// g-orthogonal projection of tangent coefficients onto span(B).
Vec project_onto(const Mat& B, const Mat& G, const Vec& v) {
  Mat Bt = transpose(B);
  Mat BtG = matmul(Bt, G);
  Mat gram = matmul(BtG, B);
  Vec a = solve_vec(gram, matvec(BtG, v));
  return matvec(B, a);
}

std::vector<PointFrame> frames_for(const ImmersionChart& chart, const SamplingPlan& plan,
                                   const Tolerances& tol) {
  std::vector<PointFrame> out;
  for (const auto& u : sample_points(chart, plan, tol))
    out.push_back(evaluate_frame(chart, u, {tol.degeneracy}));
  return out;
}

}  // namespace

SecondFundamentalForm second_fundamental_form(const PointFrame& frame) {
  const int m = frame.tangent_dim();
  const int n2 = frame.ambient_dim();
  SecondFundamentalForm sff;
  sff.m = m;
  sff.h.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec hess(n2);
      for (int a = 0; a < n2; ++a) hess[a] = frame.component_jets[a].hess(i, j);
      sff.h[static_cast<size_t>(i) * m + j] = tangential_project(frame, hess).normal_part;
    }
  return sff;
}

Mat shape_operator(const PointFrame& frame, const SecondFundamentalForm& h,
                   const Vec& V, double normal_tol) {
  if (static_cast<int>(V.size()) != frame.ambient_dim())
    throw InputError("shape_operator: normal vector has wrong dimension");
  Vec gV = matvec(frame.gAmb, V);
  Vec res = matvec(transpose(frame.E), gV);
  double scale = std::max(1.0, max_abs(V));
  if (max_abs(res) > normal_tol * scale) {
    std::ostringstream os;
    os << "shape_operator: vector not normal, orthogonality residual " << max_abs(res);
    throw InputError(os.str());
  }
  const int m = frame.tangent_dim();
  Mat M = zeros(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M(i, j) = dot(h.at(i, j), gV);
  return solve(frame.G, M);
}

FieldSpec make_field(const std::vector<std::string>& coeff_exprs,
                     const ImmersionChart& chart) {
  if (static_cast<int>(coeff_exprs.size()) != chart.param_count())
    throw InputError("vector field needs one coefficient per parameter");
  std::set<std::string> declared(chart.params.begin(), chart.params.end());
  for (const auto& [k, v] : chart.constants) declared.insert(k);
  FieldSpec out;
  out.reserve(coeff_exprs.size());
  for (const auto& text : coeff_exprs) out.push_back(parse_expression(text, declared));
  return out;
}

FieldSpec constant_field(const Vec& coeffs, const ImmersionChart& chart) {
  std::vector<std::string> texts;
  texts.reserve(coeffs.size());
  for (double c : coeffs) {
    std::ostringstream os;
    os.precision(17);
    os << c;
    texts.push_back(os.str());
  }
  return make_field(texts, chart);
}

std::pair<double, double> covariant_identity_residuals(const ImmersionChart& chart,
                                                       const std::vector<double>& u,
                                                       const FieldSpec& X,
                                                       const FieldSpec& Y) {
  PointFrame f = evaluate_frame(chart, u);
  JetFrame jf = build_jet_frame(f);
  SecondFundamentalForm sff = second_fundamental_form(f);
  CovBundle b = cov_bundle(chart, f, jf, sff, X, Y);
  return {max_abs(b.rP_vec), max_abs(b.rF_vec)};
}

CurvatureReport intrinsic_curvature(const ImmersionChart& chart,
                                    const std::vector<double>& u) {
  PointFrame f = evaluate_frame(chart, u);
  const int m = f.tangent_dim();
  const int n2 = f.ambient_dim();
  JetFrame jf = build_jet_frame(f);
  SecondFundamentalForm sff = second_fundamental_form(f);

  // Koszul: G Gamma_{. i j} = K with
  //   K_l = (dG_lj/du_i + dG_il/du_j - dG_ij/du_l) / 2
  const Jet3 zero = Jet3::constant(0.0, m);
  const Jet3 half = Jet3::constant(0.5, m);
  Matrix<Jet3> K(m, m * m, zero);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l)
        K(l, i * m + j) = half * (derivative_jet(jf.G(l, j), i) +
                                  derivative_jet(jf.G(i, l), j) -
                                  derivative_jet(jf.G(i, j), l));
  Matrix<Jet3> Gamma = solve(jf.G, K);  // Gamma(k, i*m+j) = Gamma^k_ij

  CurvatureReport rep;
  rep.m = m;
  rep.riemann.assign(static_cast<size_t>(m) * m * m * m, 0.0);

  // R(d_i, d_j) d_k = sum_l R^l_ijk d_l with
  //   R^l_ijk = d_i Gamma^l_jk - d_j Gamma^l_ik
  //           + Gamma^l_ip Gamma^p_jk - Gamma^l_jp Gamma^p_ik
  std::vector<double> up(static_cast<size_t>(m) * m * m * m, 0.0);
  auto upref = [&](int l, int i, int j, int k) -> double& {
    return up[((static_cast<size_t>(l) * m + i) * m + j) * m + k];
  };
  for (int l = 0; l < m; ++l)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          double v = Gamma(l, j * m + k).grad(i) - Gamma(l, i * m + k).grad(j);
          for (int p = 0; p < m; ++p)
            v += Gamma(l, i * m + p).value() * Gamma(p, j * m + k).value() -
                 Gamma(l, j * m + p).value() * Gamma(p, i * m + k).value();
          upref(l, i, j, k) = v;
        }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          double v = 0.0;
          for (int p = 0; p < m; ++p) v += upref(p, i, j, k) * f.G(p, l);
          rep.riemann[((static_cast<size_t>(i) * m + j) * m + k) * m + l] = v;
        }

  // Gauss (flat ambient): R(i,j,k,l) = g(h_il, h_jk) - g(h_jl, h_ik)
  double gauss = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          double rhs = g_inner(f.gAmb, sff.at(i, l), sff.at(j, k)) -
                       g_inner(f.gAmb, sff.at(j, l), sff.at(i, k));
          gauss = std::max(gauss, std::fabs(rep.R(i, j, k, l) - rhs));
        }
  rep.gauss_residual = gauss;

  // h as a jet field: H(., jk) = x_,jk - E c_jk with G c_jk = E'g x_,jk
  Matrix<Jet3> D2(n2, m * m, zero);
  for (int a = 0; a < n2; ++a) {
    for (int j = 0; j < m; ++j) {
      Jet3 dj = derivative_jet(f.component_jets[a], j);
      for (int k = 0; k < m; ++k) D2(a, j * m + k) = derivative_jet(dj, k);
    }
  }
  Matrix<Jet3> C = solve(jf.G, matmul(matmul(transpose(jf.E), jf.g), D2));
  Matrix<Jet3> H = D2;
  for (int a = 0; a < n2; ++a)
    for (int jk = 0; jk < m * m; ++jk) {
      Jet3 s = H(a, jk);
      for (int i = 0; i < m; ++i) s = s - jf.E(a, i) * C(i, jk);
      H(a, jk) = s;
    }

  // (nabla~_i h)(j,k) = perp(d_i H_jk) - Gamma^p_ij h_pk - Gamma^p_ik h_jp
  auto cov_h = [&](int i, int j, int k) -> Vec {
    Vec d(n2);
    for (int a = 0; a < n2; ++a) d[a] = H(a, j * m + k).grad(i);
    Vec out = tangential_project(f, d).normal_part;
    for (int p = 0; p < m; ++p) {
      double g1 = Gamma(p, i * m + j).value();
      double g2 = Gamma(p, i * m + k).value();
      const Vec& hpk = sff.at(p, k);
      const Vec& hjp = sff.at(j, p);
      for (int a = 0; a < n2; ++a) out[a] -= g1 * hpk[a] + g2 * hjp[a];
    }
    return out;
  };
  double codazzi = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < m; ++k)
        codazzi = std::max(codazzi, max_abs(vsub(cov_h(i, j, k), cov_h(j, i, k))));
  rep.codazzi_residual = codazzi;
  return rep;
}

Vec spaceform_curvature(const Mat& g, const Mat& J, double c, const Vec& X,
                        const Vec& Y, const Vec& Z) {
  Vec JX = matvec(J, X), JY = matvec(J, Y), JZ = matvec(J, Z);
  double gXZ = form(X, g, Z);
  double gYZ = form(Y, g, Z);
  double gXJZ = dot(X, matvec(g, JZ));
  double gYJZ = dot(Y, matvec(g, JZ));
  double gXJY = dot(X, matvec(g, JY));
  Vec out(X.size(), 0.0);
  for (size_t a = 0; a < out.size(); ++a)
    out[a] = 0.25 * c *
             (gXZ * Y[a] - gYZ * X[a] + gXJZ * JY[a] - gYJZ * JX[a] +
              2.0 * gXJY * JZ[a]);
  return out;
}

double holomorphic_sectional(const PointFrame& frame, const SecondFundamentalForm& h,
                             const Vec& X, double c, double fx_tol) {
  Vec FX = matvec(frame.Fcols, X);
  if (max_abs(FX) > fx_tol) {
    std::ostringstream os;
    os << "holomorphic_sectional: |FX| = " << max_abs(FX)
       << " exceeds the holomorphic tolerance";
    throw InputError(os.str());
  }
  const int n2 = frame.ambient_dim();
  Vec hXX = h_bilinear(h, X, X, n2);
  Vec PX = matvec(frame.P, X);
  Vec hXPX = h_bilinear(h, X, PX, n2);
  return c + g_inner(frame.gAmb, hXX, hXX) - g_inner(frame.gAmb, hXPX, hXPX);
}

IntegrabilityReport integrability_report(const ImmersionChart& chart,
                                         const DistributionSpec& d1,
                                         const DistributionSpec& d2,
                                         const SamplingPlan& plan,
                                         const Tolerances& tol) {
  IntegrabilityReport rep;
  auto frames = frames_for(chart, plan, tol);
  const int n2 = chart.ambient.dim;

  for (const auto& f : frames) {
    JetFrame jf = build_jet_frame(f);
    SecondFundamentalForm sff = second_fundamental_form(f);
    Mat B1 = distribution_matrix(d1, chart, f.u);
    Mat B2 = distribution_matrix(d2, chart, f.u);

    // (a) holomorphic criterion on D1: h(X, PY) = h(PX, Y)
    for (int i = 0; i < B1.cols(); ++i)
      for (int j = 0; j < B1.cols(); ++j) {
        Vec x = col(B1, i), y = col(B1, j);
        Vec lhs = h_bilinear(sff, x, matvec(f.P, y), n2);
        Vec rhs = h_bilinear(sff, matvec(f.P, x), y, n2);
        rep.holo_h = std::max(rep.holo_h, max_abs(vsub(lhs, rhs)));
      }

    // (c) totally real criterion on D1: A_{FX}Y = A_{FY}X
    for (int i = 0; i < B1.cols(); ++i)
      for (int j = 0; j < B1.cols(); ++j) {
        Vec x = col(B1, i), y = col(B1, j);
        Mat A_FX = shape_operator(f, sff, matvec(f.Fcols, x));
        Mat A_FY = shape_operator(f, sff, matvec(f.Fcols, y));
        Vec diff = vsub(matvec(A_FX, y), matvec(A_FY, x));
        rep.totally_real = std::max(rep.totally_real, max_abs(matvec(f.E, diff)));
      }

    // (b) slant-factor bracket criterion on D2:
    //     pi_1(nabla_X PY - nabla_Y PX) = pi_1(A_{FY}X - A_{FX}Y)
    for (int i = 0; i < d2.dim(); ++i)
      for (int j = 0; j < d2.dim(); ++j) {
        if (i == j) continue;
        CovBundle bxy = cov_bundle(chart, f, jf, sff, d2.basis[i], d2.basis[j]);
        CovBundle byx = cov_bundle(chart, f, jf, sff, d2.basis[j], d2.basis[i]);
        Vec lhs = vsub(bxy.nablaX_PY_coeff, byx.nablaX_PY_coeff);
        Vec rhs = vsub(bxy.A_FY_X_coeff, bxy.A_FX_Y_coeff);
        Vec diff = project_onto(B1, f.G, vsub(lhs, rhs));
        rep.slant_bracket = std::max(rep.slant_bracket, max_abs(diff));
      }

    // (d) direct bracket check inside each distribution
    auto bracket_out = [&](const DistributionSpec& d, const Mat& B) {
      double worst = 0.0;
      for (int i = 0; i < d.dim(); ++i)
        for (int j = i + 1; j < d.dim(); ++j) {
          auto xj = field_jets(d.basis[i], chart, f.u);
          auto yj = field_jets(d.basis[j], chart, f.u);
          const int m = chart.param_count();
          Vec br(m, 0.0);
          for (int a = 0; a < m; ++a)
            for (int p = 0; p < m; ++p)
              br[a] += xj[p].value() * yj[a].grad(p) - yj[p].value() * xj[a].grad(p);
          Vec inside = project_onto(B, f.G, br);
          worst = std::max(worst, max_abs(vsub(br, inside)));
        }
      return worst;
    };
    rep.bracket_d1 = std::max(rep.bracket_d1, bracket_out(d1, B1));
    rep.bracket_d2 = std::max(rep.bracket_d2, bracket_out(d2, B2));
  }
  return rep;
}

GeodesyReport geodesy_report(const ImmersionChart& chart, const DistributionSpec& d1,
                             const DistributionSpec& d2, const SamplingPlan& plan,
                             const Tolerances& tol) {
  GeodesyReport rep;
  auto frames = frames_for(chart, plan, tol);
  const int n2 = chart.ambient.dim;
  const int m = chart.param_count();
  bool first = true;

  for (const auto& f : frames) {
    JetFrame jf = build_jet_frame(f);
    SecondFundamentalForm sff = second_fundamental_form(f);
    Mat B1 = distribution_matrix(d1, chart, f.u);
    Mat B2 = distribution_matrix(d2, chart, f.u);

    auto max_h = [&](const Mat& A, const Mat& B) {
      double worst = 0.0;
      for (int i = 0; i < A.cols(); ++i)
        for (int j = 0; j < B.cols(); ++j)
          worst = std::max(worst, max_abs(h_bilinear(sff, col(A, i), col(B, j), n2)));
      return worst;
    };
    rep.tg1 = std::max(rep.tg1, max_h(B1, B1));
    rep.tg2 = std::max(rep.tg2, max_h(B2, B2));
    rep.mixed = std::max(rep.mixed, max_h(B1, B2));

    // mixed-totally-geodesic theorem conditions on cross pairs, both orders
    auto cross = [&](const DistributionSpec& da, const DistributionSpec& db) {
      for (int i = 0; i < da.dim(); ++i)
        for (int j = 0; j < db.dim(); ++j) {
          CovBundle b = cov_bundle(chart, f, jf, sff, da.basis[i], db.basis[j]);
          Vec c1 = vsub(b.nablaP_amb, matvec(f.E, b.A_FY_X_coeff));
          rep.mixed_cond1 = std::max(rep.mixed_cond1, max_abs(c1));
          rep.mixed_cond2 = std::max(rep.mixed_cond2, max_abs(b.nablaF_amb));
        }
    };
    cross(d1, d2);
    cross(d2, d1);

    // umbilicity: least-squares L over the normal coefficients
    Vec num(n2, 0.0);
    double den = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const Vec& hij = sff.at(i, j);
        for (int a = 0; a < n2; ++a) num[a] += f.G(i, j) * hij[a];
        den += f.G(i, j) * f.G(i, j);
      }
    Vec L(n2, 0.0);
    if (den > 0.0)
      for (int a = 0; a < n2; ++a) L[a] = num[a] / den;
    double defect = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Vec r = sff.at(i, j);
        for (int a = 0; a < n2; ++a) r[a] -= f.G(i, j) * L[a];
        defect = std::max(defect, max_abs(r));
      }
    rep.umbilicity_defect = std::max(rep.umbilicity_defect, defect);
    if (first) {
      rep.umbilicity_L = L;
      first = false;
    }

    // P A_N X = A_N P X for X in D1, N in the normal basis
    for (int nidx = 0; nidx < f.Nbasis.cols(); ++nidx) {
      Mat A = shape_operator(f, sff, col(f.Nbasis, nidx));
      for (int i = 0; i < B1.cols(); ++i) {
        Vec x = col(B1, i);
        Vec diff = vsub(matvec(f.P, matvec(A, x)), matvec(A, matvec(f.P, x)));
        rep.pa_commute = std::max(rep.pa_commute, max_abs(diff));
      }
    }

    // cross h(X,Y) is 0 or a fixed point of f^2
    for (int i = 0; i < B1.cols(); ++i)
      for (int j = 0; j < B2.cols(); ++j) {
        Vec h = h_bilinear(sff, col(B1, i), col(B2, j), n2);
        Vec fh = tangential_project(f, matvec(f.JAmb, h)).normal_part;
        Vec f2h = tangential_project(f, matvec(f.JAmb, fh)).normal_part;
        double r = std::min(max_abs(h), max_abs(vsub(f2h, h)));
        rep.f2_dichotomy = std::max(rep.f2_dichotomy, r);
      }
  }
  return rep;
}

double cr_curvature_check(const ImmersionChart& chart, const DistributionSpec& d,
                          const DistributionSpec& dperp, double c,
                          const SamplingPlan& plan, const Tolerances& tol) {
  auto frames = frames_for(chart, plan, tol);
  const Mat& g = chart.ambient.g;
  const Mat& J = chart.ambient.J;
  double worst = 0.0;
  for (const auto& f : frames) {
    Mat BD = distribution_matrix(d, chart, f.u);
    Mat BP = distribution_matrix(dperp, chart, f.u);
    std::vector<Vec> Damb, Pamb;
    for (int i = 0; i < BD.cols(); ++i) Damb.push_back(matvec(f.E, col(BD, i)));
    for (int i = 0; i < BP.cols(); ++i) Pamb.push_back(matvec(f.E, col(BP, i)));
    for (const auto& X : Damb)
      for (const auto& Y : Damb)
        for (const auto& Z : Pamb)
          for (const auto& W : Pamb) {
            Vec R = spaceform_curvature(g, J, c, X, Y, Z);
            worst = std::max(worst, std::fabs(form(R, g, W)));
          }
  }
  return worst;
}

}  // namespace paraslant
