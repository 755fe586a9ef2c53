#include "paraslant/frame.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace paraslant {

ImmersionChart ImmersionChart::make(AmbientStructure ambient,
                                    std::vector<std::string> params,
                                    std::vector<std::pair<double, double>> domain,
                                    std::map<std::string, double> constants,
                                    const std::vector<std::string>& component_exprs) {
  if (static_cast<int>(component_exprs.size()) != ambient.dim)
    throw InputError("chart component count must equal ambient dimension");
  if (params.size() != domain.size())
    throw InputError("chart needs one domain interval per parameter");
  std::set<std::string> declared(params.begin(), params.end());
  for (const auto& [k, v] : constants) declared.insert(k);

  ImmersionChart chart;
  chart.ambient = std::move(ambient);
  chart.params = std::move(params);
  chart.domain = std::move(domain);
  chart.constants = std::move(constants);
  chart.components.reserve(component_exprs.size());
  for (const auto& text : component_exprs)
    chart.components.push_back(parse_expression(text, declared));
  return chart;
}

bool ImmersionChart::inside_domain(const std::vector<double>& u) const {
  if (u.size() != params.size()) return false;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] < domain[i].first || u[i] > domain[i].second) return false;
  return true;
}

PointFrame evaluate_frame(const ImmersionChart& chart, const std::vector<double>& u,
                          const FrameOptions& opts) {
  const int m = chart.param_count();
  const int n2 = chart.ambient.dim;
  if (static_cast<int>(u.size()) != m) throw InputError("evaluate_frame: point size mismatch");
  if (!chart.inside_domain(u)) {
    std::ostringstream os;
    os << "evaluate_frame: point outside domain box (";
    for (size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
    os << ")";
    throw InputError(os.str());
  }

  std::map<std::string, double> vv;
  for (int i = 0; i < m; ++i) vv[chart.params[i]] = u[i];

  PointFrame f;
  f.u = u;
  f.x.resize(n2);
  f.E = zeros(n2, m);
  f.component_jets.reserve(n2);
  for (int a = 0; a < n2; ++a) {
    Jet3 j = eval_jet(chart.components[a], chart.params, vv, chart.constants);
    f.x[a] = j.value();
    for (int i = 0; i < m; ++i) f.E(a, i) = j.grad(i);
    f.component_jets.push_back(std::move(j));
  }

  const Mat& g = chart.ambient.g;
  const Mat& J = chart.ambient.J;
  f.gAmb = g;
  f.JAmb = J;
  Mat Et = transpose(f.E);
  Mat Etg = matmul(Et, g);
  f.G = matmul(Etg, f.E);

  double scale = max_abs(f.G);
  if (scale == 0.0) scale = 1.0;
  if (std::fabs(det(f.G)) <= opts.degeneracy_tol * scale) {
    std::ostringstream os;
    os << "degenerate-induced-metric at (";
    for (size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
    os << ")";
    throw DegenerateMetricError(os.str());
  }

  Mat JE = matmul(J, f.E);
  f.P = solve(f.G, matmul(Etg, JE));
  Mat EP = matmul(f.E, f.P);
  f.Fcols = JE;
  for (int a = 0; a < n2; ++a)
    for (int i = 0; i < m; ++i) f.Fcols(a, i) -= EP(a, i);

  f.Nbasis = kernel_basis(Etg, 1e-12);
  const int nn = f.Nbasis.cols();
  if (nn != n2 - m)
    throw DegenerateMetricError("normal space has unexpected dimension");

  f.tmat = zeros(m, nn);
  f.fmat = zeros(nn, nn);
  if (nn > 0) {
    Mat JN = matmul(J, f.Nbasis);
    Mat rhs = matmul(Etg, JN);
    Mat t = solve(f.G, rhs);
    f.tmat = t;
    // residual JN - E t lies in span(Nbasis); Euclidean normal-equation solve
    Mat Ettan = matmul(f.E, t);
    Mat res = JN;
    for (int a = 0; a < n2; ++a)
      for (int j = 0; j < nn; ++j) res(a, j) -= Ettan(a, j);
    Mat Nt = transpose(f.Nbasis);
    f.fmat = solve(matmul(Nt, f.Nbasis), matmul(Nt, res));
  }
  return f;
}

TangentSplit tangential_project(const PointFrame& frame, const Vec& v) {
  if (static_cast<int>(v.size()) != frame.ambient_dim())
    throw InputError("tangential_project: vector has wrong dimension");
  // coefficients from the normal equations G a = E'g v
  Vec gv = matvec(frame.gAmb, v);
  Vec rhs = matvec(transpose(frame.E), gv);
  Vec a = solve_vec(frame.G, rhs);
  Vec r = v;
  Vec Ea = matvec(frame.E, a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= Ea[i];
  return {a, r};
}

const char* causal_name(Causal c) {
  switch (c) {
    case Causal::SpaceLike: return "space-like";
    case Causal::TimeLike: return "time-like";
    case Causal::LightLike: return "light-like";
  }
  return "?";
}

Causal causal_character(const PointFrame& frame, const Vec& tangent_coeffs,
                        double causal_tol) {
  double norm2 = dot(tangent_coeffs, tangent_coeffs);
  if (norm2 == 0.0) throw InputError("causal_character: zero vector");
  double q = form(tangent_coeffs, frame.G, tangent_coeffs);
  if (std::fabs(q) <= causal_tol * norm2) return Causal::LightLike;
  return q > 0 ? Causal::SpaceLike : Causal::TimeLike;
}

}  // namespace paraslant
