#include "paraslant/ambient.hpp"

#include <cmath>
#include <sstream>

namespace paraslant {

namespace {

Mat from_rows(const std::vector<std::vector<double>>& rows) {
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), 0.0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

Mat diag(const std::vector<double>& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()), 0.0);
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
  return m;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols(), 0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// The two R^4 structures the paper's example gallery is built from.
Mat base_J() {
  return from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}
Mat base_g() { return diag({1, -1, 1, -1}); }
Mat base_J1() {
  return from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}
Mat base_g1() { return diag({1, 1, -1, -1}); }

}  // namespace

std::vector<AxiomViolation> validate_structure(const AmbientStructure& s) {
  if (s.dim <= 0 || s.dim % 2 != 0) throw InputError("ambient dimension must be even and positive");
  if (s.J.rows() != s.dim || s.J.cols() != s.dim || s.g.rows() != s.dim ||
      s.g.cols() != s.dim)
    throw InputError("ambient matrices must be dim x dim");

  std::vector<AxiomViolation> out;
  Mat jj = matmul(s.J, s.J);
  for (int i = 0; i < s.dim; ++i) jj(i, i) -= 1.0;
  if (double r = max_abs(jj); r > 1e-12) out.push_back({"J^2 != I", r});

  Mat anti = matmul(transpose(s.J), s.g);
  Mat gj = matmul(s.g, s.J);
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) anti(i, j) += gj(i, j);
  if (double r = max_abs(anti); r > 1e-12) out.push_back({"J'g + gJ != 0", r});

  Mat sym = s.g;
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) sym(i, j) -= s.g(j, i);
  if (double r = max_abs(sym); r > 1e-12) out.push_back({"g not symmetric", r});

  if (double d = std::fabs(det(s.g)); d <= 1e-12)
    out.push_back({"g degenerate", d});

  return out;
}

std::pair<int, int> signature(const Mat& g) {
  if (g.rows() != g.cols()) throw InputError("signature: matrix not square");
  auto ev = sym_eigenvalues(g);
  int p = 0, q = 0;
  for (double e : ev) {
    if (std::fabs(e) < 1e-12) throw DegenerateMetricError("degenerate-metric");
    (e > 0 ? p : q)++;
  }
  return {p, q};
}

std::vector<std::string> gallery_structure_names() {
  return {"J-g-R4", "J1-g1-R4", "J2-g2-R8", "J3-g3-R8", "J4-g4-R8", "J5-g5-R6"};
}

AmbientStructure gallery_structure(const std::string& name) {
  if (name == "J-g-R4") return {name, 4, base_J(), base_g()};
  if (name == "J1-g1-R4") return {name, 4, base_J1(), base_g1()};
  if (name == "J2-g2-R8")
    return {name, 8, block_diag(base_J(), base_J()), block_diag(base_g(), base_g())};
  if (name == "J3-g3-R8")
    return {name, 8, block_diag(base_J1(), base_J()), block_diag(base_g1(), base_g())};
  if (name == "J4-g4-R8")
    return {name, 8, block_diag(base_J1(), base_J1()), block_diag(base_g1(), base_g1())};
  if (name == "J5-g5-R6") {
    Mat tailJ = from_rows({{0, 1}, {1, 0}});
    Mat tailg = diag({1, -1});
    return {name, 6, block_diag(base_J(), tailJ), block_diag(base_g(), tailg)};
  }
  std::ostringstream os;
  os << "unknown ambient gallery name '" << name << "'; valid:";
  for (const auto& n : gallery_structure_names()) os << " " << n;
  throw InputError(os.str());
}

}  // namespace paraslant
