#include "paraslant/slant.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace paraslant {

namespace {

uint64_t splitmix(uint64_t& s) {
  s += 0x9E3779B97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_double(uint64_t r) { return static_cast<double>(r >> 11) * 0x1.0p-53; }

std::vector<double> draw_point(const ImmersionChart& chart, uint64_t seed, uint64_t index) {
  uint64_t s = seed + 0x9E3779B97f4a7c15ULL * (index + 1);
  std::vector<double> u(chart.param_count());
  for (int i = 0; i < chart.param_count(); ++i) {
    const auto& [lo, hi] = chart.domain[i];
    u[i] = lo + (hi - lo) * unit_double(splitmix(s));
  }
  return u;
}

std::vector<PointFrame> admissible_frames(
    const ImmersionChart& chart, const SamplingPlan& plan, const Tolerances& tol,
    const std::function<bool(const PointFrame&)>& admit) {
  if (plan.count < 1) throw InputError("sampling count must be >= 1");
  std::vector<PointFrame> out;
  const uint64_t limit =
      static_cast<uint64_t>(plan.resample_factor) * static_cast<uint64_t>(plan.count);
  for (uint64_t j = 0; j < limit && static_cast<int>(out.size()) < plan.count; ++j) {
    auto u = draw_point(chart, plan.seed, j);
    try {
      PointFrame f = evaluate_frame(chart, u, {tol.degeneracy});
      if (!admit || admit(f)) out.push_back(std::move(f));
    } catch (const DegenerateMetricError&) {
    }
  }
  if (static_cast<int>(out.size()) < plan.count)
    throw InputError("no-admissible-samples");
  return out;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Mat identity_basis(int m) { return identity(m); }

}  // namespace

const char* slant_type_name(SlantType t) {
  switch (t) {
    case SlantType::ParaComplex: return "para-complex";
    case SlantType::TotallyReal: return "totally-real";
    case SlantType::Slant1: return "slant-1";
    case SlantType::Slant2: return "slant-2";
    case SlantType::Slant3: return "slant-3";
    case SlantType::AntiInvariant: return "anti-invariant";
    case SlantType::NonSlant: return "non-slant";
    case SlantType::Boundary: return "boundary";
  }
  return "?";
}

std::optional<SlantType> slant_type_from_name(const std::string& name) {
  for (SlantType t : {SlantType::ParaComplex, SlantType::TotallyReal, SlantType::Slant1,
                      SlantType::Slant2, SlantType::Slant3, SlantType::AntiInvariant,
                      SlantType::NonSlant, SlantType::Boundary})
    if (name == slant_type_name(t)) return t;
  return std::nullopt;
}

DistributionSpec DistributionSpec::make(
    std::string name, const std::vector<std::vector<std::string>>& coeff_exprs,
    const ImmersionChart& chart) {
  std::set<std::string> declared(chart.params.begin(), chart.params.end());
  for (const auto& [k, v] : chart.constants) declared.insert(k);
  DistributionSpec d;
  d.name = std::move(name);
  for (const auto& vec : coeff_exprs) {
    if (static_cast<int>(vec.size()) != chart.param_count())
      throw InputError("distribution basis vector needs one coefficient per parameter");
    std::vector<Expr> parsed;
    parsed.reserve(vec.size());
    for (const auto& text : vec) parsed.push_back(parse_expression(text, declared));
    d.basis.push_back(std::move(parsed));
  }
  if (d.basis.empty()) throw InputError("distribution needs at least one basis vector");
  return d;
}

DistributionSpec DistributionSpec::coordinate(std::string name,
                                              const std::vector<int>& indices,
                                              const ImmersionChart& chart) {
  std::vector<std::vector<std::string>> rows;
  for (int idx : indices) {
    if (idx < 0 || idx >= chart.param_count())
      throw InputError("coordinate distribution index out of range");
    std::vector<std::string> coeffs(chart.param_count(), "0");
    coeffs[idx] = "1";
    rows.push_back(std::move(coeffs));
  }
  return make(std::move(name), rows, chart);
}

std::pair<double, double> estimate_lambda(const Mat& Pd) {
  const int k = Pd.rows();
  if (k < 1 || Pd.cols() != k) throw InputError("estimate_lambda: square matrix required");
  Mat sq = matmul(Pd, Pd);
  double lambda = 0.0;
  for (int i = 0; i < k; ++i) lambda += sq(i, i);
  lambda /= k;
  for (int i = 0; i < k; ++i) sq(i, i) -= lambda;
  return {lambda, max_abs(sq)};
}

Mat distribution_matrix(const DistributionSpec& d, const ImmersionChart& chart,
                        const std::vector<double>& u) {
  const int m = chart.param_count();
  std::map<std::string, double> vv;
  for (int i = 0; i < m; ++i) vv[chart.params[i]] = u[i];
  Mat B = zeros(m, d.dim());
  for (int j = 0; j < d.dim(); ++j)
    for (int i = 0; i < m; ++i)
      B(i, j) = eval_jet(d.basis[j][i], chart.params, vv, chart.constants).value();
  return B;
}

Mat restrict_P_to_distribution(const PointFrame& frame, const Mat& B,
                               double degeneracy_tol) {
  Mat Bt = transpose(B);
  Mat BtG = matmul(Bt, frame.G);
  Mat gram = matmul(BtG, B);
  double scale = max_abs(gram);
  if (scale == 0.0) scale = 1.0;
  if (std::fabs(det(gram)) <= degeneracy_tol * scale)
    throw DegenerateMetricError("degenerate-distribution-metric");
  return solve(gram, matmul(BtG, matmul(frame.P, B)));
}

SlantReport classify_slant(const ImmersionChart& chart,
                           const std::optional<DistributionSpec>& d,
                           const SamplingPlan& plan, const Tolerances& tol) {
  const int m = chart.param_count();

  auto basis_at = [&](const PointFrame& f) -> Mat {
    return d ? distribution_matrix(*d, chart, f.u) : identity_basis(m);
  };

  auto admit = [&](const PointFrame& f) -> bool {
    Mat B = basis_at(f);
    Mat gram = matmul(matmul(transpose(B), f.G), B);
    double scale = max_abs(gram);
    if (scale == 0.0) scale = 1.0;
    if (std::fabs(det(gram)) <= tol.degeneracy * scale) return false;
    for (int j = 0; j < B.cols(); ++j)
      if (causal_character(f, col(B, j), tol.causal) == Causal::LightLike) return false;
    return true;
  };

  auto frames = admissible_frames(chart, plan, tol, admit);

  SlantReport rep;
  std::vector<double> lambdas;
  double worst_residual = 0.0;
  double p_on_d = 0.0;  // sup |coefficients of P X| for X in the basis
  double f_on_d = 0.0;  // sup |ambient F X|
  int preserved = 0, reversed = 0, light = 0, zero = 0;

  uint64_t causal_seed = plan.seed ^ 0xC0FFEEULL;
  for (const auto& f : frames) {
    Mat B = basis_at(f);
    Mat Pd = restrict_P_to_distribution(f, B, tol.degeneracy);
    auto [lambda, residual] = estimate_lambda(Pd);
    lambdas.push_back(lambda);
    worst_residual = std::max(worst_residual, residual);
    rep.samples.push_back({f.u, lambda, residual});

    for (int j = 0; j < B.cols(); ++j) {
      Vec x = col(B, j);
      p_on_d = std::max(p_on_d, max_abs(matvec(f.P, x)));
      Vec fx = matvec(f.Fcols, x);
      f_on_d = std::max(f_on_d, max_abs(fx));
    }

    // causal bookkeeping on basis vectors plus a few random combinations
    std::vector<Vec> probes;
    for (int j = 0; j < B.cols(); ++j) {
      Vec e(B.cols(), 0.0);
      e[j] = 1.0;
      probes.push_back(e);
    }
    for (int r = 0; r < 3; ++r) {
      Vec c(B.cols());
      for (auto& v : c) v = 2.0 * unit_double(splitmix(causal_seed)) - 1.0;
      probes.push_back(c);
    }
    for (const auto& cvec : probes) {
      Vec x = matvec(B, cvec);
      Vec px = matvec(B, matvec(Pd, cvec));
      if (max_abs(px) <= tol.operator_zero) {
        ++zero;
        continue;
      }
      Causal cx = causal_character(f, x, tol.causal);
      Causal cp = causal_character(f, px, tol.causal);
      if (cx == Causal::LightLike || cp == Causal::LightLike) ++light;
      else if (cx == cp) ++preserved;
      else ++reversed;
    }
  }

  rep.lambda = median_of(lambdas);
  rep.residual = worst_residual;
  rep.lambda_spread =
      *std::max_element(lambdas.begin(), lambdas.end()) -
      *std::min_element(lambdas.begin(), lambdas.end());
  {
    std::ostringstream os;
    os << "preserved:" << preserved << " reversed:" << reversed << " light:" << light
       << " zero:" << zero;
    rep.causal_pattern = os.str();
  }

  const double lambda = rep.lambda;
  if (rep.residual > tol.slant || rep.lambda_spread > tol.slant) {
    rep.type = SlantType::NonSlant;
  } else if (std::fabs(lambda) <= tol.boundary) {
    rep.type = (p_on_d <= tol.operator_zero) ? SlantType::TotallyReal
                                             : SlantType::AntiInvariant;
  } else if (std::fabs(lambda - 1.0) <= tol.boundary) {
    rep.type = (f_on_d <= tol.operator_zero) ? SlantType::ParaComplex
                                             : SlantType::Boundary;
  } else if (lambda > 1.0) {
    rep.type = SlantType::Slant1;
    rep.theta = std::acosh(std::sqrt(lambda));
  } else if (lambda > 0.0) {
    rep.type = SlantType::Slant2;
    rep.theta = std::acos(std::sqrt(lambda));
  } else {
    rep.type = SlantType::Slant3;
    rep.theta = std::asinh(std::sqrt(-lambda));
  }
  return rep;
}

BiSlantReport decompose_bislant(const ImmersionChart& chart, const DistributionSpec& d1,
                                const DistributionSpec& d2, const SamplingPlan& plan,
                                const Tolerances& tol) {
  const int m = chart.param_count();
  BiSlantReport out;
  out.orthogonal = true;
  out.spanning = (d1.dim() + d2.dim() == m);
  if (!out.spanning) out.witness = "dim D1 + dim D2 != tangent dimension";

  auto frames = admissible_frames(chart, plan, tol, nullptr);
  for (const auto& f : frames) {
    Mat B1 = distribution_matrix(d1, chart, f.u);
    Mat B2 = distribution_matrix(d2, chart, f.u);
    for (int i = 0; i < B1.cols() && out.orthogonal; ++i)
      for (int j = 0; j < B2.cols(); ++j) {
        double ip = form(col(B1, i), f.G, col(B2, j));
        if (std::fabs(ip) > tol.orthogonality) {
          out.orthogonal = false;
          std::ostringstream os;
          os << "g(" << d1.name << "[" << i << "], " << d2.name << "[" << j
             << "]) = " << ip << " at sample";
          out.witness = os.str();
          break;
        }
      }
    if (out.spanning) {
      Mat joint = zeros(m, m);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < B1.cols(); ++j) joint(i, j) = B1(i, j);
        for (int j = 0; j < B2.cols(); ++j) joint(i, B1.cols() + j) = B2(i, j);
      }
      if (std::fabs(det(joint)) <= 1e-10) {
        out.spanning = false;
        out.witness = "joint basis degenerate at sample";
      }
    }
  }

  out.report1 = classify_slant(chart, d1, plan, tol);
  out.report2 = classify_slant(chart, d2, plan, tol);

  auto proper = [](SlantType t) {
    return t == SlantType::Slant1 || t == SlantType::Slant2 || t == SlantType::Slant3;
  };
  auto slant = [](SlantType t) { return t != SlantType::NonSlant; };

  if (!out.orthogonal || !out.spanning) {
    out.label = "invalid";
  } else if (out.report1.type == SlantType::ParaComplex && proper(out.report2.type)) {
    out.label = "semi-slant";
  } else if (out.report1.type == SlantType::TotallyReal && proper(out.report2.type)) {
    out.label = "hemi-slant";
  } else if (out.report1.type == SlantType::ParaComplex &&
             out.report2.type == SlantType::TotallyReal) {
    out.label = "CR";
  } else if (slant(out.report1.type) && slant(out.report2.type)) {
    out.label = "bi-slant";
  } else {
    out.label = "invalid";
    out.witness = "a factor is not a slant distribution";
  }
  return out;
}

std::pair<Mat, Mat> maximal_distributions(const PointFrame& frame, double tol) {
  Mat hol = kernel_basis(frame.Fcols, tol);
  Mat tr = kernel_basis(frame.P, tol);
  return {hol, tr};
}

double check_P_invariance(const ImmersionChart& chart, const DistributionSpec& d,
                          const SamplingPlan& plan, const Tolerances& tol) {
  auto frames = admissible_frames(chart, plan, tol, nullptr);
  double worst = 0.0;
  for (const auto& f : frames) {
    Mat B = distribution_matrix(d, chart, f.u);
    Mat Bt = transpose(B);
    Mat BtG = matmul(Bt, f.G);
    Mat gram = matmul(BtG, B);
    double scale = max_abs(gram);
    if (scale == 0.0) scale = 1.0;
    if (std::fabs(det(gram)) <= tol.degeneracy * scale)
      throw DegenerateMetricError("degenerate-distribution-metric");
    for (int j = 0; j < B.cols(); ++j) {
      Vec px = matvec(f.P, col(B, j));
      Vec a = solve_vec(gram, matvec(BtG, px));
      Vec back = matvec(B, a);
      for (size_t i = 0; i < px.size(); ++i) px[i] -= back[i];
      worst = std::max(worst, max_abs(px));
    }
  }
  return worst;
}

std::vector<std::vector<double>> sample_points(const ImmersionChart& chart,
                                               const SamplingPlan& plan,
                                               const Tolerances& tol) {
  auto frames = admissible_frames(chart, plan, tol, nullptr);
  std::vector<std::vector<double>> pts;
  pts.reserve(frames.size());
  for (auto& f : frames) pts.push_back(f.u);
  return pts;
}

}  // namespace paraslant
