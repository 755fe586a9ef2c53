#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paraslant/frame.hpp"

namespace paraslant {

// Named sub-bundle of the tangent bundle; each basis vector is a list of
// m coefficient expressions over the chart parameters.
struct DistributionSpec {
  std::string name;
  std::vector<std::vector<Expr>> basis;  // k vectors, each m expressions

  int dim() const { return static_cast<int>(basis.size()); }

  static DistributionSpec make(std::string name,
                               const std::vector<std::vector<std::string>>& coeff_exprs,
                               const ImmersionChart& chart);
  // Coordinate distribution spanning the given parameter indices.
  static DistributionSpec coordinate(std::string name, const std::vector<int>& indices,
                                     const ImmersionChart& chart);
};

struct SamplingPlan {
  int count = 64;
  uint64_t seed = 0;
  int resample_factor = 10;  // at most resample_factor * count draws
};

struct Tolerances {
  double slant = 1e-8;       // residual / spread bound for slant constancy
  double boundary = 1e-6;    // |lambda| or |lambda-1| window
  double causal = 1e-9;      // light-like threshold
  double degeneracy = 1e-10; // relative induced-metric cutoff
  double orthogonality = 1e-8;
  double operator_zero = 1e-9;  // "P or F vanishes on D" cutoff
};

enum class SlantType {
  ParaComplex,
  TotallyReal,
  Slant1,
  Slant2,
  Slant3,
  AntiInvariant,
  NonSlant,
  Boundary,
};
const char* slant_type_name(SlantType t);
std::optional<SlantType> slant_type_from_name(const std::string& name);

struct SampleEvidence {
  std::vector<double> point;
  double lambda = 0.0;
  double residual = 0.0;
};

struct SlantReport {
  double lambda = 0.0;          // median over samples
  double residual = 0.0;        // max over samples of |P_D^2 - lambda I|
  double lambda_spread = 0.0;   // max - min of per-sample lambda
  SlantType type = SlantType::NonSlant;
  std::optional<double> theta;
  std::string causal_pattern;   // e.g. "reversed:128 preserved:0 light:0"
  std::vector<SampleEvidence> samples;
};

// lambda = trace(Pd^2)/k and sup-norm residual of Pd^2 - lambda I.
std::pair<double, double> estimate_lambda(const Mat& Pd);

// Coefficient matrix B (m x k) of the distribution basis at a point.
Mat distribution_matrix(const DistributionSpec& d, const ImmersionChart& chart,
                        const std::vector<double>& u);

// P_D = (B'GB)^{-1} B'G P B: g-orthogonal projection of P back onto D.
Mat restrict_P_to_distribution(const PointFrame& frame, const Mat& B,
                               double degeneracy_tol = 1e-10);

// Monte-Carlo classification over the domain box; degenerate or
// light-like-basis points are skipped and resampled. Empty spec (nullopt)
// classifies the whole tangent bundle.
SlantReport classify_slant(const ImmersionChart& chart,
                           const std::optional<DistributionSpec>& d,
                           const SamplingPlan& plan, const Tolerances& tol = {});

struct BiSlantReport {
  bool orthogonal = false;
  bool spanning = false;
  SlantReport report1, report2;
  std::string label;  // bi-slant | semi-slant | hemi-slant | CR | invalid
  std::string witness;  // reason when invalid
};

BiSlantReport decompose_bislant(const ImmersionChart& chart, const DistributionSpec& d1,
                                const DistributionSpec& d2, const SamplingPlan& plan,
                                const Tolerances& tol = {});

// Maximal holomorphic distribution {X : FX = 0} and maximal totally real
// distribution {X : PX = 0} at one point, as tangent-coefficient bases.
std::pair<Mat, Mat> maximal_distributions(const PointFrame& frame, double tol = 1e-10);

// sup over samples and basis vectors of the component of P X outside D.
double check_P_invariance(const ImmersionChart& chart, const DistributionSpec& d,
                          const SamplingPlan& plan, const Tolerances& tol = {});

// Deterministic admissible-point sampler shared by the analyses.
std::vector<std::vector<double>> sample_points(const ImmersionChart& chart,
                                               const SamplingPlan& plan,
                                               const Tolerances& tol);

}  // namespace paraslant
