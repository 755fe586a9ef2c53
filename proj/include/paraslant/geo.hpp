#pragma once

#include <vector>

#include "paraslant/slant.hpp"

namespace paraslant {

// h(d_i, d_j) as ambient normal vectors, symmetric in (i, j). In a flat
// ambient the covariant Hessian of the immersion is the coordinate
// Hessian, so h is its normal part.
struct SecondFundamentalForm {
  int m = 0;
  std::vector<Vec> h;  // m*m entries, row-major, each an ambient vector

  const Vec& at(int i, int j) const { return h[static_cast<size_t>(i) * m + j]; }
};

SecondFundamentalForm second_fundamental_form(const PointFrame& frame);

// A_V = Ginv M with M_ij = g(h_ij, V); V must be g-orthogonal to the
// tangent space.
Mat shape_operator(const PointFrame& frame, const SecondFundamentalForm& h,
                   const Vec& V, double normal_tol = 1e-8);

// Expression vector field: m coefficient expressions over the chart
// parameters.
using FieldSpec = std::vector<Expr>;

FieldSpec make_field(const std::vector<std::string>& coeff_exprs,
                     const ImmersionChart& chart);
FieldSpec constant_field(const Vec& coeffs, const ImmersionChart& chart);

// Residuals of the para Kaehler covariant identities at one point:
//   rP = |(nabla_X P)Y - A_{FY} X - t h(X,Y)|_inf   (ambient)
//   rF = |(nabla_X F)Y + h(X, PY) - f h(X,Y)|_inf   (ambient)
std::pair<double, double> covariant_identity_residuals(const ImmersionChart& chart,
                                                       const std::vector<double>& u,
                                                       const FieldSpec& X,
                                                       const FieldSpec& Y);

struct CurvatureReport {
  int m = 0;
  std::vector<double> riemann;  // m^4 entries R(i,j,k,l), row-major
  double gauss_residual = 0.0;
  double codazzi_residual = 0.0;

  double R(int i, int j, int k, int l) const {
    return riemann[((static_cast<size_t>(i) * m + j) * m + k) * m + l];
  }
};

// Koszul Christoffels from jet derivatives of G, Riemann from Gamma and
// its derivatives; Gauss and Codazzi residuals against h (flat ambient).
CurvatureReport intrinsic_curvature(const ImmersionChart& chart,
                                    const std::vector<double>& u);

// R~(X,Y)Z of a para complex space form of holomorphic curvature c:
//   (c/4)[g(X,Z)Y - g(Y,Z)X + g(X,JZ)JY - g(Y,JZ)JX + 2 g(X,JY)JZ].
// With g(JX,JX) = -g(X,X) this normalisation gives
//   g(R~(X,JX)JX, X) = c g(X,X)^2.
Vec spaceform_curvature(const Mat& g, const Mat& J, double c, const Vec& X,
                        const Vec& Y, const Vec& Z);

// H(X) = c + g(h(X,X),h(X,X)) - g(h(X,PX),h(X,PX)) for X with FX = 0.
double holomorphic_sectional(const PointFrame& frame, const SecondFundamentalForm& h,
                             const Vec& X, double c, double fx_tol = 1e-8);

struct IntegrabilityReport {
  // max |h(X,PY) - h(PX,Y)| over D1 basis pairs (holomorphic criterion)
  double holo_h = 0.0;
  // residual of pi_1(nabla_X PY - nabla_Y PX) = pi_1(A_{FY}X - A_{FX}Y)
  // over D2 basis pairs (slant-factor criterion)
  double slant_bracket = 0.0;
  // max |A_{FX}Y - A_{FY}X| over D1 basis pairs (totally real criterion)
  double totally_real = 0.0;
  // direct bracket checks: component of [X,Y] outside the distribution
  double bracket_d1 = 0.0;
  double bracket_d2 = 0.0;
};

IntegrabilityReport integrability_report(const ImmersionChart& chart,
                                         const DistributionSpec& d1,
                                         const DistributionSpec& d2,
                                         const SamplingPlan& plan,
                                         const Tolerances& tol = {});

struct GeodesyReport {
  double tg1 = 0.0;    // max |h| over D1 x D1
  double tg2 = 0.0;    // max |h| over D2 x D2
  double mixed = 0.0;  // max |h| over cross pairs
  // residuals of the two equivalent mixed-totally-geodesic conditions
  // (nabla_X P)Y = A_{FY}X and (nabla_X F)Y = 0 on cross pairs
  double mixed_cond1 = 0.0;
  double mixed_cond2 = 0.0;
  double umbilicity_defect = 0.0;  // min_L max_ij |h_ij - G_ij L|
  Vec umbilicity_L;                // least-squares minimiser (ambient)
  double pa_commute = 0.0;         // max |P A_N X - A_N P X| for X in D1
  // min(|h(X,Y)|, |f^2 h(X,Y) - h(X,Y)|) over cross pairs
  double f2_dichotomy = 0.0;
};

GeodesyReport geodesy_report(const ImmersionChart& chart, const DistributionSpec& d1,
                             const DistributionSpec& d2, const SamplingPlan& plan,
                             const Tolerances& tol = {});

// max |g(R~(X,Y)Z, W)| for X,Y in D and Z,W in Dperp (ambient
// representatives E B), over the sampled points.
double cr_curvature_check(const ImmersionChart& chart, const DistributionSpec& d,
                          const DistributionSpec& dperp, double c,
                          const SamplingPlan& plan, const Tolerances& tol = {});

}  // namespace paraslant
