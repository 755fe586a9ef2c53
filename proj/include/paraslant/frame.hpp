#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paraslant/ambient.hpp"
#include "paraslant/expr.hpp"
#include "paraslant/linalg.hpp"

namespace paraslant {

// Parametric immersion u -> x(u) in R^{2n}, components given as
// expressions over the parameters and named constants.
struct ImmersionChart {
  AmbientStructure ambient;
  std::vector<std::string> params;                    // ordered, size m
  std::vector<std::pair<double, double>> domain;      // per parameter
  std::map<std::string, double> constants;
  std::vector<Expr> components;                       // size ambient.dim

  int param_count() const { return static_cast<int>(params.size()); }

  static ImmersionChart make(AmbientStructure ambient,
                             std::vector<std::string> params,
                             std::vector<std::pair<double, double>> domain,
                             std::map<std::string, double> constants,
                             const std::vector<std::string>& component_exprs);

  bool inside_domain(const std::vector<double>& u) const;
};

// Everything the slant/geo machinery needs at one parameter point. The
// normal basis comes from the kernel of E'g: Gram-Schmidt is unusable
// here because the metric admits light-like directions.
struct PointFrame {
  std::vector<double> u;   // parameter point, size m
  Vec x;                   // ambient point, size 2n
  Mat E;                   // 2n x m Jacobian, columns d x / d u_i
  Mat G;                   // m x m induced metric E'gE
  Mat P;                   // m x m tangential part of J in the coordinate frame
  Mat Fcols;               // 2n x m, ambient normal parts of J e_i
  Mat Nbasis;              // 2n x (2n-m) normal-space basis
  Mat tmat;                // m x (2n-m): tangential coefficients of J N_j
  Mat fmat;                // (2n-m) x (2n-m): normal coefficients of J N_j
  Mat gAmb;                // ambient metric (copy, for projections)
  Mat JAmb;                // ambient structure tensor (copy)
  std::vector<Jet3> component_jets;  // order-3 jets of x_a at u

  int tangent_dim() const { return G.rows(); }
  int ambient_dim() const { return E.rows(); }
};

struct FrameOptions {
  double degeneracy_tol = 1e-10;  // relative to max |G| entry
};

PointFrame evaluate_frame(const ImmersionChart& chart, const std::vector<double>& u,
                          const FrameOptions& opts = {});

// v = E a + r with E'g r = 0.
struct TangentSplit {
  Vec tangent_coeffs;  // a, size m
  Vec normal_part;     // r, size 2n
};
TangentSplit tangential_project(const PointFrame& frame, const Vec& v);

enum class Causal { SpaceLike, TimeLike, LightLike };
const char* causal_name(Causal c);

// Sign class of X'GX; |q| below causal_tol times the Euclidean coefficient
// norm squared counts as light-like (G cannot norm a null vector).
Causal causal_character(const PointFrame& frame, const Vec& tangent_coeffs,
                        double causal_tol = 1e-9);

}  // namespace paraslant
