#pragma once

#include <string>
#include <utility>
#include <vector>

#include "paraslant/linalg.hpp"

namespace paraslant {

// Flat para Kaehler ambient space: R^{2n} with constant (J, g) satisfying
// J^2 = I and J'g + gJ = 0. Constant coefficients make the ambient
// connection the coordinate derivative, so the para Kaehler condition
// holds identically.
struct AmbientStructure {
  std::string name;
  int dim = 0;
  Mat J;
  Mat g;
};

struct AxiomViolation {
  std::string axiom;
  double residual = 0.0;
};

// Empty result iff J^2 = I and J'g + gJ = 0 to 1e-12 and |det g| > 1e-12.
std::vector<AxiomViolation> validate_structure(const AmbientStructure& s);

// (positive, negative) eigenvalue counts of a nondegenerate symmetric g.
std::pair<int, int> signature(const Mat& g);

std::vector<std::string> gallery_structure_names();
AmbientStructure gallery_structure(const std::string& name);

}  // namespace paraslant
