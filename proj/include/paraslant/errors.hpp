#pragma once

#include <stdexcept>
#include <string>

namespace paraslant {

// Bad caller input: unknown names, dimension mismatches, out-of-domain points.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Jet arithmetic left the function's domain ("jet-division-by-zero",
// "jet-domain-error").
class JetError : public std::runtime_error {
 public:
  explicit JetError(const std::string& what) : std::runtime_error(what) {}
};

// Induced or restricted metric too close to singular to trust a solve.
class DegenerateMetricError : public std::runtime_error {
 public:
  explicit DegenerateMetricError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace paraslant
