#pragma once

#include <stdexcept>
#include <string>

namespace d2d {

// Parameter failed a model invariant; message names the field and the bound.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Config file missing, unparseable, or carrying unknown keys.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical quadrature failed to reach its tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error;
};

// Numerical Laplace inversion diverged or hit a singular factor.
class InversionError : public std::runtime_error {
 public:
  explicit InversionError(const std::string& what) : std::runtime_error(what) {}
};

// Any other analytical-pipeline failure (singular determinant factor,
// failed quantile bracket, unknown sweep axis).
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace d2d
