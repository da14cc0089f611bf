#ifndef SALPROP_ERRORS_HPP
#define SALPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace salprop {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Evaluation requested at a non-removable singular point.
class SingularityError : public Error {
public:
  explicit SingularityError(const std::string& msg) : Error(msg) {}
};

/// Propagator queried on the light cone |x| = t.
class LightConeSingularity : public SingularityError {
public:
  explicit LightConeSingularity(const std::string& msg) : SingularityError(msg) {}
};

/// Quadrature budget exhausted before reaching the requested tolerance.
class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

/// Semi-infinite integration detected a non-decaying tail.
class DecayError : public Error {
public:
  explicit DecayError(const std::string& msg) : Error(msg) {}
};

/// Oscillatory tail acceleration failed (partial sums not alternating).
class AccelerationError : public Error {
public:
  explicit AccelerationError(const std::string& msg) : Error(msg) {}
};

/// Principal-value poles too close together or outside the interval.
class PoleSeparationError : public Error {
public:
  explicit PoleSeparationError(const std::string& msg) : Error(msg) {}
};

/// The two integral representations disagree at the calibration point.
class SignCalibrationError : public Error {
public:
  explicit SignCalibrationError(const std::string& msg) : Error(msg) {}
};

/// Wave-function grid does not cover the support of the evolved state.
class GridError : public Error {
public:
  explicit GridError(const std::string& msg) : Error(msg) {}
};

}  // namespace salprop

#endif  // SALPROP_ERRORS_HPP
