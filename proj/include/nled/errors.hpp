#pragma once

#include <stdexcept>
#include <string>

namespace nled {

// Base class for all library errors so callers can catch nled failures
// separately from std ones.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (non-unit normal, bad symmetry
// class, invalid shape, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// 1 + xi <= 0 (or a fitted metric is singular): the effective metric cannot
// be inverted.
struct DegenerateMetricError : Error {
  using Error::Error;
};

// The dispersion cone collapses for the requested direction
// (1 + xi cos^2 theta <= 0, or a vanishing polarization normalization).
struct DegenerateConeError : Error {
  using Error::Error;
};

// The Fresnel determinant has no propagating quartic in the requested
// direction (vanishing leading coefficient, or fewer than two real
// non-negative phase speeds).
struct OmegaDegenerateError : Error {
  using Error::Error;
};

struct FitUnderdeterminedError : Error {
  using Error::Error;
};

// The sampled null covectors are not described by a single quadratic form:
// hidden birefringence or a non-factorizing quartic.
struct FitInconsistentError : Error {
  using Error::Error;
};

struct TetradConstructionError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace nled
