#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bzeta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or configuration (out-of-range order, non-positive parameter, ...).
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// Evaluation requested outside the region where the chosen representation is valid.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Evaluation requested exactly at a pole.
class PoleError : public Error {
public:
  PoleError(const std::string& what, std::complex<double> pole)
      : Error(what), pole_(pole) {}
  std::complex<double> pole() const { return pole_; }

private:
  std::complex<double> pole_;
};

/// A truncation or cell budget was exhausted before the requested tolerance was met.
/// Carries the best value obtained so far.
class AccuracyError : public Error {
public:
  AccuracyError(const std::string& what, std::complex<double> partial, double error)
      : Error(what), partial_(partial), error_(error) {}
  std::complex<double> partial() const { return partial_; }
  double error() const { return error_; }

private:
  std::complex<double> partial_;
  double error_;
};

/// A function evaluation produced a non-finite value.
class EvaluationError : public Error {
public:
  using Error::Error;
};

/// Two independent routes disagree beyond their combined error estimates.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

}  // namespace bzeta
