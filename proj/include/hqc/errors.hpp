#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hqc {

using cplx = std::complex<double>;

/// A point outside the unit disk (or another domain violation).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter outside its admissible range (K < 1, |mu| >= 1, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sample point at which a precondition fails; carries the offending point.
class WitnessError : public std::runtime_error {
 public:
  WitnessError(const std::string& what, cplx witness)
      : std::runtime_error(what), witness_(witness) {}
  cplx witness() const noexcept { return witness_; }

 private:
  cplx witness_;
};

/// A requested evaluation too close to a sampling ring to be accurate.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hqc
