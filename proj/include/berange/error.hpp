#pragma once

#include <stdexcept>
#include <string>

namespace berange {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside its documented range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the domain of a kernel space (|z| >= 1 - 1e-12, bad index).
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole or a vanishing denominator.
class Singularity : public Error {
 public:
  using Error::Error;
};

/// Power series of 1/(cz+d) would not converge on the closed unit disk.
class ExpansionDivergence : public Error {
 public:
  using Error::Error;
};

/// Symbol fails validate_self_map; composition operator is not defined.
class NotSelfMap : public Error {
 public:
  NotSelfMap() : Error("symbol is not a self-map of the disk") {}
};

/// Numerical precondition violated (e.g. non-Hermitian input to the eigensolver).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace berange
