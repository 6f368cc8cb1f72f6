#pragma once

#include <stdexcept>
#include <string>

namespace spm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence that is not weakly decreasing, or an increment that breaks the shape.
class NotAPartition : public Error {
 public:
  using Error::Error;
};

class ColumnOutOfRange : public Error {
 public:
  using Error::Error;
};

class GrainMismatch : public Error {
 public:
  using Error::Error;
};

/// A value that fails the membership characterization of SPM.
class CharacterizationViolation : public Error {
 public:
  using Error::Error;
};

class NodeNotFound : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace spm
