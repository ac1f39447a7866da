#pragma once

#include <stdexcept>
#include <string>

namespace actwfs {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables with inconsistent dimensions or out-of-range entries. Distinct
/// from a law violation, which validate() reports without throwing.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition
/// (mixed monoids, non-commuting square, missing left zero, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace actwfs
