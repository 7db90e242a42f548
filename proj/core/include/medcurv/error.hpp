#pragma once

#include <stdexcept>
#include <string>

namespace medcurv {

/// Machine-readable failure classes. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kConfig = 2,
  kPrecondition = 3,
  kResource = 4,
  kInvariant = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCode::kConfig, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorCode::kPrecondition, what) {}
};

/// Elements from two different groups were combined.
class FamilyMismatchError : public PreconditionError {
 public:
  explicit FamilyMismatchError(const std::string& what) : PreconditionError(what) {}
};

/// An element's norm is larger than the radius of the table that was asked about it.
class OutOfBallError : public PreconditionError {
 public:
  explicit OutOfBallError(const std::string& what) : PreconditionError(what) {}
};

/// Targeted search found no expression within its length limit or element budget.
class NormExceedsLimitError : public PreconditionError {
 public:
  explicit NormExceedsLimitError(const std::string& what) : PreconditionError(what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorCode::kResource, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorCode::kInvariant, what) {}
};

}  // namespace medcurv
