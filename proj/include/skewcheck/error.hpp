#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewcheck {

enum class ErrorKind {
  MalformedTable,
  UndefinedComposite,
  NonAssociative,
  BadIdentity,
  CapExceeded,
  UnknownObject,
  ShapeMismatch,
  NotFunctorial,
  NotNatural,
  NotAUnit,
  NotAnIsomorphism,
  PreconditionUnmet,
  PropositionViolated,
  SearchBudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// One violated law found while validating tables. `ids` names the offending
/// morphisms (or objects, for object-level laws).
struct Violation {
  ErrorKind kind;
  std::string message;
  std::vector<std::int32_t> ids;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  bool has(ErrorKind kind) const;

 private:
  std::vector<Violation> violations_;
};

class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(std::uint64_t partial_count, std::uint64_t budget);

  std::uint64_t partial_count() const noexcept { return partial_count_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t partial_count_;
  std::uint64_t budget_;
};

}  // namespace skewcheck
