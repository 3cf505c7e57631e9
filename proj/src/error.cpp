#include "skewcheck/error.hpp"

#include <algorithm>

namespace skewcheck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::UndefinedComposite: return "UndefinedComposite";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::PropositionViolated: return "PropositionViolated";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = std::to_string(violations.size()) + " violation(s)";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 3);
  for (std::size_t i = 0; i < shown; ++i) {
    out += "; ";
    out += to_string(violations[i].kind);
    out += ": ";
    out += violations[i].message;
  }
  if (violations.size() > shown) out += "; ...";
  return out;
}

ErrorKind first_kind(const std::vector<Violation>& violations) {
  return violations.empty() ? ErrorKind::MalformedTable : violations.front().kind;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(first_kind(violations), summarize(violations)), violations_(std::move(violations)) {}

bool ValidationError::has(ErrorKind kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

SearchBudgetExceeded::SearchBudgetExceeded(std::uint64_t partial_count, std::uint64_t budget)
    : Error(ErrorKind::SearchBudgetExceeded,
            "explored " + std::to_string(partial_count) + " candidates, budget " +
                std::to_string(budget)),
      partial_count_(partial_count),
      budget_(budget) {}

}  // namespace skewcheck
