#pragma once

// Command-line driver. Exit codes:
//   0  every requested check passed
//   1  some axiom or functor condition failed
//   2  usage or input error
//   3  search budget exceeded
//   4  a proposition assertion failed

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skewcheck/io.hpp"

namespace skewcheck::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kBudget = 3, kViolated = 4 };

/// paper-left, paper-mid, paper-right, paper-unitunit, terminal, codisc2, bz2.
std::vector<std::string> builtin_names();
/// The document `export` writes for a builtin; nullopt for unknown names.
std::optional<io::json> builtin_document(const std::string& name);

/// SKEWCHECK_BUDGET when set, else the default. Throws ParseError on junk.
std::uint64_t budget_from_env();

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewcheck::cli
