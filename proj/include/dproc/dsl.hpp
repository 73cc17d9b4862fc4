#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dproc/model.hpp"

namespace dproc {

/// A parsed `.dproc` document: one named process and its stakeholders.
struct ProcessSpec {
  std::string name;
  DeclarativeProcess process;
  std::vector<Stakeholder> stakeholders;

  /// Throws Error when there are no stakeholders.
  StakeholderSystem system() const;

  friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

/// Parses the process DSL:
///
///     process NAME {
///       activities { 1 "Finish dinner"; 2; }
///       constraints { resp(1, 2); choice1({1, 2}); }
///     }
///     stakeholder S1 "child" { prefer not participation(5) and initial(1); }
///
/// `#` starts a line comment. Preference operators bind not > and > or, all
/// left-associative. Throws SyntaxError, ArityError (both carrying the
/// line:column of the offending token) or UnknownActivity.
ProcessSpec parse_spec(std::string_view text);

/// Reads and parses a file. Throws Error when the file cannot be read.
ProcessSpec load_spec(const std::filesystem::path& path);

/// Inverse of parse_spec up to whitespace and comments.
std::string print_spec(const ProcessSpec& spec);

/// DSL form of one constraint, e.g. `resp(1, 2)` or `choice1({3, 4, 6, 8})`.
std::string format_constraint(const ConstraintTemplate& c, const Alphabet& alphabet);

/// DSL form of a preference with the minimal parentheses that reparse to the
/// same tree.
std::string format_preference(const Preference& p, const Alphabet& alphabet);

}  // namespace dproc
