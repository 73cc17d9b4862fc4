#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dproc/compare.hpp"
#include "dproc/dsl.hpp"
#include "dproc/enumerate.hpp"

namespace dproc::report {

enum class Format { text, json, tsv };

std::optional<Format> format_from_name(std::string_view name) noexcept;

/// Fixed five-decimal rendering used by every text and TSV table.
std::string fixed5(double x);

/// `{S1, S3}` using stakeholder labels.
std::string format_subset(SubsetMask subset, std::span<const std::string> stakeholders);

/// Left-aligned columns separated by two spaces, no trailing blanks.
class TextTable {
 public:
  void add_row(std::vector<std::string> cells);
  std::string render() const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct TraceListing {
  std::string process;
  const Alphabet* alphabet = nullptr;
  const EnumerationResult* result = nullptr;
  bool count_only = false;
  bool stats = false;
};

std::string render_traces(const TraceListing& listing, Format format);

/// Utility vectors with their counts (when known) for one or more systems.
std::string render_utilities(std::span<const std::string> stakeholders, std::span<const ComparedSystem> systems,
                             Format format);

nlohmann::ordered_json system_to_json(const ComparedSystem& system);
ComparedSystem system_from_json(const nlohmann::json& j);

/// Report schema: stakeholders[], tolerance, systems[{label, trace_count,
/// good_counts[], utilities[], preferences[]}], rows[{subset, h[], winner,
/// winner_label, tie, ties[]}], summary{all, almostall, morethanhalf, any}
/// each {winner, winner_label, freq_num, freq_den, tie, maximizers[]}, notes[].
/// Doubles are written with round-trip precision.
nlohmann::ordered_json to_json(const ComparisonReport& report);

/// Inverse of to_json. Throws Error on a malformed document.
ComparisonReport comparison_from_json(const nlohmann::json& j);

std::string render_comparison(const ComparisonReport& report, Format format);

/// One system per line, `label: u1 u2 ... um`; blank lines and `#` comments
/// are ignored. Throws SyntaxError on malformed lines and
/// MismatchedStakeholders when lines differ in length.
std::vector<ComparedSystem> parse_vector_file(std::string_view text);

}  // namespace dproc::report
