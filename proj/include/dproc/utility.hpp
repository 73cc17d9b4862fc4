#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dproc/formula.hpp"
#include "dproc/model.hpp"

namespace dproc {

/// ln(1 + good) / ln(1 + total). Throws DegenerateProcess when total == 0 and
/// Error when good > total.
double utility(std::uint64_t good, std::uint64_t total);

struct GoodCounts {
  std::vector<std::uint64_t> good;
  std::uint64_t total = 0;

  friend bool operator==(const GoodCounts&, const GoodCounts&) = default;
};

/// Stakeholder utility vector u(T) = (u_1, ..., u_m). Vectors computed from
/// traces or counts keep the counts; vectors supplied directly have none.
struct UtilityVector {
  std::vector<double> values;
  std::optional<GoodCounts> counts;

  static UtilityVector from_counts(std::span<const std::uint64_t> good, std::uint64_t total);
  /// Throws Error when a value lies outside [0, 1] or is not finite.
  static UtilityVector from_values(std::vector<double> values);

  std::size_t size() const noexcept { return values.size(); }

  friend bool operator==(const UtilityVector&, const UtilityVector&) = default;
};

/// Members of `traces` satisfying the preference, in canonical order.
TraceSet good_traces(const TraceSet& traces, const Preference& preference);
TraceSet good_traces(const TraceSet& traces, const Formula& formula);

/// `traces` must be the unique traces of system.process().
UtilityVector utility_vector(const StakeholderSystem& system, const TraceSet& traces);

}  // namespace dproc
