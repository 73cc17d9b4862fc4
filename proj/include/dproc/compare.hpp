#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dproc/enumerate.hpp"
#include "dproc/utility.hpp"

namespace dproc {

inline constexpr double kDefaultTieTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxStakeholders = 20;

/// A set of stakeholder indices (0-based internally, S1 = bit 0).
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}
  static SubsetMask of(std::initializer_list<std::size_t> indices);
  static SubsetMask full(std::size_t m);

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(std::size_t i) const noexcept { return i < 32 && ((bits_ >> i) & 1u); }
  std::vector<std::size_t> indices() const;

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Euclidean distance from u to the all-ones vector.
double h_distance(std::span<const double> u);

/// Entries of u at the indices in X, in index order. Throws EmptySubset, or
/// Error when X names an index past the end of u.
std::vector<double> reduced(std::span<const double> u, SubsetMask subset);

struct SubsetOptimum {
  std::size_t winner = 0;
  /// Every system within the tolerance of the minimum, ascending.
  std::vector<std::size_t> ties;

  bool tie() const noexcept { return ties.size() > 1; }
};

/// argmin over systems of h_distance(reduced(v, X)); ties within `tolerance`
/// go to the smallest index.
SubsetOptimum optimal_for_subset(std::span<const UtilityVector> vectors, SubsetMask subset,
                                 double tolerance = kDefaultTieTolerance);

struct ComparisonRow {
  SubsetMask subset;
  std::vector<double> h;
  std::size_t winner = 0;
  std::vector<std::size_t> ties;
  bool tie = false;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

/// Every non-empty subset in (size, lexicographic) order. Throws
/// TooManyStakeholders when m > max_stakeholders and
/// MismatchedStakeholders when the vectors differ in length.
std::vector<ComparisonRow> subset_scan(std::span<const UtilityVector> vectors,
                                       double tolerance = kDefaultTieTolerance,
                                       std::size_t max_stakeholders = kDefaultMaxStakeholders);

/// Subset families used to judge robustness: |X| = m, |X| >= m-1,
/// |X| >= m/2, and every non-empty X.
enum class Stratum : std::uint8_t { all, almost_all, more_than_half, any };

inline constexpr std::array<Stratum, 4> kStrata{Stratum::all, Stratum::almost_all, Stratum::more_than_half,
                                                Stratum::any};

/// JSON key: all, almostall, morethanhalf, any.
std::string_view stratum_name(Stratum s) noexcept;
bool in_stratum(Stratum s, std::size_t subset_size, std::size_t m) noexcept;

struct StratumResult {
  std::size_t winner = 0;
  std::size_t freq_num = 0;
  std::size_t freq_den = 0;
  /// Several systems share the highest frequency.
  bool tie = false;
  std::vector<std::size_t> maximizers;

  friend bool operator==(const StratumResult&, const StratumResult&) = default;
};

enum class Guidance : std::uint8_t {
  all_eq_almostall,    // the full-set optimum also wins the almost-all stratum
  divergent,           // it does not: the choice needs a closer look
  unknown_active_set,  // the any-subset winner differs from the full-set optimum
};

std::string_view guidance_code(Guidance g) noexcept;
std::optional<Guidance> guidance_from_code(std::string_view code) noexcept;

struct RobustnessSummary {
  std::array<StratumResult, 4> strata{};
  std::vector<Guidance> notes;

  const StratumResult& operator[](Stratum s) const noexcept { return strata[static_cast<std::size_t>(s)]; }

  friend bool operator==(const RobustnessSummary&, const RobustnessSummary&) = default;
};

/// Most frequent row winner per stratum. Throws Error unless `rows` holds
/// exactly the 2^m - 1 non-empty subsets.
RobustnessSummary robustness_summary(std::span<const ComparisonRow> rows, std::size_t m);

struct ComparedSystem {
  std::string label;
  UtilityVector utilities;
  /// Preference texts, kept for audit; empty when vectors were supplied.
  std::vector<std::string> preferences;

  friend bool operator==(const ComparedSystem&, const ComparedSystem&) = default;
};

struct ComparisonReport {
  std::vector<std::string> stakeholders;
  std::vector<ComparedSystem> systems;
  std::vector<ComparisonRow> rows;
  RobustnessSummary summary;
  double tolerance = kDefaultTieTolerance;

  /// Row of the full stakeholder set.
  const ComparisonRow& full_row() const { return rows.back(); }
};

struct CompareOptions {
  double tolerance = kDefaultTieTolerance;
  std::size_t max_stakeholders = kDefaultMaxStakeholders;
  EnumerationOptions enumeration;
};

/// Steps 2-4 on supplied vectors. Throws MismatchedStakeholders when a
/// vector's length differs from stakeholders.size(), Error on no systems.
ComparisonReport compare(std::vector<ComparedSystem> systems, std::vector<std::string> stakeholders,
                         const CompareOptions& options = {});

/// Enumerates each system's unique traces (unless `precomputed` supplies the
/// vectors) and compares. Stakeholder labels come from the first system.
ComparisonReport compare(std::span<const StakeholderSystem> systems, const CompareOptions& options = {},
                         std::optional<std::span<const UtilityVector>> precomputed = std::nullopt);

}  // namespace dproc
