#include "dproc/compare.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "dproc/dsl.hpp"
#include "dproc/errors.hpp"

namespace dproc {
namespace {

// Non-empty subsets of {0..m-1} by size, then lexicographically on indices.
std::vector<SubsetMask> ordered_masks(std::size_t m) {
  std::vector<SubsetMask> out;
  out.reserve((std::size_t{1} << m) - 1);
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= m; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint32_t bits = 0;
      for (auto i : idx) bits |= 1u << i;
      out.emplace_back(bits);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::size_t common_size(std::span<const UtilityVector> vectors) {
  if (vectors.empty()) throw Error("comparison needs at least one system");
  const std::size_t m = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != m) {
      throw MismatchedStakeholders("utility vectors have different lengths (" + std::to_string(m) + " vs " +
                                   std::to_string(v.size()) + ")");
    }
  }
  return m;
}

}  // namespace

SubsetMask SubsetMask::of(std::initializer_list<std::size_t> indices) {
  std::uint32_t bits = 0;
  for (auto i : indices) {
    if (i >= 32) throw Error("stakeholder index out of range");
    bits |= 1u << i;
  }
  return SubsetMask(bits);
}

SubsetMask SubsetMask::full(std::size_t m) {
  if (m > 31) throw TooManyStakeholders("at most 31 stakeholders fit in a subset mask");
  return SubsetMask(static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1));
}

std::size_t SubsetMask::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> SubsetMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

double h_distance(std::span<const double> u) {
  double sum = 0.0;
  for (double x : u) sum += (1.0 - x) * (1.0 - x);
  return std::sqrt(sum);
}

std::vector<double> reduced(std::span<const double> u, SubsetMask subset) {
  if (subset.empty()) throw EmptySubset("stakeholder subset is empty");
  std::vector<double> out;
  for (auto i : subset.indices()) {
    if (i >= u.size()) throw Error("subset names stakeholder " + std::to_string(i + 1) + " of " +
                                   std::to_string(u.size()));
    out.push_back(u[i]);
  }
  return out;
}

SubsetOptimum optimal_for_subset(std::span<const UtilityVector> vectors, SubsetMask subset, double tolerance) {
  if (subset.empty()) throw EmptySubset("stakeholder subset is empty");
  if (vectors.empty()) throw Error("comparison needs at least one system");
  std::vector<double> h;
  h.reserve(vectors.size());
  for (const auto& v : vectors) h.push_back(h_distance(reduced(v.values, subset)));
  const double best = *std::min_element(h.begin(), h.end());
  SubsetOptimum out;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] <= best + tolerance) out.ties.push_back(j);
  }
  out.winner = out.ties.front();
  return out;
}

std::vector<ComparisonRow> subset_scan(std::span<const UtilityVector> vectors, double tolerance,
                                       std::size_t max_stakeholders) {
  const std::size_t m = common_size(vectors);
  if (m == 0) throw EmptySubset("utility vectors are empty");
  if (m > max_stakeholders || m > 31) {
    throw TooManyStakeholders(std::to_string(m) + " stakeholders exceed the subset-scan limit of " +
                              std::to_string(std::min<std::size_t>(max_stakeholders, 31)));
  }
  std::vector<ComparisonRow> rows;
  for (SubsetMask mask : ordered_masks(m)) {
    ComparisonRow row;
    row.subset = mask;
    for (const auto& v : vectors) row.h.push_back(h_distance(reduced(v.values, mask)));
    auto best = optimal_for_subset(vectors, mask, tolerance);
    row.winner = best.winner;
    row.tie = best.tie();
    row.ties = std::move(best.ties);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view stratum_name(Stratum s) noexcept {
  switch (s) {
    case Stratum::all: return "all";
    case Stratum::almost_all: return "almostall";
    case Stratum::more_than_half: return "morethanhalf";
    case Stratum::any: return "any";
  }
  return "?";
}

bool in_stratum(Stratum s, std::size_t subset_size, std::size_t m) noexcept {
  switch (s) {
    case Stratum::all: return subset_size == m;
    case Stratum::almost_all: return subset_size + 1 >= m;
    case Stratum::more_than_half: return 2 * subset_size >= m;
    case Stratum::any: return subset_size >= 1;
  }
  return false;
}

std::string_view guidance_code(Guidance g) noexcept {
  switch (g) {
    case Guidance::all_eq_almostall: return "ALL_EQ_ALMOSTALL";
    case Guidance::divergent: return "DIVERGENT";
    case Guidance::unknown_active_set: return "UNKNOWN_ACTIVE_SET";
  }
  return "?";
}

std::optional<Guidance> guidance_from_code(std::string_view code) noexcept {
  for (auto g : {Guidance::all_eq_almostall, Guidance::divergent, Guidance::unknown_active_set}) {
    if (guidance_code(g) == code) return g;
  }
  return std::nullopt;
}

RobustnessSummary robustness_summary(std::span<const ComparisonRow> rows, std::size_t m) {
  if (m == 0 || m > 31 || rows.size() != (std::size_t{1} << m) - 1) {
    throw Error("robustness summary needs all 2^m - 1 subset rows");
  }
  const std::size_t systems = rows.front().h.size();
  RobustnessSummary summary;
  for (Stratum s : kStrata) {
    std::vector<std::size_t> freq(systems, 0);
    std::size_t den = 0;
    for (const auto& row : rows) {
      if (!in_stratum(s, row.subset.size(), m)) continue;
      ++den;
      ++freq.at(row.winner);
    }
    StratumResult& r = summary.strata[static_cast<std::size_t>(s)];
    const std::size_t top = *std::max_element(freq.begin(), freq.end());
    for (std::size_t j = 0; j < systems; ++j) {
      if (freq[j] == top) r.maximizers.push_back(j);
    }
    r.winner = r.maximizers.front();
    r.freq_num = top;
    r.freq_den = den;
    r.tie = r.maximizers.size() > 1;
  }
  const auto& all = summary[Stratum::all];
  summary.notes.push_back(all.winner == summary[Stratum::almost_all].winner ? Guidance::all_eq_almostall
                                                                            : Guidance::divergent);
  if (summary[Stratum::any].winner != all.winner) summary.notes.push_back(Guidance::unknown_active_set);
  return summary;
}

ComparisonReport compare(std::vector<ComparedSystem> systems, std::vector<std::string> stakeholders,
                         const CompareOptions& options) {
  if (systems.empty()) throw Error("comparison needs at least one system");
  std::vector<UtilityVector> vectors;
  for (const auto& s : systems) {
    if (s.utilities.size() != stakeholders.size()) {
      throw MismatchedStakeholders("system " + s.label + " has " + std::to_string(s.utilities.size()) +
                                   " utilities but there are " + std::to_string(stakeholders.size()) +
                                   " stakeholders");
    }
    vectors.push_back(s.utilities);
  }
  ComparisonReport report;
  report.rows = subset_scan(vectors, options.tolerance, options.max_stakeholders);
  report.summary = robustness_summary(report.rows, stakeholders.size());
  report.stakeholders = std::move(stakeholders);
  report.systems = std::move(systems);
  report.tolerance = options.tolerance;
  return report;
}

ComparisonReport compare(std::span<const StakeholderSystem> systems, const CompareOptions& options,
                         std::optional<std::span<const UtilityVector>> precomputed) {
  if (systems.empty()) throw Error("comparison needs at least one system");
  if (precomputed && precomputed->size() != systems.size()) {
    throw Error("precomputed vectors do not match the number of systems");
  }
  const std::size_t m = systems.front().size();
  std::vector<ComparedSystem> compared;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& sys = systems[i];
    if (sys.size() != m) {
      throw MismatchedStakeholders("system " + sys.label() + " has " + std::to_string(sys.size()) +
                                   " stakeholders, expected " + std::to_string(m));
    }
    ComparedSystem c;
    c.label = sys.label();
    for (const auto& s : sys.stakeholders()) {
      c.preferences.push_back(format_preference(s.preference, sys.process().alphabet()));
    }
    if (precomputed) {
      c.utilities = (*precomputed)[i];
    } else {
      auto traces = unique_traces(sys.process(), options.enumeration).traces;
      c.utilities = utility_vector(sys, traces);
    }
    compared.push_back(std::move(c));
  }
  std::vector<std::string> labels;
  for (const auto& s : systems.front().stakeholders()) labels.push_back(s.label);
  return compare(std::move(compared), std::move(labels), options);
}

}  // namespace dproc
