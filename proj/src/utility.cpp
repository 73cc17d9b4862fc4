#include "dproc/utility.hpp"

#include <cmath>
#include <string>

#include "dproc/errors.hpp"

namespace dproc {

double utility(std::uint64_t good, std::uint64_t total) {
  if (total == 0) throw DegenerateProcess("process has no unique traces; utility is undefined");
  if (good > total) {
    throw Error("good trace count " + std::to_string(good) + " exceeds total " + std::to_string(total));
  }
  if (good == total) return 1.0;
  return std::log1p(static_cast<double>(good)) / std::log1p(static_cast<double>(total));
}

UtilityVector UtilityVector::from_counts(std::span<const std::uint64_t> good, std::uint64_t total) {
  UtilityVector v;
  v.values.reserve(good.size());
  for (auto g : good) v.values.push_back(utility(g, total));
  v.counts = GoodCounts{{good.begin(), good.end()}, total};
  return v;
}

UtilityVector UtilityVector::from_values(std::vector<double> values) {
  for (double x : values) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      throw Error("utility value " + std::to_string(x) + " outside [0, 1]");
    }
  }
  return UtilityVector{std::move(values), std::nullopt};
}

TraceSet good_traces(const TraceSet& traces, const Preference& preference) {
  std::vector<Trace> out;
  for (const auto& t : traces) {
    if (preference.holds(t)) out.push_back(t);
  }
  return TraceSet(std::move(out));
}

TraceSet good_traces(const TraceSet& traces, const Formula& formula) {
  std::vector<Trace> out;
  for (const auto& t : traces) {
    if (eval_formula(formula, t)) out.push_back(t);
  }
  return TraceSet(std::move(out));
}

UtilityVector utility_vector(const StakeholderSystem& system, const TraceSet& traces) {
  if (traces.empty()) {
    throw DegenerateProcess("process " + system.label() + " has no unique traces; utility is undefined");
  }
  std::vector<std::uint64_t> good;
  good.reserve(system.size());
  for (const auto& s : system.stakeholders()) good.push_back(good_traces(traces, s.preference).size());
  return UtilityVector::from_counts(good, traces.size());
}

}  // namespace dproc
