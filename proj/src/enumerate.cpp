#include "dproc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dproc/errors.hpp"

namespace dproc {
namespace {

struct BruteOutput {
  std::vector<Trace> traces;
  std::uint64_t calls = 0;
};

// Subsets of `activities` as index lists, ordered by size then lexicographically.
std::vector<std::vector<ActivityId>> ordered_subsets(std::span<const ActivityId> activities) {
  const std::size_t n = activities.size();
  std::vector<std::vector<ActivityId>> out;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<ActivityId> subset(k);
      for (std::size_t i = 0; i < k; ++i) subset[i] = activities[idx[i]];
      out.push_back(std::move(subset));
      // next k-combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

void scan_subset(std::vector<ActivityId> perm, std::span<const ConstraintTemplate> constraints, BruteOutput& out) {
  do {
    ++out.calls;
    if (satisfies(perm, constraints)) out.traces.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

BruteOutput brute_force(std::span<const ActivityId> activities, std::span<const ConstraintTemplate> constraints,
                        unsigned workers) {
  std::vector<ActivityId> sorted(activities.begin(), activities.end());
  std::sort(sorted.begin(), sorted.end());
  const auto subsets = ordered_subsets(sorted);

  std::vector<BruteOutput> per_subset(subsets.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < subsets.size(); i = cursor++) {
      scan_subset(subsets[i], constraints, per_subset[i]);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(subsets.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  BruteOutput merged;
  for (auto& part : per_subset) {
    merged.calls += part.calls;
    std::move(part.traces.begin(), part.traces.end(), std::back_inserter(merged.traces));
  }
  return merged;
}

void require_absent(const TraceSet& base, ActivityId j) {
  for (const auto& t : base) {
    if (t.contains(j)) throw Error("re-insertion base already contains the leaf activity");
  }
}

// Appends the insertions of j at positions from..size(sigma) that pass `check`.
void insert_from(const Trace& sigma, std::size_t from, ActivityId j, std::span<const ConstraintTemplate> check,
                 std::uint64_t& calls, std::vector<Trace>& out) {
  for (std::size_t pos = from; pos <= sigma.size(); ++pos) {
    Trace mu = sigma.inserted(pos, j);
    ++calls;
    if (satisfies(mu, check)) out.push_back(std::move(mu));
  }
}

enum class Absent { keep_only, keep_and_insert };
enum class Present { keep_and_insert_after, insert_after_only };

TraceSet reinsert_generic(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                          std::uint64_t* satisfies_calls, Present present, Absent absent) {
  require_absent(base, step.leaf);
  std::uint64_t calls = 0;
  std::vector<Trace> out;
  for (const Trace& sigma : base) {
    if (auto at = sigma.index_of(step.anchor)) {
      if (present == Present::keep_and_insert_after) out.push_back(sigma);
      insert_from(sigma, *at + 1, step.leaf, check, calls, out);
    } else {
      out.push_back(sigma);
      if (absent == Absent::keep_and_insert) insert_from(sigma, 0, step.leaf, check, calls, out);
    }
  }
  if (satisfies_calls) *satisfies_calls += calls;
  return TraceSet(std::move(out));
}

EnumerationResult run_brute(const DeclarativeProcess& process, const EnumerationOptions& options) {
  const std::size_t n = process.alphabet().size();
  if (n > options.max_alphabet) {
    throw AlphabetTooLarge("alphabet has " + std::to_string(n) + " activities; brute-force limit is " +
                           std::to_string(options.max_alphabet));
  }
  std::vector<ActivityId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<ActivityId>(i);
  auto out = brute_force(all, process.constraints(), options.workers);
  EnumerationResult result;
  result.traces = TraceSet(std::move(out.traces));
  result.satisfies_calls = out.calls;
  result.strategy = Strategy::brute;
  return result;
}

EnumerationResult run_leaf(const DeclarativeProcess& process, const EnumerationOptions& options,
                           std::vector<LeafStep> steps) {
  const std::size_t n = process.alphabet().size();
  std::vector<bool> peeled(n, false);
  std::vector<ConstraintTemplate> core_constraints(process.constraints().begin(), process.constraints().end());
  for (const auto& step : steps) {
    peeled[step.leaf] = true;
    core_constraints.erase(std::find(core_constraints.begin(), core_constraints.end(), step.constraint));
  }
  std::vector<ActivityId> core;
  for (std::size_t i = 0; i < n; ++i) {
    if (!peeled[i]) core.push_back(static_cast<ActivityId>(i));
  }
  if (core.size() > options.max_alphabet) {
    throw AlphabetTooLarge("leaf-stripped core has " + std::to_string(core.size()) +
                           " activities; brute-force limit is " + std::to_string(options.max_alphabet));
  }

  auto base = brute_force(core, core_constraints, options.workers);
  EnumerationResult result;
  result.satisfies_calls = base.calls;
  TraceSet traces(std::move(base.traces));
  std::vector<ConstraintTemplate> check = core_constraints;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    check.push_back(it->constraint);
    traces = reinsert(traces, *it, check, &result.satisfies_calls);
  }
  result.traces = std::move(traces);
  result.strategy = Strategy::leaf;
  result.peel_sequence = std::move(steps);
  return result;
}

}  // namespace

std::string_view strategy_name(Strategy s) noexcept {
  switch (s) {
    case Strategy::brute: return "brute";
    case Strategy::leaf: return "leaf";
    case Strategy::automatic: return "auto";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) noexcept {
  if (name == "brute") return Strategy::brute;
  if (name == "leaf") return Strategy::leaf;
  if (name == "auto") return Strategy::automatic;
  return std::nullopt;
}

std::uint64_t enumeration_workload(std::size_t n) {
  // sum_{k=0..n} n!/(n-k)!, accumulated as the falling factorials n, n(n-1), ...
  std::uint64_t total = 1;
  std::uint64_t term = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (__builtin_mul_overflow(term, static_cast<std::uint64_t>(n - k + 1), &term) ||
        __builtin_add_overflow(total, term, &total)) {
      throw Overflow("enumeration workload for n = " + std::to_string(n) + " exceeds 64 bits");
    }
  }
  return total;
}

EnumerationResult unique_traces_brute(const DeclarativeProcess& process, const EnumerationOptions& options) {
  return run_brute(process, options);
}

std::vector<LeafStep> find_leaves(const DeclarativeProcess& process) {
  std::vector<ConstraintTemplate> remaining(process.constraints().begin(), process.constraints().end());
  std::vector<LeafStep> steps;
  const std::size_t n = process.alphabet().size();
  std::vector<bool> removed(n, false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (ActivityId j = 0; j < n && !progress; ++j) {
      if (removed[j]) continue;
      const ConstraintTemplate* only = nullptr;
      std::size_t uses = 0;
      for (const auto& c : remaining) {
        if (std::size_t k = c.occurrences(j)) {
          uses += k;
          only = &c;
        }
      }
      if (uses != 1) continue;
      const auto kind = only->kind();
      if (kind != TemplateKind::resp && kind != TemplateKind::prec && kind != TemplateKind::succ) continue;
      if (only->second() != j) continue;
      steps.push_back({*only, j, only->first()});
      removed[j] = true;
      remaining.erase(remaining.begin() + (only - remaining.data()));
      progress = true;
    }
  }
  return steps;
}

TraceSet reinsert_resp(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                       std::uint64_t* satisfies_calls) {
  return reinsert_generic(base, step, check, satisfies_calls, Present::insert_after_only, Absent::keep_and_insert);
}

TraceSet reinsert_prec(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                       std::uint64_t* satisfies_calls) {
  return reinsert_generic(base, step, check, satisfies_calls, Present::keep_and_insert_after, Absent::keep_only);
}

TraceSet reinsert_succ(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                       std::uint64_t* satisfies_calls) {
  return reinsert_generic(base, step, check, satisfies_calls, Present::insert_after_only, Absent::keep_only);
}

TraceSet reinsert(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                  std::uint64_t* satisfies_calls) {
  switch (step.constraint.kind()) {
    case TemplateKind::resp: return reinsert_resp(base, step, check, satisfies_calls);
    case TemplateKind::prec: return reinsert_prec(base, step, check, satisfies_calls);
    case TemplateKind::succ: return reinsert_succ(base, step, check, satisfies_calls);
    default: throw Error("leaf re-insertion supports resp, prec and succ only");
  }
}

EnumerationResult unique_traces(const DeclarativeProcess& process, const EnumerationOptions& options) {
  if (options.strategy == Strategy::brute) return run_brute(process, options);
  auto steps = find_leaves(process);
  if (options.strategy == Strategy::automatic && steps.empty()) return run_brute(process, options);
  return run_leaf(process, options, std::move(steps));
}

}  // namespace dproc
