#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dproc/model.hpp"

namespace dproc {

inline constexpr std::size_t kDefaultMaxAlphabet = 12;

enum class Strategy : std::uint8_t { brute, leaf, automatic };

std::string_view strategy_name(Strategy s) noexcept;
/// Accepts "brute", "leaf" and "auto".
std::optional<Strategy> strategy_from_name(std::string_view name) noexcept;

/// One peeled leaf: `leaf` occurs only as the second argument of
/// `constraint`, whose first argument is `anchor`.
struct LeafStep {
  ConstraintTemplate constraint;
  ActivityId leaf;
  ActivityId anchor;

  friend bool operator==(const LeafStep&, const LeafStep&) = default;
};

struct EnumerationOptions {
  Strategy strategy = Strategy::automatic;
  /// Largest alphabet (or leaf-stripped core) handed to brute force.
  std::size_t max_alphabet = kDefaultMaxAlphabet;
  unsigned workers = 1;
};

struct EnumerationResult {
  TraceSet traces;
  std::uint64_t satisfies_calls = 0;
  /// brute or leaf; never automatic.
  Strategy strategy = Strategy::brute;
  /// Peel order; empty for brute force.
  std::vector<LeafStep> peel_sequence;
};

/// Number of permutations of all subsets of an n-element set,
/// sum_{k=0..n} n!/(n-k)!. Throws Overflow past 64 bits (n > 20).
std::uint64_t enumeration_workload(std::size_t n);

/// Checks every permutation of every subset of the alphabet. Subsets are
/// visited by size then lexicographically, permutations lexicographically;
/// subsets are shared among `options.workers` threads. Throws
/// AlphabetTooLarge when |alphabet| > options.max_alphabet.
EnumerationResult unique_traces_brute(const DeclarativeProcess& process, const EnumerationOptions& options = {});

/// Repeatedly peels the lowest-id activity j whose only constraint occurrence
/// is as the second argument of resp(i,j), prec(i,j) or succ(i,j), i != j.
/// Each step is found on the process left by the previous ones.
std::vector<LeafStep> find_leaves(const DeclarativeProcess& process);

/// Re-insertion of a resp(i,j) leaf into the unique traces of the peeled
/// process. Traces containing i are replaced by their insertions of j after i;
/// traces without i are kept alongside every insertion of j. Candidates are
/// filtered by `check`, the constraint set of the process being rebuilt.
/// `satisfies_calls`, when given, is incremented once per check.
TraceSet reinsert_resp(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                       std::uint64_t* satisfies_calls = nullptr);

/// prec(i,j): every trace is kept; those containing i also gain insertions of
/// j after i.
TraceSet reinsert_prec(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                       std::uint64_t* satisfies_calls = nullptr);

/// succ(i,j): traces containing i are replaced by insertions of j after i;
/// traces without i are kept unchanged.
TraceSet reinsert_succ(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                       std::uint64_t* satisfies_calls = nullptr);

/// Dispatches on the step's template kind.
TraceSet reinsert(const TraceSet& base, const LeafStep& step, std::span<const ConstraintTemplate> check,
                  std::uint64_t* satisfies_calls = nullptr);

/// UniqueTraces(D). `leaf` peels every leaf, brute-forces the core and
/// re-inserts in reverse peel order; `automatic` uses leaf when at least one
/// leaf exists. All strategies return the same trace set.
EnumerationResult unique_traces(const DeclarativeProcess& process, const EnumerationOptions& options = {});

}  // namespace dproc
