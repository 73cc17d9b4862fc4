#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dproc/preference.hpp"
#include "dproc/templates.hpp"

namespace dproc {

struct Activity {
  ActivityId id = 0;
  /// External name used in constraints, traces and reports. Defaults to the
  /// decimal id.
  std::string label;
  /// Free-text description, presentation only.
  std::string description;

  friend bool operator==(const Activity&, const Activity&) = default;
};

/// The activity set of a process. Ids are contiguous from 0 and labels are
/// unique.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws DuplicateActivityId on repeated ids or labels, and on ids that are
  /// not contiguous from 0.
  explicit Alphabet(std::vector<Activity> activities);

  /// Activities labelled with the given numbers, in that order.
  static Alphabet numbered(std::initializer_list<int> labels);
  static Alphabet numbered(std::span<const int> labels);
  /// Activities labelled 1..n.
  static Alphabet range(std::size_t n);

  std::size_t size() const noexcept { return activities_.size(); }
  bool empty() const noexcept { return activities_.empty(); }
  bool contains(ActivityId id) const noexcept { return id < activities_.size(); }
  const Activity& operator[](ActivityId id) const { return activities_.at(id); }
  const std::string& label(ActivityId id) const { return activities_.at(id).label; }
  std::optional<ActivityId> find(std::string_view label) const noexcept;
  /// Like find, but throws UnknownActivity.
  ActivityId id_of(std::string_view label) const;
  std::span<const Activity> activities() const noexcept { return activities_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Activity> activities_;
};

/// A finite sequence of activity ids. Ordered canonically: shorter traces
/// first, then lexicographically on ids.
class Trace {
 public:
  Trace() = default;
  Trace(std::initializer_list<ActivityId> events) : events_(events) {}
  explicit Trace(std::vector<ActivityId> events) : events_(std::move(events)) {}
  explicit Trace(EventSpan events) : events_(events.begin(), events.end()) {}

  std::span<const ActivityId> events() const noexcept { return events_; }
  operator EventSpan() const noexcept { return events_; }  // NOLINT
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  ActivityId operator[](std::size_t i) const noexcept { return events_[i]; }
  bool contains(ActivityId a) const noexcept;
  /// Position of the first occurrence of `a`.
  std::optional<std::size_t> index_of(ActivityId a) const noexcept;
  /// Copy with `a` inserted before position `pos` (0..size()).
  Trace inserted(std::size_t pos, ActivityId a) const;

  friend bool operator==(const Trace&, const Trace&) = default;
  friend std::strong_ordering operator<=>(const Trace& a, const Trace& b) noexcept;

 private:
  std::vector<ActivityId> events_;
};

/// True iff no activity id repeats.
bool is_unique_trace(EventSpan trace);

/// Renders `(1, 2, 4)` with activity labels, or `ε` for the empty trace.
std::string format_trace(EventSpan trace, const Alphabet& alphabet);

/// Parses the command-line trace literal: `ε`, `()`, or `(l1,l2,...)` of
/// activity labels; parentheses are optional. Throws UnknownActivity or
/// SyntaxError.
Trace parse_trace(std::string_view text, const Alphabet& alphabet);

/// Duplicate-free, canonically ordered collection of traces.
class TraceSet {
 public:
  TraceSet() = default;
  /// Deduplicates and sorts.
  explicit TraceSet(std::vector<Trace> traces);

  std::size_t size() const noexcept { return traces_.size(); }
  bool empty() const noexcept { return traces_.empty(); }
  bool contains(const Trace& t) const noexcept;
  const Trace& operator[](std::size_t i) const { return traces_[i]; }
  auto begin() const noexcept { return traces_.begin(); }
  auto end() const noexcept { return traces_.end(); }
  std::span<const Trace> traces() const noexcept { return traces_; }

  friend bool operator==(const TraceSet&, const TraceSet&) = default;

 private:
  std::vector<Trace> traces_;
};

TraceSet canonicalize(std::vector<Trace> traces);

/// D = (alphabet, constraints), validated.
class DeclarativeProcess {
 public:
  DeclarativeProcess() = default;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const ConstraintTemplate> constraints() const noexcept { return constraints_; }

  friend bool operator==(const DeclarativeProcess&, const DeclarativeProcess&) = default;
  friend DeclarativeProcess make_process(Alphabet, std::vector<ConstraintTemplate>);

 private:
  DeclarativeProcess(Alphabet alphabet, std::vector<ConstraintTemplate> constraints)
      : alphabet_(std::move(alphabet)), constraints_(std::move(constraints)) {}

  Alphabet alphabet_;
  std::vector<ConstraintTemplate> constraints_;
};

/// Throws UnknownActivity when a constraint mentions an id outside the alphabet.
DeclarativeProcess make_process(Alphabet alphabet, std::vector<ConstraintTemplate> constraints);

struct Stakeholder {
  std::string label;
  std::string description;
  Preference preference;

  friend bool operator==(const Stakeholder&, const Stakeholder&) = default;
};

/// T = (D, S, G): a process with an ordered, non-empty list of stakeholders.
class StakeholderSystem {
 public:
  /// Throws Error on an empty stakeholder list and UnknownActivity when a
  /// preference mentions an id outside the process alphabet.
  StakeholderSystem(std::string label, DeclarativeProcess process, std::vector<Stakeholder> stakeholders);

  const std::string& label() const noexcept { return label_; }
  const DeclarativeProcess& process() const noexcept { return process_; }
  std::span<const Stakeholder> stakeholders() const noexcept { return stakeholders_; }
  std::size_t size() const noexcept { return stakeholders_.size(); }

 private:
  std::string label_;
  DeclarativeProcess process_;
  std::vector<Stakeholder> stakeholders_;
};

}  // namespace dproc
