#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dproc {

/// Internal activity index. Ids of one alphabet are contiguous from 0.
using ActivityId = std::uint32_t;

/// Read-only view of a sequence of events.
using EventSpan = std::span<const ActivityId>;

enum class TemplateKind : std::uint8_t {
  participation,
  initial,
  resp,
  chainresp,
  prec,
  succ,
  notsucc,
  notcoexist,
  notcoexist_weak,
  optresp,
  choice,
};

/// Name used by the DSL. `choice` with k = 1 prints as `choice1`.
std::string_view template_name(TemplateKind kind) noexcept;

/// Inverse of template_name. Also maps `choice1` to TemplateKind::choice.
std::optional<TemplateKind> template_from_name(std::string_view name) noexcept;

bool is_unary(TemplateKind kind) noexcept;
bool is_binary(TemplateKind kind) noexcept;

/// A Declare constraint instance: a template applied to activities.
class ConstraintTemplate {
 public:
  static ConstraintTemplate participation(ActivityId a);
  static ConstraintTemplate initial(ActivityId a);
  static ConstraintTemplate resp(ActivityId a, ActivityId b);
  static ConstraintTemplate chainresp(ActivityId a, ActivityId b);
  static ConstraintTemplate prec(ActivityId a, ActivityId b);
  static ConstraintTemplate succ(ActivityId a, ActivityId b);
  static ConstraintTemplate notsucc(ActivityId a, ActivityId b);
  static ConstraintTemplate notcoexist(ActivityId a, ActivityId b);
  static ConstraintTemplate notcoexist_weak(ActivityId a, ActivityId b);
  static ConstraintTemplate optresp(ActivityId a, ActivityId b);
  /// At least `at_least` distinct members of `members` occur. Throws
  /// ArityError on an empty set or on a k outside 1..|distinct members|.
  static ConstraintTemplate choice(std::size_t at_least, std::vector<ActivityId> members);
  static ConstraintTemplate choice1(std::vector<ActivityId> members) {
    return choice(1, std::move(members));
  }

  /// Generic constructor used by the parser; validates arity.
  static ConstraintTemplate make(TemplateKind kind, std::vector<ActivityId> args,
                                 std::size_t at_least = 1);

  TemplateKind kind() const noexcept { return kind_; }
  std::span<const ActivityId> args() const noexcept { return args_; }
  ActivityId first() const noexcept { return args_.front(); }
  ActivityId second() const noexcept { return args_[1]; }
  std::size_t at_least() const noexcept { return at_least_; }

  /// Number of argument slots holding `a`.
  std::size_t occurrences(ActivityId a) const noexcept;
  bool mentions(ActivityId a) const noexcept { return occurrences(a) > 0; }

  friend bool operator==(const ConstraintTemplate&, const ConstraintTemplate&) = default;

 private:
  ConstraintTemplate(TemplateKind kind, std::vector<ActivityId> args, std::size_t at_least)
      : kind_(kind), args_(std::move(args)), at_least_(at_least) {}

  TemplateKind kind_;
  std::vector<ActivityId> args_;
  std::size_t at_least_;
};

/// Direct (non-expanded) satisfaction of one constraint by a finite trace.
bool eval_template(const ConstraintTemplate& c, EventSpan trace) noexcept;

/// True iff the trace satisfies every constraint. Vacuously true for none.
bool satisfies(EventSpan trace, std::span<const ConstraintTemplate> constraints) noexcept;

}  // namespace dproc
