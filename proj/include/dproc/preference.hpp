#pragma once

#include <memory>
#include <vector>

#include "dproc/formula.hpp"
#include "dproc/templates.hpp"

namespace dproc {

/// A stakeholder preference: a boolean combination (not/and/or) of
/// constraint templates. Evaluates directly through eval_template, and can
/// be expanded to an equivalent Formula.
class Preference {
 public:
  enum class Op : std::uint8_t { constraint, not_, and_, or_ };

  static Preference of(ConstraintTemplate c);
  static Preference negate(Preference p);
  static Preference conj(Preference lhs, Preference rhs);
  static Preference disj(Preference lhs, Preference rhs);

  Op op() const noexcept;
  /// Only meaningful for Op::constraint.
  const ConstraintTemplate& constraint() const noexcept;
  const Preference& lhs() const noexcept;
  const Preference& rhs() const noexcept;

  bool holds(EventSpan trace) const noexcept;
  Formula to_formula() const;

  /// Every constraint leaf, left to right.
  std::vector<ConstraintTemplate> constraints() const;

  friend bool operator==(const Preference& a, const Preference& b) noexcept;

 private:
  struct Node;
  explicit Preference(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace dproc
