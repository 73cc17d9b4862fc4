#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>

#include "dproc/templates.hpp"

namespace dproc {

/// Immutable LTLf syntax tree. Nodes are shared, so copies are cheap.
class Formula {
 public:
  enum class Op : std::uint8_t {
    atom,
    top,
    bottom,
    not_,
    and_,
    or_,
    implies,
    iff,
    next,  // strong: false at the last position
    finally,
    globally,
    until,
    weak_until,
  };

  static Formula atom(ActivityId a);
  static Formula tt();
  static Formula ff();
  static Formula Not(Formula f);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);
  static Formula X(Formula f);
  static Formula F(Formula f);
  static Formula G(Formula f);
  static Formula U(Formula lhs, Formula rhs);
  static Formula W(Formula lhs, Formula rhs);

  Op op() const noexcept;
  /// Only meaningful for Op::atom.
  ActivityId activity() const noexcept;
  /// Operand of unary nodes, left operand of binary nodes.
  const Formula& lhs() const noexcept;
  const Formula& rhs() const noexcept;

  /// Infix rendering, e.g. `G(1 -> F 2)`. Activity names come from `label`.
  std::string to_string(const std::function<std::string(ActivityId)>& label = {}) const;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::initializer_list<Formula> children);

  std::shared_ptr<const Node> node_;
};

/// Finite-trace LTL evaluation at position `pos` (0 <= pos <= trace.size()).
bool eval_formula(const Formula& f, EventSpan trace, std::size_t pos = 0);

/// LTLf formula of a Declare constraint.
Formula expand_template(const ConstraintTemplate& c);

}  // namespace dproc
