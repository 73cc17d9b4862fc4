#include "dproc/preference.hpp"

#include <optional>

namespace dproc {

struct Preference::Node {
  Op op;
  std::optional<ConstraintTemplate> constraint;
  std::vector<Preference> children;
};

Preference Preference::of(ConstraintTemplate c) {
  auto node = std::make_shared<Node>();
  node->op = Op::constraint;
  node->constraint = std::move(c);
  return Preference(std::move(node));
}

Preference Preference::negate(Preference p) {
  auto node = std::make_shared<Node>();
  node->op = Op::not_;
  node->children.push_back(std::move(p));
  return Preference(std::move(node));
}

Preference Preference::conj(Preference lhs, Preference rhs) {
  auto node = std::make_shared<Node>();
  node->op = Op::and_;
  node->children = {std::move(lhs), std::move(rhs)};
  return Preference(std::move(node));
}

Preference Preference::disj(Preference lhs, Preference rhs) {
  auto node = std::make_shared<Node>();
  node->op = Op::or_;
  node->children = {std::move(lhs), std::move(rhs)};
  return Preference(std::move(node));
}

Preference::Op Preference::op() const noexcept { return node_->op; }
const ConstraintTemplate& Preference::constraint() const noexcept { return *node_->constraint; }
const Preference& Preference::lhs() const noexcept { return node_->children.front(); }
const Preference& Preference::rhs() const noexcept { return node_->children.back(); }

bool Preference::holds(EventSpan trace) const noexcept {
  switch (op()) {
    case Op::constraint: return eval_template(constraint(), trace);
    case Op::not_: return !lhs().holds(trace);
    case Op::and_: return lhs().holds(trace) && rhs().holds(trace);
    case Op::or_: return lhs().holds(trace) || rhs().holds(trace);
  }
  return false;
}

Formula Preference::to_formula() const {
  switch (op()) {
    case Op::constraint: return expand_template(constraint());
    case Op::not_: return Formula::Not(lhs().to_formula());
    case Op::and_: return Formula::And(lhs().to_formula(), rhs().to_formula());
    case Op::or_: return Formula::Or(lhs().to_formula(), rhs().to_formula());
  }
  return Formula::ff();
}

std::vector<ConstraintTemplate> Preference::constraints() const {
  if (op() == Op::constraint) return {constraint()};
  auto out = lhs().constraints();
  if (op() != Op::not_) {
    auto more = rhs().constraints();
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

bool operator==(const Preference& a, const Preference& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.op() == Preference::Op::constraint) return a.constraint() == b.constraint();
  return a.node_->children == b.node_->children;
}

}  // namespace dproc
