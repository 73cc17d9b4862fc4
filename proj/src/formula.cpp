#include "dproc/formula.hpp"

#include <vector>

namespace dproc {

struct Formula::Node {
  Op op;
  ActivityId activity = 0;
  std::vector<Formula> children;
};

Formula Formula::make(Op op, std::initializer_list<Formula> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->children.assign(children.begin(), children.end());
  return Formula(std::move(node));
}

Formula Formula::atom(ActivityId a) {
  auto node = std::make_shared<Node>();
  node->op = Op::atom;
  node->activity = a;
  return Formula(std::move(node));
}

Formula Formula::tt() { return make(Op::top, {}); }
Formula Formula::ff() { return make(Op::bottom, {}); }
Formula Formula::Not(Formula f) { return make(Op::not_, {std::move(f)}); }
Formula Formula::And(Formula l, Formula r) { return make(Op::and_, {std::move(l), std::move(r)}); }
Formula Formula::Or(Formula l, Formula r) { return make(Op::or_, {std::move(l), std::move(r)}); }
Formula Formula::Implies(Formula l, Formula r) {
  return make(Op::implies, {std::move(l), std::move(r)});
}
Formula Formula::Iff(Formula l, Formula r) { return make(Op::iff, {std::move(l), std::move(r)}); }
Formula Formula::X(Formula f) { return make(Op::next, {std::move(f)}); }
Formula Formula::F(Formula f) { return make(Op::finally, {std::move(f)}); }
Formula Formula::G(Formula f) { return make(Op::globally, {std::move(f)}); }
Formula Formula::U(Formula l, Formula r) { return make(Op::until, {std::move(l), std::move(r)}); }
Formula Formula::W(Formula l, Formula r) {
  return make(Op::weak_until, {std::move(l), std::move(r)});
}

Formula::Op Formula::op() const noexcept { return node_->op; }
ActivityId Formula::activity() const noexcept { return node_->activity; }
const Formula& Formula::lhs() const noexcept { return node_->children.front(); }
const Formula& Formula::rhs() const noexcept { return node_->children.back(); }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.op() == Formula::Op::atom) return a.activity() == b.activity();
  return a.node_->children == b.node_->children;
}

std::string Formula::to_string(const std::function<std::string(ActivityId)>& label) const {
  auto name = [&](ActivityId a) { return label ? label(a) : std::to_string(a); };
  auto sub = [&](const Formula& f) {
    auto s = f.to_string(label);
    bool bare = f.op() == Op::atom || f.op() == Op::top || f.op() == Op::bottom;
    return bare ? s : "(" + s + ")";
  };
  switch (op()) {
    case Op::atom: return name(activity());
    case Op::top: return "true";
    case Op::bottom: return "false";
    case Op::not_: return "!" + sub(lhs());
    case Op::and_: return sub(lhs()) + " & " + sub(rhs());
    case Op::or_: return sub(lhs()) + " | " + sub(rhs());
    case Op::implies: return sub(lhs()) + " -> " + sub(rhs());
    case Op::iff: return sub(lhs()) + " <-> " + sub(rhs());
    case Op::next: return "X " + sub(lhs());
    case Op::finally: return "F " + sub(lhs());
    case Op::globally: return "G " + sub(lhs());
    case Op::until: return sub(lhs()) + " U " + sub(rhs());
    case Op::weak_until: return sub(lhs()) + " W " + sub(rhs());
  }
  return "?";
}

bool eval_formula(const Formula& f, EventSpan t, std::size_t pos) {
  using Op = Formula::Op;
  const std::size_t n = t.size();
  switch (f.op()) {
    case Op::atom: return pos < n && t[pos] == f.activity();
    case Op::top: return true;
    case Op::bottom: return false;
    case Op::not_: return !eval_formula(f.lhs(), t, pos);
    case Op::and_: return eval_formula(f.lhs(), t, pos) && eval_formula(f.rhs(), t, pos);
    case Op::or_: return eval_formula(f.lhs(), t, pos) || eval_formula(f.rhs(), t, pos);
    case Op::implies: return !eval_formula(f.lhs(), t, pos) || eval_formula(f.rhs(), t, pos);
    case Op::iff: return eval_formula(f.lhs(), t, pos) == eval_formula(f.rhs(), t, pos);
    case Op::next: return pos + 1 < n && eval_formula(f.lhs(), t, pos + 1);
    case Op::finally:
      for (std::size_t k = pos; k < n; ++k) {
        if (eval_formula(f.lhs(), t, k)) return true;
      }
      return false;
    case Op::globally:
      for (std::size_t k = pos; k < n; ++k) {
        if (!eval_formula(f.lhs(), t, k)) return false;
      }
      return true;
    case Op::until:
    case Op::weak_until:
      for (std::size_t k = pos; k < n; ++k) {
        if (eval_formula(f.rhs(), t, k)) return true;
        if (!eval_formula(f.lhs(), t, k)) return false;
      }
      // lhs held on the whole remaining suffix
      return f.op() == Op::weak_until;
  }
  return false;
}

namespace {

Formula finally_atom(ActivityId a) { return Formula::F(Formula::atom(a)); }

Formula response(ActivityId a, ActivityId b) {
  return Formula::G(Formula::Implies(Formula::atom(a), finally_atom(b)));
}

Formula precedence(ActivityId a, ActivityId b) {
  return Formula::W(Formula::Not(Formula::atom(b)), Formula::atom(a));
}

// Disjunction over all k-subsets of `members` of the conjunction of F m.
void choose(std::span<const ActivityId> members, std::size_t k, std::size_t from,
            std::vector<ActivityId>& picked, std::vector<Formula>& out) {
  if (picked.size() == k) {
    Formula conj = finally_atom(picked.front());
    for (std::size_t i = 1; i < picked.size(); ++i) conj = Formula::And(conj, finally_atom(picked[i]));
    out.push_back(conj);
    return;
  }
  for (std::size_t i = from; i < members.size(); ++i) {
    picked.push_back(members[i]);
    choose(members, k, i + 1, picked, out);
    picked.pop_back();
  }
}

}  // namespace

Formula expand_template(const ConstraintTemplate& c) {
  switch (c.kind()) {
    case TemplateKind::participation:
      return finally_atom(c.first());
    case TemplateKind::initial:
      return Formula::atom(c.first());
    case TemplateKind::resp:
      return response(c.first(), c.second());
    case TemplateKind::chainresp:
      return Formula::G(Formula::Implies(Formula::atom(c.first()), Formula::X(Formula::atom(c.second()))));
    case TemplateKind::prec:
    case TemplateKind::optresp:
      return precedence(c.first(), c.second());
    case TemplateKind::succ:
      return Formula::And(response(c.first(), c.second()), precedence(c.first(), c.second()));
    case TemplateKind::notsucc:
      return Formula::G(
          Formula::Implies(Formula::atom(c.first()), Formula::Not(finally_atom(c.second()))));
    case TemplateKind::notcoexist:
      return Formula::Not(Formula::Iff(finally_atom(c.first()), finally_atom(c.second())));
    case TemplateKind::notcoexist_weak:
      return Formula::Not(Formula::And(finally_atom(c.first()), finally_atom(c.second())));
    case TemplateKind::choice: {
      std::vector<Formula> terms;
      std::vector<ActivityId> picked;
      choose(c.args(), c.at_least(), 0, picked, terms);
      Formula disj = terms.front();
      for (std::size_t i = 1; i < terms.size(); ++i) disj = Formula::Or(disj, terms[i]);
      return disj;
    }
  }
  return Formula::ff();
}

}  // namespace dproc
