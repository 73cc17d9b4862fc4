#include "dproc/templates.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "dproc/errors.hpp"

namespace dproc {
namespace {

constexpr std::array<std::pair<TemplateKind, std::string_view>, 11> kNames{{
    {TemplateKind::participation, "participation"},
    {TemplateKind::initial, "initial"},
    {TemplateKind::resp, "resp"},
    {TemplateKind::chainresp, "chainresp"},
    {TemplateKind::prec, "prec"},
    {TemplateKind::succ, "succ"},
    {TemplateKind::notsucc, "notsucc"},
    {TemplateKind::notcoexist, "notcoexist"},
    {TemplateKind::notcoexist_weak, "notcoexist_weak"},
    {TemplateKind::optresp, "optresp"},
    {TemplateKind::choice, "choice"},
}};

constexpr std::ptrdiff_t kAbsent = -1;

std::ptrdiff_t first_pos(EventSpan t, ActivityId a) noexcept {
  auto it = std::find(t.begin(), t.end(), a);
  return it == t.end() ? kAbsent : it - t.begin();
}

std::ptrdiff_t last_pos(EventSpan t, ActivityId a) noexcept {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] == a) return static_cast<std::ptrdiff_t>(i);
  }
  return kAbsent;
}

bool occurs(EventSpan t, ActivityId a) noexcept { return first_pos(t, a) != kAbsent; }

// G(a => F b): the last a has a b at or after it.
bool response(EventSpan t, ActivityId a, ActivityId b) noexcept {
  auto la = last_pos(t, a);
  return la == kAbsent || last_pos(t, b) >= la;
}

// (not b) W a: b never occurs, or a occurs no later than the first b.
bool precedence(EventSpan t, ActivityId a, ActivityId b) noexcept {
  auto fb = first_pos(t, b);
  if (fb == kAbsent) return true;
  auto fa = first_pos(t, a);
  return fa != kAbsent && fa <= fb;
}

}  // namespace

std::string_view template_name(TemplateKind kind) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<TemplateKind> template_from_name(std::string_view name) noexcept {
  if (name == "choice1") return TemplateKind::choice;
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_unary(TemplateKind kind) noexcept {
  return kind == TemplateKind::participation || kind == TemplateKind::initial;
}

bool is_binary(TemplateKind kind) noexcept { return !is_unary(kind) && kind != TemplateKind::choice; }

ConstraintTemplate ConstraintTemplate::make(TemplateKind kind, std::vector<ActivityId> args,
                                            std::size_t at_least) {
  const auto name = std::string(template_name(kind));
  if (is_unary(kind) && args.size() != 1) {
    throw ArityError(name + " expects 1 argument, got " + std::to_string(args.size()));
  }
  if (is_binary(kind) && args.size() != 2) {
    throw ArityError(name + " expects 2 arguments, got " + std::to_string(args.size()));
  }
  if (kind == TemplateKind::choice) {
    if (args.empty()) throw ArityError("choice expects a non-empty activity set");
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    if (at_least < 1 || at_least > args.size()) {
      throw ArityError("choice threshold " + std::to_string(at_least) + " outside 1.." +
                       std::to_string(args.size()));
    }
  } else {
    at_least = 1;
  }
  return ConstraintTemplate(kind, std::move(args), at_least);
}

ConstraintTemplate ConstraintTemplate::participation(ActivityId a) {
  return make(TemplateKind::participation, {a});
}
ConstraintTemplate ConstraintTemplate::initial(ActivityId a) { return make(TemplateKind::initial, {a}); }
ConstraintTemplate ConstraintTemplate::resp(ActivityId a, ActivityId b) {
  return make(TemplateKind::resp, {a, b});
}
ConstraintTemplate ConstraintTemplate::chainresp(ActivityId a, ActivityId b) {
  return make(TemplateKind::chainresp, {a, b});
}
ConstraintTemplate ConstraintTemplate::prec(ActivityId a, ActivityId b) {
  return make(TemplateKind::prec, {a, b});
}
ConstraintTemplate ConstraintTemplate::succ(ActivityId a, ActivityId b) {
  return make(TemplateKind::succ, {a, b});
}
ConstraintTemplate ConstraintTemplate::notsucc(ActivityId a, ActivityId b) {
  return make(TemplateKind::notsucc, {a, b});
}
ConstraintTemplate ConstraintTemplate::notcoexist(ActivityId a, ActivityId b) {
  return make(TemplateKind::notcoexist, {a, b});
}
ConstraintTemplate ConstraintTemplate::notcoexist_weak(ActivityId a, ActivityId b) {
  return make(TemplateKind::notcoexist_weak, {a, b});
}
ConstraintTemplate ConstraintTemplate::optresp(ActivityId a, ActivityId b) {
  return make(TemplateKind::optresp, {a, b});
}
ConstraintTemplate ConstraintTemplate::choice(std::size_t at_least, std::vector<ActivityId> members) {
  return make(TemplateKind::choice, std::move(members), at_least);
}

std::size_t ConstraintTemplate::occurrences(ActivityId a) const noexcept {
  return static_cast<std::size_t>(std::count(args_.begin(), args_.end(), a));
}

bool eval_template(const ConstraintTemplate& c, EventSpan t) noexcept {
  switch (c.kind()) {
    case TemplateKind::participation:
      return occurs(t, c.first());
    case TemplateKind::initial:
      return !t.empty() && t.front() == c.first();
    case TemplateKind::resp:
      return response(t, c.first(), c.second());
    case TemplateKind::chainresp: {
      // Strong next: every a needs an immediate successor equal to b.
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == c.first() && (i + 1 >= t.size() || t[i + 1] != c.second())) return false;
      }
      return true;
    }
    case TemplateKind::prec:
    case TemplateKind::optresp:
      return precedence(t, c.first(), c.second());
    case TemplateKind::succ:
      return response(t, c.first(), c.second()) && precedence(t, c.first(), c.second());
    case TemplateKind::notsucc: {
      // G(a => not F b): no b at or after the first a.
      auto fa = first_pos(t, c.first());
      return fa == kAbsent || last_pos(t, c.second()) < fa;
    }
    case TemplateKind::notcoexist:
      return occurs(t, c.first()) != occurs(t, c.second());
    case TemplateKind::notcoexist_weak:
      return !(occurs(t, c.first()) && occurs(t, c.second()));
    case TemplateKind::choice: {
      std::size_t hits = 0;
      for (ActivityId a : c.args()) hits += occurs(t, a) ? 1 : 0;
      return hits >= c.at_least();
    }
  }
  return false;
}

bool satisfies(EventSpan trace, std::span<const ConstraintTemplate> constraints) noexcept {
  return std::all_of(constraints.begin(), constraints.end(),
                     [trace](const ConstraintTemplate& c) { return eval_template(c, trace); });
}

}  // namespace dproc
