#include "dproc/model.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "dproc/errors.hpp"

namespace dproc {

Alphabet::Alphabet(std::vector<Activity> activities) : activities_(std::move(activities)) {
  std::unordered_set<std::string> labels;
  for (std::size_t i = 0; i < activities_.size(); ++i) {
    auto& a = activities_[i];
    if (a.id != i) {
      throw DuplicateActivityId("activity ids must be distinct and contiguous from 0; got id " +
                                std::to_string(a.id) + " at position " + std::to_string(i));
    }
    if (a.label.empty()) a.label = std::to_string(a.id);
    if (!labels.insert(a.label).second) throw DuplicateActivityId("duplicate activity " + a.label);
  }
}

Alphabet Alphabet::numbered(std::initializer_list<int> labels) {
  return numbered(std::span<const int>(labels.begin(), labels.size()));
}

Alphabet Alphabet::numbered(std::span<const int> labels) {
  std::vector<Activity> acts;
  acts.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    acts.push_back({static_cast<ActivityId>(i), std::to_string(labels[i]), {}});
  }
  return Alphabet(std::move(acts));
}

Alphabet Alphabet::range(std::size_t n) {
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i + 1);
  return numbered(labels);
}

std::optional<ActivityId> Alphabet::find(std::string_view label) const noexcept {
  for (const auto& a : activities_) {
    if (a.label == label) return a.id;
  }
  return std::nullopt;
}

ActivityId Alphabet::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw UnknownActivity("unknown activity " + std::string(label));
}

bool Trace::contains(ActivityId a) const noexcept {
  return std::find(events_.begin(), events_.end(), a) != events_.end();
}

std::optional<std::size_t> Trace::index_of(ActivityId a) const noexcept {
  auto it = std::find(events_.begin(), events_.end(), a);
  if (it == events_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - events_.begin());
}

Trace Trace::inserted(std::size_t pos, ActivityId a) const {
  std::vector<ActivityId> out;
  out.reserve(events_.size() + 1);
  out.insert(out.end(), events_.begin(), events_.begin() + static_cast<std::ptrdiff_t>(pos));
  out.push_back(a);
  out.insert(out.end(), events_.begin() + static_cast<std::ptrdiff_t>(pos), events_.end());
  return Trace(std::move(out));
}

std::strong_ordering operator<=>(const Trace& a, const Trace& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.events_.begin(), a.events_.end(), b.events_.begin(),
                                                b.events_.end());
}

bool is_unique_trace(EventSpan trace) {
  std::vector<ActivityId> sorted(trace.begin(), trace.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string format_trace(EventSpan trace, const Alphabet& alphabet) {
  if (trace.empty()) return "ε";
  std::string out = "(";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out += ", ";
    out += alphabet.label(trace[i]);
  }
  return out + ")";
}

Trace parse_trace(std::string_view text, const Alphabet& alphabet) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "ε" || text == "eps" || text == "()" || text.empty()) return {};
  if (text.front() == '(') {
    if (text.back() != ')') throw SyntaxError("unterminated trace literal", 1, text.size());
    text = trim(text.substr(1, text.size() - 2));
    if (text.empty()) return {};
  }
  std::vector<ActivityId> events;
  std::size_t column = 1;
  while (true) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (item.empty()) throw SyntaxError("empty element in trace literal", 1, column);
    events.push_back(alphabet.id_of(item));
    if (comma == std::string_view::npos) break;
    column += comma + 1;
    text.remove_prefix(comma + 1);
  }
  return Trace(std::move(events));
}

TraceSet::TraceSet(std::vector<Trace> traces) : traces_(std::move(traces)) {
  std::sort(traces_.begin(), traces_.end());
  traces_.erase(std::unique(traces_.begin(), traces_.end()), traces_.end());
}

bool TraceSet::contains(const Trace& t) const noexcept {
  return std::binary_search(traces_.begin(), traces_.end(), t);
}

TraceSet canonicalize(std::vector<Trace> traces) { return TraceSet(std::move(traces)); }

DeclarativeProcess make_process(Alphabet alphabet, std::vector<ConstraintTemplate> constraints) {
  for (const auto& c : constraints) {
    for (ActivityId a : c.args()) {
      if (!alphabet.contains(a)) {
        throw UnknownActivity(std::string(template_name(c.kind())) + " mentions activity id " +
                              std::to_string(a) + " outside the alphabet");
      }
    }
  }
  return DeclarativeProcess(std::move(alphabet), std::move(constraints));
}

StakeholderSystem::StakeholderSystem(std::string label, DeclarativeProcess process,
                                     std::vector<Stakeholder> stakeholders)
    : label_(std::move(label)), process_(std::move(process)), stakeholders_(std::move(stakeholders)) {
  if (stakeholders_.empty()) throw Error("a stakeholder system needs at least one stakeholder");
  for (const auto& s : stakeholders_) {
    for (const auto& c : s.preference.constraints()) {
      for (ActivityId a : c.args()) {
        if (!process_.alphabet().contains(a)) {
          throw UnknownActivity("preference of " + s.label + " mentions activity id " +
                                std::to_string(a) + " outside the alphabet");
        }
      }
    }
  }
}

}  // namespace dproc
