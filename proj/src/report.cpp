#include "dproc/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include <fmt/format.h>

#include "dproc/errors.hpp"

namespace dproc::report {
namespace {

using ojson = nlohmann::ordered_json;

std::string join(std::span<const std::string> items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string vector_text(std::span<const double> values) {
  std::vector<std::string> parts;
  for (double v : values) parts.push_back(fixed5(v));
  return "(" + join(parts, ", ") + ")";
}

std::vector<std::string> system_labels(const ComparisonReport& r, std::span<const std::size_t> idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(r.systems.at(i).label);
  return out;
}

std::string winner_cell(const ComparisonReport& r, std::size_t winner, std::span<const std::size_t> ties) {
  std::string s = r.systems.at(winner).label;
  if (ties.size() > 1) s += " (tie: " + join(system_labels(r, ties), ", ") + ")";
  return s;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

template <typename T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("report is missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report key '") + key + "': " + e.what());
  }
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) noexcept {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "tsv") return Format::tsv;
  return std::nullopt;
}

std::string fixed5(double x) {
  auto s = fmt::format("{:.5f}", x);
  if (s == "-0.00000") s = "0.00000";
  return s;
}

std::string format_subset(SubsetMask subset, std::span<const std::string> stakeholders) {
  std::vector<std::string> names;
  for (auto i : subset.indices()) names.push_back(i < stakeholders.size() ? stakeholders[i] : fmt::format("S{}", i + 1));
  return "{" + join(names, ", ") + "}";
}

void TextTable::add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

std::string TextTable::render() const {
  std::vector<std::size_t> width;
  auto display_width = [](const std::string& s) {
    // UTF-8 code points; every glyph used in reports is single-width
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  };
  for (const auto& row : rows_) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  }
  std::string out;
  for (const auto& row : rows_) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - display_width(row[i]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_traces(const TraceListing& listing, Format format) {
  const auto& result = *listing.result;
  const auto& alphabet = *listing.alphabet;

  std::map<std::size_t, std::size_t> lengths;
  std::vector<std::size_t> occurrences(alphabet.size(), 0);
  for (const auto& t : result.traces) {
    ++lengths[t.size()];
    for (ActivityId a : t.events()) ++occurrences[a];
  }
  auto peel_text = [&](const LeafStep& s) {
    return format_constraint(s.constraint, alphabet);
  };

  if (format == Format::json) {
    ojson j;
    j["process"] = listing.process;
    j["strategy"] = std::string(strategy_name(result.strategy));
    j["trace_count"] = result.traces.size();
    j["satisfies_calls"] = result.satisfies_calls;
    if (!listing.count_only) {
      ojson traces = ojson::array();
      for (const auto& t : result.traces) {
        ojson events = ojson::array();
        for (ActivityId a : t.events()) events.push_back(alphabet.label(a));
        traces.push_back(std::move(events));
      }
      j["traces"] = std::move(traces);
    }
    if (listing.stats) {
      ojson lens = ojson::object();
      for (auto [len, count] : lengths) lens[std::to_string(len)] = count;
      ojson acts = ojson::object();
      for (const auto& a : alphabet.activities()) acts[a.label] = occurrences[a.id];
      ojson peel = ojson::array();
      for (const auto& s : result.peel_sequence) {
        peel.push_back({{"constraint", peel_text(s)},
                        {"leaf", alphabet.label(s.leaf)},
                        {"anchor", alphabet.label(s.anchor)}});
      }
      j["stats"] = {{"lengths", lens}, {"activities", acts}, {"peel_sequence", peel}};
    }
    return j.dump(2) + "\n";
  }

  std::string out;
  const char* sep = format == Format::tsv ? "\t" : ", ";
  if (listing.count_only) {
    out += std::to_string(result.traces.size()) + "\n";
  } else {
    for (const auto& t : result.traces) {
      if (format == Format::tsv) {
        std::vector<std::string> labels;
        for (ActivityId a : t.events()) labels.push_back(alphabet.label(a));
        out += (t.empty() ? std::string("ε") : join(labels, sep)) + "\n";
      } else {
        out += format_trace(t, alphabet) + "\n";
      }
    }
  }
  if (listing.stats) {
    if (format == Format::tsv) {
      out += "\nlength\ttraces\n";
      for (auto [len, count] : lengths) out += fmt::format("{}\t{}\n", len, count);
      out += "\nactivity\toccurrences\n";
      for (const auto& a : alphabet.activities()) out += fmt::format("{}\t{}\n", a.label, occurrences[a.id]);
    } else {
      out += fmt::format("\nprocess: {}\ntraces: {}\nstrategy: {}\nsatisfies calls: {}\n", listing.process,
                         result.traces.size(), strategy_name(result.strategy), result.satisfies_calls);
      if (!result.peel_sequence.empty()) {
        std::vector<std::string> peeled;
        for (const auto& s : result.peel_sequence) peeled.push_back(peel_text(s));
        out += "peeled: " + join(peeled, ", ") + "\n";
      }
      TextTable lens;
      lens.add_row({"length", "traces"});
      for (auto [len, count] : lengths) lens.add_row({std::to_string(len), std::to_string(count)});
      out += "\n" + lens.render();
      TextTable acts;
      acts.add_row({"activity", "occurrences"});
      for (const auto& a : alphabet.activities()) acts.add_row({a.label, std::to_string(occurrences[a.id])});
      out += "\n" + acts.render();
    }
  }
  return out;
}

ojson system_to_json(const ComparedSystem& system) {
  ojson j;
  j["label"] = system.label;
  if (system.utilities.counts) {
    j["trace_count"] = system.utilities.counts->total;
    j["good_counts"] = system.utilities.counts->good;
  } else {
    j["trace_count"] = nullptr;
    j["good_counts"] = nullptr;
  }
  j["utilities"] = system.utilities.values;
  j["preferences"] = system.preferences;
  return j;
}

ComparedSystem system_from_json(const nlohmann::json& j) {
  ComparedSystem s;
  s.label = required<std::string>(j, "label");
  auto values = required<std::vector<double>>(j, "utilities");
  if (j.contains("trace_count") && !j.at("trace_count").is_null()) {
    auto good = required<std::vector<std::uint64_t>>(j, "good_counts");
    s.utilities = UtilityVector::from_counts(good, required<std::uint64_t>(j, "trace_count"));
    // keep the serialized values so re-rendering is byte-identical
    s.utilities.values = std::move(values);
  } else {
    s.utilities = UtilityVector::from_values(std::move(values));
  }
  if (j.contains("preferences")) s.preferences = required<std::vector<std::string>>(j, "preferences");
  return s;
}

std::string render_utilities(std::span<const std::string> stakeholders, std::span<const ComparedSystem> systems,
                             Format format) {
  if (format == Format::json) {
    ojson j;
    j["stakeholders"] = std::vector<std::string>(stakeholders.begin(), stakeholders.end());
    j["systems"] = ojson::array();
    for (const auto& s : systems) j["systems"].push_back(system_to_json(s));
    return j.dump(2) + "\n";
  }
  auto count_cell = [](const ComparedSystem& s, std::size_t i) {
    return s.utilities.counts ? std::to_string(s.utilities.counts->good.at(i)) : std::string("-");
  };
  if (format == Format::tsv) {
    std::string out = "system\ttraces\tstakeholder\tgood\tutility\n";
    for (const auto& s : systems) {
      auto total = s.utilities.counts ? std::to_string(s.utilities.counts->total) : std::string("-");
      for (std::size_t i = 0; i < s.utilities.size(); ++i) {
        out += fmt::format("{}\t{}\t{}\t{}\t{}\n", s.label, total, stakeholders[i], count_cell(s, i),
                           fixed5(s.utilities.values[i]));
      }
    }
    return out;
  }
  TextTable table;
  table.add_row({"system", "traces", "stakeholder", "good", "utility"});
  for (const auto& s : systems) {
    auto total = s.utilities.counts ? std::to_string(s.utilities.counts->total) : std::string("-");
    for (std::size_t i = 0; i < s.utilities.size(); ++i) {
      table.add_row({i == 0 ? s.label : "", i == 0 ? total : "", stakeholders[i], count_cell(s, i),
                     fixed5(s.utilities.values[i])});
    }
  }
  std::string out = table.render() + "\n";
  for (const auto& s : systems) out += "u(" + s.label + ") = " + vector_text(s.utilities.values) + "\n";
  return out;
}

ojson to_json(const ComparisonReport& r) {
  ojson j;
  j["stakeholders"] = r.stakeholders;
  j["tolerance"] = r.tolerance;
  j["systems"] = ojson::array();
  for (const auto& s : r.systems) {
    auto sj = system_to_json(s);
    sj["h"] = h_distance(s.utilities.values);
    j["systems"].push_back(std::move(sj));
  }
  j["rows"] = ojson::array();
  for (const auto& row : r.rows) {
    std::vector<std::string> subset;
    for (auto i : row.subset.indices()) subset.push_back(r.stakeholders.at(i));
    j["rows"].push_back({{"subset", subset},
                         {"h", row.h},
                         {"winner", row.winner},
                         {"winner_label", r.systems.at(row.winner).label},
                         {"tie", row.tie},
                         {"ties", row.ties}});
  }
  ojson summary = ojson::object();
  for (Stratum s : kStrata) {
    const auto& st = r.summary[s];
    summary[std::string(stratum_name(s))] = {{"winner", st.winner},
                                             {"winner_label", r.systems.at(st.winner).label},
                                             {"freq_num", st.freq_num},
                                             {"freq_den", st.freq_den},
                                             {"tie", st.tie},
                                             {"maximizers", st.maximizers}};
  }
  j["summary"] = std::move(summary);
  j["notes"] = ojson::array();
  for (auto g : r.summary.notes) j["notes"].push_back(std::string(guidance_code(g)));
  return j;
}

ComparisonReport comparison_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("report must be a JSON object");
  ComparisonReport r;
  r.stakeholders = required<std::vector<std::string>>(j, "stakeholders");
  r.tolerance = j.contains("tolerance") ? required<double>(j, "tolerance") : kDefaultTieTolerance;
  for (const auto& sj : required<nlohmann::json>(j, "systems")) r.systems.push_back(system_from_json(sj));
  if (r.systems.empty()) throw Error("report has no systems");

  auto check_index = [&](std::size_t i) {
    if (i >= r.systems.size()) throw Error("report refers to system index " + std::to_string(i));
    return i;
  };
  for (const auto& rj : required<nlohmann::json>(j, "rows")) {
    ComparisonRow row;
    std::uint32_t bits = 0;
    for (const auto& name : required<std::vector<std::string>>(rj, "subset")) {
      auto it = std::find(r.stakeholders.begin(), r.stakeholders.end(), name);
      if (it == r.stakeholders.end()) throw Error("report row names unknown stakeholder " + name);
      bits |= 1u << (it - r.stakeholders.begin());
    }
    row.subset = SubsetMask(bits);
    row.h = required<std::vector<double>>(rj, "h");
    row.winner = check_index(required<std::size_t>(rj, "winner"));
    row.tie = required<bool>(rj, "tie");
    row.ties = required<std::vector<std::size_t>>(rj, "ties");
    for (auto t : row.ties) check_index(t);
    if (row.h.size() != r.systems.size()) throw Error("report row has the wrong number of H values");
    r.rows.push_back(std::move(row));
  }
  if (r.rows.empty()) throw Error("report has no rows");

  const auto summary = required<nlohmann::json>(j, "summary");
  for (Stratum s : kStrata) {
    const auto& sj = summary.at(std::string(stratum_name(s)));
    StratumResult& st = r.summary.strata[static_cast<std::size_t>(s)];
    st.winner = check_index(required<std::size_t>(sj, "winner"));
    st.freq_num = required<std::size_t>(sj, "freq_num");
    st.freq_den = required<std::size_t>(sj, "freq_den");
    st.tie = required<bool>(sj, "tie");
    st.maximizers = required<std::vector<std::size_t>>(sj, "maximizers");
  }
  for (const auto& code : required<std::vector<std::string>>(j, "notes")) {
    auto g = guidance_from_code(code);
    if (!g) throw Error("unknown guidance code " + code);
    r.summary.notes.push_back(*g);
  }
  return r;
}

std::string render_comparison(const ComparisonReport& r, Format format) {
  if (format == Format::json) return to_json(r).dump(2) + "\n";

  std::vector<std::string> notes;
  for (auto g : r.summary.notes) notes.emplace_back(guidance_code(g));

  if (format == Format::tsv) {
    std::string out = "subset";
    for (const auto& s : r.systems) out += "\tH(" + s.label + ")";
    out += "\toptimal\ttie\n";
    for (const auto& row : r.rows) {
      out += format_subset(row.subset, r.stakeholders);
      for (double h : row.h) out += "\t" + fixed5(h);
      out += "\t" + r.systems.at(row.winner).label + "\t" + (row.tie ? "1" : "0") + "\n";
    }
    out += "\nstratum\twinner\tfreq_num\tfreq_den\ttie\n";
    for (Stratum s : kStrata) {
      const auto& st = r.summary[s];
      out += fmt::format("{}\t{}\t{}\t{}\t{}\n", stratum_name(s), r.systems.at(st.winner).label, st.freq_num,
                         st.freq_den, st.tie ? 1 : 0);
    }
    out += "\nnotes\t" + join(notes, ",") + "\n";
    return out;
  }

  std::string out = "stakeholders: " + join(r.stakeholders, ", ") + "\n\n";
  TextTable systems;
  systems.add_row({"system", "H", "utilities"});
  for (const auto& s : r.systems) {
    systems.add_row({s.label, fixed5(h_distance(s.utilities.values)), vector_text(s.utilities.values)});
  }
  out += systems.render() + "\n";

  TextTable rows;
  std::vector<std::string> header{"subset"};
  for (const auto& s : r.systems) header.push_back("H(" + s.label + ")");
  header.emplace_back("optimal");
  rows.add_row(std::move(header));
  for (const auto& row : r.rows) {
    std::vector<std::string> cells{format_subset(row.subset, r.stakeholders)};
    for (double h : row.h) cells.push_back(fixed5(h));
    cells.push_back(winner_cell(r, row.winner, row.ties));
    rows.add_row(std::move(cells));
  }
  out += rows.render() + "\n";

  TextTable strata;
  strata.add_row({"stratum", "winner", "frequency"});
  for (Stratum s : kStrata) {
    const auto& st = r.summary[s];
    strata.add_row({std::string(stratum_name(s)), winner_cell(r, st.winner, st.maximizers),
                    fmt::format("{}/{}", st.freq_num, st.freq_den)});
  }
  out += strata.render() + "\n";
  out += "notes: " + join(notes, ", ") + "\n";
  return out;
}

std::vector<ComparedSystem> parse_vector_file(std::string_view text) {
  std::vector<ComparedSystem> systems;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    auto colon = body.find(':');
    if (colon == std::string::npos) throw SyntaxError("expected 'label: u1 u2 ...'", line_no, 1);
    ComparedSystem s;
    s.label = trim(std::string_view(body).substr(0, colon));
    if (s.label.empty()) throw SyntaxError("empty system label", line_no, 1);
    std::vector<double> values;
    std::string_view rest = std::string_view(body).substr(colon + 1);
    while (true) {
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
      if (rest.empty()) break;
      auto end = std::find_if(rest.begin(), rest.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      std::string_view tok(rest.data(), static_cast<std::size_t>(end - rest.begin()));
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw SyntaxError("invalid utility value '" + std::string(tok) + "'", line_no,
                          static_cast<std::size_t>(tok.data() - body.data()) + 1);
      }
      values.push_back(v);
      rest.remove_prefix(tok.size());
    }
    if (values.empty()) throw SyntaxError("system " + s.label + " has no utilities", line_no, colon + 1);
    s.utilities = UtilityVector::from_values(std::move(values));
    if (!systems.empty() && systems.front().utilities.size() != s.utilities.size()) {
      throw MismatchedStakeholders("line " + std::to_string(line_no) + ": system " + s.label + " has " +
                                   std::to_string(s.utilities.size()) + " utilities, expected " +
                                   std::to_string(systems.front().utilities.size()));
    }
    systems.push_back(std::move(s));
  }
  return systems;
}

}  // namespace dproc::report
