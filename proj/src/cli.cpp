#include "dproc/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "dproc/errors.hpp"
#include "dproc/report.hpp"

namespace dproc::cli {
namespace {

/// Unreadable or malformed input files; reported like parse errors.
class InputError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProcessSpec read_spec(const std::string& path) {
  const auto text = read_file(path);
  try {
    return parse_spec(text);
  } catch (const SyntaxError& e) {
    throw SyntaxError(path + ":" + e.what(), e.line(), e.column());
  } catch (const ArityError& e) {
    throw ArityError(path + ":" + e.what());
  } catch (const UnknownActivity& e) {
    throw UnknownActivity(path + ":" + e.what());
  } catch (const DuplicateActivityId& e) {
    throw DuplicateActivityId(path + ":" + e.what());
  }
}

struct EnumerationFlags {
  std::string algorithm = "auto";
  unsigned workers = 1;
  std::size_t max_alphabet = 0;  // 0: environment or default

  void attach(CLI::App* cmd) {
    cmd->add_option("--algorithm", algorithm, "Enumeration strategy")
        ->check(CLI::IsMember({"brute", "leaf", "auto"}));
    cmd->add_option("--workers", workers, "Worker threads for brute-force enumeration")->check(CLI::Range(1u, 1024u));
    cmd->add_option("--max-alphabet", max_alphabet, "Brute-force alphabet limit (overrides DPROC_MAX_ALPHABET)");
  }

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.strategy = *strategy_from_name(algorithm);
    o.workers = workers;
    o.max_alphabet = max_alphabet ? max_alphabet : max_alphabet_from_env();
    return o;
  }
};

report::Format parse_format(const std::string& name) { return *report::format_from_name(name); }

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
}

GoodCounts parse_counts(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw SyntaxError("--from-counts expects good1,...,goodm/total", 1, 1);
  auto number = [&](std::string_view s, std::size_t column) {
    std::uint64_t v = 0;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw SyntaxError("invalid count '" + std::string(s) + "'", 1, column);
    }
    return v;
  };
  GoodCounts counts;
  std::string_view goods = std::string_view(text).substr(0, slash);
  std::size_t column = 1;
  while (true) {
    auto comma = goods.find(',');
    counts.good.push_back(number(goods.substr(0, comma), column));
    if (comma == std::string_view::npos) break;
    column += comma + 1;
    goods.remove_prefix(comma + 1);
  }
  counts.total = number(std::string_view(text).substr(slash + 1), slash + 2);
  return counts;
}

int cmd_traces(const std::string& spec_path, bool count_only, bool stats, const EnumerationFlags& flags,
               const std::string& format, std::ostream& out) {
  const auto spec = read_spec(spec_path);
  const auto result = unique_traces(spec.process, flags.options());
  report::TraceListing listing{spec.name, &spec.process.alphabet(), &result, count_only, stats};
  out << report::render_traces(listing, parse_format(format));
  return kOk;
}

int cmd_check(const std::string& spec_path, const std::string& trace_text, std::ostream& out) {
  const auto spec = read_spec(spec_path);
  const auto& alphabet = spec.process.alphabet();
  const Trace trace = parse_trace(trace_text, alphabet);
  bool all = true;
  report::TextTable table;
  table.add_row({"verdict", "constraint"});
  for (const auto& c : spec.process.constraints()) {
    const bool ok = eval_template(c, trace);
    all = all && ok;
    table.add_row({ok ? "PASS" : "FAIL", format_constraint(c, alphabet)});
  }
  out << "trace: " << format_trace(trace, alphabet) << "\n\n" << table.render() << "\n"
      << (all ? "satisfied" : "violated") << "\n";
  return all ? kOk : kCheckFailed;
}

int cmd_utilities(const std::string& spec_path, const std::string& from_counts, const EnumerationFlags& flags,
                  const std::string& format, std::ostream& out) {
  std::vector<std::string> stakeholders;
  ComparedSystem system;
  if (!from_counts.empty()) {
    const auto counts = parse_counts(from_counts);
    system.utilities = UtilityVector::from_counts(counts.good, counts.total);
    if (spec_path.empty()) {
      system.label = "counts";
      for (std::size_t i = 0; i < counts.good.size(); ++i) stakeholders.push_back("S" + std::to_string(i + 1));
    } else {
      const auto spec = read_spec(spec_path);
      system.label = spec.name;
      for (const auto& s : spec.stakeholders) {
        stakeholders.push_back(s.label);
        system.preferences.push_back(format_preference(s.preference, spec.process.alphabet()));
      }
      if (stakeholders.size() != counts.good.size()) {
        throw MismatchedStakeholders("--from-counts gives " + std::to_string(counts.good.size()) +
                                     " counts but the spec has " + std::to_string(stakeholders.size()) +
                                     " stakeholders");
      }
    }
  } else {
    if (spec_path.empty()) throw UsageError("utilities needs a spec file or --from-counts");
    const auto spec = read_spec(spec_path);
    const auto sys = spec.system();
    const auto traces = unique_traces(spec.process, flags.options()).traces;
    system.label = spec.name;
    system.utilities = utility_vector(sys, traces);
    for (const auto& s : spec.stakeholders) {
      stakeholders.push_back(s.label);
      system.preferences.push_back(format_preference(s.preference, spec.process.alphabet()));
    }
  }
  out << report::render_utilities(stakeholders, std::span(&system, 1), parse_format(format));
  return kOk;
}

struct CompareFlags {
  std::vector<std::string> specs;
  std::string vectors;
  std::string from_report;
  std::string format = "text";
  bool allow_single = false;
  double tolerance = kDefaultTieTolerance;
  std::size_t max_stakeholders = kDefaultMaxStakeholders;
};

int cmd_compare(const CompareFlags& cf, const EnumerationFlags& flags, std::ostream& out) {
  const auto format = parse_format(cf.format);
  const int sources = !cf.specs.empty() + !cf.vectors.empty() + !cf.from_report.empty();
  if (sources != 1) throw UsageError("compare takes spec files, --vectors FILE, or --from-report FILE");

  if (!cf.from_report.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(cf.from_report));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(cf.from_report + ": " + e.what());
    }
    ComparisonReport r;
    try {
      r = report::comparison_from_json(j);
    } catch (const Error& e) {
      throw InputError(cf.from_report + ": " + e.what());
    }
    out << report::render_comparison(r, format);
    return kOk;
  }

  CompareOptions options;
  options.tolerance = cf.tolerance;
  options.max_stakeholders = cf.max_stakeholders;
  options.enumeration = flags.options();

  ComparisonReport r;
  if (!cf.vectors.empty()) {
    auto systems = report::parse_vector_file(read_file(cf.vectors));
    if (systems.empty()) throw InputError(cf.vectors + ": no systems");
    if (systems.size() < 2 && !cf.allow_single) throw UsageError("compare needs at least two systems (or --allow-single)");
    std::vector<std::string> stakeholders;
    for (std::size_t i = 0; i < systems.front().utilities.size(); ++i) stakeholders.push_back("S" + std::to_string(i + 1));
    r = compare(std::move(systems), std::move(stakeholders), options);
  } else {
    if (cf.specs.size() < 2 && !cf.allow_single) throw UsageError("compare needs at least two systems (or --allow-single)");
    std::vector<StakeholderSystem> systems;
    std::map<std::string, int> seen;
    for (const auto& path : cf.specs) {
      const auto spec = read_spec(path);
      std::string label = spec.name;
      if (int n = ++seen[label]; n > 1) label += "#" + std::to_string(n);
      systems.emplace_back(label, spec.process, spec.stakeholders);
    }
    r = compare(systems, options);
  }
  out << report::render_comparison(r, format);
  return kOk;
}

int exit_code_for(const std::exception& e, std::ostream& err) {
  err << "dproc: error: " << e.what() << "\n";
  if (dynamic_cast<const UsageError*>(&e)) return kUsage;
  if (dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const ArityError*>(&e) ||
      dynamic_cast<const DuplicateActivityId*>(&e) || dynamic_cast<const InputError*>(&e)) {
    return kParseError;
  }
  if (dynamic_cast<const AlphabetTooLarge*>(&e)) return kAlphabetTooLarge;
  if (dynamic_cast<const UnknownActivity*>(&e)) return kUnknownActivity;
  if (dynamic_cast<const DegenerateProcess*>(&e)) return kDegenerateProcess;
  if (dynamic_cast<const MismatchedStakeholders*>(&e)) return kMismatchedStakeholders;
  return kOtherError;
}

}  // namespace

std::size_t max_alphabet_from_env() {
  if (const char* v = std::getenv("DPROC_MAX_ALPHABET"); v && *v) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(v, v + std::char_traits<char>::length(v), n);
    if (ec == std::errc{} && *ptr == '\0' && n > 0) return n;
  }
  return kDefaultMaxAlphabet;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unique-trace enumeration, stakeholder utilities and process comparison for declarative processes",
               "dproc"};
  app.require_subcommand(1);

  auto* traces = app.add_subcommand("traces", "Enumerate the unique traces of a process");
  std::string traces_spec, traces_format = "text";
  bool count_only = false, stats = false;
  EnumerationFlags traces_flags;
  traces->add_option("spec", traces_spec, "Process spec (.dproc)")->required();
  traces->add_flag("--count-only", count_only, "Print only the number of unique traces");
  traces->add_flag("--stats", stats, "Add length histogram and activity occurrence counts");
  traces_flags.attach(traces);
  add_format(traces, traces_format);

  auto* check = app.add_subcommand("check", "Check one trace against every constraint");
  std::string check_spec, check_trace;
  check->add_option("spec", check_spec, "Process spec (.dproc)")->required();
  check->add_option("trace", check_trace, "Trace literal, e.g. \"(1,2,4)\" or \"ε\"")->required();

  auto* utilities = app.add_subcommand("utilities", "Compute the stakeholder utility vector");
  std::string util_spec, util_counts, util_format = "text";
  EnumerationFlags util_flags;
  utilities->add_option("spec", util_spec, "Process spec (.dproc) with stakeholders");
  utilities->add_option("--from-counts", util_counts, "Use counts good1,...,goodm/total instead of enumerating");
  util_flags.attach(utilities);
  add_format(utilities, util_format);

  auto* cmp = app.add_subcommand("compare", "Compare stakeholder systems over all stakeholder subsets");
  CompareFlags cf;
  EnumerationFlags cmp_flags;
  cmp->add_option("specs", cf.specs, "Process specs (.dproc)");
  cmp->add_option("--vectors", cf.vectors, "Vector file: one 'label: u1 ... um' line per system");
  cmp->add_option("--from-report", cf.from_report, "Re-render a JSON report");
  cmp->add_flag("--allow-single", cf.allow_single, "Accept a single system");
  cmp->add_option("--tolerance", cf.tolerance, "Absolute tie tolerance on H values")->check(CLI::NonNegativeNumber);
  cmp->add_option("--max-stakeholders", cf.max_stakeholders, "Subset-scan stakeholder limit");
  cmp_flags.attach(cmp);
  add_format(cmp, cf.format);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*traces) return cmd_traces(traces_spec, count_only, stats, traces_flags, traces_format, out);
    if (*check) return cmd_check(check_spec, check_trace, out);
    if (*utilities) return cmd_utilities(util_spec, util_counts, util_flags, util_format, out);
    if (*cmp) return cmd_compare(cf, cmp_flags, out);
  } catch (const std::exception& e) {
    return exit_code_for(e, err);
  }
  return kUsage;
}

}  // namespace dproc::cli
