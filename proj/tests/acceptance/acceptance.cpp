// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "dproc/cli.hpp"
#include "support.hpp"

using namespace dproc;
using C = ConstraintTemplate;

namespace {

const std::string kFixtures = DPROC_FIXTURES;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

EnumerationOptions with(Strategy s) {
  EnumerationOptions o;
  o.strategy = s;
  return o;
}

bool same_sequence(const TraceSet& got, const std::vector<Trace>& expected) {
  return std::equal(got.begin(), got.end(), expected.begin(), expected.end());
}

Outcome example_enumeration() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto expected = dproc::testing::evening_expected();
  for (auto s : {Strategy::brute, Strategy::leaf}) {
    auto r = unique_traces(dproc::testing::evening(), with(s));
    o.require(same_sequence(r.traces, expected), std::string(strategy_name(s)) + " trace list differs");
  }
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome after_dinner_enumeration() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto s : {Strategy::brute, Strategy::leaf}) {
    auto ad1 = unique_traces(dproc::testing::ad1(), with(s)).traces;
    auto ad2 = unique_traces(dproc::testing::ad2(), with(s)).traces;
    o.require(ad1 == canonicalize(dproc::testing::ad1_expected()), "AD1 differs");
    o.require(ad2 == canonicalize(dproc::testing::ad2_expected()), "AD2 differs");
    std::vector<Trace> with6;
    for (const auto& t : ad1) {
      if (t.contains(5)) with6.push_back(t);
    }
    o.require(ad2 == canonicalize(with6), "AD2 is not the AD1 traces containing 6");
  }
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome workload_counter() {
  Outcome o;
  std::vector<C> none;
  auto r = unique_traces_brute(make_process(Alphabet::range(7), none));
  o.require(r.satisfies_calls == 13700, "n=7 performed " + std::to_string(r.satisfies_calls) + " checks");
  for (std::uint64_t n = 0; n <= 10; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
      std::uint64_t falling = 1;  // n! / (n - k)!
      for (std::uint64_t i = 0; i < k; ++i) falling *= n - i;
      sum += falling;
    }
    o.require(enumeration_workload(n) == sum, "workload mismatch at n=" + std::to_string(n));
  }
  return o;
}

Outcome utility_regression() {
  Outcome o;
  struct Row {
    std::uint64_t good, total;
    double expected;
  };
  const Row rows[] = {{12, 16, 0.90531},       {6, 8, 0.88562},         {2, 16, 0.38776},
                      {4, 16, 0.56806},        {11, 459, 0.40529},      {3, 459, 0.22610},
                      {389, 459, 0.97308},     {452, 459, 0.99750},     {448, 459, 0.99605},
                      {324, 16316590, 0.34826}, {1457048, 16316590, 0.85454}, {1952, 199143708, 0.39651},
                      {16316590, 199143708, 0.86908}, {8, 16, 0.77552}, {1, 8, 0.31546}, {2, 8, 0.50000}};
  for (const auto& r : rows) {
    const double u = utility(r.good, r.total);
    o.require(std::abs(u - r.expected) <= 5e-6,
              "u(" + std::to_string(r.good) + "," + std::to_string(r.total) + ") = " + std::to_string(u));
  }
  return o;
}

Outcome comparison_regression() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto ph = dproc::testing::ph_vectors();
  const double h[] = {0.97640, 0.66778, 0.61753};
  for (std::size_t i = 0; i < 3; ++i) {
    o.require(std::abs(h_distance(ph[i].values) - h[i]) <= 5e-6, "H mismatch for system " + std::to_string(i));
  }
  const auto rows = subset_scan(ph);
  const auto winners = dproc::testing::ph_winners();
  o.require(rows.size() == winners.size(), "expected 31 rows");
  for (std::size_t r = 0; r < std::min(rows.size(), winners.size()); ++r) {
    o.require(rows[r].winner == winners[r], "winner mismatch in row " + std::to_string(r + 1));
  }
  const auto s = robustness_summary(rows, 5);
  for (auto st : kStrata) o.require(s[st].winner == 2, "PH2b does not win " + std::string(stratum_name(st)));
  auto freq = [&](Stratum st, std::size_t num, std::size_t den) {
    o.require(s[st].freq_num == num && s[st].freq_den == den,
              std::string(stratum_name(st)) + " frequency " + std::to_string(s[st].freq_num) + "/" +
                  std::to_string(s[st].freq_den));
  };
  freq(Stratum::almost_all, 5, 6);
  freq(Stratum::more_than_half, 12, 16);
  freq(Stratum::any, 20, 31);
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome leaf_brute_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  const std::vector<TemplateKind> kinds{TemplateKind::participation, TemplateKind::initial, TemplateKind::resp,
                                        TemplateKind::chainresp, TemplateKind::prec, TemplateKind::succ,
                                        TemplateKind::notsucc, TemplateKind::notcoexist,
                                        TemplateKind::notcoexist_weak, TemplateKind::optresp, TemplateKind::choice};
  const TemplateKind leaf_kinds[] = {TemplateKind::resp, TemplateKind::prec, TemplateKind::succ};
  std::size_t mismatches = 0, peeled = 0;
  const int rounds = 600;
  for (int round = 0; round < rounds; ++round) {
    const std::size_t n = 2 + rng() % 6;
    const std::size_t core = n - 1;
    std::vector<C> cs;
    const std::size_t m = rng() % 6;
    for (std::size_t i = 0; i < m; ++i) {
      const auto k = kinds[rng() % kinds.size()];
      const ActivityId a = rng() % core, b = rng() % core;
      if (k == TemplateKind::choice) {
        std::vector<ActivityId> members{a, b};
        cs.push_back(C::choice(1 + rng() % (a == b ? 1 : 2), members));
      } else {
        cs.push_back(is_unary(k) ? C::make(k, {a}) : C::make(k, {a, b}));
      }
    }
    const ActivityId anchor = rng() % core;
    cs.push_back(C::make(leaf_kinds[rng() % 3], {anchor, static_cast<ActivityId>(n - 1)}));
    std::shuffle(cs.begin(), cs.end(), rng);
    const auto p = make_process(Alphabet::range(n), cs);
    const auto brute = unique_traces(p, with(Strategy::brute));
    const auto leaf = unique_traces(p, with(Strategy::leaf));
    if (!leaf.peel_sequence.empty()) ++peeled;
    if (brute.traces != leaf.traces) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.require(peeled == static_cast<std::size_t>(rounds), "some processes were not peeled");
  return o;
}

Outcome template_expansion_equivalence() {
  Outcome o;
  std::size_t mismatches = 0, checks = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto traces = dproc::testing::all_unique_traces(n);
    std::vector<C> cs;
    for (ActivityId a = 0; a < n; ++a) {
      cs.push_back(C::participation(a));
      cs.push_back(C::initial(a));
      for (ActivityId b = 0; b < n; ++b) {
        for (auto k : {TemplateKind::resp, TemplateKind::chainresp, TemplateKind::prec, TemplateKind::succ,
                       TemplateKind::notsucc, TemplateKind::notcoexist, TemplateKind::notcoexist_weak,
                       TemplateKind::optresp}) {
          cs.push_back(C::make(k, {a, b}));
        }
      }
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<ActivityId> members;
      for (ActivityId a = 0; a < n; ++a) {
        if (mask & (1u << a)) members.push_back(a);
      }
      for (std::size_t k = 1; k <= members.size(); ++k) cs.push_back(C::choice(k, members));
    }
    for (const auto& c : cs) {
      const auto f = expand_template(c);
      for (const auto& t : traces) {
        ++checks;
        if (eval_template(c, t) != eval_formula(f, t)) ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches in " + std::to_string(checks) + " checks");
  return o;
}

Outcome utility_properties() {
  Outcome o;
  for (std::uint64_t b = 1; b <= 200; ++b) {
    o.require(utility(0, b) == 0.0, "u(0,b) != 0 at b=" + std::to_string(b));
    o.require(utility(b, b) == 1.0, "u(b,b) != 1 at b=" + std::to_string(b));
    for (std::uint64_t a = 1; a <= b; ++a) {
      o.require(utility(a, b) > utility(a - 1, b), "not increasing at a=" + std::to_string(a));
      const double scaled = utility((1 + a) * (1 + a) - 1, (1 + b) * (1 + b) - 1);
      o.require(std::abs(scaled - utility(a, b)) <= 1e-12, "scaling identity fails at a=" + std::to_string(a));
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  auto run = [](std::vector<std::string> args, const std::string& workers) {
    args.insert(args.begin(), "dproc");
    args.push_back("--algorithm");
    args.push_back("brute");
    args.push_back("--workers");
    args.push_back(workers);
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  const std::string ex = kFixtures + "/evening.dproc";
  const std::string ad1 = kFixtures + "/ad1.dproc";
  const std::string ad2 = kFixtures + "/ad2.dproc";
  const std::vector<std::vector<std::string>> commands{
      {"traces", ex},
      {"traces", ad1},
      {"traces", ad2},
      {"traces", ad1, "--format", "json", "--stats"},
      {"compare", ad1, ad2},
      {"compare", ad1, ad2, "--format", "json"},
  };
  for (const auto& cmd : commands) {
    const auto one = run(cmd, "1");
    o.require(one.rfind("0\n", 0) == 0, cmd[0] + " " + cmd[1] + " failed");
    o.require(one == run(cmd, "8"), cmd[0] + " " + cmd[1] + " output depends on --workers");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example enumeration", example_enumeration},
      {"after-dinner enumeration", after_dinner_enumeration},
      {"workload counter", workload_counter},
      {"utility regression", utility_regression},
      {"comparison regression", comparison_regression},
      {"leaf/brute equivalence", leaf_brute_equivalence},
      {"template/expansion equivalence", template_expansion_equivalence},
      {"utility properties", utility_properties},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.pass) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    failures += !o.pass;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
