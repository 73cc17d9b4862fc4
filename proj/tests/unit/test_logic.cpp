#include <doctest.h>

#include "support.hpp"

using namespace dproc;
using dproc::testing::T;
using C = ConstraintTemplate;

namespace {

std::vector<ConstraintTemplate> catalog(std::size_t n) {
  std::vector<ConstraintTemplate> out;
  for (ActivityId a = 0; a < n; ++a) {
    out.push_back(C::participation(a));
    out.push_back(C::initial(a));
    for (ActivityId b = 0; b < n; ++b) {
      for (auto k : {TemplateKind::resp, TemplateKind::chainresp, TemplateKind::prec, TemplateKind::succ,
                     TemplateKind::notsucc, TemplateKind::notcoexist, TemplateKind::notcoexist_weak,
                     TemplateKind::optresp}) {
        out.push_back(C::make(k, {a, b}));
      }
    }
  }
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<ActivityId> members;
    for (ActivityId a = 0; a < n; ++a) {
      if (mask & (1u << a)) members.push_back(a);
    }
    for (std::size_t k = 1; k <= members.size(); ++k) out.push_back(C::choice(k, members));
  }
  return out;
}

}  // namespace

TEST_CASE("template semantics agree with the LTLf expansion") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto traces = dproc::testing::all_unique_traces(n);
    for (const auto& c : catalog(n)) {
      const auto f = expand_template(c);
      for (const auto& t : traces) {
        if (eval_template(c, t) != eval_formula(f, t)) {
          FAIL(template_name(c.kind()), " disagrees on ", format_trace(t, Alphabet::range(n)));
        }
      }
    }
  }
}

TEST_CASE("vacuous satisfaction") {
  CHECK(eval_template(C::resp(0, 1), T({})));
  CHECK(eval_template(C::prec(0, 1), T({3})));
  CHECK(eval_template(C::succ(0, 1), T({})));
  CHECK(eval_template(C::notsucc(0, 1), T({2})));
  CHECK_FALSE(eval_template(C::participation(0), T({})));
  CHECK_FALSE(eval_template(C::initial(0), T({})));
  CHECK(eval_template(C::chainresp(0, 1), T({})));
}

TEST_CASE("template examples") {
  CHECK(eval_template(C::resp(0, 1), T({1, 3, 2})));
  CHECK_FALSE(eval_template(C::resp(0, 1), T({2, 1})));
  CHECK(eval_template(C::prec(0, 1), T({1, 2})));
  CHECK_FALSE(eval_template(C::prec(0, 1), T({2, 1})));
  CHECK_FALSE(eval_template(C::succ(0, 3), T({1, 2})));
  CHECK(eval_template(C::chainresp(0, 1), T({1, 2, 3})));
  CHECK_FALSE(eval_template(C::chainresp(0, 1), T({1, 3, 2})));
  CHECK_FALSE(eval_template(C::chainresp(0, 1), T({3, 1})));
  CHECK_FALSE(eval_template(C::notsucc(3, 1), T({4, 2})));
  CHECK(eval_template(C::notsucc(3, 1), T({2, 4})));
  CHECK(eval_template(C::notcoexist(0, 1), T({1})));
  CHECK_FALSE(eval_template(C::notcoexist(0, 1), T({})));
  CHECK(eval_template(C::notcoexist_weak(0, 1), T({})));
  CHECK(eval_template(C::choice(2, {0, 1, 2}), T({3, 1})));
  CHECK_FALSE(eval_template(C::choice(2, {0, 1, 2}), T({3, 4})));
  // F is reflexive, so resp(a, a) always holds.
  CHECK(eval_template(C::resp(0, 0), T({1})));
}

TEST_CASE("template construction errors") {
  CHECK_THROWS_AS(C::make(TemplateKind::resp, {0}), ArityError);
  CHECK_THROWS_AS(C::make(TemplateKind::participation, {0, 1}), ArityError);
  CHECK_THROWS_AS(C::choice(3, {0, 1}), ArityError);
  CHECK_THROWS_AS(C::choice(1, {}), ArityError);
  CHECK(C::choice(1, {2, 0, 2}).args().size() == 2);
  CHECK(template_from_name("choice1") == TemplateKind::choice);
  CHECK_FALSE(template_from_name("nope").has_value());
}

TEST_CASE("formula rendering and equality") {
  const auto f = expand_template(C::resp(0, 1));
  CHECK(f == Formula::G(Formula::Implies(Formula::atom(0), Formula::F(Formula::atom(1)))));
  CHECK_FALSE(f == expand_template(C::resp(1, 0)));
  CHECK(f.to_string() == "G (0 -> (F 1))");
}

TEST_CASE("LTLf operators at the trace boundary") {
  const auto x = Formula::X(Formula::tt());
  CHECK_FALSE(eval_formula(x, T({1})));
  CHECK(eval_formula(x, T({1, 2})));
  CHECK(eval_formula(Formula::G(Formula::ff()), T({})));
  CHECK_FALSE(eval_formula(Formula::F(Formula::tt()), T({})));
  CHECK_FALSE(eval_formula(Formula::U(Formula::tt(), Formula::atom(0)), T({2})));
  CHECK(eval_formula(Formula::W(Formula::tt(), Formula::atom(0)), T({2})));
}

TEST_CASE("preferences") {
  auto p = Preference::conj(Preference::of(C::participation(2)), Preference::negate(Preference::of(C::initial(0))));
  CHECK(p.holds(T({2, 3})));
  CHECK_FALSE(p.holds(T({1, 3})));
  CHECK(p.constraints().size() == 2);
  for (const auto& t : dproc::testing::all_unique_traces(4)) {
    CHECK(p.holds(t) == eval_formula(p.to_formula(), t));
  }
}

TEST_CASE("DSL parses the evening example") {
  const auto spec = parse_spec(R"(
    # comment
    process evening {
      activities { 1 "Finish dinner"; 2; 3; 4; 5; }
      constraints { resp(1, 2); prec(2, 3); prec(3, 5); succ(1, 4); notsucc(4, 2); }
    }
    stakeholder S1 "tidy" { prefer participation(5) or not initial(1) and participation(2); }
  )");
  CHECK(spec.name == "evening");
  const auto reference = dproc::testing::evening();
  const auto expected = reference.constraints();
  CHECK(std::equal(spec.process.constraints().begin(), spec.process.constraints().end(), expected.begin(),
                   expected.end()));
  CHECK(spec.process.alphabet()[0].description == "Finish dinner");
  REQUIRE(spec.stakeholders.size() == 1);
  const auto& p = spec.stakeholders[0].preference;
  CHECK(p.op() == Preference::Op::or_);
  CHECK(p.rhs().op() == Preference::Op::and_);
}

TEST_CASE("DSL labels are external") {
  const auto spec = parse_spec("process p { activities { 10; 20; } constraints { resp(20, 10); } }");
  CHECK(spec.process.constraints()[0] == C::resp(1, 0));
  CHECK(format_constraint(spec.process.constraints()[0], spec.process.alphabet()) == "resp(20, 10)");
}

TEST_CASE("DSL errors carry positions") {
  try {
    parse_spec("process p {\n  activities { 1; }\n  constraints { resp(1); }\n}");
    FAIL("expected ArityError");
  } catch (const ArityError& e) {
    CHECK(std::string(e.what()).rfind("3:17:", 0) == 0);
  }
  try {
    parse_spec("process p {\n  activities { 1 }\n}");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 18);
  }
  CHECK_THROWS_AS(parse_spec("process p { activities { 1; } constraints { bogus(1); } }"), SyntaxError);
  CHECK_THROWS_AS(parse_spec("process p { activities { 1; } constraints { participation(2); } }"), UnknownActivity);
  CHECK_THROWS_AS(parse_spec("process p { activities { 1; 1; } constraints { } }"), DuplicateActivityId);
  CHECK_THROWS_AS(parse_spec("process p { activities { 1; } constraints { } } "
                             "stakeholder A { prefer initial(1); } stakeholder A { prefer initial(1); }"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_spec("process p { activities { 1; } constraints { } } @"), SyntaxError);
}

TEST_CASE("print and parse round trip") {
  const char* text = R"(
    process rt {
      activities { 1 "a \"quoted\" name"; 2; 3; 4; }
      constraints { choice(2, {1, 2, 3}); choice1({4}); chainresp(1, 2); notcoexist(3, 4); notcoexist_weak(1, 4);
                    optresp(2, 3); initial(1); }
    }
    stakeholder A { prefer not (initial(1) or initial(2)) and (participation(3) or participation(4)); }
    stakeholder B "second" { prefer (initial(1) and initial(2)) or not not initial(3); }
    stakeholder C { prefer initial(1) or (initial(2) or initial(3)); }
  )";
  const auto spec = parse_spec(text);
  const auto printed = print_spec(spec);
  CHECK(parse_spec(printed) == spec);
  CHECK(print_spec(parse_spec(printed)) == printed);
  CHECK(format_preference(spec.stakeholders[1].preference, spec.process.alphabet()) ==
        "initial(1) and initial(2) or not not initial(3)");
  CHECK(format_preference(spec.stakeholders[2].preference, spec.process.alphabet()) ==
        "initial(1) or (initial(2) or initial(3))");
}
