#include <doctest.h>

#include "support.hpp"

using namespace dproc;
using dproc::testing::T;

TEST_CASE("alphabet labels and lookup") {
  auto a = Alphabet::range(3);
  CHECK(a.size() == 3);
  CHECK(a.label(0) == "1");
  CHECK(a.id_of("3") == 2);
  CHECK_FALSE(a.find("4").has_value());
  CHECK_THROWS_AS(a.id_of("4"), UnknownActivity);

  auto n = Alphabet::numbered({10, 20});
  CHECK(n.label(1) == "20");
}

TEST_CASE("alphabet rejects duplicate labels and gaps") {
  CHECK_THROWS_AS(Alphabet({{0, "a", ""}, {1, "a", ""}}), DuplicateActivityId);
  CHECK_THROWS(Alphabet({{0, "a", ""}, {2, "b", ""}}));
}

TEST_CASE("canonical trace order is length then lexicographic") {
  std::vector<Trace> v{T({2, 1}), T({3}), T({}), T({1, 2}), T({1}), T({1, 2})};
  auto s = canonicalize(v);
  REQUIRE(s.size() == 5);
  CHECK(s[0] == T({}));
  CHECK(s[1] == T({1}));
  CHECK(s[2] == T({3}));
  CHECK(s[3] == T({1, 2}));
  CHECK(s[4] == T({2, 1}));
  CHECK(s.contains(T({2, 1})));
  CHECK_FALSE(s.contains(T({2})));
}

TEST_CASE("uniqueness and insertion") {
  CHECK(is_unique_trace(T({1, 2, 3})));
  CHECK_FALSE(is_unique_trace(T({1, 2, 1})));
  CHECK(is_unique_trace(T({})));
  CHECK(T({1, 3}).inserted(1, 1) == T({1, 2, 3}));
  CHECK(T({1, 3}).index_of(2) == 1u);
}

TEST_CASE("trace formatting and parsing round trip") {
  auto a = Alphabet::range(5);
  CHECK(format_trace(T({1, 2, 4}), a) == "(1, 2, 4)");
  CHECK(format_trace(T({}), a) == "ε");
  CHECK(parse_trace("(1,2,4)", a) == T({1, 2, 4}));
  CHECK(parse_trace("1, 2", a) == T({1, 2}));
  CHECK(parse_trace("ε", a).empty());
  CHECK(parse_trace("()", a).empty());
  CHECK_THROWS_AS(parse_trace("(1, 9)", a), UnknownActivity);
}

TEST_CASE("make_process validates activities") {
  CHECK_THROWS_AS(make_process(Alphabet::range(2), {ConstraintTemplate::resp(0, 2)}), UnknownActivity);
  CHECK_NOTHROW(make_process(Alphabet::range(3), {ConstraintTemplate::resp(0, 2)}));
}

TEST_CASE("stakeholder system validation") {
  auto p = dproc::testing::evening();
  CHECK_THROWS(StakeholderSystem("x", p, {}));
  Stakeholder bad{"S1", "", Preference::of(ConstraintTemplate::participation(7))};
  CHECK_THROWS_AS(StakeholderSystem("x", p, {bad}), UnknownActivity);
  Stakeholder ok{"S1", "", Preference::of(ConstraintTemplate::participation(4))};
  CHECK(StakeholderSystem("x", p, {ok}).size() == 1);
}
