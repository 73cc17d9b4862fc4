#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "dproc/dproc.hpp"

namespace dproc::testing {

// Activities are labelled 1..n and stored with id = label - 1.
inline Trace T(std::initializer_list<int> labels) {
  std::vector<ActivityId> ids;
  for (int l : labels) ids.push_back(static_cast<ActivityId>(l - 1));
  return Trace(std::move(ids));
}

inline DeclarativeProcess evening() {
  using C = ConstraintTemplate;
  return make_process(Alphabet::range(5), {C::resp(0, 1), C::prec(1, 2), C::prec(2, 4), C::succ(0, 3),
                                           C::notsucc(3, 1)});
}

inline std::vector<Trace> evening_expected() {
  return {T({}),        T({2}),          T({2, 3}),       T({1, 2, 4}),    T({2, 3, 5}),
          T({1, 2, 3, 4}), T({1, 2, 4, 3}), T({1, 2, 3, 4, 5}), T({1, 2, 3, 5, 4}), T({1, 2, 4, 3, 5})};
}

inline std::vector<ConstraintTemplate> ad1_constraints() {
  using C = ConstraintTemplate;
  return {C::participation(0), C::resp(0, 1),    C::prec(0, 4),     C::prec(1, 2),
          C::succ(2, 3),       C::notsucc(5, 3), C::notsucc(5, 4), C::notsucc(5, 1)};
}

inline DeclarativeProcess ad1() { return make_process(Alphabet::range(6), ad1_constraints()); }

inline DeclarativeProcess ad2() {
  auto c = ad1_constraints();
  c.push_back(ConstraintTemplate::participation(5));
  return make_process(Alphabet::range(6), std::move(c));
}

inline std::vector<Trace> ad1_expected() {
  return {T({1, 2}),          T({1, 2, 5}),          T({1, 5, 2}),          T({1, 2, 6}),
          T({1, 2, 3, 4}),    T({1, 2, 5, 6}),       T({1, 5, 2, 6}),       T({1, 2, 3, 4, 5}),
          T({1, 2, 3, 5, 4}), T({1, 2, 5, 3, 4}),    T({1, 5, 2, 3, 4}),    T({1, 2, 3, 4, 6}),
          T({1, 2, 3, 4, 5, 6}), T({1, 2, 3, 5, 4, 6}), T({1, 2, 5, 3, 4, 6}), T({1, 5, 2, 3, 4, 6})};
}

inline std::vector<Trace> ad2_expected() {
  std::vector<Trace> out;
  for (const auto& t : ad1_expected()) {
    if (t.contains(5)) out.push_back(t);
  }
  return out;
}

inline std::vector<UtilityVector> ph_vectors() {
  return {UtilityVector::from_values({0.40529, 0.22610, 0.97308, 0.99750, 0.99605}),
          UtilityVector::from_values({0.34826, 0.85454, 1.0, 0.99989, 0.99999}),
          UtilityVector::from_values({0.39651, 0.86908, 1.0, 0.99990, 0.99999})};
}

// Optimal system per subset, rows in (size, lex) order; 0 = PH1, 1 = PH2a, 2 = PH2b.
inline std::vector<std::size_t> ph_winners() {
  return {0, 2, 1, 2, 1, 2, 0, 0, 0, 2, 2, 2, 2, 1, 2, 2,
          2, 2, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 0, 2, 2};
}

// Every duplicate-free sequence over {0..n-1}.
inline std::vector<Trace> all_unique_traces(std::size_t n) {
  std::vector<Trace> out{Trace{}};
  std::vector<std::vector<ActivityId>> frontier{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::vector<ActivityId>> next;
    for (const auto& p : frontier) {
      for (ActivityId a = 0; a < n; ++a) {
        if (std::find(p.begin(), p.end(), a) != p.end()) continue;
        auto q = p;
        q.push_back(a);
        out.emplace_back(q);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace dproc::testing
