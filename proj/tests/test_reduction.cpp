#include "doctest.h"
#include "strandtrace/error.hpp"
#include "strandtrace/oracle.hpp"
#include "strandtrace/orders.hpp"
#include "strandtrace/reduction.hpp"
#include "strandtrace/trace.hpp"
#include "support.hpp"

using namespace strandtrace;
using testing_support::sym;

namespace {

const Basis P = Basis::powersum;
const Basis H = Basis::homogeneous;

// Collapses a one-strand combo of dotted strands into Σ coeff · p_{dots+1}
// style signatures: key = dots, value = coefficient in p.
std::map<int, SymFun> by_dots(const DiagramCombo& c) {
  std::map<int, SymFun> out;
  for (const auto& [key, coeff] : c.terms()) {
    REQUIRE(key.strands() == 1);
    auto [it, inserted] = out.try_emplace(key.weights[0], coeff);
    if (!inserted) it->second += coeff;
  }
  return out;
}

}  // namespace

TEST_CASE("closed form for a size-2 crossing") {
  // trace(∂_0 [1,2]) = p_1 | + |^1 = ∂_1.
  PartialCombo expect;
  expect.add(StrandDiagram(1, {}), 1, SymFun::one(H));
  CHECK(closed_form_single_crossing(2, 0) == expect);
  // trace(∂_1 [1,2]) = ∂_2 + h_2 ∂_0.
  PartialCombo expect1;
  expect1.add(StrandDiagram(1, {}), 2, SymFun::one(H));
  expect1.add(StrandDiagram(1, {}), 0, sym(H, {{{2}, 1}}));
  CHECK(closed_form_single_crossing(2, 1) == expect1);
  CHECK_THROWS_AS(closed_form_single_crossing(1, 0), InvalidInput);
  CHECK_THROWS_AS(closed_form_single_crossing(3, -1), InvalidInput);
  CHECK_THROWS_AS(single_crossing_raw(1, 0), InvalidInput);
}

TEST_CASE("closed form, raw form and iterated trace coincide") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 0; k <= 5; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const StrandDiagram cross(n, {{1, n}});
      const DiagramCombo brute = iterate_trace_partial(cross, k, n - 1);
      const PartialCombo closed = closed_form_single_crossing(n, k);
      CHECK(closed.nonnegative());
      CHECK(closed.total_degree() == n + k);
      CHECK(by_dots(closed.expand()) == by_dots(brute));
      CHECK(by_dots(single_crossing_raw(n, k)) == by_dots(brute));
      CHECK(full_trace(closed.expand()) == full_trace(brute));
    }
  }
}

TEST_CASE("reduction of the (2,1) shape") {
  const Reduction r = reduce_to_h(StaircaseShape(4, Partition{2, 1}));
  CHECK(r.value == sym(H, {{{2, 2}, 2}, {{3, 1}, 2}, {{4}, 4}}));
  REQUIRE(r.steps.size() >= 2);
  CHECK(r.steps.front().terms().size() == 1);
  for (const PartialCombo& step : r.steps) {
    CHECK(step.nonnegative());
    CHECK(step.total_degree() == 4);
  }
}

TEST_CASE("reduction agrees with the oracle and stays nonnegative") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& s : enumerate_shapes(n, ShapeFilter::avoiding_211)) {
      CAPTURE(s.to_string());
      const Reduction r = reduce_to_h(s);
      for (const PartialCombo& step : r.steps) {
        CHECK(step.nonnegative());
        CHECK(step.total_degree() == n);
      }
      CHECK(r.value == to_basis(ch_gamma(s), H));
      CHECK(is_h_positive(r.value).positive);
    }
  }
}

TEST_CASE("free strand collapse for (2,2)") {
  const StaircaseShape s(5, Partition{2, 2});
  CHECK(is_211_avoiding(s));
  CHECK(reduce_to_h(s).value == to_basis(ch_gamma(s), H));
}

TEST_CASE("reduction rejects non-avoiding input") {
  CHECK_THROWS_AS(reduce_to_h(StaircaseShape(4, Partition{1})), InvalidInput);
  CHECK_THROWS_AS(reduce_diagram(StrandDiagram::parse("n=4; [1,3] [2,4]")), NonTraceable);
  CHECK_THROWS_AS(reduce_diagram(StrandDiagram::parse("n=4; [2,3] [1,2]")), NonTraceable);
}

TEST_CASE("partial combo bookkeeping") {
  PartialCombo c;
  CHECK_FALSE(c.total_degree().has_value());
  c.add(StrandDiagram(2, {}), 1, sym(H, {{{1}, 1}}));
  c.add(StrandDiagram(2, {}), 0, sym(H, {{{2}, 1}}));
  CHECK(c.total_degree() == 4);
  c.add(StrandDiagram(2, {}), 0, sym(H, {{{2}, -1}}));
  CHECK(c.terms().size() == 1);
  c.add(StrandDiagram(1, {}), 0, sym(H, {{{1}, -1}}));
  CHECK_FALSE(c.nonnegative());
  CHECK_FALSE(c.total_degree().has_value());
}
