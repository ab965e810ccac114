#include "doctest.h"
#include "strandtrace/error.hpp"
#include "strandtrace/orders.hpp"
#include "strandtrace/reduction.hpp"
#include "strandtrace/search.hpp"
#include "strandtrace/serialize.hpp"
#include "support.hpp"

using namespace strandtrace;

TEST_CASE("diagram json") {
  const StrandDiagram d = StrandDiagram::parse("n=4; [2,3] [1,2]");
  CHECK(to_json(d).dump() == R"({"n":4,"crossings":[[2,3],[1,2]]})");
  CHECK(diagram_from_json(to_json(d)) == d);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"n":2,"crossings":[[1,3]]})")), InvalidInput);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"crossings":[]})")), InvalidInput);
}

TEST_CASE("graph json") {
  const IncompGraph g = incomparability_graph(poset_from_lambda(StaircaseShape(4, Partition{2, 1})));
  CHECK(to_json(g).dump() == R"({"n":4,"edges":[[1,2],[2,3],[3,4]]})");
}

TEST_CASE("search record json") {
  const SearchRecord ok = evaluate_diagram(StrandDiagram::parse("n=2; [1,2]"));
  CHECK(to_json(ok).dump() ==
        R"({"n":2,"crossings":[[1,2]],"h":[{"partition":[2],"coeff":"2/1"}],"positive":true})");
  SearchRecord bad = ok;
  bad.positive = false;
  bad.witness = NegativeWitness{Partition{1, 1}, -1};
  CHECK(to_json(bad).dump() ==
        R"({"n":2,"crossings":[[1,2]],"h":[{"partition":[2],"coeff":"2/1"}],"positive":false,)"
        R"("witness":{"partition":[1,1],"coeff":"-1/1"}})");
}

TEST_CASE("partial combo json") {
  const PartialCombo c = closed_form_single_crossing(2, 1);
  CHECK(to_json(c).dump() ==
        R"({"terms":[{"diagram":{"n":1,"crossings":[]},"b":0,"coeff":{"basis":"h","terms":[{"partition":[2],"coeff":"1/1"}]}},)"
        R"({"diagram":{"n":1,"crossings":[]},"b":2,"coeff":{"basis":"h","terms":[{"partition":[],"coeff":"1/1"}]}}]})");
}

TEST_CASE("malformed symfun json") {
  CHECK_THROWS_AS(symfun_from_json(Json::parse(R"({"basis":"q","terms":[]})")), InvalidInput);
  CHECK_THROWS_AS(symfun_from_json(Json::parse(R"({"basis":"p","terms":[{"partition":[1],"coeff":"x"}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(symfun_from_json(Json::parse(R"([1,2])")), InvalidInput);
}
