#include <sstream>

#include "doctest.h"
#include "strandtrace/error.hpp"
#include "strandtrace/parallel.hpp"
#include "strandtrace/search.hpp"
#include "strandtrace/serialize.hpp"
#include "support.hpp"

using namespace strandtrace;
using testing_support::sym;

namespace {

std::string run_jsonl(const SearchOptions& options) {
  std::ostringstream os;
  search_general(options, [&](const SearchRecord& r) { os << to_json(r).dump() << '\n'; });
  return os.str();
}

}  // namespace

TEST_CASE("exhaustive enumeration order and size") {
  SearchOptions o;
  o.strands = 3;
  o.max_crossings = 2;
  const auto ds = search_diagrams(o);
  CHECK(ds.size() == 3 + 9);
  CHECK(ds[0].to_text() == "n=3; [1,2]");
  CHECK(ds[2].to_text() == "n=3; [2,3]");
  CHECK(ds[3].to_text() == "n=3; [1,2] [1,2]");
  CHECK(ds.back().to_text() == "n=3; [2,3] [2,3]");
  CHECK(all_crossings(4).size() == 6);

  o.strands = 1;
  CHECK_THROWS_AS(search_diagrams(o), InvalidInput);
  o.strands = 3;
  o.max_crossings = 0;
  CHECK_THROWS_AS(search_diagrams(o), InvalidInput);
  o.strands = 10;
  o.max_crossings = 6;
  CHECK_THROWS_AS(search_diagrams(o), GuardExceeded);
}

TEST_CASE("two strands give powers of two times h_2") {
  SearchOptions o;
  o.strands = 2;
  o.max_crossings = 5;
  std::vector<SearchRecord> recs;
  search_general(o, [&](const SearchRecord& r) { recs.push_back(r); });
  REQUIRE(recs.size() == 5);
  for (std::size_t j = 1; j <= 5; ++j) {
    CHECK(recs[j - 1].positive);
    CHECK(recs[j - 1].h_expansion == sym(Basis::homogeneous, {{{2}, mpq_class(1L << j)}}));
  }
}

TEST_CASE("the four-crossing example is found and positive") {
  SearchOptions o;
  o.strands = 4;
  o.max_crossings = 4;
  bool seen = false;
  search_general(o, [&](const SearchRecord& r) {
    if (r.diagram.to_text() != "n=4; [2,3] [1,2] [3,4] [2,3]") return;
    seen = true;
    CHECK(r.positive);
    CHECK(r.h_expansion == sym(Basis::homogeneous, {{{2, 2}, 4}, {{3, 1}, 4}, {{4}, 8}}));
  });
  CHECK(seen);
}

TEST_CASE("random mode is reproducible") {
  SearchOptions o;
  o.strands = 5;
  o.max_crossings = 4;
  o.mode = SearchMode::random;
  o.samples = 50;
  o.seed = 12345;
  const auto a = search_diagrams(o);
  CHECK(a == search_diagrams(o));
  CHECK(a.size() == 50);
  for (const auto& d : a) {
    CHECK(d.crossings().size() >= 1);
    CHECK(d.crossings().size() <= 4);
  }
  o.seed = 12346;
  CHECK(a != search_diagrams(o));

  SearchRng rng(1);
  for (int k = 0; k < 1000; ++k) CHECK(rng.below(7) < 7);
  CHECK_THROWS_AS(rng.below(0), InvalidInput);
  // std::mt19937_64 with the default seed produces 9981545732273789042 as its 10000th output.
  std::mt19937_64 ref;
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ULL);
}

TEST_CASE("output does not depend on the worker count") {
  SearchOptions o;
  o.strands = 4;
  o.max_crossings = 3;
  o.threads = 1;
  const std::string one = run_jsonl(o);
  o.threads = 3;
  CHECK(run_jsonl(o) == one);
  o.threads = 8;
  CHECK(run_jsonl(o) == one);
}

TEST_CASE("no negative diagram on up to four strands with up to three crossings") {
  for (int n = 2; n <= 4; ++n) {
    SearchOptions o;
    o.strands = n;
    o.max_crossings = 3;
    std::size_t bad = 0;
    search_general(o, [&](const SearchRecord& r) { bad += !r.positive; });
    CHECK(bad == 0);
  }
}

TEST_CASE("parallel_for") {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), 4, [&](std::size_t k) { hit[k] += 1; });
  CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t k) { if (k == 5) throw InvalidInput("boom"); }), InvalidInput);
  parallel_for(0, 4, [](std::size_t) { FAIL("not called"); });
  CHECK(worker_count() >= 1);
}
