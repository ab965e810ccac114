#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "strandtrace/cli.hpp"

using namespace strandtrace;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const CliHooks& hooks = {}) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute golden output") {
  const Run r = run({"compute", "--lambda", "2,1", "--n", "4", "--basis", "h", "--via", "both"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "shape       (2,1) in stair(4)\n"
        "route       trace+oracle (agree)\n"
        "h-positive  yes\n"
        "basis       h\n"
        "  h[3,1]          2\n"
        "  h[2,2]          2\n"
        "  h[4]            4\n");
  CHECK(r.err.empty());

  const Run j = run({"compute", "--lambda", "", "--n", "3", "--basis", "h", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out ==
        R"({"command":"compute","lambda":[],"n":3,"via":"both","route":"trace+oracle","agree":true,)"
        R"("h_positive":true,"result":{"basis":"h","terms":[{"partition":[3],"coeff":"6/1"}]}})"
        "\n");

  const Run p = run({"compute", "--lambda", "2,1", "--n", "4", "--basis", "p", "--via", "oracle", "--format", "csv"});
  CHECK(p.out == "partition,coeff\n1 1 1 1,1/1\n2 1 1,3/1\n3 1,2/1\n2 2,1/1\n4,1/1\n");
}

TEST_CASE("compute on a shape containing 2+1+1 falls back with a notice") {
  const Run r = run({"compute", "--lambda", "1", "--n", "4", "--via", "trace", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.err.find("notice:") != std::string::npos);
  CHECK(r.out == "partition,coeff\n3 1,2/1\n4,16/1\n");
  const Run both = run({"compute", "--lambda", "1", "--n", "4", "--via", "both"});
  CHECK(both.code == 0);
  CHECK(both.out.find("diagram+oracle (agree)") != std::string::npos);
}

TEST_CASE("a corrupted trace value is reported as a mismatch") {
  CliHooks hooks;
  hooks.corrupt_trace = [](SymFun& f) { f.add_term(Partition{4}, 1); };
  const Run r = run({"compute", "--lambda", "2,1", "--n", "4", "--via", "both"}, hooks);
  CHECK(r.code == 1);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
  CHECK(r.err.find("disagree") != std::string::npos);
  const Run j = run({"compute", "--lambda", "4,3,1,1", "--n", "6", "--via", "both", "--format", "json"}, hooks);
  CHECK(j.code == 1);
  CHECK(j.out.find(R"("agree":false)") != std::string::npos);
  // The oracle-only route never consults the hook.
  CHECK(run({"compute", "--lambda", "2,1", "--n", "4", "--via", "oracle"}, hooks).code == 0);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({"compute", "--lambda", "5", "--n", "4"}).code == 2);
  CHECK(run({"compute", "--lambda", "x", "--n", "4"}).code == 2);
  CHECK(run({"compute", "--n", "4", "--basis", "q"}).code == 2);
  CHECK(run({"compute", "--lambda", "1"}).code == 2);
  CHECK(run({"compute", "--n", "11"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "trace", "--max-n", "11"}).code == 2);
  CHECK(run({"verify", "--suite", "closed-form", "--max-k", "9"}).code == 2);
  CHECK(run({"search", "--strands", "9", "--max-crossings", "6"}).code == 2);
  CHECK(run({"search", "--strands", "1"}).code == 2);
  CHECK(run({"search", "--strands", "3", "--out", "/nonexistent-dir/x.jsonl"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify") {
  const Run r = run({"classify", "--lambda", "4,3,1,1", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "shape       (4,3,1,1) in stair(6)\n"
        "3+1         avoids\n"
        "2+2         avoids\n"
        "2+1+1       avoids (corner rule: avoids)\n"
        "corners     (1,3) (3,5) (4,6)\n"
        "crossings   [1,2] [2,4] [4,5] [5,6]\n"
        "staircase   yes\n");
  const Run c = run({"classify", "--lambda", "1", "--n", "4"});
  CHECK(c.out.find("2+1+1       contains (corner rule: contains)  witness 1<4 | 2 | 3\n") != std::string::npos);
  const Run j = run({"classify", "--lambda", "2,1", "--n", "4", "--format", "json"});
  CHECK(j.out ==
        R"({"command":"classify","lambda":[2,1],"n":4,"patterns":{"3+1":{"avoids":true},"2+2":{"avoids":true},)"
        R"("2+1+1":{"avoids":true,"corner_rule":true}},"corners":[[1,3],[2,4]],"crossings":[[1,2],[2,3],[3,4]],)"
        R"("staircase_like":true})"
        "\n");
}

TEST_CASE("verify suites") {
  const Run cf = run({"verify", "--suite", "closed-form", "--max-n", "6", "--max-k", "4"});
  CHECK(cf.code == 0);
  CHECK(cf.out.find("summary: 25 passed, 0 failed\n") != std::string::npos);
  const Run id = run({"verify", "--suite", "identities", "--max-n", "8"});
  CHECK(id.code == 0);
  CHECK(id.out.find("summary: 109 passed, 0 failed\n") != std::string::npos);
  const Run tr = run({"verify", "--suite", "trace", "--max-n", "5", "--format", "json"});
  CHECK(tr.code == 0);
  CHECK(tr.out.find(R"("failed":0)") != std::string::npos);
  CHECK(run({"verify", "--max-n", "4"}).code == 0);
}

TEST_CASE("search") {
  const Run r = run({"search", "--strands", "2", "--max-crossings", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"n":2,"crossings":[[1,2]],"h":[{"partition":[2],"coeff":"2/1"}],"positive":true})"
        "\n"
        R"({"n":2,"crossings":[[1,2],[1,2]],"h":[{"partition":[2],"coeff":"4/1"}],"positive":true})"
        "\n"
        R"({"n":2,"crossings":[[1,2],[1,2],[1,2]],"h":[{"partition":[2],"coeff":"8/1"}],"positive":true})"
        "\n");
  CHECK(r.err == "searched 3 diagrams on 2 strands (exhaustive): 3 h-positive, 0 counterexamples\n");

  const std::string path = "cli_search_test.jsonl";
  const Run f = run({"search", "--strands", "3", "--max-crossings", "2", "--out", path});
  CHECK(f.code == 0);
  CHECK(f.out == "searched 12 diagrams on 3 strands (exhaustive): 12 h-positive, 0 counterexamples\n");
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 12);
  std::remove(path.c_str());
}

TEST_CASE("output is identical for every worker count") {
  const std::vector<std::vector<std::string>> commands = {
      {"search", "--strands", "4", "--max-crossings", "3"},
      {"search", "--strands", "5", "--max-crossings", "4", "--mode", "random", "--seed", "99", "--samples", "200"},
      {"compute", "--lambda", "3,3,1", "--n", "7", "--basis", "p", "--format", "json"},
      {"verify", "--max-n", "5", "--format", "json"},
      {"classify", "--lambda", "2,2", "--n", "5", "--format", "json"},
  };
  for (const auto& cmd : commands) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "2", "5"}) {
      setenv("STRAND_TRACE_THREADS", threads, 1);
      const Run r = run(cmd);
      CHECK(r.code == 0);
      outputs.push_back(r.out + "\x1f" + r.err);
    }
    unsetenv("STRAND_TRACE_THREADS");
    CHECK(outputs[0] == outputs[1]);
    CHECK(outputs[0] == outputs[2]);
  }
}
