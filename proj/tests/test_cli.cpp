#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "vir/cli.hpp"
#include "vir/json_io.hpp"

using namespace vir;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j)
      if (has_float(x)) return true;
  return false;
}

}  // namespace

TEST_CASE("simplicity of an induced module") {
  auto r = run({"simplicity", "--family", "induced", "--n", "0", "--s0", "1", "--theta", "0"});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["simple"] == false);
  CHECK(j["witness"]["p"] == 2);
  CHECK(j["witness"]["q"] == 3);

  auto s = run({"simplicity", "--family", "induced", "--n", "2", "--s", "0,1,2"});
  REQUIRE(s.code == 0);
  CHECK(s.doc()["simple"] == true);
}

TEST_CASE("kac table") {
  auto r = run({"kac", "--theta", "0", "--h", "0", "--max-kl", "4"});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  bool zero12 = false;
  for (const auto& e : j["table"])
    if (e["k"] == 1 && e["l"] == 2) zero12 = e["value"] == "0";
  CHECK(zero12);
  CHECK(j["table"].size() == 8);
  CHECK(j["verma_simplicity"]["verdict"] == "not_simple");
}

TEST_CASE("bracket check") {
  auto r = run({"bracket-check", "--family", "omega", "--lambda", "1", "--b", "2", "--range", "6", "--deg", "6"});
  CHECK(r.code == 0);
  CHECK(r.doc()["passed"] == true);
  CHECK(r.doc()["vectors_checked"] == 7);

  for (auto args : std::vector<std::vector<std::string>>{
           {"--family", "verma", "--theta", "1/2", "--h", "-3"},
           {"--family", "mtheta0", "--theta", "0"},
           {"--family", "whittaker", "--n", "2", "--lambdas", "1,0,-2"},
           {"--family", "induced", "--n", "1", "--lambda", "3", "--s", "1,2"},
           {"--family", "tensor", "--lambda", "2", "--b", "0", "--factor", "whittaker", "--n", "1", "--lambdas", "1,2"}}) {
    args.insert(args.begin(), "bracket-check");
    args.insert(args.end(), {"--range", "3", "--deg", "2"});
    auto rr = run(args);
    CHECK(rr.code == 0);
  }
}

TEST_CASE("act on vectors of every family") {
  auto v = run({"act", "--family", "verma", "--theta", "1", "--h", "2", "--k", "1", "--vector",
                R"([{"partition": [[-1, 1]], "coeff": "1"}])"});
  REQUIRE(v.code == 0);
  CHECK(v.doc()["result"]["terms"] == json::parse(R"([{"partition": [], "coeff": "-4"}])"));

  auto o = run({"act", "--family", "omega", "--lambda", "2", "--b", "3", "--k", "1"});
  REQUIRE(o.code == 0);
  CHECK(o.doc()["result"] == json::parse(R"([{"degree": 0, "coefficient": "4"}, {"degree": 1, "coefficient": "2"}])"));

  auto e = run({"act", "--family", "whittaker", "--n", "1", "--lambdas", "7,3", "--element",
                R"([{"word": [2, 0], "central": 0, "coeff": "1"}])"});
  REQUIRE(e.code == 0);
  CHECK(e.doc()["result"]["terms"] ==
        json::parse(R"([{"partition": [], "coeff": "-6"}, {"partition": [[0, 1]], "coeff": "3"}])"));

  auto t = run({"act", "--family", "tensor", "--lambda", "1", "--b", "2", "--factor", "verma", "--theta", "0", "--h",
                "5", "--k", "0"});
  REQUIRE(t.code == 0);
  CHECK(t.doc()["result"].size() == 2);

  auto tagged = run({"act", "--family", "verma", "--theta", "1", "--h", "2", "--k", "1", "--vector",
                     R"({"family": "whittaker", "terms": []})"});
  CHECK(tagged.code == 2);
}

TEST_CASE("singular vectors and closure") {
  auto s = run({"singular", "--theta", "0", "--h", "0", "--level", "2"});
  REQUIRE(s.code == 0);
  CHECK(s.doc()["singular_vectors"].size() == 1);

  auto c = run({"closure", "--family", "tensor", "--lambda", "1", "--b", "2", "--factor", "verma", "--theta", "2", "--h",
                "1/5", "--window", "3,2,3"});
  REQUIRE(c.code == 0);
  CHECK(c.doc()["closure_dim"] == c.doc()["window_dim"]);
  CHECK(c.doc()["shape"]["verdict"] == "pure");

  auto rnd = run({"closure", "--family", "tensor", "--lambda", "1", "--b", "1", "--factor", "verma", "--theta", "2",
                  "--h", "1/5", "--window", "3,2,3", "--vector", R"([{"partial_degree": 1, "factor_key": [], "coeff": "1"}])"});
  REQUIRE(rnd.code == 0);
  CHECK(rnd.doc()["shape"]["verdict"] == "split");

  auto outside = run({"closure", "--family", "tensor", "--lambda", "1", "--b", "2", "--factor", "verma", "--theta", "2",
                      "--h", "1/5", "--window", "3,2,3", "--vector",
                      R"([{"partial_degree": 9, "factor_key": [], "coeff": "1"}])"});
  CHECK(outside.code == 2);
}

TEST_CASE("window from the environment") {
  const std::vector<std::string> args{"closure", "--family", "tensor", "--lambda", "1", "--b", "2", "--factor", "verma",
                                      "--theta", "2", "--h", "1/5"};
  setenv("VIRMOD_WINDOW", "2,1,2", 1);
  auto a = run(args);
  unsetenv("VIRMOD_WINDOW");
  REQUIRE(a.code == 0);
  CHECK(a.doc()["window"] == json::parse(R"({"D": 2, "L": 1, "K": 2})"));
  setenv("VIRMOD_WINDOW", "nonsense", 1);
  CHECK(run(args).code == 2);
  unsetenv("VIRMOD_WINDOW");
}

TEST_CASE("iso-verify, omega-op, classify") {
  auto i = run({"iso-verify", "--family", "induced", "--n", "2", "--lambda", "1", "--s", "1,2,3", "--window", "3,3,4"});
  REQUIRE(i.code == 0);
  CHECK(i.doc()["passed"] == true);
  CHECK(i.doc()["factor"]["lambdas"] == json::parse(R"(["0", "0"])"));

  auto o = run({"omega-op", "--family", "omega", "--lambda", "2", "--b", "1/3", "--order", "4", "--l", "3", "--m", "-2"});
  REQUIRE(o.code == 0);
  CHECK(o.doc()["vanishes"] == true);
  auto o2 = run({"omega-op", "--family", "tensor", "--lambda", "1", "--b", "2", "--factor", "verma", "--theta", "0",
                 "--h", "0", "--order", "5", "--l", "2", "--m", "-7"});
  REQUIRE(o2.code == 0);
  CHECK(o2.doc()["vanishes"] == false);

  const std::string a = R"({"family":"tensor","lambda":"1","b":"2","factor":{"family":"whittaker","n":1,"lambdas":["1","0"]}})";
  const std::string b = R"({"family":"tensor","lambda":"2","b":"2","factor":{"family":"whittaker","n":1,"lambdas":["1","0"]}})";
  auto same = run({"classify", "--module", a, "--other", a});
  REQUIRE(same.code == 0);
  CHECK(same.doc()["isomorphic"] == true);
  auto diff = run({"classify", "--module", a, "--other", b});
  REQUIRE(diff.code == 0);
  CHECK(diff.doc()["isomorphic"] == false);
}

TEST_CASE("invalid input gives exit code 2") {
  for (auto args : std::vector<std::vector<std::string>>{
           {},
           {"nosuch"},
           {"kac", "--theta", "1.5", "--h", "0"},
           {"kac", "--theta", "0"},
           {"simplicity", "--family", "omega", "--lambda", "0", "--b", "1"},
           {"simplicity", "--family", "induced", "--n", "1", "--lambda", "0", "--s", "1,2"},
           {"simplicity", "--family", "nosuch"},
           {"simplicity", "--family", "induced", "--n", "1", "--s", "1"},
           {"simplicity", "--module", "{not json"},
           {"closure", "--family", "verma", "--theta", "0", "--h", "0"},
           {"iso-verify", "--family", "verma", "--theta", "0", "--h", "0"},
           {"iso-verify", "--family", "induced", "--n", "0", "--s", "1", "--window", "0,1,1"},
           {"act", "--family", "verma", "--theta", "0", "--h", "0"},
           {"act", "--family", "verma", "--theta", "0", "--h", "0", "--k", "1", "--vector", R"([{"partition": [[1, 1]], "coeff": "1"}])"},
           {"--format", "xml", "kac", "--theta", "0", "--h", "0"},
       }) {
    auto r = run(args);
    CAPTURE(args.size());
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("output is deterministic and exact") {
  const std::vector<std::string> args{"--seed", "17", "closure", "--family", "tensor", "--lambda", "1", "--b", "2",
                                      "--factor", "verma", "--theta", "2", "--h", "1/5", "--window", "3,2,3",
                                      "--random", "5", "--print-basis"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(has_float(a.doc()));
  CHECK(a.doc()["seed"] == 17);
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"kac", "--theta", "1/3", "--h", "-2/7", "--max-kl", "6"},
           {"iso-verify", "--family", "induced", "--n", "1", "--lambda", "2", "--s", "1,5", "--window", "2,2,3"}}) {
    auto r = run(cmd);
    CHECK(r.out == run(cmd).out);
    CHECK_FALSE(has_float(r.doc()));
  }
}

TEST_CASE("text format and help") {
  auto t = run({"--format", "text", "simplicity", "--family", "omega", "--lambda", "1", "--b", "1"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("verdict: not_simple") != std::string::npos);
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("iso-verify") != std::string::npos);
  CHECK(run({"kac", "--help"}).out.find("--max-kl") != std::string::npos);
}
