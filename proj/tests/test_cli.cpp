#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diffop/cli.hpp"
#include "diffop/error.hpp"
#include "diffop/json_io.hpp"
#include "diffop/parse.hpp"

#include "support/oracles.hpp"

using namespace diffop;
using testutil::pp;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> XYZ = {"x", "y", "z"};

}  // namespace

TEST_CASE("polynomial text round trips") {
  CHECK(to_string(pp("x^3 - y^2", XYZ), XYZ) == "x^3 - y^2");
  CHECK(to_string(pp("-x - 1", XYZ), XYZ) == "-x - 1");
  CHECK(to_string(pp("2/3*x*y + z", XYZ), XYZ) == "2/3*x*y + z");
  CHECK(to_string(Polynomial(3, MonomialOrder::kDegRevLex), XYZ) == "0");
  CHECK(pp("(x + y)*(x + y)", XYZ) == pp("x^2 + 2*x*y + y^2", XYZ));
  CHECK_THROWS_AS(pp("(x + y)^2", XYZ), ParseError);
  CHECK(pp("x^2*x", XYZ) == pp("x^3", XYZ));
  CHECK(pp("- y + y", XYZ).is_zero());
  CHECK(pp("3/6", XYZ) == pp("1/2", XYZ));

  std::mt19937 rng(90210);
  for (int rep = 0; rep < 40; ++rep) {
    Polynomial p = testutil::random_poly(rng, 3, MonomialOrder::kDegRevLex, 4, 5);
    CHECK(parse_polynomial(to_string(p, XYZ), XYZ, MonomialOrder::kDegRevLex) == p);
  }
}

TEST_CASE("polynomial syntax errors carry positions") {
  CHECK_THROWS_AS(pp("", XYZ), ParseError);
  CHECK_THROWS_AS(pp("x +", XYZ), ParseError);
  CHECK_THROWS_AS(pp("2x", XYZ), ParseError);
  CHECK_THROWS_AS(pp("x^", XYZ), ParseError);
  CHECK_THROWS_AS(pp("(x", XYZ), ParseError);
  CHECK_THROWS_AS(pp("w", XYZ), ParseError);
  CHECK_THROWS_AS(pp("x**y", XYZ), ParseError);
  try {
    pp("x * w", XYZ);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  CHECK(valid_variable_name("x1"));
  CHECK(valid_variable_name("_tmp"));
  CHECK_FALSE(valid_variable_name("2x"));
  CHECK_FALSE(valid_variable_name(""));
  CHECK_FALSE(valid_variable_name("a-b"));
}

TEST_CASE("info prints the one-line summary") {
  RunResult r = run({"info", "cusp"});
  CHECK(r.code == 0);
  CHECK(r.out == "n=2 m=1 r=1 dim=1 smooth=false generators=1\n");

  r = run({"info", "coordinate_subspace_2_4"});
  CHECK(r.code == 0);
  CHECK(r.out == "n=4 m=2 r=2 dim=2 smooth=true generators=2\n");

  r = run({"info", "double_cusp"});
  CHECK(r.code == 0);
  CHECK(r.out == "n=4 m=2 r=2 dim=2 smooth=false generators=4\n");
}

TEST_CASE("rank lists the index tuples") {
  RunResult r = run({"rank", "cusp"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "r=1\n"
        "row tuples: (1)\n"
        "column tuples: (1) (2)\n"
        "critical column tuples: (1,2)\n");
}

TEST_CASE("ideals prints reduced bases") {
  RunResult r = run({"ideals", "cusp"});
  CHECK(r.code == 0);
  CHECK(r.out == "k=1: x^2, y\n");

  r = run({"ideals", "cusp", "--k", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "k=0: 1\n");

  r = run({"ideals", "cusp", "--k", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("between 0 and the rank") != std::string::npos);

  r = run({"ideals", "twisted_cubic"});
  CHECK(r.code == 0);
  CHECK(r.out == "k=1: 1\nk=2: 1\n");
}

TEST_CASE("smooth reports through the exit code") {
  RunResult r = run({"smooth", "cusp"});
  CHECK(r.code == 1);
  CHECK(r.out == "smooth=false\n");
  r = run({"smooth", "circle"});
  CHECK(r.code == 0);
  CHECK(r.out == "smooth=true\n");
}

TEST_CASE("derivations prints the natural generators") {
  RunResult r = run({"derivations", "cusp"});
  CHECK(r.code == 0);
  CHECK(r.out == "d[1;1,2] = 2*y*d/dx + 3*x^2*d/dy\n");

  r = run({"derivations", "twisted_cubic"});
  CHECK(r.code == 0);
  CHECK(r.out == "d[1,2;1,2,3] = d/dx + 2*x*d/dy + 3*y*d/dz\n");

  r = run({"derivations", "coordinate_subspace_2_4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "d[1,2;1,2,3] = d/dx3\n"
        "d[1,2;1,2,4] = d/dx4\n");
}

TEST_CASE("relations prints both sides of each instance") {
  RunResult r = run({"relations", "cusp"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "3*x^2*d[1;1,2] = 3*x^2*d[1;1,2]\n"
        "(-2*y)*d[1;1,2] = (-2*y)*d[1;1,2]\n");
}

TEST_CASE("presentation in text and json") {
  RunResult r = run({"presentation", "cusp"});
  CHECK(r.code == 0);
  CHECK(r.out.find("variables: x, y\n") != std::string::npos);
  CHECK(r.out.find("relations: x^3 - y^2\n") != std::string::npos);
  CHECK(r.out.find("symbols: d[1;1,2]\n") != std::string::npos);
  CHECK(r.out.find("d[1;1,2]*x = x*d[1;1,2] + 2*y\n") != std::string::npos);
  CHECK(r.out.find("d[1;1,2]*y = y*d[1;1,2] + 3*x^2\n") != std::string::npos);

  RunResult j = run({"presentation", "cusp", "--json"});
  CHECK(j.code == 0);
  RingPtr ring = testutil::ring_of("cusp");
  PresentationDoc doc = presentation_from_json(j.out, ring);
  CHECK(presentation_to_json(doc) == j.out);
}

TEST_CASE("verify runs the property suites") {
  RunResult r = run({"verify", "cusp"});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite rank-tuples: pass\n") != std::string::npos);
  CHECK(r.out.find("all 9 property suites passed\n") != std::string::npos);

  r = run({"verify", "cusp", "--suite", "reconstruction"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "suite reconstruction: pass\n"
        "suite reconstruction passed\n");

  r = run({"verify", "cusp", "--suite", "nonsense"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown suite: nonsense") != std::string::npos);
  CHECK(r.err.find("known suites:") != std::string::npos);
}

TEST_CASE("apply evaluates operator words") {
  RunResult r = run({"apply", "cusp", "--op", "d[1;1,2]*x", "--to", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*y\n");

  r = run({"apply", "cusp", "--op", "x*d[1;1,2] - d[1;1,2]*x", "--to", "y"});
  CHECK(r.code == 0);
  CHECK(r.out == "-2*y^2\n");

  r = run({"apply", "cusp", "--op", "d[1;2,1]", "--to", "x"});
  CHECK(r.code == 0);
  CHECK(r.out == "-2*y\n");

  r = run({"apply", "cusp", "--op", "d[1;1,2", "--to", "x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);

  r = run({"apply", "cusp", "--to", "x"});
  CHECK(r.code == 2);
}

TEST_CASE("member classifies coefficient vectors") {
  RunResult r = run({"member", "cusp", "--derivation", "2*y,3*x^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "derivation=true member=true\n");

  r = run({"member", "cusp", "--derivation", "2*x,3*y"});
  CHECK(r.code == 1);
  CHECK(r.out == "derivation=true member=false\n");

  r = run({"member", "cusp", "--derivation", "1,0"});
  CHECK(r.code == 1);
  CHECK(r.out == "derivation=false\n");

  r = run({"member", "cusp", "--derivation", "x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("expected 2 comma-separated coefficients") != std::string::npos);
}

TEST_CASE("point reports tangent data") {
  RunResult r = run({"point", "cusp", "--at", "0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "on_variety=true singular=true tangent_dim=2\n");

  r = run({"point", "cusp", "--at", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "on_variety=true singular=false tangent_dim=1\n");

  r = run({"point", "circle", "--at", "3/5, 4/5"});
  CHECK(r.code == 0);
  CHECK(r.out == "on_variety=true singular=false tangent_dim=1\n");

  r = run({"point", "cusp", "--at", "2,3"});
  CHECK(r.code == 1);
  CHECK(r.out == "on_variety=false\n");

  r = run({"point", "cusp", "--at", "0,q"});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad coordinate") != std::string::npos);

  r = run({"point", "cusp", "--at", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("catalog lists and dumps entries") {
  RunResult r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cusp: variables x,y; relations x^3 - y^2\n") != std::string::npos);
  CHECK(r.out.find("double_cusp:") != std::string::npos);

  r = run({"catalog", "--dump", "cusp"});
  CHECK(r.code == 0);
  VarietyFile vf = variety_from_json(r.out);
  CHECK(vf.name == "cusp");
  CHECK(vf.generators == std::vector<std::string>{"x^3 - y^2"});

  r = run({"catalog", "--dump", "nope"});
  CHECK(r.code == 2);
}

TEST_CASE("variety files load from disk") {
  const std::string path = "cli_variety_tmp.json";
  {
    std::ofstream f(path);
    f << R"({"name":"parabola","variables":["x","y"],"generators":["y - x^2"],"order":"degrevlex"})";
  }
  RunResult r = run({"info", path});
  CHECK(r.code == 0);
  CHECK(r.out == "n=2 m=1 r=1 dim=1 smooth=true generators=1\n");
  std::remove(path.c_str());
}

TEST_CASE("usage and error exit codes") {
  RunResult r = run({"info", "no_such_thing"});
  CHECK(r.code == 2);
  CHECK(r.err.find("no such file or catalog entry") != std::string::npos);

  r = run({});
  CHECK(r.code == 2);

  r = run({"frobnicate", "cusp"});
  CHECK(r.code == 2);

  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("diffop") != std::string::npos);

  const std::string path = "cli_nonprime_tmp.json";
  {
    std::ofstream f(path);
    f << R"({"name":"axes","variables":["x","y"],"generators":["x*y"],"order":"degrevlex"})";
  }
  r = run({"info", path});
  CHECK(r.code == 3);
  CHECK(r.err.find("precondition violated") != std::string::npos);
  std::remove(path.c_str());

  const std::string bad = "cli_badjson_tmp.json";
  {
    std::ofstream f(bad);
    f << "{ this is not json";
  }
  r = run({"info", bad});
  CHECK(r.code == 2);
  std::remove(bad.c_str());

  const std::string badpoly = "cli_badpoly_tmp.json";
  {
    std::ofstream f(badpoly);
    f << R"({"name":"v","variables":["x","y"],"generators":["x +"],"order":"degrevlex"})";
  }
  r = run({"info", badpoly});
  CHECK(r.code == 2);
  std::remove(badpoly.c_str());
}
