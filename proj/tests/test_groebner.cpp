#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "diffop/error.hpp"
#include "diffop/free_module.hpp"
#include "diffop/groebner.hpp"
#include "diffop/parse.hpp"

#include "support/oracles.hpp"

using namespace diffop;
using testutil::pp;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

GroebnerBasis gb_of(const std::vector<std::string>& texts,
                    const std::vector<std::string>& vars) {
  std::vector<Polynomial> gens;
  for (const auto& t : texts) gens.push_back(pp(t, vars));
  return buchberger(std::move(gens), static_cast<int>(vars.size()),
                    MonomialOrder::kDegRevLex);
}

}  // namespace

TEST_CASE("reduced basis of a principal ideal") {
  GroebnerBasis gb = gb_of({"x^3 - y^2"}, XY);
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == pp("x^3 - y^2", XY));
  CHECK_FALSE(gb.is_unit());
}

TEST_CASE("basis of the cusp minor ideal") {
  GroebnerBasis gb = gb_of({"3*x^2", "-2*y", "x^3 - y^2"}, XY);
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == pp("x^2", XY));
  CHECK(gb.elements()[1] == pp("y", XY));
}

TEST_CASE("unit ideal detection") {
  GroebnerBasis gb = gb_of({"x", "x - 1"}, XY);
  CHECK(gb.is_unit());
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == pp("1", XY));
}

TEST_CASE("zero ideal") {
  GroebnerBasis gb = buchberger({}, 2, MonomialOrder::kDegRevLex);
  CHECK(gb.elements().empty());
  CHECK_FALSE(gb.is_unit());
  CHECK(krull_dimension(gb) == 2);
  // zero generators are dropped
  GroebnerBasis gb2 = gb_of({"0", "0"}, XY);
  CHECK(gb2.elements().empty());
}

TEST_CASE("reduced bases are canonical") {
  std::vector<std::string> texts = {"x^2 - y", "x*y - 1", "y^2 - x"};
  std::vector<std::string> perm = texts;
  std::sort(perm.begin(), perm.end());
  do {
    CHECK(gb_of(perm, XY) == gb_of(texts, XY));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("normal forms against the cusp") {
  GroebnerBasis gb = gb_of({"x^3 - y^2"}, XY);
  CHECK(normal_form(pp("x^3", XY), gb) == pp("y^2", XY));
  CHECK(normal_form(pp("x^3 - y^2", XY), gb).is_zero());
  CHECK(normal_form(pp("x^4", XY), gb) == pp("x*y^2", XY));
  CHECK(normal_form(pp("y^2 - x^3 + x", XY), gb) == pp("x", XY));
}

TEST_CASE("normal form is linear and idempotent") {
  GroebnerBasis gb = gb_of({"x^2 - y", "y^3 - x"}, XY);
  std::mt19937 rng(5150);
  for (int rep = 0; rep < 15; ++rep) {
    Polynomial a = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 5, 4);
    Polynomial b = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 5, 4);
    Polynomial na = normal_form(a, gb);
    CHECK(normal_form(na, gb) == na);
    CHECK(normal_form(a + b, gb) == na + normal_form(b, gb));
    CHECK(normal_form(a - na, gb).is_zero());
  }
}

TEST_CASE("ideal membership") {
  GroebnerBasis gb = gb_of({"x^3 - y^2"}, XY);
  CHECK(ideal_member(pp("x^4 - x*y^2", XY), gb));
  CHECK(ideal_member(pp("0", XY), gb));
  CHECK_FALSE(ideal_member(pp("x", XY), gb));
  std::mt19937 rng(60601);
  for (int rep = 0; rep < 10; ++rep) {
    Polynomial g = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 3, 3);
    CHECK(ideal_member(g * pp("x^3 - y^2", XY), gb));
  }
}

TEST_CASE("ideal equality") {
  CHECK(ideal_equal(gb_of({"x", "y"}, XY), gb_of({"y", "x"}, XY)));
  CHECK(ideal_equal(gb_of({"x"}, XY), gb_of({"x", "x^2", "x*y"}, XY)));
  CHECK_FALSE(ideal_equal(gb_of({"x^2", "y"}, XY), gb_of({"x", "y"}, XY)));
  CHECK_THROWS_AS(ideal_equal(gb_of({"x"}, XY), gb_of({"x"}, XYZ)), Error);
}

TEST_CASE("Krull dimension of quotients") {
  CHECK(krull_dimension(gb_of({"x^3 - y^2"}, XY)) == 1);
  CHECK(krull_dimension(gb_of({"x"}, XY)) == 1);
  CHECK(krull_dimension(gb_of({"x", "y"}, XY)) == 0);
  CHECK(krull_dimension(gb_of({"1"}, XY)) == -1);
  CHECK(krull_dimension(gb_of({"y - x^2", "z - x^3"}, XYZ)) == 1);
  CHECK(krull_dimension(gb_of({"x^2 - y^2*z"}, XYZ)) == 2);
}

TEST_CASE("cofactor membership with witness") {
  Polynomial p = pp("2*y^2", XY);
  Polynomial special = pp("3*x^2", XY);
  std::vector<Polynomial> others = {pp("x^3 - y^2", XY)};
  auto w = cofactor_membership(p, special, others);
  REQUIRE(w.has_value());
  GroebnerBasis gb = gb_of({"x^3 - y^2"}, XY);
  CHECK(normal_form(p - *w * special, gb).is_zero());

  CHECK_FALSE(cofactor_membership(pp("2*y", XY), special, others).has_value());
  CHECK_FALSE(cofactor_membership(pp("x", XY), special, others).has_value());
}

TEST_CASE("module basis and membership") {
  // generators (x, 0) and (0, y) inside P^2
  std::vector<VectorPoly> gens = {{pp("x", XY), pp("0", XY)},
                                  {pp("0", XY), pp("y", XY)}};
  ModuleBasis mb = module_buchberger(gens, 2, 2, MonomialOrder::kDegRevLex);
  CHECK(module_member({pp("x^2", XY), pp("0", XY)}, mb));
  CHECK(module_member({pp("x*y", XY), pp("x*y", XY)}, mb));
  CHECK(module_member({pp("0", XY), pp("0", XY)}, mb));
  CHECK_FALSE(module_member({pp("y", XY), pp("0", XY)}, mb));
  CHECK_FALSE(module_member({pp("0", XY), pp("1", XY)}, mb));
  CHECK(vector_is_zero({pp("0", XY), pp("0", XY)}));
  CHECK_FALSE(vector_is_zero({pp("0", XY), pp("y", XY)}));
}

TEST_CASE("module normal form reduces members to zero") {
  std::vector<VectorPoly> gens = {{pp("2*y", XY), pp("3*x^2", XY)},
                                  {pp("x^3 - y^2", XY), pp("0", XY)},
                                  {pp("0", XY), pp("x^3 - y^2", XY)}};
  ModuleBasis mb = module_buchberger(gens, 2, 2, MonomialOrder::kDegRevLex);
  for (const VectorPoly& g : gens) CHECK(vector_is_zero(module_normal_form(g, mb)));
  VectorPoly combo = {pp("2*x*y + x^3 - y^2", XY), pp("3*x^3", XY)};
  CHECK(vector_is_zero(module_normal_form(combo, mb)));
  VectorPoly v = {pp("x", XY), pp("y", XY)};
  VectorPoly nf = module_normal_form(v, mb);
  CHECK_FALSE(vector_is_zero(nf));
  CHECK(module_normal_form(nf, mb) == nf);
}

TEST_CASE("module membership agrees with the truncated solver") {
  // the lifted derivation module of the cusp
  std::vector<VectorPoly> gens = {{pp("2*y", XY), pp("3*x^2", XY)},
                                  {pp("x^3 - y^2", XY), pp("0", XY)},
                                  {pp("0", XY), pp("x^3 - y^2", XY)}};
  ModuleBasis mb = module_buchberger(gens, 2, 2, MonomialOrder::kDegRevLex);

  struct Probe {
    VectorPoly v;
    bool member;
  };
  std::vector<Probe> probes = {
      {{pp("2*y", XY), pp("3*x^2", XY)}, true},
      {{pp("6*x^3", XY), pp("9*x^2*y", XY)}, true},   // pivot minor times Euler
      {{pp("-4*y^2", XY), pp("-6*x^2*y", XY)}, true}, // other minor times Euler
      {{pp("2*x", XY), pp("3*y", XY)}, false},        // the Euler vector itself
      {{pp("1", XY), pp("0", XY)}, false},
      {{pp("2*x*y", XY), pp("3*x^3", XY)}, true},
  };
  for (const Probe& probe : probes) {
    CHECK(module_member(probe.v, mb) == probe.member);
    CHECK(testutil::truncated_combination_exists(gens, probe.v, 2,
                                                 MonomialOrder::kDegRevLex, 5) ==
          probe.member);
  }
}

TEST_CASE("random module elements built from generators are members") {
  std::vector<VectorPoly> gens = {{pp("2*y", XY), pp("3*x^2", XY)},
                                  {pp("x^3 - y^2", XY), pp("0", XY)},
                                  {pp("0", XY), pp("x^3 - y^2", XY)}};
  ModuleBasis mb = module_buchberger(gens, 2, 2, MonomialOrder::kDegRevLex);
  std::mt19937 rng(31337);
  for (int rep = 0; rep < 10; ++rep) {
    VectorPoly acc = {pp("0", XY), pp("0", XY)};
    for (const VectorPoly& g : gens) {
      Polynomial c = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 2, 2);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += c * g[k];
    }
    CHECK(module_member(acc, mb));
  }
}
