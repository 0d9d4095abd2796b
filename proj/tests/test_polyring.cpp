#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "diffop/error.hpp"
#include "diffop/matrix.hpp"
#include "diffop/monomial.hpp"
#include "diffop/parse.hpp"
#include "diffop/polynomial.hpp"
#include "diffop/rational.hpp"

#include "support/oracles.hpp"

using namespace diffop;
using testutil::perm_determinant;
using testutil::pp;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};
}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.str() == "1/2");
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
  CHECK(Rational(7, -2) == Rational(-7, 2));
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(5).is_integer());
  CHECK(Rational(1, 3).reciprocal() == Rational(3));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(0).pow(0).is_one());
  CHECK(Rational(2) < Rational(7, 3));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), Error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("-4/6") == Rational(-2, 3));
  CHECK(Rational::from_string("0") .is_zero());
  CHECK_THROWS_AS(Rational::from_string(""), Error);
  CHECK_THROWS_AS(Rational::from_string("1/"), Error);
  CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
  CHECK_THROWS_AS(Rational::from_string("a"), Error);
  CHECK_THROWS_AS(Rational::from_string("1/2/3"), Error);
  CHECK_THROWS_AS(Rational::from_string("1.5"), Error);
}

TEST_CASE("monomial orders") {
  // degree decides first in every supported order
  Monomial one(3), x({std::vector<int>{1, 0, 0}});
  CHECK(compare(one, x, MonomialOrder::kDegRevLex) < 0);
  CHECK(compare(one, x, MonomialOrder::kLex) < 0);

  // degrevlex: among equal degrees the smaller trailing exponent wins
  Monomial y2({std::vector<int>{0, 2, 0}}), xz({std::vector<int>{1, 0, 1}});
  CHECK(compare(y2, xz, MonomialOrder::kDegRevLex) > 0);
  CHECK(compare(xz, y2, MonomialOrder::kDegRevLex) < 0);
  // lex: leading exponent wins regardless of degree
  Monomial x1({std::vector<int>{1, 0, 0}}), y3({std::vector<int>{0, 3, 0}});
  CHECK(compare(x1, y3, MonomialOrder::kLex) > 0);
  CHECK(compare(x1, y3, MonomialOrder::kDegLex) < 0);

  CHECK(order_from_name("degrevlex") == MonomialOrder::kDegRevLex);
  CHECK(order_from_name("deglex") == MonomialOrder::kDegLex);
  CHECK(order_from_name("lex") == MonomialOrder::kLex);
  CHECK(order_name(MonomialOrder::kDegRevLex) == std::string("degrevlex"));
  CHECK_THROWS_AS(order_from_name("grevlex"), Error);
}

TEST_CASE("monomial division and lcm") {
  Monomial a({std::vector<int>{2, 1}}), b({std::vector<int>{1, 3}});
  CHECK(Monomial::lcm(a, b) == Monomial({std::vector<int>{2, 3}}));
  CHECK(a.divides(Monomial::lcm(a, b)));
  CHECK(b.divides(Monomial::lcm(a, b)));
  CHECK_FALSE(a.divides(b));
  CHECK(div(Monomial::lcm(a, b), a) == Monomial({std::vector<int>{0, 2}}));
  CHECK_THROWS_AS(Monomial({std::vector<int>{-1}}), Error);
}

TEST_CASE("monomial enumeration up to a degree") {
  auto list = monomials_up_to_degree(2, 2);
  CHECK(list.size() == 6);  // 1, x, y, x^2, xy, y^2
  CHECK(list[0].is_one());
  for (std::size_t k = 1; k < list.size(); ++k)
    CHECK(list[k - 1].degree() <= list[k].degree());
  CHECK(monomials_up_to_degree(3, 1).size() == 4);
  CHECK(monomials_up_to_degree(1, 5).size() == 6);
}

TEST_CASE("polynomial addition") {
  Polynomial sum = pp("x + y", XY) + pp("x - y", XY);
  CHECK(sum == pp("2*x", XY));
  Polynomial p = pp("x^3 - y^2", XY);
  CHECK(p + Polynomial(2, MonomialOrder::kDegRevLex) == p);
  CHECK(p + pp("y^2", XY) == pp("x^3", XY));
  CHECK((p - p).is_zero());
}

TEST_CASE("polynomial multiplication") {
  CHECK(pp("x + y", XY) * pp("x - y", XY) == pp("x^2 - y^2", XY));
  Polynomial p = pp("x^3 - y^2 + 5", XY);
  CHECK(p * Polynomial::constant(2, MonomialOrder::kDegRevLex, Rational(1)) == p);
  CHECK(pp("2/3*x", XY) * pp("3/2*y", XY) == pp("x*y", XY));
  CHECK(pp("x + y", XY).pow(2) == pp("x^2 + 2*x*y + y^2", XY));
  CHECK(pp("x + y", XY).pow(0) == pp("1", XY));
}

TEST_CASE("canonical term lists") {
  // duplicates merge, zero coefficients vanish, equality is structural
  std::vector<Term> raw = {{Monomial({std::vector<int>{1, 0}}), Rational(1)},
                           {Monomial({std::vector<int>{1, 0}}), Rational(1)},
                           {Monomial({std::vector<int>{0, 1}}), Rational(0)}};
  Polynomial p = Polynomial::from_terms(2, MonomialOrder::kDegRevLex, raw);
  CHECK(p == pp("2*x", XY));
  CHECK(p.terms().size() == 1);
  CHECK((pp("x", XY) - pp("x", XY)).terms().empty());
  CHECK(pp("x^2 + x", XY).lead().mon == Monomial({std::vector<int>{2, 0}}));
  CHECK(pp("0", XY).total_degree() == -1);
  CHECK(pp("x*y + 3", XY).constant_coeff() == Rational(3));
}

TEST_CASE("partial derivatives") {
  Polynomial p = pp("x^3 - y^2", XY);
  CHECK(p.partial(0) == pp("3*x^2", XY));
  CHECK(p.partial(1) == pp("-2*y", XY));
  CHECK(pp("7", XY).partial(0).is_zero());
  CHECK(pp("x^2*y^3", XY).partial(1) == pp("3*x^2*y^2", XY));
}

TEST_CASE("partial derivatives satisfy the product rule") {
  std::mt19937 rng(20240811);
  for (int rep = 0; rep < 20; ++rep) {
    Polynomial a = testutil::random_poly(rng, 3, MonomialOrder::kDegRevLex, 3, 4);
    Polynomial b = testutil::random_poly(rng, 3, MonomialOrder::kDegRevLex, 3, 4);
    for (int k = 0; k < 3; ++k)
      CHECK((a * b).partial(k) == a.partial(k) * b + a * b.partial(k));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(997);
  for (int rep = 0; rep < 20; ++rep) {
    Polynomial a = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 4, 4);
    Polynomial b = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 4, 4);
    Polynomial c = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 4, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation") {
  CHECK(pp("x^2 + y", XY).evaluate({Rational(2), Rational(3)}) == Rational(7));
  CHECK(pp("x^3 - y^2", XY).evaluate({Rational(4), Rational(8)}).is_zero());
  CHECK(pp("1/2*x*y", XY).evaluate({Rational(1, 3), Rational(3)}) == Rational(1, 2));
}

TEST_CASE("mixing variable counts throws") {
  CHECK_THROWS_AS(pp("x", XY) + pp("x", XYZ), Error);
  CHECK_THROWS_AS(pp("x", XY) * pp("x", XYZ), Error);
}

TEST_CASE("determinant of known matrices") {
  Polynomial zero(2, MonomialOrder::kDegRevLex);
  Matrix<Polynomial> m1(1, 1, zero);
  m1.at(0, 0) = pp("3*x^2", XY);
  CHECK(determinant(m1) == pp("3*x^2", XY));

  Matrix<Polynomial> m2(2, 2, zero);
  m2.at(0, 0) = pp("-2*x", XY);
  m2.at(0, 1) = pp("1", XY);
  m2.at(1, 0) = pp("-3*x^2", XY);
  m2.at(1, 1) = pp("0", XY);
  CHECK(determinant(m2) == pp("3*x^2", XY));

  // equal rows kill the determinant
  Matrix<Polynomial> m3(2, 2, zero);
  m3.at(0, 0) = m3.at(1, 0) = pp("x + y", XY);
  m3.at(0, 1) = m3.at(1, 1) = pp("x*y", XY);
  CHECK(determinant(m3).is_zero());
}

TEST_CASE("determinant matches permutation expansion") {
  std::mt19937 rng(424243);
  Polynomial zero(2, MonomialOrder::kDegRevLex);
  for (int n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      Matrix<Polynomial> m(n, n, zero);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m.at(i, j) = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 2, 2);
      CHECK(determinant(m) == perm_determinant(m, zero));
    }
  }
}

TEST_CASE("determinant guards") {
  Polynomial zero(2, MonomialOrder::kDegRevLex);
  Matrix<Polynomial> rect(2, 3, zero);
  CHECK_THROWS_AS(determinant(rect), Error);
  Matrix<Polynomial> big(kDeterminantSizeBound + 1, kDeterminantSizeBound + 1, zero);
  CHECK_THROWS_AS(determinant(big), Error);
  CHECK_THROWS_AS(Matrix<Polynomial>(-1, 2, zero), Error);
}

TEST_CASE("determinant is multilinear in a row") {
  std::mt19937 rng(777);
  Polynomial zero(2, MonomialOrder::kDegRevLex);
  for (int rep = 0; rep < 5; ++rep) {
    Matrix<Polynomial> a(3, 3, zero), b(3, 3, zero), c(3, 3, zero);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a.at(i, j) = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 2, 2);
        b.at(i, j) = a.at(i, j);
        c.at(i, j) = a.at(i, j);
      }
    for (int j = 0; j < 3; ++j) {
      b.at(1, j) = testutil::random_poly(rng, 2, MonomialOrder::kDegRevLex, 2, 2);
      c.at(1, j) = a.at(1, j) + b.at(1, j);
    }
    CHECK(determinant(c) == determinant(a) + determinant(b));
  }
}
