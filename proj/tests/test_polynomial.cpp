#include "doctest.h"

#include "gauss_spectra/int_polynomial.hpp"

using namespace gauss_spectra;

TEST_CASE("zero polynomial") {
  IntPolynomial p;
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.to_string() == "0");
  CHECK(p(Int(42)) == 0);
  CHECK_THROWS_AS(m0(p), ZeroPolynomial);
}

TEST_CASE("construction trims trailing zeros") {
  IntPolynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(p == IntPolynomial{1, 2});
  CHECK(IntPolynomial{0, 0}.is_zero());
}

TEST_CASE("named constructors") {
  CHECK(IntPolynomial::constant(5) == IntPolynomial{5});
  CHECK(IntPolynomial::constant(0).is_zero());
  CHECK(IntPolynomial::variable() == IntPolynomial{0, 1});
  CHECK(IntPolynomial::monomial(3, 2) == IntPolynomial{0, 0, 0, 2});
  CHECK(IntPolynomial::monomial(2) == IntPolynomial{0, 0, 1});
}

TEST_CASE("arithmetic") {
  IntPolynomial x = IntPolynomial::variable();
  CHECK((x + IntPolynomial{1}) * (x - IntPolynomial{1}) == IntPolynomial{-1, 0, 1});
  CHECK((x - x).is_zero());
  CHECK(-IntPolynomial{1, -2} == IntPolynomial{-1, 2});
  CHECK(IntPolynomial{1, 1} * Int(3) == IntPolynomial{3, 3});
  CHECK(Int(2) * IntPolynomial{0, 1} == IntPolynomial{0, 2});
  CHECK((IntPolynomial{1, 2, 1} - IntPolynomial{0, 2, 1}) == IntPolynomial{1});
}

TEST_CASE("evaluation and derivative") {
  IntPolynomial p{0, 3, 0, 1};  // x^3 + 3x
  CHECK(p(Int(2)) == 14);
  CHECK(p(Int(-1)) == -4);
  CHECK(p.derivative() == IntPolynomial{3, 0, 3});
  CHECK(derivative(p) == p.derivative());
  CHECK(eval_at(p, Int(0)) == 0);
  CHECK(IntPolynomial::constant(7).derivative().is_zero());
}

TEST_CASE("zero root multiplicity") {
  CHECK(m0(IntPolynomial{5}) == 0);
  CHECK(m0(IntPolynomial{0, 3, 0, 1}) == 1);
  CHECK(m0(IntPolynomial{0, 0, 4, 0, 1}) == 2);
  CHECK(m0(IntPolynomial::monomial(6)) == 6);
}

TEST_CASE("exact quotient") {
  IntPolynomial a{-1, 0, 1};  // x^2 - 1
  IntPolynomial b{-1, 1};     // x - 1
  auto q = exact_quotient(a, b);
  REQUIRE(q.has_value());
  CHECK(*q == IntPolynomial{1, 1});
  CHECK(!exact_quotient(IntPolynomial{1, 0, 1}, b).has_value());
  CHECK(!exact_quotient(IntPolynomial{1, 2}, IntPolynomial{0, 0, 1}).has_value());
  auto z = exact_quotient(IntPolynomial{}, b);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
}

TEST_CASE("text form") {
  CHECK(IntPolynomial{0, 3, 0, 1}.to_string() == "0 3 0 1");
  CHECK(IntPolynomial{-2, 5}.to_string() == "-2 5");
  CHECK(IntPolynomial::constant(9).to_string() == "9");
}
