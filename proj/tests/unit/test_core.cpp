#include <doctest.h>

#include <random>

#include "citor/errors.hpp"
#include "citor/ext_int.hpp"
#include "citor/polynomial.hpp"
#include "test_support.hpp"

using namespace citor;
using testing_support::poly;
using testing_support::space;

TEST_SUITE("core") {

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::default_field(), Field::prime(7), Field::rationals()}) {
    std::uniform_int_distribution<long> pick(-50000, 50000);
    auto rand_coef = [&]() {
      if (f.kind == FieldKind::rational) {
        long den = pick(rng);
        if (den == 0) den = 1;
        return Coefficient(f, mpq_class(pick(rng), den));
      }
      return Coefficient(f, pick(rng));
    };
    for (int k = 0; k < 1000; ++k) {
      Coefficient a = rand_coef(), b = rand_coef(), c = rand_coef();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == Coefficient::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Coefficient::one(f));
    }
  }
}

TEST_CASE("coefficient canonical forms and mismatches") {
  Field p = Field::default_field();
  CHECK(Coefficient(p, -1).residue() == 32002);
  CHECK(Coefficient(p, -1).to_string() == "-1");
  Coefficient half(Field::rationals(), mpq_class(2, 4));
  CHECK(half.to_string() == "1/2");
  CHECK_THROWS_AS(Coefficient(p, 1) + Coefficient(Field::rationals(), 1), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK(Field::from_tag("F32003") == p);
  CHECK(Field::from_tag("QQ") == Field::rationals());
}

TEST_CASE("monomial_cmp examples") {
  auto m = [](std::vector<int> e) { return Monomial(std::span<const int>(e)); };
  CHECK(monomial_cmp(m({2, 0, 0}), m({1, 1, 0}), MonomialOrder::grevlex) > 0);
  CHECK(monomial_cmp(m({0, 1, 1}), m({1, 0, 1}), MonomialOrder::grevlex) < 0);
  CHECK(monomial_cmp(m({1, 2, 3}), m({1, 2, 3}), MonomialOrder::grevlex) == 0);
  CHECK_THROWS_AS(monomial_cmp(m({1, 0}), m({1, 0, 0}), MonomialOrder::grevlex), Error);
  // grevlex and lex differ on xz^2 vs y^3? both degree 3: grevlex prefers y^3.
  CHECK(monomial_cmp(m({1, 0, 2}), m({0, 3, 0}), MonomialOrder::grevlex) < 0);
  CHECK(monomial_cmp(m({1, 0, 2}), m({0, 3, 0}), MonomialOrder::lex) > 0);
  CHECK(monomial_cmp(m({1, 0, 0}), m({0, 2, 0}), MonomialOrder::lex) > 0);
  CHECK(monomial_cmp(m({1, 0, 0}), m({0, 2, 0}), MonomialOrder::graded_lex) < 0);
}

TEST_CASE("monomial orders are total and multiplicative on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 3);
  auto rand_mono = [&]() {
    std::vector<int> v(4);
    for (auto& x : v) x = e(rng);
    return Monomial(std::span<const int>(v));
  };
  for (MonomialOrder o : {MonomialOrder::grevlex, MonomialOrder::lex, MonomialOrder::graded_lex}) {
    for (int k = 0; k < 500; ++k) {
      Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      auto ab = monomial_cmp(a, b, o);
      CHECK((ab == 0) == (a == b));
      CHECK((monomial_cmp(b, a, o) > 0) == (ab < 0));
      CHECK(monomial_cmp(a * c, b * c, o) == ab);
      if (ab < 0 && monomial_cmp(b, c, o) < 0) CHECK(monomial_cmp(a, c, o) < 0);
      if (o != MonomialOrder::lex && a.degree() < b.degree()) CHECK(ab < 0);
    }
  }
}

TEST_CASE("poly_combine examples") {
  auto s = space({"x", "y", "z", "u"});
  CHECK(poly_combine(poly(s, "x+y"), poly(s, "x-y"), PolyOp::mul) == poly(s, "x^2-y^2"));
  Polynomial p = poly(s, "3*x^2*y - z*u");
  CHECK(poly_combine(p, Polynomial(s), PolyOp::add) == p);
  CHECK(poly_combine(poly(s, "y"), poly(s, "x"), PolyOp::mul) == poly(s, "x*y"));
  CHECK(poly_combine(p, p, PolyOp::sub).is_zero());
  auto other = space({"a", "b"});
  CHECK_THROWS_AS(poly_combine(p, poly(other, "a"), PolyOp::add), Error);
  auto rational = space({"x", "y", "z", "u"}, Field::rationals());
  CHECK_THROWS_AS(poly_combine(p, poly(rational, "x"), PolyOp::add), Error);
}

TEST_CASE("homogeneous_degree examples") {
  auto s = space({"x", "y", "w", "z"});
  CHECK(homogeneous_degree(poly(s, "x*w - y*z")).to_string() == "2");
  CHECK(homogeneous_degree(Polynomial(s)).to_string() == "any");
  DegreeReport r = homogeneous_degree(poly(s, "x + x^2"));
  CHECK_FALSE(r.homogeneous);
  CHECK(r.degrees == std::set<int>{1, 2});
  CHECK(r.to_string() == "inhomogeneous {1,2}");
}

TEST_CASE("degree additivity for homogeneous products") {
  std::mt19937_64 rng(3);
  auto s = space({"x", "y", "z"});
  std::uniform_int_distribution<long> c(-3, 3);
  for (int k = 0; k < 100; ++k) {
    int da = static_cast<int>(rng() % 3), db = static_cast<int>(rng() % 3);
    std::vector<Term> ta, tb;
    for (const auto& m : monomials_of_degree(3, da)) ta.push_back(Term{m, Coefficient(s->field, c(rng))});
    for (const auto& m : monomials_of_degree(3, db)) tb.push_back(Term{m, Coefficient(s->field, c(rng))});
    Polynomial a(s, ta), b(s, tb);
    Polynomial ab = a * b;
    if (!ab.is_zero()) CHECK(ab.degree() == da + db);
  }
}

TEST_CASE("polynomial parser") {
  auto s = space({"x", "y"});
  CHECK(poly(s, "-(x+y)^2").to_string() == "-x^2 - 2*x*y - y^2");
  CHECK_THROWS_AS(poly(s, "x + q"), Error);
  try {
    poly(s, "x +");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("ExtInt ordering") {
  CHECK(ExtInt::infinity() > ExtInt(5));
  CHECK(ExtInt::neg_infinity() < ExtInt(-5));
  CHECK(ExtInt::infinity().to_string() == "inf");
}

}
