#include <doctest.h>

#include "citor/errors.hpp"
#include "citor/groebner.hpp"
#include "citor/ring.hpp"

using namespace citor;

namespace {

RingPtr quotient(std::vector<std::string> vars, std::vector<std::string> ideal,
                 std::vector<std::vector<std::string>> primes = {}) {
  return make_quotient_ring(Field::default_field(), vars, std::vector<int>(vars.size(), 1), ideal, primes);
}

}  // namespace

TEST_SUITE("rings") {

TEST_CASE("make_quotient_ring examples") {
  auto r = quotient({"x", "y", "z", "u"}, {"x*y", "z*u"});
  CHECK(r->codim() == 2);
  CHECK(r->certified());
  CHECK(r->warnings().empty());
  auto h = quotient({"x", "y", "w", "z"}, {"x*w - y*z"});
  CHECK(h->codim() == 1);
  auto s = quotient({"x", "y"}, {});
  CHECK(s->codim() == 0);
  CHECK(s->is_regular());
  CHECK(s->certified());
}

TEST_CASE("inhomogeneous generators are rejected") {
  try {
    quotient({"x", "y"}, {"x^2 + y"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::graded_violation);
  }
  CHECK_THROWS_AS(make_quotient_ring(Field::default_field(), {"x", "y"}, {1, 2}, {}), Error);
}

TEST_CASE("degree one generators warn but are accepted") {
  auto r = quotient({"x", "y"}, {"x"});
  REQUIRE(r->warnings().size() == 1);
  CHECK(r->warnings()[0].find("degree 1") != std::string::npos);
}

TEST_CASE("verify_regular_sequence examples") {
  auto a = verify_regular_sequence(*quotient({"x", "y", "z", "u"}, {"x*y", "z*u"}));
  CHECK(a.ok);
  CHECK(a.dimensions == std::vector<int>{4, 3, 2});
  auto b = verify_regular_sequence(*quotient({"x", "y", "w", "z"}, {"x*w - y*z"}));
  CHECK(b.ok);
  CHECK(b.dimensions == std::vector<int>{4, 3});
  auto c = verify_regular_sequence(*quotient({"x", "y"}, {"x", "x"}));
  CHECK_FALSE(c.ok);
  CHECK(c.failed_step == 2);
  CHECK(c.dimensions == std::vector<int>{2, 1, 1});
  auto d = quotient({"x", "y"}, {"x^2", "x*y"});
  CHECK_FALSE(d->certified());
  CHECK(d->dimension() == 1);
}

TEST_CASE("regular sequence verdict is order-insensitive on catalog rings") {
  CHECK(quotient({"x", "y", "z", "u"}, {"z*u", "x*y"})->certified());
  CHECK(quotient({"x", "y", "z"}, {"x*z", "y*z"})->certified() == quotient({"x", "y", "z"}, {"y*z", "x*z"})->certified());
  CHECK(quotient({"x", "y", "z"}, {"x*y"})->certified());
}

TEST_CASE("ring_dimension examples") {
  CHECK(ring_dimension(*quotient({"x", "y", "z", "u"}, {"x*y", "z*u"})) == 2);
  CHECK(ring_dimension(*quotient({"x", "y"}, {"x*y"})) == 1);
  CHECK(ring_dimension(*quotient({"x", "y", "w", "z"}, {})) == 4);
}

TEST_CASE("certified rings satisfy dim R + c = dim S") {
  for (auto r : {quotient({"x", "y", "z", "u"}, {"x*y", "z*u"}), quotient({"x", "y", "w", "z"}, {"x*w - y*z"}),
                 quotient({"x", "y", "z"}, {"x*y"}), quotient({"x", "y", "z"}, {"x^3 + y^3 + z^3", "x*y*z"})}) {
    REQUIRE(r->certified());
    CHECK(r->dimension() + static_cast<int>(r->codim()) == r->ambient_dimension());
  }
}

TEST_CASE("minimal primes of monomial ideals are minimal vertex covers") {
  auto r = quotient({"x", "y", "z", "u"}, {"x*y", "z*u"});
  REQUIRE(r->minimal_primes().has_value());
  const auto& primes = *r->minimal_primes();
  CHECK(primes.size() == 4);
  for (const auto& p : primes) {
    CHECK(p.generators.size() == 2);
    CHECK(p.certificate == "monomial");
  }
  auto xy = quotient({"x", "y"}, {"x*y"});
  REQUIRE(xy->minimal_primes().has_value());
  CHECK(xy->minimal_primes()->size() == 2);
  CHECK(xy->minimal_primes()->at(0).generators[0] == xy->parse("x"));
  CHECK_FALSE(quotient({"x", "y", "w", "z"}, {"x*w - y*z"})->minimal_primes().has_value());
  // The polynomial ring has the zero ideal as its only minimal prime.
  auto s = quotient({"x", "y"}, {});
  REQUIRE(s->minimal_primes().has_value());
  CHECK(s->minimal_primes()->size() == 1);
  CHECK(s->minimal_primes()->at(0).generators.empty());
}

TEST_CASE("declared primes are spot-checked") {
  auto r = quotient({"x", "y", "w", "z"}, {"x*w - y*z"}, {{"x*w - y*z"}});
  REQUIRE(r->minimal_primes().has_value());
  CHECK(r->minimal_primes()->at(0).certificate == "spot-checked");
  // Not containing the ideal.
  CHECK_THROWS_AS(quotient({"x", "y"}, {"x*y"}, {{"x"}, {"x+y"}}), Error);
  // Not prime.
  CHECK_THROWS_AS(quotient({"x", "y"}, {"x^2*y"}, {{"x^2"}, {"y"}}), Error);
  // Not minimal.
  CHECK_THROWS_AS(quotient({"x", "y"}, {"x*y"}, {{"x"}, {"y"}, {"x", "y"}}), Error);
}

TEST_CASE("colon ideals") {
  auto r = quotient({"x", "y"}, {});
  auto colon = colon_ideal({r->parse("x*y"), r->parse("y^2")}, r->parse("y"));
  auto gb = ideal_groebner_basis(colon);
  CHECK(ideal_contains(gb, r->parse("x")));
  CHECK(ideal_contains(gb, r->parse("y")));
  CHECK_FALSE(ideal_contains(gb, r->parse("1")));
}

TEST_CASE("drop_generator and ambient") {
  auto r = quotient({"x", "y", "z", "u"}, {"x*y", "z*u"});
  auto s1 = r->drop_generator(1);
  CHECK(s1->codim() == 1);
  CHECK(s1->generators()[0] == r->parse("x*y"));
  CHECK(r->ambient()->codim() == 0);
  CHECK(r->same_as(*quotient({"x", "y", "z", "u"}, {"z*u", "x*y"})));
}

}
