#include <doctest.h>

#include <random>

#include "citor/catalog.hpp"
#include "citor/errors.hpp"
#include "citor/module.hpp"
#include "citor/oracle.hpp"
#include "citor/resolution.hpp"
#include "test_support.hpp"

using namespace citor;
namespace cat = citor::catalog;

namespace {

std::vector<long> oracle_hf(const Module& m, int lo, int hi) {
  return oracle::hilbert_values(m.relations(), m.ring()->generators(), lo, hi);
}

// dim R/(Fitt_0 + I), an independent route to dim M.
ExtInt fitting_dimension(const Module& m) {
  auto gens = fitting_ideal(m, 0);
  for (const auto& f : m.ring()->generators()) gens.push_back(f);
  if (gens.empty()) return ExtInt(static_cast<int>(m.ring()->nvars()));
  int d = ideal_quotient_dimension(ideal_groebner_basis(gens), m.ring()->nvars());
  return d < 0 ? ExtInt::neg_infinity() : ExtInt(d);
}

// Smallest i with Ext^i_R(k, M) != 0, from the dense oracle. Valid for rings
// over which the residue field has a linear resolution.
int oracle_depth(const Module& m, int max_i) {
  const RingPtr& r = m.ring();
  std::vector<std::vector<Polynomial>> row(1);
  for (std::size_t v = 0; v < r->nvars(); ++v) row[0].push_back(Polynomial::variable(r->space(), v));
  Matrix k = Matrix::from_rows(r->space(), {0}, row);
  for (int i = 0; i <= max_i; ++i) {
    auto hf = oracle::ext_hilbert(k, m.minimal().relations(), r->generators(), i, -8, 8, i + 1);
    for (long v : hf) {
      if (v) return i;
    }
  }
  return -1;
}

}  // namespace

TEST_SUITE("fmodules") {

TEST_CASE("minimalize examples") {
  auto r = cat::ring_xy_zu();
  Module unit = cat::coker(r, {0}, {{"1"}});
  CHECK(unit.is_zero());
  CHECK(unit.minimal().generator_count() == 0);
  Module m = cat::m_3_11(r);
  CHECK(m.minimal().relations() == m.relations());
  CHECK(m.is_minimal_presentation());
  // R ⊕ coker[y u] hidden behind a unit relation e1 + x e3 = 0.
  Module hidden = cat::coker(r, {0, 0, -1}, {{"1", "0", "0"}, {"0", "y", "u"}, {"x", "0", "0"}});
  const Module& h = hidden.minimal();
  CHECK(h.generator_count() == 2);
  CHECK(h.relations().cols() == 2);
  CHECK(h.relations().is_minimal());
  CHECK(oracle_hf(h, -1, 8) == oracle_hf(hidden, -1, 8));
}

TEST_CASE("minimalize preserves Hilbert functions on random presentations") {
  std::mt19937_64 rng(17);
  auto r = cat::ring_xy_zu();
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    std::vector<int> rd(rows, 0);
    std::vector<std::vector<std::string>> entries(rows, std::vector<std::string>(cols, "0"));
    const char* lin[] = {"x", "y", "z", "u", "x+z", "y-u", "1", "2"};
    for (std::size_t j = 0; j < cols; ++j) {
      // Column degree 1 everywhere; constants only in the first row of degree 1.
      for (std::size_t i = 0; i < rows; ++i) entries[i][j] = lin[rng() % 6];
    }
    if (rows > 1 && rng() % 2) {
      rd[0] = 1;
      for (std::size_t j = 0; j < cols; ++j) entries[0][j] = lin[6 + rng() % 2];
    }
    Module m = cat::coker(r, rd, entries);
    CHECK(m.minimal().relations().is_minimal());
    CHECK(oracle_hf(m.minimal(), 0, 8) == oracle_hf(m, 0, 8));
    CHECK(m.minimal().hilbert_values(0, 8) == oracle_hf(m, 0, 8));
  }
}

TEST_CASE("dual examples") {
  auto r = cat::ring_xy_zu();
  Module f = Module::free(r, {2});
  Module fd = dual(f);
  CHECK(fd.degrees() == std::vector<int>{-2});
  CHECK(fd.relations().cols() == 0);
  CHECK(dual(Module::zero(r)).is_zero());
  auto h = cat::ring_xw_yz();
  Module m45 = cat::m_4_5(h);
  Module md = dual(m45);
  CHECK_FALSE(md.is_zero());
  // M* = ker of the transposed column: its Hilbert function matches the oracle kernel.
  Matrix a = m45.relations().transpose();
  auto kernel = oracle::syzygy_hilbert(a, h->generators(), -2, 6);
  CHECK(md.hilbert_values(-2, 6) == kernel);
}

TEST_CASE("biduality examples") {
  auto r = cat::ring_xy_zu();
  CHECK(biduality_report(Module::free(r, {0, 1})).reflexive);
  auto m = biduality_report(cat::m_3_11(r));
  CHECK(m.reflexive);
  CHECK(m.torsion_free);
  auto h = cat::ring_xw_yz();
  Module m45 = cat::m_4_5(h);
  auto rep = biduality_report(tensor(m45, dual(m45)));
  CHECK_FALSE(rep.reflexive);
  // Torsion is detected by the kernel of M -> M**.
  auto t = biduality_report(cat::cyclic(cat::ring_xy(), {"x^2", "x*y"}));
  CHECK_FALSE(t.kernel_zero);
  CHECK_FALSE(t.torsion_free);
}

TEST_CASE("biduality needs a complete intersection") {
  auto bad = make_quotient_ring(Field::default_field(), {"x", "y"}, {1, 1}, {"x^2", "x*y"});
  Module m = Module::free(bad, {0});
  try {
    biduality_report(m);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::hypothesis_missing);
  }
  CHECK_THROWS_AS(serre_condition(m, 1), Error);
}

TEST_CASE("tensor examples") {
  auto r = cat::ring_xy_zu();
  Module n = cat::n_3_11(r);
  Module rn = tensor(Module::free(r, {0}), n);
  CHECK(rn.hilbert_values(0, 8) == oracle_hf(n, 0, 8));
  Module mn = tensor(cat::m_3_14(r), cat::n_3_14(r));
  CHECK(mn.hilbert_values(0, 8) == oracle_hf(cat::m_3_14(r), 0, 8));
  CHECK(mn.generator_count() == 1);
  auto h = cat::ring_xw_yz();
  Module m45 = cat::m_4_5(h);
  CHECK(module_profile(tensor(m45, m45)).depth == ExtInt(1));
}

TEST_CASE("tensor of free modules multiplies Hilbert series") {
  auto r = cat::ring_xy();
  Module a = Module::free(r, {0, 1});
  Module b = Module::free(r, {2});
  Module ab = tensor(a, b);
  CHECK(ab.degrees() == std::vector<int>{2, 3});
  auto hr = oracle::hilbert_values(Matrix(r->space(), {0}, {}), r->generators(), 0, 10);
  for (int d = 0; d <= 8; ++d) {
    long expect = (d >= 2 ? hr[static_cast<std::size_t>(d - 2)] : 0) + (d >= 3 ? hr[static_cast<std::size_t>(d - 3)] : 0);
    CHECK(ab.hilbert_value(d) == expect);
  }
}

TEST_CASE("module_profile examples") {
  auto r = cat::ring_xy_zu();
  auto p = module_profile(cat::m_3_11(r));
  CHECK(p.depth == ExtInt(2));
  CHECK(p.dim == ExtInt(2));
  CHECK(p.maximal_cohen_macaulay);
  auto h = cat::ring_xw_yz();
  auto q = module_profile(cat::m_4_5(h));
  CHECK(q.depth == ExtInt(2));
  CHECK(q.dim == ExtInt(3));
  CHECK(q.betti0 == 4);
  auto k = module_profile(cat::cyclic(r, {"x", "y", "z", "u"}));
  CHECK(k.depth == ExtInt(0));
  CHECK(k.dim == ExtInt(0));
  CHECK(k.length == ExtInt(1));
  auto z = module_profile(Module::zero(r));
  CHECK(z.depth.is_pos_inf());
  CHECK(z.dim.is_neg_inf());
}

TEST_CASE("depth agrees with the Ext(k, M) oracle and dim with the Fitting support") {
  auto r = cat::ring_xy_zu();
  auto h = cat::ring_xw_yz();
  for (const Module& m : {cat::m_3_11(r), cat::n_3_11(r), cat::m_3_14(r), cat::cyclic(r, {"x", "y", "z", "u"}),
                          cat::m_4_5(h), cat::cyclic(h, {"x", "y"})}) {
    auto p = module_profile(m);
    CHECK(p.depth == ExtInt(oracle_depth(m, 4)));
    CHECK(p.dim == fitting_dimension(m));
    CHECK(p.depth <= p.dim);
    CHECK(p.dim <= ExtInt(m.ring()->dimension()));
  }
}

TEST_CASE("Auslander-Buchsbaum over the ambient ring on random modules") {
  std::mt19937_64 rng(23);
  auto r = cat::ring_xy_zu();
  const char* forms[] = {"x", "y", "z", "u", "x+y", "z-u", "x*z", "y^2", "0"};
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t rows = 1 + rng() % 2, cols = 1 + rng() % 3;
    std::vector<std::vector<std::string>> entries(rows, std::vector<std::string>(cols));
    for (auto& row : entries) {
      for (auto& e : row) e = forms[rng() % 6];
    }
    Module m = cat::coker(r, std::vector<int>(rows, 0), entries);
    if (m.is_zero()) continue;
    auto res = resolve(m, ResolveOver::ambient, 1);
    REQUIRE(res.terminated);
    CHECK(res.length() <= r->nvars());
    CHECK(module_profile(m).depth.value() + *res.projective_dimension() == static_cast<int>(r->nvars()));
  }
}

TEST_CASE("serre_condition examples") {
  auto r = cat::ring_xy_zu();
  for (int n = 1; n <= 4; ++n) CHECK(serre_condition(Module::free(r, {0}), n).holds);
  auto h = cat::ring_xw_yz();
  Module m45 = cat::m_4_5(h);
  CHECK(serre_condition(m45, 1).holds);
  // M is free off the irrelevant ideal and has depth 2 there.
  auto s2 = serre_condition(m45, 2);
  CHECK(s2.holds);
  CHECK(s2.holds == biduality_report(m45).reflexive);
  auto s3 = serre_condition(m45, 3);
  CHECK_FALSE(s3.holds);
  CHECK(s3.failing_index == 2);
  CHECK(s3.support_dimension == ExtInt(0));
}

TEST_CASE("Serre conditions agree with biduality on catalog modules") {
  auto r = cat::ring_xy_zu();
  auto h = cat::ring_xw_yz();
  auto xy = cat::ring_xy();
  for (const Module& m : {cat::m_3_11(r), cat::n_3_11(r), cat::m_3_14(r), cat::n_3_14(r), cat::m_4_5(h),
                          tensor(cat::m_4_5(h), dual(cat::m_4_5(h))), cat::m_xy_x(xy),
                          cat::cyclic(xy, {"x^2", "x*y"}), cat::cyclic(r, {"x", "y", "z", "u"})}) {
    auto b = biduality_report(m);
    CHECK(b.reflexive == serre_condition(m, 2).holds);
    CHECK(b.torsion_free == serre_condition(m, 1).holds);
  }
}

TEST_CASE("nonfree_locus_codim examples") {
  auto r = cat::ring_xy_zu();
  CHECK(nonfree_locus_codim(Module::free(r, {0, 0})).is_pos_inf());
  CHECK(nonfree_locus_codim(cat::m_3_11(r)) == ExtInt(1));
  auto h = cat::ring_xw_yz();
  Module m45 = cat::m_4_5(h);
  CHECK(nonfree_locus_codim(m45) == ExtInt(3));
  // Fitting route: Fitt_3 is the irrelevant ideal and Fitt_2 vanishes.
  auto f3 = fitting_ideal(m45, 3);
  CHECK(f3.size() == 4);
  CHECK(ideal_quotient_dimension(ideal_groebner_basis(f3), 4) == 0);
  CHECK(fitting_ideal(m45, 2).empty());
}

TEST_CASE("infinite non-free codimension means free after minimalizing") {
  auto r = cat::ring_xy_zu();
  Module m = cat::coker(r, {0, 0}, {{"1", "x"}, {"0", "0"}});
  CHECK(nonfree_locus_codim(m).is_pos_inf());
  CHECK(m.minimal().relations().cols() == 0);
  auto res = resolve(m, ResolveOver::quotient, 3);
  CHECK(res.projective_dimension() == std::optional<int>(0));
}

TEST_CASE("rank_profile examples") {
  auto xy = cat::ring_xy();
  auto free2 = rank_profile(Module::free(xy, {0, 0}));
  CHECK(free2.constant_rank);
  for (const auto& q : free2.ranks) CHECK(q.rank == 2);
  auto rx = rank_profile(cat::m_xy_x(xy));
  REQUIRE(rx.ranks.size() == 2);
  CHECK(rx.ranks[0].rank == 1);
  CHECK(rx.ranks[1].rank == 0);
  CHECK_FALSE(rx.constant_rank);
  auto h = cat::ring_xw_yz();
  auto r45 = rank_profile(cat::m_4_5(h));
  REQUIRE(r45.ranks.size() == 1);
  CHECK(r45.ranks[0].rank == 3);
  CHECK(r45.constant_rank);
  auto plain = make_quotient_ring(Field::default_field(), {"x", "y", "w", "z"}, {1, 1, 1, 1}, {"x*w - y*z"});
  try {
    rank_profile(Module::free(plain, {0}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::needs_minimal_primes);
  }
}

}
