#include <doctest.h>

#include <random>

#include "citor/catalog.hpp"
#include "citor/errors.hpp"
#include "citor/homology.hpp"
#include "citor/oracle.hpp"
#include "citor/random_module.hpp"

using namespace citor;
namespace cat = citor::catalog;

namespace {

std::vector<long> hf(const Module& m, int lo, int hi) {
  if (m.is_zero()) return std::vector<long>(static_cast<std::size_t>(hi - lo + 1), 0);
  return m.hilbert_values(lo, hi);
}

const Matrix& pres(const Module& m) { return m.minimal().relations(); }

ProfileOptions no_depth_options() {
  ProfileOptions o;
  o.with_depth = false;
  return o;
}

// coker(d_{i+1}) on F_i, i.e. the i-th syzygy module of M shifted into place.
Module syzygy_module(const FreeResolution& res, std::size_t i) {
  if (i < res.differentials.size()) return Module(res.ring, res.differentials[i]);
  return Module::free(res.ring, res.degrees(i));
}

std::vector<std::pair<Module, Module>> catalog_pairs() {
  auto r = cat::ring_xy_zu();
  auto h = cat::ring_xw_yz();
  auto xy = cat::ring_xy();
  return {{cat::m_3_11(r), cat::n_3_11(r)}, {cat::m_3_14(r), cat::n_3_14(r)}, {cat::m_4_5(h), cat::m_4_5(h)},
          {cat::m_xy_x(xy), cat::m_xy_y(xy)}, {cat::m_xy_x(xy), cat::m_xy_x(xy)}};
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("Tor pattern with a gap of two") {
  auto r = cat::ring_xy_zu();
  auto p = tor(cat::m_3_11(r), cat::n_3_11(r), 5);
  CHECK(p.at(1).vanishes);
  CHECK(p.at(2).vanishes);
  CHECK_FALSE(p.at(3).vanishes);
  CHECK(p.at(4).vanishes);
  CHECK_FALSE(p.at(5).vanishes);
  auto ev = tor_vanishing(p, r->codim());
  CHECK(ev.tier == EvidenceTier::not_vanishing);
  CHECK_FALSE(ev.all_vanish);
}

TEST_CASE("Tor_1 is a line in the periodic example") {
  auto r = cat::ring_xy_zu();
  auto p = tor(cat::m_3_14(r), cat::n_3_14(r), 4);
  const auto& t1 = p.at(1);
  CHECK_FALSE(t1.vanishes);
  CHECK(t1.depth == ExtInt(1));
  CHECK(t1.dim == ExtInt(1));
  CHECK(t1.betti0 == 1);
  REQUIRE(t1.hilbert.values.size() == 9);
  CHECK(t1.hilbert.values == std::vector<long>(9, 1));
  CHECK(t1.hilbert.start == 2);
  CHECK(p.at(2).vanishes);
  CHECK_FALSE(p.at(3).vanishes);
  CHECK(p.at(4).vanishes);
  // Dense route, with no Gröbner bases involved.
  auto dense = oracle::tor_hilbert(pres(cat::m_3_14(r)), pres(cat::n_3_14(r)), r->generators(), 1, 2, 8);
  CHECK(dense == std::vector<long>(7, 1));
}

TEST_CASE("Tor against a free module vanishes") {
  auto r = cat::ring_xy_zu();
  auto p = tor(Module::free(r, {0}), cat::n_3_11(r), 4);
  for (int i = 1; i <= 4; ++i) CHECK(p.at(i).vanishes);
  auto ev = tor_vanishing(p, r->codim());
  CHECK(ev.tier == EvidenceTier::pd_finite);
  CHECK(ev.all_vanish);
  auto dense = oracle::tor_hilbert(Matrix(r->space(), {0}, {}), pres(cat::n_3_11(r)), r->generators(), 1, 0, 6);
  CHECK(dense == std::vector<long>(7, 0));
}

TEST_CASE("Tor_0 is the tensor product") {
  for (const auto& [m, n] : catalog_pairs()) {
    auto p = tor(m, n, 1);
    CHECK(hf(p.at(0).module, -2, 7) == hf(tensor(m, n), -2, 7));
  }
}

TEST_CASE("Tor is symmetric in its arguments") {
  ProfileOptions swap;
  swap.resolve_second = true;
  swap.with_depth = false;
  ProfileOptions plain;
  plain.with_depth = false;
  for (const auto& [m, n] : catalog_pairs()) {
    auto a = tor(m, n, 4, plain);
    auto b = tor(m, n, 4, swap);
    for (int i = 0; i <= 4; ++i) {
      CHECK(hf(a.at(i).module, -1, 9) == hf(b.at(i).module, -1, 9));
      CHECK(a.at(i).vanishes == b.at(i).vanishes);
    }
  }
}

TEST_CASE("vanishing flag, empty presentation and zero Hilbert values agree") {
  for (const auto& [m, n] : catalog_pairs()) {
    auto p = tor(m, n, 4);
    for (const auto& e : p.entries) {
      CHECK(e.vanishes == (e.module.generator_count() == 0));
      bool all_zero = true;
      for (long v : e.hilbert.values) all_zero = all_zero && v == 0;
      CHECK(e.vanishes == all_zero);
    }
  }
}

TEST_CASE("rigidity replay: c+1 consecutive zeros force the rest of the window") {
  std::mt19937_64 rng(5);
  auto r = cat::ring_xy_zu();
  auto xy = cat::ring_xy();
  auto pairs = catalog_pairs();
  for (int i = 0; i < 6; ++i) {
    const RingPtr& ring = i % 2 ? r : xy;
    pairs.emplace_back(random_module(ring, rng, {2, 2, 1, 0, 30}), random_module(ring, rng, {2, 2, 1, 0, 30}));
  }
  ProfileOptions opts;
  opts.with_depth = false;
  for (const auto& [m, n] : pairs) {
    const int c = static_cast<int>(m.ring()->codim());
    auto p = tor(m, n, 6, opts);
    for (int start = 1; start + c <= 6; ++start) {
      bool run = true;
      for (int i = start; i <= start + c; ++i) run = run && p.at(i).vanishes;
      if (!run) continue;
      for (int i = start + c + 1; i <= 6; ++i) CHECK(p.at(i).vanishes);
    }
  }
}

TEST_CASE("even Tor's vanish once Tor_1 and Tor_2 do") {
  auto r = cat::ring_xy_zu();
  auto p = tor(cat::m_3_11(r), cat::n_3_11(r), 8, {9, false, false});
  REQUIRE(p.at(1).vanishes);
  REQUIRE(p.at(2).vanishes);
  for (int i = 2; i <= 8; i += 2) CHECK(p.at(i).vanishes);
  for (int i = 3; i <= 7; i += 2) CHECK_FALSE(p.at(i).vanishes);
}

TEST_CASE("period-two evidence in the periodic example") {
  auto r = cat::ring_xy_zu();
  auto p = tor(cat::m_3_14(r), cat::n_3_14(r), 7);
  CHECK(p.periodicity.periodic);
  CHECK(p.periodicity.period == 2);
  for (int i = 1; i + 2 <= 7; ++i) {
    CHECK(p.at(i).betti0 == p.at(i + 2).betti0);
    CHECK(hf(p.at(i).module, -1, 10) == hf(p.at(i + 2).module, 1, 12));
  }
}

TEST_CASE("Tor agrees with the dense oracle on random instances") {
  std::mt19937_64 rng(99);
  auto r = cat::ring_xy_zu();
  auto xy = cat::ring_xy();
  auto xyz = cat::ring_xyz_xy();
  ProfileOptions opts;
  opts.with_depth = false;
  for (int trial = 0; trial < 20; ++trial) {
    const RingPtr& ring = trial % 3 == 0 ? r : (trial % 3 == 1 ? xy : xyz);
    Module m = random_module(ring, rng, {2, 2, 1, 0, 30});
    Module n = random_module(ring, rng, {2, 2, 1, 0, 30});
    auto p = tor(m, n, 2, opts);
    for (int i = 0; i <= 2; ++i) {
      auto dense = oracle::tor_hilbert(pres(m), pres(n), ring->generators(), i, 0, 5);
      CHECK(hf(p.at(i).module, 0, 5) == dense);
    }
  }
}

TEST_CASE("Ext against a free module") {
  auto r = cat::ring_xy_zu();
  auto p = ext(Module::free(r, {0}), cat::n_3_11(r), 3);
  for (int i = 1; i <= 3; ++i) CHECK(p.at(i).vanishes);
  CHECK(hf(p.at(0).module, 0, 6) == hf(cat::n_3_11(r), 0, 6));
}

TEST_CASE("Ext of the residue field over the ambient ring") {
  auto s = make_quotient_ring(Field::default_field(), {"x", "y", "z"}, {1, 1, 1}, {});
  Module k = cat::cyclic(s, {"x", "y", "z"});
  auto p = ext(k, Module::free(s, {0}), 4);
  for (int i = 0; i <= 4; ++i) CHECK(p.at(i).vanishes == (i != 3));
  // Ext^3(k, S) = k(3).
  CHECK(p.at(3).hilbert.start == -3);
  CHECK(p.at(3).hilbert.values[0] == 1);
  CHECK(p.at(3).dim == ExtInt(0));
}

TEST_CASE("Ext^1 of M into its first syzygy has support of codimension one") {
  auto r = cat::ring_xy_zu();
  Module m = cat::m_3_11(r);
  auto res = resolve(m, ResolveOver::quotient, 3);
  Module syz = syzygy_module(res, 1);
  auto p = ext(m, syz, 2);
  const auto& e1 = p.at(1);
  CHECK_FALSE(e1.vanishes);
  CHECK(e1.dim == ExtInt(1));
  auto dense = oracle::ext_hilbert(pres(m), pres(syz), r->generators(), 1, -1, 6, 3);
  CHECK(hf(e1.module, -1, 6) == dense);
}

TEST_CASE("Ext agrees with the dense oracle on random instances") {
  std::mt19937_64 rng(31);
  auto xy = cat::ring_xy();
  auto xyz = cat::ring_xyz_xy();
  ProfileOptions opts;
  opts.with_depth = false;
  for (int trial = 0; trial < 8; ++trial) {
    const RingPtr& ring = trial % 2 ? xy : xyz;
    Module m = random_module(ring, rng, {2, 2, 1, 0, 30});
    Module n = random_module(ring, rng, {2, 2, 1, 0, 30});
    auto res = resolve(m, ResolveOver::quotient, 3);
    for (int i = 0; i <= 1; ++i) {
      int bound = 0;
      for (int d : res.degrees(static_cast<std::size_t>(i + 1))) bound = std::max(bound, d);
      auto dense = oracle::ext_hilbert(pres(m), pres(n), ring->generators(), i, -3, 4, bound);
      CHECK(hf(ext_module(res, n, i), -3, 4) == dense);
    }
  }
}

TEST_CASE("depth formula examples") {
  auto h = cat::ring_xw_yz();
  Module m = cat::m_4_5(h);
  auto rep = depth_formula_check(m, m, 4);
  CHECK(rep.asserted);
  CHECK(rep.holds);
  CHECK(rep.depth_m == ExtInt(2));
  CHECK(rep.depth_tensor == ExtInt(1));
  CHECK(rep.lhs == ExtInt(4));
  CHECK(rep.rhs == ExtInt(4));
  CHECK(rep.evidence.tier == EvidenceTier::pd_finite);
  auto r = cat::ring_xy_zu();
  auto free = depth_formula_check(Module::free(r, {0}), Module::free(r, {0}), 3);
  CHECK(free.holds);
  auto bad = depth_formula_check(cat::m_3_14(r), cat::n_3_14(r), 4);
  CHECK_FALSE(bad.asserted);
  CHECK_FALSE(bad.holds);
  CHECK(bad.evidence.tier == EvidenceTier::not_vanishing);
}

TEST_CASE("evidence tiers") {
  auto xy = cat::ring_xy();
  // Tor(R/(x), R/(x)) is nonzero in every odd degree.
  auto odd = tor(cat::m_xy_x(xy), cat::m_xy_x(xy), 4);
  CHECK_FALSE(odd.at(1).vanishes);
  CHECK(odd.at(2).vanishes);
  // Tor(R/(x), R/(y)) is nonzero in every even degree.
  auto even = tor(cat::m_xy_x(xy), cat::m_xy_y(xy), 4);
  CHECK(even.at(1).vanishes);
  CHECK_FALSE(even.at(2).vanishes);
  auto k = cat::cyclic(xy, {"x", "y"});
  auto ring = cat::ring_xy_zu();
  auto twice = tor(cat::m_3_11(ring), cat::n_3_11(ring), 2);
  auto ev = tor_vanishing(twice, 2);
  CHECK(ev.window_vanishes);
  CHECK(ev.tier == EvidenceTier::window_only);
  CHECK_FALSE(ev.all_vanish);
  CHECK(std::string(evidence_tier_name(EvidenceTier::window_rigidity)) == "window+rigidity");
  CHECK_FALSE(tor(k, k, 2).at(2).vanishes);
}

TEST_CASE("insufficient resolution length is reported") {
  auto r = cat::ring_xy_zu();
  auto res = resolve(cat::m_3_11(r), ResolveOver::quotient, 2);
  CHECK_NOTHROW(tor_module(res, cat::n_3_11(r), 1));
  try {
    tor_module(res, cat::n_3_11(r), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::insufficient_window);
  }
}

}

TEST_SUITE("homology") {

TEST_CASE("short windows leave periodicity untested") {
  auto xy = cat::ring_xy();
  auto short_run = tor(cat::m_xy_x(xy), cat::m_xy_y(xy), 3, no_depth_options());
  CHECK_FALSE(short_run.periodicity.tested);
  CHECK(short_run.periodicity.to_string().find("not tested") != std::string::npos);
  auto long_run = tor(cat::m_xy_x(xy), cat::m_xy_y(xy), 8, no_depth_options());
  CHECK(long_run.periodicity.tested);
  CHECK(long_run.periodicity.periodic);
  auto h = cat::ring_xw_yz();
  auto finite = tor(cat::m_4_5(h), cat::m_4_5(h), 2, no_depth_options());
  CHECK(finite.periodicity.tested);
  CHECK_FALSE(finite.periodicity.periodic);
}

}  // TEST_SUITE
