#include <doctest.h>

#include <random>

#include "citor/catalog.hpp"
#include "citor/errors.hpp"
#include "citor/oracle.hpp"
#include "citor/random_module.hpp"
#include "citor/resolution.hpp"

using namespace citor;
namespace cat = citor::catalog;

namespace {

bool linear_entries(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero() && m.at(i, j).degree() != 1) return false;
    }
  }
  return true;
}

bool proportional_to(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || p.size() != 1) return false;
  return p == q.scaled(p.leading().coefficient);
}

// sum_i (-1)^i HF(F_i, d) from the shifts alone, with HF(R) from the oracle.
std::vector<long> euler_characteristic(const FreeResolution& res, int hi) {
  const auto hr = oracle::hilbert_values(Matrix(res.ring->space(), {0}, {}), res.ring->generators(), -20, hi);
  std::vector<long> out(static_cast<std::size_t>(hi + 1), 0);
  for (std::size_t i = 0; i <= res.length(); ++i) {
    const long sign = i % 2 ? -1 : 1;
    for (int shift : res.degrees(i)) {
      for (int d = 0; d <= hi; ++d) {
        if (d - shift >= -20) out[static_cast<std::size_t>(d)] += sign * hr[static_cast<std::size_t>(d - shift + 20)];
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("resolutions") {

TEST_CASE("resolution of the rank-growing example") {
  auto r = cat::ring_xy_zu();
  auto res = resolve(cat::m_3_11(r), ResolveOver::quotient, 6);
  REQUIRE(res.length() == 6);
  CHECK_FALSE(res.terminated);
  CHECK(res.minimal);
  for (std::size_t i = 1; i <= 6; ++i) {
    CHECK(res.differentials[i - 1].rows() == i);
    CHECK(res.differentials[i - 1].cols() == i + 1);
    CHECK(linear_entries(res.differentials[i - 1]));
  }
  CHECK(verify_complex(res));
  auto b = betti_table(res);
  CHECK(b.betti == std::vector<long>{1, 2, 3, 4, 5, 6, 7});
  CHECK(b.bound == 6);
  CHECK(b.graded[3] == std::map<int, long>{{3, 4}});
  CHECK(b.to_string() == "(1, 2, 3, 4, 5, 6, 7) through step 6");
}

TEST_CASE("resolution of the periodic example alternates x and y") {
  auto r = cat::ring_xy_zu();
  const SpacePtr& s = r->space();
  auto res = resolve(cat::m_3_14(r), ResolveOver::quotient, 8);
  REQUIRE(res.length() == 8);
  for (std::size_t i = 1; i <= 8; ++i) {
    const Matrix& d = res.differentials[i - 1];
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 1);
    CHECK(proportional_to(d.at(0, 0), Polynomial::variable(s, i % 2 ? 0 : 1)));
  }
  CHECK(betti_table(res).betti == std::vector<long>(9, 1));
  auto p = detect_periodicity(res);
  CHECK(p.periodic);
  CHECK(p.period == 2);
  CHECK(p.onset == 1);
}

TEST_CASE("finite projective dimension terminates") {
  auto h = cat::ring_xw_yz();
  auto res = resolve(cat::m_4_5(h), ResolveOver::quotient, 5);
  CHECK(res.terminated);
  CHECK(res.projective_dimension() == std::optional<int>(1));
  CHECK(betti_table(res).betti == std::vector<long>{4, 1, 0, 0, 0, 0});
  CHECK_FALSE(detect_periodicity(res).periodic);
  auto r = cat::ring_xy_zu();
  auto free = resolve(Module::free(r, {0, 1, 1}), ResolveOver::quotient, 4);
  CHECK(betti_table(free).betti == std::vector<long>{3, 0, 0, 0, 0});
  CHECK(free.projective_dimension() == std::optional<int>(0));
  CHECK_FALSE(resolve(Module::zero(r), ResolveOver::quotient, 3).projective_dimension().has_value());
}

TEST_CASE("growing ranks are not periodic") {
  auto r = cat::ring_xy_zu();
  CHECK_FALSE(detect_periodicity(resolve(cat::m_3_11(r), ResolveOver::quotient, 6)).periodic);
  CHECK_THROWS_AS(detect_periodicity(resolve(cat::m_3_11(r), ResolveOver::quotient, 4)), Error);
}

TEST_CASE("betti_table refuses a non-minimal resolution") {
  auto r = cat::ring_xy();
  FreeResolution res = resolve(cat::m_xy_x(r), ResolveOver::quotient, 3);
  res.minimal = false;
  try {
    betti_table(res);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::minimality_required);
  }
}

TEST_CASE("complexity_estimate examples") {
  CHECK(complexity_estimate({1, 2, 3, 4, 5, 6, 7}, 2).value == 2);
  auto one = complexity_estimate({1, 1, 1, 1, 1, 1, 1, 1, 1}, 2);
  CHECK(one.value == 1);
  CHECK_FALSE(one.conflict);
  CHECK(complexity_estimate({4, 1, 0, 0, 0, 0}, 1).value == 0);
  // Period-two Betti numbers still have complexity one.
  CHECK(complexity_estimate({1, 1, 2, 1, 2, 1, 2, 1}, 2).value == 1);
  auto clamped = complexity_estimate({1, 2, 4, 8, 16, 32, 64}, 1);
  CHECK(clamped.conflict);
  CHECK(clamped.value == 1);
  try {
    complexity_estimate({1, 2, 3}, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::insufficient_window);
  }
}

TEST_CASE("complexity estimates stay below the codimension on catalog modules") {
  auto r = cat::ring_xy_zu();
  auto h = cat::ring_xw_yz();
  auto xy = cat::ring_xy();
  auto xyz = cat::ring_xyz_xy();
  for (const Module& m : {cat::m_3_11(r), cat::n_3_11(r), cat::m_3_14(r), cat::n_3_14(r), cat::m_4_5(h),
                          cat::m_4_4(xyz), cat::m_xy_x(xy), cat::m_xy_y(xy)}) {
    const Ring& ring = *m.ring();
    auto res = resolve(m, ResolveOver::quotient, default_steps(ring));
    auto est = complexity_estimate(betti_table(res).betti, static_cast<int>(ring.codim()));
    CHECK(est.value <= static_cast<int>(ring.codim()));
    CHECK_FALSE(est.conflict);
  }
}

TEST_CASE("d o d vanishes and every differential is minimal on random modules") {
  std::mt19937_64 rng(101);
  auto r = cat::ring_xy_zu();
  auto xy = cat::ring_xy();
  for (int trial = 0; trial < 12; ++trial) {
    Module m = random_module(trial % 2 ? r : xy, rng, {3, 3, 2, 1, 40});
    auto res = resolve(m, ResolveOver::quotient, 5);
    CHECK(verify_complex(res));
    CHECK(res.minimal);
    for (const auto& d : res.differentials) CHECK(d.is_minimal());
  }
}

TEST_CASE("Betti numbers agree with the dense oracle") {
  std::mt19937_64 rng(7);
  auto r = cat::ring_xy_zu();
  std::vector<Module> mods{cat::m_3_11(r), cat::n_3_11(r), cat::m_3_14(r)};
  for (int i = 0; i < 4; ++i) mods.push_back(random_module(r, rng, {2, 3, 1, 0, 30}));
  for (const Module& m : mods) {
    auto res = resolve(m, ResolveOver::quotient, 4);
    const int hi = 5;
    auto dense = oracle::betti_numbers(m.minimal().relations(), r->generators(), 4, hi);
    for (std::size_t i = 0; i <= 4; ++i) {
      long count = 0;
      for (int d : res.degrees(i)) count += d <= hi;
      CHECK(count == dense[i]);
    }
  }
}

TEST_CASE("Euler characteristic of a truncated resolution matches the oracle") {
  std::mt19937_64 rng(11);
  auto r = cat::ring_xy_zu();
  auto h = cat::ring_xw_yz();
  std::vector<Module> mods{cat::m_3_11(r), cat::n_3_11(r), cat::m_3_14(r), cat::m_4_5(h)};
  for (int i = 0; i < 4; ++i) mods.push_back(random_module(i % 2 ? r : h, rng, {2, 3, 1, 0, 30}));
  for (const Module& m : mods) {
    auto res = resolve(m, ResolveOver::quotient, 9);
    auto hf = oracle::hilbert_values(m.minimal().relations(), m.ring()->generators(), 0, 8);
    // Minimal generators are in degree >= 0, so the truncation error sits above degree 8.
    CHECK(euler_characteristic(res, 8) == hf);
  }
}

TEST_CASE("ambient resolutions obey the syzygy theorem on random modules") {
  std::mt19937_64 rng(2024);
  auto r = cat::ring_xy_zu();
  auto h = cat::ring_xw_yz();
  auto xyz = cat::ring_xyz_xy();
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const RingPtr& ring = trial % 3 == 0 ? r : (trial % 3 == 1 ? h : xyz);
    Module m = random_module(ring, rng);
    auto res = resolve(m, ResolveOver::ambient, 1);
    CHECK(res.terminated);
    CHECK(res.length() <= ring->nvars());
    CHECK(res.ring->is_regular());
    CHECK(verify_complex(res));
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("ambient resolution of the hypersurface quotient") {
  auto xy = cat::ring_xy();
  // R/(x) over k[x,y] is k[x,y]/(x): pd 1.
  auto res = resolve(cat::m_xy_x(xy), ResolveOver::ambient, 1);
  CHECK(res.projective_dimension() == std::optional<int>(1));
  // R itself over S is S/(xy): pd 1.
  CHECK(resolve(Module::free(xy, {0}), ResolveOver::ambient, 1).projective_dimension() == std::optional<int>(1));
}

TEST_CASE("default_steps") {
  CHECK(default_steps(*cat::ring_xy_zu()) == 2 * 2 + 2 * 2 + 4);
  CHECK(default_steps(*cat::ring_xy()) == 2 + 2 + 4);
}

}
