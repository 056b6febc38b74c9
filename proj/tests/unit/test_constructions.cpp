#include <doctest.h>

#include "citor/catalog.hpp"
#include "citor/constructions.hpp"
#include "citor/errors.hpp"
#include "citor/homology.hpp"
#include "citor/oracle.hpp"

using namespace citor;
namespace cat = citor::catalog;

namespace {

std::vector<long> hf(const Module& m, int lo, int hi) {
  if (m.is_zero()) return std::vector<long>(static_cast<std::size_t>(hi - lo + 1), 0);
  return m.hilbert_values(lo, hi);
}

std::vector<long> dense_hf(const Module& m, int lo, int hi) {
  return oracle::hilbert_values(m.minimal().relations(), m.ring()->generators(), lo, hi);
}

bool mcm_or_zero(const Module& m) { return m.is_zero() || module_profile(m).maximal_cohen_macaulay; }

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("pushforward of a free module") {
  auto r = cat::ring_xy_zu();
  auto pf = pushforward(Module::free(r, {0}));
  CHECK(pf.m == 1);
  CHECK(pf.pushforward.is_zero());
  CHECK(all_ok(pf.certificates));
}

TEST_CASE("pushforward of R/(x) over k[x,y]/(xy)") {
  auto xy = cat::ring_xy();
  Module m = cat::m_xy_x(xy);
  auto pf = pushforward(m);
  REQUIRE(pf.m == 1);
  CHECK(all_ok(pf.certificates));
  const Polynomial& entry = pf.embedding.at(0, 0);
  REQUIRE(entry.size() == 1);
  CHECK(entry == Polynomial::variable(xy->space(), 1).scaled(entry.leading().coefficient));
  // Dense route: ker u = 0 and coker u has the Hilbert function of R/(y).
  Matrix target(xy->space(), pf.embedding.row_degrees(), {});
  auto ker = oracle::kernel_hilbert(pf.embedding, m.relations(), target, xy->generators(), -2, 6);
  CHECK(ker == std::vector<long>(9, 0));
  auto coker = oracle::hilbert_values(pf.embedding, xy->generators(), -2, 6);
  CHECK(coker == dense_hf(cat::m_xy_y(xy).twist(1), -2, 6));
  CHECK(hf(pf.pushforward, -2, 6) == coker);
}

TEST_CASE("pushforward keeps maximal Cohen-Macaulay modules maximal Cohen-Macaulay") {
  auto r = cat::ring_xy_zu();
  auto xy = cat::ring_xy();
  auto h = cat::ring_xw_yz();
  for (const Module& m : {cat::m_3_11(r), cat::n_3_11(r), cat::m_3_14(r), cat::n_3_14(r), cat::m_xy_x(xy)}) {
    REQUIRE(module_profile(m).maximal_cohen_macaulay);
    auto pf = pushforward(m);
    CHECK(all_ok(pf.certificates));
    CHECK(mcm_or_zero(pf.pushforward));
    // Dense additivity through degree 6.
    auto a = dense_hf(m, -3, 6);
    auto c = pf.pushforward.is_zero() ? std::vector<long>(10, 0) : dense_hf(pf.pushforward, -3, 6);
    auto b = oracle::hilbert_values(Matrix(m.ring()->space(), pf.embedding.row_degrees(), {}), m.ring()->generators(),
                                    -3, 6);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] + c[i] == b[i]);
  }
  (void)h;
}

TEST_CASE("pushforward lowers the Serre index by at most one") {
  auto r = cat::ring_xy_zu();
  auto h = cat::ring_xw_yz();
  auto xy = cat::ring_xy();
  for (const Module& m : {cat::m_3_11(r), cat::n_3_11(r), cat::m_4_5(h), cat::m_xy_x(xy), dual(cat::m_4_5(h))}) {
    auto pf = pushforward(m);
    const int c = static_cast<int>(m.ring()->codim());
    for (int n = 2; n <= std::max(2, c); ++n) {
      if (serre_condition(m, n).holds) CHECK(serre_condition(pf.pushforward, n - 1).holds);
    }
  }
}

TEST_CASE("pushforward refuses torsion") {
  auto xy = cat::ring_xy();
  Module t = cat::cyclic(xy, {"x^2", "x*y"});
  try {
    pushforward(t);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::hypothesis_missing);
    CHECK(std::string(e.what()).find("torsion") != std::string::npos);
  }
}

TEST_CASE("pushforward chains") {
  auto r = cat::ring_xy_zu();
  auto free = pushforward_chain(Module::free(r, {0, 0}), 3);
  REQUIRE(free.modules.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(free.modules[i].is_zero());
  auto chain = pushforward_chain(cat::m_3_11(r), 2);
  CHECK_FALSE(chain.stopped_early);
  REQUIRE(chain.steps.size() == 2);
  for (const auto& step : chain.steps) CHECK(all_ok(step.certificates));
  for (const auto& m : chain.modules) CHECK(mcm_or_zero(m));
  auto xy = cat::ring_xy();
  auto torsion = pushforward_chain(cat::cyclic(xy, {"x^2", "x*y"}), 2);
  CHECK(torsion.stopped_early);
  CHECK(torsion.steps.empty());
  CHECK(torsion.stop_reason.find("M_0") != std::string::npos);
}

TEST_CASE("quasi-lifting of R/(x) over k[x,y]/(xy)") {
  auto xy = cat::ring_xy();
  auto q = quasi_lifting(cat::m_xy_x(xy), 0);
  CHECK(q.intermediate->is_regular());
  CHECK(all_ok(q.certificates));
  CHECK(q.lifting.is_free());
  CHECK(q.lifting.degrees() == std::vector<int>{0});
  // E/fE is free of rank one and sits between M1(-2) = R/(y)(-1) and M.
  CHECK(q.reduction.is_free());
  CHECK(q.reduction.generator_count() == 1);
  CHECK(q.depth_relation_checked);
  CHECK(q.depth_relation_holds);
  CHECK(module_depth(q.lifting) == ExtInt(2));
  CHECK(module_depth(q.pushforward.pushforward) == ExtInt(1));
}

TEST_CASE("quasi-lifting of a free module") {
  auto xy = cat::ring_xy();
  auto q = quasi_lifting(Module::free(xy, {0}), 0);
  CHECK(q.pushforward.pushforward.is_zero());
  CHECK(q.lifting.is_free());
  CHECK(q.lifting.generator_count() == 1);
  CHECK(all_ok(q.certificates));
  CHECK_FALSE(q.depth_relation_checked);
}

TEST_CASE("quasi-lifting exact sequences on catalog modules") {
  auto r = cat::ring_xy_zu();
  for (std::size_t split = 0; split < 2; ++split) {
    for (const Module& m : {cat::m_3_11(r), cat::n_3_11(r), cat::m_3_14(r)}) {
      auto q = quasi_lifting(m, split);
      CHECK(all_ok(q.certificates));
      if (q.depth_relation_checked) CHECK(q.depth_relation_holds);
      // E/fE, M1 and M: additive Hilbert functions on the dense route.
      const int e = q.f.degree();
      auto mid = dense_hf(q.reduction, -2, 6);
      auto left = q.pushforward.pushforward.is_zero() ? std::vector<long>(9, 0)
                                                      : dense_hf(q.pushforward.pushforward.twist(-e), -2, 6);
      auto right = dense_hf(m, -2, 6);
      for (std::size_t i = 0; i < mid.size(); ++i) CHECK(mid[i] == left[i] + right[i]);
    }
  }
}

TEST_CASE("quasi-lifting rejects a bad split") {
  auto xy = cat::ring_xy();
  CHECK_THROWS_AS(quasi_lifting(cat::m_xy_x(xy), 3), Error);
}

TEST_CASE("Tor of E/fE against N matches Tor of the quasi-liftings") {
  auto r = cat::ring_xy_zu();
  ProfileOptions opts;
  opts.with_depth = false;
  for (std::size_t split = 0; split < 2; ++split) {
    auto qm = quasi_lifting(cat::m_3_11(r), split);
    Module n = cat::n_3_11(r);
    auto qn = quasi_lifting(n, split);
    auto over_r = tor(qm.reduction, n, 3, opts);
    auto over_s = tor(qm.lifting, qn.lifting, 3, opts);
    for (int i = 1; i <= 3; ++i) {
      const Module& a = over_r.at(i).module;
      const Module& b = over_s.at(i).module;
      CHECK(a.is_zero() == b.is_zero());
      CHECK(hf(a, -2, 8) == hf(b, -2, 8));
    }
  }
}

}
