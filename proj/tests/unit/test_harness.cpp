#include <doctest.h>

#include <algorithm>

#include "citor/catalog.hpp"
#include "citor/errors.hpp"
#include "citor/harness.hpp"
#include "citor/homology.hpp"

using namespace citor;
namespace cat = citor::catalog;

namespace {

TheoremReport run(const std::string& id, const Module& m, const Module& n) {
  TheoremInstance inst{m, n};
  auto rep = check_theorem(id, inst);
  CHECK(report_is_sound(rep));
  return rep;
}

const HypothesisLine* find_line(const TheoremReport& r, const std::string& prefix) {
  for (const auto& l : r.checklist) {
    if (l.text.rfind(prefix, 0) == 0) return &l;
  }
  return nullptr;
}

std::vector<std::pair<Module, Module>> catalog_pairs() {
  auto r = cat::ring_xy_zu();
  auto h = cat::ring_xw_yz();
  auto xy = cat::ring_xy();
  auto xyz = cat::ring_xyz_xy();
  Module m45 = cat::m_4_5(h);
  return {
      {cat::m_3_11(r), cat::n_3_11(r)}, {cat::m_3_14(r), cat::n_3_14(r)}, {cat::m_3_11(r), cat::m_3_14(r)},
      {m45, m45},                       {m45, dual(m45)},                 {cat::m_xy_x(xy), cat::m_xy_y(xy)},
      {cat::m_xy_x(xy), cat::m_xy_x(xy)}, {cat::m_4_4(xyz), cat::m_4_4(xyz)},
  };
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("mixed maximal Cohen-Macaulay pair fails the local freeness line") {
  auto r = cat::ring_xy_zu();
  auto rep = run("3.12(2)", cat::m_3_11(r), cat::n_3_11(r));
  CHECK(rep.verdict == Verdict::hypotheses_unmet);
  CHECK_FALSE(rep.asserted);
  const HypothesisLine* l = find_line(rep, "M is free on X^1");
  REQUIRE(l != nullptr);
  CHECK(l->status == HypothesisStatus::failed);
  CHECK(l->evidence.find("codim = 1") != std::string::npos);
  // M⊗N = k[x,z]^2 ⊕ k has depth 0.
  const HypothesisLine* t = find_line(rep, "M⊗N is maximal");
  REQUIRE(t != nullptr);
  CHECK(t->status == HypothesisStatus::failed);
}

TEST_CASE("R/(x) against R/(y) over k[x,y]/(xy): Tor is nonzero exactly in even degrees") {
  auto xy = cat::ring_xy();
  auto rep = run("4.7", cat::m_xy_x(xy), cat::m_xy_y(xy));
  CHECK(rep.verdict == Verdict::conclusion_holds);
  CHECK(rep.asserted);
  ProfileOptions opts;
  opts.with_depth = false;
  auto prof = tor(cat::m_xy_x(xy), cat::m_xy_y(xy), rep.bound, opts);
  for (int i = 0; i <= rep.bound; ++i) CHECK(prof.at(i).vanishes == (i % 2 == 1));
}

TEST_CASE("depth formula for a module of finite projective dimension") {
  auto h = cat::ring_xw_yz();
  Module m = cat::m_4_5(h);
  auto rep = run("2.7", m, m);
  CHECK(rep.verdict == Verdict::conclusion_holds);
  CHECK(rep.evidence.find("2 + 2 = 3 + 1") != std::string::npos);
  CHECK(rep.tier == "proved-by-pd-finiteness");
}

TEST_CASE("rigidity never fails on catalog pairs") {
  for (const auto& [m, n] : catalog_pairs()) {
    auto rep = run("2.2", m, n);
    CHECK(rep.verdict != Verdict::conclusion_fails);
    auto rep4 = run("2.4", m, n);
    CHECK(rep4.verdict != Verdict::conclusion_fails);
  }
}

TEST_CASE("every theorem gives a sound report on every catalog pair") {
  for (const auto& [m, n] : catalog_pairs()) {
    for (const auto& id : theorem_ids()) {
      TheoremInstance inst{m, n};
      auto rep = check_theorem(id, inst);
      CHECK_MESSAGE(report_is_sound(rep), id);
      if (rep.verdict == Verdict::conclusion_fails) {
        // A proved statement may only fail through a window-only or estimate line.
        bool soft = false;
        for (const auto& l : rep.checklist) soft = soft || l.basis != Basis::exact;
        CHECK_MESSAGE(soft, std::string(id + "\n" + rep.to_string(false)));
      }
    }
  }
}

TEST_CASE("report text") {
  auto xy = cat::ring_xy();
  TheoremInstance inst{cat::m_xy_x(xy), cat::m_xy_y(xy)};
  inst.description = "R/(x), R/(y)";
  auto rep = check_theorem("4.7", inst);
  auto text = rep.to_string(false);
  CHECK(text.find("theorem 4.7") != std::string::npos);
  CHECK(text.find("instance: R/(x), R/(y)") != std::string::npos);
  CHECK(text.find("verdict: conclusion holds") != std::string::npos);
  CHECK(text.find("time:") == std::string::npos);
  CHECK(rep.to_string(true).find("time:") != std::string::npos);
}

TEST_CASE("unknown ids throw") {
  auto xy = cat::ring_xy();
  TheoremInstance inst{cat::m_xy_x(xy), std::nullopt};
  try {
    check_theorem("9.9", inst);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_id);
  }
  SearchConfig cfg;
  cfg.ring = xy;
  cfg.question = "1.1";
  CHECK_THROWS_AS(counterexample_search(cfg), Error);
}

TEST_CASE("ids are listed in numeric order") {
  const auto& ids = theorem_ids();
  REQUIRE(ids.size() == 33);
  CHECK(ids.front() == "2.1");
  CHECK(ids.back() == "4.22");
  auto at = [&](const std::string& s) { return std::find(ids.begin(), ids.end(), s) - ids.begin(); };
  CHECK(at("3.9(2)") < at("3.12(1)"));
  CHECK(at("4.9") < at("4.11"));
}

TEST_CASE("search is deterministic in the seed") {
  auto xy = cat::ring_xy();
  SearchConfig cfg;
  cfg.ring = xy;
  cfg.question = "3.17";
  cfg.samples = 15;
  cfg.seed = 7;
  auto a = counterexample_search(cfg).to_string();
  auto b = counterexample_search(cfg).to_string();
  CHECK(a == b);
  cfg.seed = 8;
  CHECK(counterexample_search(cfg).to_string() != a);
}

TEST_CASE("hypersurface Tor question over k[x,y]/(xy)") {
  SearchConfig cfg;
  cfg.ring = cat::ring_xy();
  cfg.question = "3.17";
  cfg.samples = 100;
  cfg.seed = 1;
  auto log = counterexample_search(cfg);
  CHECK(log.evaluated + log.skipped == 100);
  CHECK(log.skip_reasons.size() == log.skipped);
  CHECK(log.findings.size() == log.candidates + log.near_misses);
  for (const auto& f : log.findings) {
    int unmet = 0;
    for (const auto& l : f.hypotheses) unmet += !l.ok();
    CHECK_FALSE(f.conclusion_holds);
    CHECK(unmet == (f.kind == "candidate" ? 0 : 1));
  }
  CHECK(log.to_string().find("question 3.17") != std::string::npos);
}

TEST_CASE("gap question records the mixed pair as a near-miss") {
  auto r = cat::ring_xy_zu();
  SearchConfig cfg;
  cfg.ring = r;
  cfg.question = "4.10";
  cfg.samples = 4;
  cfg.extra.push_back({cat::m_3_11(r), cat::n_3_11(r)});
  auto log = counterexample_search(cfg);
  REQUIRE_FALSE(log.findings.empty());
  const Finding& last = log.findings.back();
  CHECK(last.index == 4);
  CHECK(last.kind == "near-miss");
  CHECK(last.conclusion.find("gap") != std::string::npos);
}

TEST_CASE("self-dual questions on a non-domain are near-misses at most") {
  SearchConfig cfg;
  cfg.ring = cat::ring_xy();
  cfg.samples = 10;
  for (const char* q : {"4.16", "4.18"}) {
    cfg.question = q;
    auto log = counterexample_search(cfg);
    CHECK(log.candidates == 0);
    for (const auto& f : log.findings) CHECK(f.instance.find("N = M*") != std::string::npos);
  }
}

}
