// Runs the ten acceptance criteria; one PASS/FAIL line each.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "citor/catalog.hpp"
#include "citor/errors.hpp"
#include "citor/groebner.hpp"
#include "citor/harness.hpp"
#include "citor/homology.hpp"
#include "citor/oracle.hpp"
#include "citor/random_module.hpp"
#include "citor/resolution.hpp"

using namespace citor;
namespace cat = citor::catalog;

namespace {

// Collects failed expectations of one criterion.
struct Probe {
  std::vector<std::string> failures;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<long> hf(const Module& m, int lo, int hi) {
  if (m.is_zero()) return std::vector<long>(static_cast<std::size_t>(hi - lo + 1), 0);
  return m.hilbert_values(lo, hi);
}

const Matrix& pres(const Module& m) { return m.minimal().relations(); }

ProfileOptions no_depth() {
  ProfileOptions o;
  o.with_depth = false;
  return o;
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

void c1(Probe& p) {
  auto r = cat::ring_xy_zu();
  Module m = cat::m_3_11(r);
  auto b = betti_table(resolve(m, ResolveOver::quotient, 6)).betti;
  p.expect(b == std::vector<long>{1, 2, 3, 4, 5, 6, 7}, "betti_0..6 = " + join(b));
  p.expect(!tor(m, m, 2, no_depth()).at(2).vanishes, "Tor_2(M,M) vanishes");
}

void c2(Probe& p) {
  auto r = cat::ring_xy_zu();
  Module m = cat::m_3_11(r), n = cat::n_3_11(r);
  auto t = tor(m, n, 5, no_depth());
  const bool expected[] = {false, true, true, false, true, false};
  for (int i = 1; i <= 5; ++i) {
    p.expect(t.at(i).vanishes == expected[i], "Tor_" + std::to_string(i) + " vanishing flag");
  }
  for (const Module* x : {&m, &n}) {
    auto res = resolve(*x, ResolveOver::quotient, 10);
    auto est = complexity_estimate(betti_table(res).betti, static_cast<int>(r->codim()));
    p.expect(est.window >= 10, "window " + std::to_string(est.window));
    p.expect(est.value == 2 && !est.at_least_window && !est.conflict, "complexity " + est.to_string());
  }
}

void c3(Probe& p) {
  auto r = cat::ring_xy_zu();
  Module m = cat::m_3_14(r), n = cat::n_3_14(r);
  auto b = betti_table(resolve(m, ResolveOver::quotient, 10)).betti;
  p.expect(b == std::vector<long>(11, 1), "betti_0..10 = " + join(b));
  ProfileOptions opts;
  opts.hilbert_count = 5;
  auto t = tor(m, n, 8, opts);
  const auto& t1 = t.at(1);
  p.expect(!t1.vanishes, "Tor_1 vanishes");
  p.expect(t1.hilbert.values == std::vector<long>(5, 1), "HF Tor_1 = " + join(t1.hilbert.values));
  p.expect(t1.hilbert.start + 4 <= 6, "Tor_1 starts in degree " + std::to_string(t1.hilbert.start));
  p.expect(t1.depth == ExtInt(1), "depth Tor_1 = " + t1.depth.to_string());
  p.expect(t.at(2).vanishes, "Tor_2 nonzero");
  for (int i = 1; i <= 6; ++i) {
    bool listed = std::find(t.distance_two_matches.begin(), t.distance_two_matches.end(), i) !=
                  t.distance_two_matches.end();
    p.expect(listed, "no distance-two evidence at " + std::to_string(i));
    // Same graded data up to the shift by the period.
    p.expect(t.at(i).hilbert.values == t.at(i + 2).hilbert.values && t.at(i).betti0 == t.at(i + 2).betti0,
             "Tor_" + std::to_string(i) + " and Tor_" + std::to_string(i + 2) + " differ");
  }
}

void c4(Probe& p) {
  auto h = cat::ring_xw_yz();
  Module m = cat::m_4_5(h);
  auto res = resolve(m, ResolveOver::quotient, default_steps(*h));
  auto pd = res.projective_dimension();
  p.expect(pd && *pd == 1, "pd_R(M) not 1");
  p.expect(module_depth(m) == ExtInt(2), "depth M = " + module_depth(m).to_string());
  auto t = tor(m, m, 10, no_depth());
  for (int i = 1; i <= 10; ++i) p.expect(t.at(i).vanishes, "Tor_" + std::to_string(i) + " nonzero");
  auto ev = tor_vanishing(t, h->codim());
  p.expect(ev.all_vanish && ev.tier == EvidenceTier::pd_finite,
           std::string("evidence tier ") + evidence_tier_name(ev.tier));
  p.expect(module_depth(tensor(m, m)) == ExtInt(2 - 1), "depth M⊗M = " + module_depth(tensor(m, m)).to_string());
  auto df = depth_formula_check(m, m, 10);
  p.expect(df.asserted && df.holds, "depth formula " + df.to_string());
  p.expect(df.lhs == ExtInt(4) && df.rhs == ExtInt(4) && df.depth_r == 3, "2 + 2 = 3 + 1: " + df.to_string());
}

void c5(Probe& p) {
  auto r = cat::ring_xyz_xy();
  Module m = cat::m_4_4(r);
  auto pd = resolve(m, ResolveOver::quotient, default_steps(*r)).projective_dimension();
  p.expect(pd && *pd == 1, "pd_R(M) not 1");
  p.expect(!tor(m, m, 1, no_depth()).at(1).vanishes, "Tor_1(M,M) vanishes");
}

void c6(Probe& p) {
  auto r = cat::ring_xy();
  Module m = cat::m_xy_x(r), n = cat::m_xy_y(r);
  auto t = tor(m, n, 10, no_depth());
  for (int i = 1; i <= 10; ++i) {
    p.expect(t.at(i).vanishes == (i % 2 == 1), "Tor_" + std::to_string(i) + " pattern");
    // Hand computation: Tor_{2j} = k in degree 2j; the dense oracle must agree.
    auto dense = oracle::tor_hilbert(pres(m), pres(n), r->generators(), i, 0, 11);
    std::vector<long> hand(12, 0);
    if (i % 2 == 0) hand[static_cast<std::size_t>(i)] = 1;
    p.expect(dense == hand, "oracle Tor_" + std::to_string(i) + " = " + join(dense));
    p.expect(hf(t.at(i).module, 0, 11) == dense, "engine and oracle disagree at " + std::to_string(i));
  }
  p.expect(module_profile(t.at(0).module).length == ExtInt(1), "length Tor_0 not 1");
  p.expect(hf(t.at(0).module, 0, 3) == std::vector<long>{1, 0, 0, 0}, "Tor_0 is not k");
}

void c7(Probe& p) {
  auto r = cat::ring_xy();
  Module m = cat::m_xy_x(r);
  auto t = tor(m, m, 10, no_depth());
  for (int i = 0; i <= 10; ++i) {
    bool nonzero = i == 0 || (i % 2 == 1 && i <= 9);
    p.expect(t.at(i).vanishes != nonzero, "Tor_" + std::to_string(i) + " pattern");
  }
}

void c8(Probe& p) {
  std::mt19937_64 rng(8);
  const RingPtr rings[] = {cat::ring_xy_zu(), cat::ring_xw_yz(), cat::ring_xyz_xy()};
  RandomModuleShape shape{4, 4, 2, 1, 40};
  int compared = 0, nontrivial = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const RingPtr& ring = rings[trial % 3];
    Module m = random_module(ring, rng, shape);
    Module n = random_module(ring, rng, shape);
    auto t = tor(m, n, 4, no_depth());
    bool higher = false;
    for (int i = 0; i <= 4; ++i) {
      higher = higher || (i >= 2 && !t.at(i).vanishes);
      auto dense = oracle::tor_hilbert(pres(m), pres(n), ring->generators(), i, 0, 6);
      p.expect(hf(t.at(i).module, 0, 6) == dense, "trial " + std::to_string(trial) + " Tor_" + std::to_string(i));
    }
    ++compared;
    nontrivial += higher ? 1 : 0;
  }
  p.expect(compared >= 20, "fewer than 20 instances");
  // Guard against a sample of free modules.
  p.expect(nontrivial >= 5, std::to_string(nontrivial) + " instances with Tor_i != 0 for some i >= 2");
}

void c9(Probe& p) {
  std::mt19937_64 rng(9);
  const RingPtr rings[] = {cat::ring_xy_zu(), cat::ring_xw_yz(), cat::ring_xyz_xy(), cat::ring_xy()};
  // Every resolution computed here is a complex with minimal differentials.
  auto complex_ok = [&](const FreeResolution& res, const std::string& what) {
    p.expect(verify_complex(res), what + ": d o d != 0");
    bool minimal = res.minimal;
    for (const auto& d : res.differentials) minimal = minimal && d.is_minimal();
    p.expect(minimal, what + ": not minimal");
  };
  for (int trial = 0; trial < 50; ++trial) {
    const RingPtr& ring = rings[trial % 4];
    Module m = random_module(ring, rng, {3, 3, 2, 1, 40});
    std::string tag = "random " + std::to_string(trial);
    complex_ok(resolve(m, ResolveOver::quotient, 5), tag);
    if (m.is_zero()) continue;
    // Auslander-Buchsbaum over the polynomial ring.
    auto amb = resolve(m, ResolveOver::ambient, 1);
    complex_ok(amb, tag + " ambient");
    auto pd = amb.projective_dimension();
    p.expect(amb.terminated && pd.has_value(), tag + ": ambient resolution did not terminate");
    if (pd) {
      ExtInt depth = module_depth(m);
      p.expect(depth.is_finite() && depth.value() + *pd == static_cast<int>(ring->nvars()),
               tag + ": depth " + depth.to_string() + " + pd " + std::to_string(*pd));
    }
  }
  ProfileOptions swap = no_depth();
  swap.resolve_second = true;
  for (const auto& [m, n] : catalog_pairs()) {
    auto a = tor(m, n, 4, no_depth());
    auto b = tor(m, n, 4, swap);
    complex_ok(a.resolution, "catalog");
    complex_ok(b.resolution, "catalog swapped");
    for (int i = 0; i <= 4; ++i) {
      p.expect(hf(a.at(i).module, -1, 9) == hf(b.at(i).module, -1, 9), "Tor symmetry at " + std::to_string(i));
    }
  }
  auto s = make_space(Field::default_field(), {"x", "y", "z", "w"});
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FreeModuleElement> cols;
    const int count = 2 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
      auto monos = monomials_of_degree(s->nvars(), 2 + static_cast<int>(rng() % 2));
      std::vector<Term> terms;
      for (int t = 0; t < 3; ++t) terms.push_back(Term{monos[rng() % monos.size()], Coefficient(s->field, coef(rng))});
      Polynomial g(s, terms);
      if (!g.is_zero()) cols.push_back(FreeModuleElement{{g}, {0}});
    }
    GroebnerBasis gb = GroebnerBasis::compute(Matrix::from_columns(s, {0}, cols));
    p.expect(gb.reduced() && verify_buchberger_criterion(gb), "ideal " + std::to_string(trial));
  }
}

void c10(Probe& p) {
  auto r = cat::ring_xy_zu();
  for (const char* id : {"3.12(1)", "3.12(2)"}) {
    auto rep = check_theorem(id, TheoremInstance{cat::m_3_11(r), cat::n_3_11(r), 0, std::nullopt, 0, ""});
    p.expect(rep.verdict == Verdict::hypotheses_unmet, std::string(id) + ": " + verdict_name(rep.verdict));
    p.expect(!rep.asserted, std::string(id) + " asserted a conclusion");
    bool codim_line = false;
    for (const auto& l : rep.checklist) {
      codim_line = codim_line || (l.status == HypothesisStatus::failed && l.evidence.find("codim = 1") != std::string::npos);
    }
    p.expect(codim_line, std::string(id) + ": no failed line citing a non-free locus of codim 1");
    p.expect(report_is_sound(rep), std::string(id) + " unsound");
  }
  for (const auto& [m, n] : catalog_pairs()) {
    auto rep = check_theorem("2.2", TheoremInstance{m, n, 0, std::nullopt, 0, ""});
    p.expect(report_is_sound(rep) && rep.verdict != Verdict::conclusion_fails, "2.2 replay: " + rep.to_string(false));
  }
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<void(Probe&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "R/(y,u) Betti numbers 1..7 and Tor_2(M,M) != 0", 10, c1},
      {2, "mixed pair Tor pattern and complexity 2", 30, c2},
      {3, "periodic pair: Betti 1s, Tor_1 line of depth 1, distance-two evidence", 10, c3},
      {4, "finite pd module: vanishing by pd, depth formula 2 + 2 = 3 + 1", 30, c4},
      {5, "R/(z) over k[x,y,z]/(xy): pd 1, Tor_1 != 0", 5, c5},
      {6, "R/(x), R/(y) over k[x,y]/(xy): odd Tor zero, even nonzero, Tor_0 = k", 5, c6},
      {7, "R/(x) against itself: Tor nonzero at 0 and odd indices", 5, c7},
      {8, "Tor Hilbert values match the dense oracle on 24 random pairs", 120, c8},
      {9, "resolutions, Auslander-Buchsbaum, Tor symmetry, S-pair criterion", 180, c9},
      {10, "harness refuses the mixed pair and never refutes rigidity", 30, c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Probe p;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(p);
    } catch (const std::exception& e) {
      p.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) p.failures.push_back("over the " + std::to_string(c.limit_seconds) + " s budget");
    bool ok = p.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %7.2f s (limit %.0f s, %d checks)  %s\n", c.number, ok ? "PASS" : "FAIL", secs,
                c.limit_seconds, p.checks, c.name);
    for (std::size_t i = 0; i < p.failures.size() && i < 8; ++i) std::printf("    %s\n", p.failures[i].c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
