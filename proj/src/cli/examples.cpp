#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "citor/catalog.hpp"
#include "citor/errors.hpp"
#include "citor/report.hpp"
#include "sections.hpp"

namespace citor {

bool ExampleReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.pass; });
}

namespace {

namespace cat = citor::catalog;
using detail::join;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Run {
 public:
  Run(ResultSet& out, ExampleReport& rep) : out_(out), rep_(rep) {}

  const Field& field() const { return out_.field; }

  void check(std::string name, std::string expected, std::string actual, std::string tag, std::string anchor) {
    bool pass = expected == actual;
    rep_.checks.push_back({std::move(name), std::move(expected), std::move(actual), std::move(tag), std::move(anchor),
                           pass});
  }

  void ring(const std::string& name, const RingPtr& r) { out_.sections.push_back(detail::ring_section(name, r)); }
  void module(const std::string& name, const Module& m) { out_.sections.push_back(detail::module_section(name, "R", m)); }

  FreeResolution resolution(const std::string& name, const Module& m, int steps) {
    FreeResolution res = resolve(m, ResolveOver::quotient, steps);
    out_.sections.push_back(detail::betti_section(name, res));
    return res;
  }

  HomologyProfile tor_profile(const std::string& a, const std::string& b, const Module& m, const Module& n,
                              int bound) {
    ProfileOptions opts;
    opts.hilbert_count = std::max(5, out_.bounds.degree_bound + 1);
    HomologyProfile p = tor(m, n, bound, opts);
    out_.sections.push_back(detail::homology_section(a, b, p, m.ring()->codim()));
    return p;
  }

  TheoremReport theorem(const std::string& id, const Module& m, const Module& n, const std::string& desc) {
    TheoremInstance inst{m, n, 0, std::nullopt, 0, ""};
    inst.description = desc;
    TheoremReport r = check_theorem(id, inst);
    out_.sections.push_back(detail::theorem_section(r, out_.timings));
    return r;
  }

 private:
  ResultSet& out_;
  ExampleReport& rep_;
};

// Indices i in [lo, hi] with step `by` where Tor_i vanishes (or not).
std::string pattern(const HomologyProfile& p, int lo, int hi, int by, bool want_zero) {
  for (int i = lo; i <= hi; i += by) {
    if (p.at(i).vanishes != want_zero) return "Tor_" + std::to_string(i) + (want_zero ? " nonzero" : " zero");
  }
  return want_zero ? "all zero" : "all nonzero";
}

std::string nonzero_indices(const HomologyProfile& p) {
  std::vector<long> idx;
  for (const auto& e : p.entries) {
    if (!e.vanishes) idx.push_back(e.index);
  }
  return join(idx);
}

std::string cx(const FreeResolution& res, std::size_t codim) {
  return std::to_string(complexity_estimate(betti_table(res).betti, static_cast<int>(codim)).value);
}

std::string mcm(const Module& m) { return yes_no(!m.is_zero() && module_profile(m).maximal_cohen_macaulay); }

std::string cohen_macaulay(const Module& m) {
  if (m.is_zero()) return "no";
  ModuleProfile p = module_profile(m);
  return yes_no(p.depth == p.dim);
}

std::string pd(const FreeResolution& res) {
  auto v = res.projective_dimension();
  return v ? std::to_string(*v) : "infinite in window";
}

void example_3_11(Run& run) {
  auto r = cat::ring_xy_zu(run.field());
  Module m = cat::m_3_11(r), n = cat::n_3_11(r);
  run.ring("R", r);
  run.module("M", m);
  run.module("N", n);
  auto rm = run.resolution("M", m, 10);
  auto rn = run.resolution("N", n, 10);
  auto t = run.tor_profile("M", "N", m, n, 10);
  run.theorem("3.7", m, n, "Example 3.11 pair");
  const char* mcm_anchor = "M and N are maximal Cohen-Macaulay";
  run.check("M maximal Cohen-Macaulay", "yes", mcm(m), "PAPER", mcm_anchor);
  run.check("N maximal Cohen-Macaulay", "yes", mcm(n), "PAPER", mcm_anchor);
  run.check("Tor_1(M,N), Tor_2(M,N)", "0, 0",
            std::string(t.at(1).vanishes ? "0" : "nonzero") + ", " + (t.at(2).vanishes ? "0" : "nonzero"), "PAPER",
            "Tor_1(M,N)=Tor_2(M,N)=0");
  run.check("Tor_i(M,N), even 2 <= i <= 10", "all zero", pattern(t, 2, 10, 2, true), "PAPER",
            "Tor_i(M,N)=0 for all even i >= 2");
  run.check("Tor_i(M,N), odd 3 <= i <= 9", "all nonzero", pattern(t, 3, 9, 2, false), "PAPER",
            "Tor_i(M,N) != 0 for all odd i >= 3");
  run.check("cx M, Betti window 0..10", "2", cx(rm, r->codim()), "PAPER", "cx_R(M)=cx_R(N)=2");
  run.check("cx N, Betti window 0..10", "2", cx(rn, r->codim()), "PAPER", "cx_R(M)=cx_R(N)=2");
  run.check("M⊗N Cohen-Macaulay", "no", cohen_macaulay(t.at(0).module), "PAPER",
            "the module M⊗N is not Cohen-Macaulay in Example 3.11");
}

void example_3_13(Run& run) {
  auto r = cat::ring_xy_zu(run.field());
  Module m = cat::m_3_11(r), n = cat::n_3_11(r);
  run.ring("R", r);
  run.module("M", m);
  auto res = run.resolution("M", m, 6);
  auto t = run.tor_profile("M", "M", m, m, 4);
  auto rep = run.theorem("3.12(2)", m, n, "M = R/(y,u) against N of Example 3.11");
  auto betti = betti_table(res).betti;
  run.check("betti_0..3(M)", "1,2,3,4", join(std::vector<long>(betti.begin(), betti.begin() + 4)), "PAPER",
            "a minimal resolution of M is ... R^(4) -> R^(3) -> R^(2) -> R");
  run.check("betti_0..6(M)", "1,2,3,4,5,6,7", join(betti), "DERIVED",
            "oracle: degree-by-degree dense Betti numbers");
  std::string shapes;
  for (std::size_t i = 0; i < 3; ++i) {
    shapes += (i ? ", " : "") + std::to_string(res.differentials[i].rows()) + "x" +
              std::to_string(res.differentials[i].cols());
  }
  run.check("shapes of d_1, d_2, d_3", "1x2, 2x3, 3x4", shapes, "PAPER", "the displayed 1x2, 2x3 and 3x4 matrices");
  run.check("Tor_2(M,M)", "nonzero", t.at(2).vanishes ? "0" : "nonzero", "PAPER", "Tor_2(M,M) != 0");
  run.check("codim of the non-free locus of M", "1", nonfree_locus_codim(m).to_string(), "PAPER",
            "dim(R_q)=1 and M_q=R_q/(y) is not a free R_q-module");
  run.check("3.12(2) on the pair of Example 3.11", "hypotheses unmet", verdict_name(rep.verdict), "PAPER",
            "M is not a vector bundle");
}

void example_3_14(Run& run) {
  auto r = cat::ring_xy_zu(run.field());
  Module m = cat::m_3_14(r), n = cat::n_3_14(r);
  run.ring("R", r);
  run.module("M", m);
  run.module("N", n);
  auto res = run.resolution("M", m, 10);
  auto t = run.tor_profile("M", "N", m, n, 10);
  run.check("betti_0..10(M)", "1,1,1,1,1,1,1,1,1,1,1", join(betti_table(res).betti), "PAPER",
            "... -y-> R -x-> R -y-> R -x-> R");
  run.check("M, N, M⊗N maximal Cohen-Macaulay", "yes, yes, yes",
            mcm(m) + ", " + mcm(n) + ", " + mcm(t.at(0).module), "PAPER",
            "M, N and M⊗N are maximal Cohen-Macaulay");
  run.check("Tor_1(M,N), Tor_2(M,N)", "nonzero, 0",
            std::string(t.at(1).vanishes ? "0" : "nonzero") + ", " + (t.at(2).vanishes ? "0" : "nonzero"), "PAPER",
            "Tor_1(M,N) != 0, Tor_2(M,N)=0");
  auto hf = t.at(1).hilbert.values;
  hf.resize(5);
  run.check("HF of Tor_1(M,N), five degrees from its generator", "1,1,1,1,1", join(hf), "PAPER",
            "Tor_1(M,N) ≅ R/(x,y,u) ≅ k[[Z]]");
  std::string depths;
  for (int i = 1; i <= 9; i += 2) depths += (i > 1 ? "," : "") + t.at(i).depth.to_string();
  run.check("depth Tor_i(M,N), odd i <= 9", "1,1,1,1,1", depths, "PAPER",
            "depth(Tor_i(M,N))=1 if i is a positive odd integer");
  bool matches = true;
  for (int i = 1; i <= 6; ++i) {
    matches = matches && std::count(t.distance_two_matches.begin(), t.distance_two_matches.end(), i);
  }
  run.check("Tor_i and Tor_{i+2} agree in graded data, 1 <= i <= 6", "yes", yes_no(matches), "PAPER",
            "Tor_i(M,N) ≅ Tor_{i+2}(M,N) for all i >= 1");
  run.check("M, N free on X^1", "no, no",
            yes_no(nonfree_locus_codim(m) > ExtInt(1)) + ", " + yes_no(nonfree_locus_codim(n) > ExtInt(1)), "PAPER",
            "M and N are not vector bundles");
}

void example_pre_3_4(Run& run) {
  auto r = cat::ring_xy(run.field());
  Module m = cat::m_xy_x(r);
  run.ring("R", r);
  run.module("M", m);
  auto t = run.tor_profile("M", "M", m, m, 9);
  run.theorem("3.3", m, m, "R/(x) over k[x,y]/(xy)");
  run.check("i in 0..9 with Tor_i(M,M) != 0", "0,1,3,5,7,9", nonzero_indices(t), "PAPER",
            "Tor_i(M,M) != 0 if and only if i is a positive odd integer, or zero");
  run.check("M maximal Cohen-Macaulay", "yes", mcm(m), "PAPER", "M is a maximal Cohen-Macaulay vector bundle");
  run.check("M free on X^0", "yes", yes_no(nonfree_locus_codim(m) > ExtInt(0)), "PAPER",
            "M is a maximal Cohen-Macaulay vector bundle");
}

void example_4_4(Run& run) {
  auto r = cat::ring_xyz_xy(run.field());
  Module m = cat::m_4_4(r);
  run.ring("R", r);
  run.module("M", m);
  auto res = run.resolution("M", m, 6);
  auto t = run.tor_profile("M", "M", m, m, 4);
  run.check("dim R", "2", std::to_string(r->dimension()), "PAPER", "R is a two-dimensional hypersurface");
  run.check("pd_R M", "1", pd(res), "PAPER", "M ... has projective dimension one");
  run.check("M Cohen-Macaulay", "yes", cohen_macaulay(m), "PAPER", "M is a Cohen-Macaulay R-module");
  run.check("Tor_1(M,M)", "nonzero", t.at(1).vanishes ? "0" : "nonzero", "PAPER", "Tor_1(M,M) != 0");
}

void example_4_5(Run& run) {
  auto r = cat::ring_xw_yz(run.field());
  Module m = cat::m_4_5(r);
  run.ring("R", r);
  run.module("M", m);
  auto res = run.resolution("M", m, 6);
  auto t = run.tor_profile("M", "M", m, m, 10);
  auto rep = run.theorem("2.7", m, m, "M of Example 4.5 against itself");
  VanishingEvidence ev = tor_vanishing(t, r->codim());
  const auto& primes = r->minimal_primes();
  run.check("dim R, minimal primes", "3, 1",
            std::to_string(r->dimension()) + ", " + (primes ? std::to_string(primes->size()) : "unknown"), "PAPER",
            "R is a three-dimensional hypersurface domain");
  run.check("pd_R M", "1", pd(res), "PAPER", "M has projective dimension one");
  run.check("depth M", "2", module_depth(m).to_string(), "PAPER", "depth_R(M)=2");
  run.check("Tor_i(M,M), 1 <= i <= 10", "all zero", pattern(t, 1, 10, 1, true), "PAPER",
            "Tor_i(M,M)=0 for all i >= 1");
  run.check("vanishing evidence tier", evidence_tier_name(EvidenceTier::pd_finite), evidence_tier_name(ev.tier),
            "TRIVIAL", "Tor_i(M,-) = 0 for i > pd M");
  run.check("depth(M⊗M)", "1", module_depth(t.at(0).module).to_string(), "PAPER", "depth_R(M⊗M)=1");
  run.check("depth formula", "2 + 2 = 3 + 1", rep.evidence, "PAPER", "by Auslander's depth formula");
  run.check("M, M⊗M Cohen-Macaulay", "no, no", cohen_macaulay(m) + ", " + cohen_macaulay(t.at(0).module), "PAPER",
            "both M and M⊗M are not Cohen-Macaulay");
}

void example_4_19(Run& run) {
  auto r = cat::ring_xw_yz(run.field());
  Module m = cat::m_4_5(r);
  Module md = dual(m);
  run.ring("R", r);
  run.module("M", m);
  run.module("M*", md);
  auto t = run.tor_profile("M", "M*", m, md, 4);
  BidualityReport bm = biduality_report(m);
  BidualityReport bt = biduality_report(t.at(0).module);
  run.check("M torsion-free", "yes", yes_no(bm.torsion_free), "PAPER", "M is a torsion-free R-module");
  run.check("M* nonzero", "yes", yes_no(!md.is_zero()), "PAPER", "M* is non-zero as M is torsion-free");
  run.check("Tor_1(M,M*)", "0", t.at(1).vanishes ? "0" : "nonzero", "PAPER", "Tor_1^R(M,M*)=0");
  run.check("M⊗M* reflexive", "no", yes_no(bt.reflexive), "PAPER", "M⊗_R M* is not reflexive");
}

void example_cor_4_7(Run& run) {
  auto r = cat::ring_xy(run.field());
  Module m = cat::m_xy_x(r), n = cat::m_xy_y(r);
  run.ring("R", r);
  run.module("M", m);
  run.module("N", n);
  auto t = run.tor_profile("M", "N", m, n, 10);
  auto rep = run.theorem("4.7", m, n, "R/(x), R/(y) over k[x,y]/(xy)");
  run.check("Tor_i(M,N), odd i <= 9", "all zero", pattern(t, 1, 9, 2, true), "DERIVED",
            "oracle: dense Tor Hilbert values");
  run.check("Tor_i(M,N), even 2 <= i <= 10", "all nonzero", pattern(t, 2, 10, 2, false), "DERIVED",
            "oracle: dense Tor Hilbert values");
  run.check("length of Tor_0(M,N)", "1", module_profile(t.at(0).module).length.to_string(), "DERIVED",
            "oracle: R/(x,y) = k");
  run.check("4.7 verdict", "conclusion holds", verdict_name(rep.verdict), "DERIVED",
            "harness over the computed Tor window");
}

struct Entry {
  std::string title;
  std::function<void(Run&)> fn;
};

const std::map<std::string, Entry>& entries() {
  static const std::map<std::string, Entry> table = {
      {"3.11", {"R = k[x,y,z,u]/(xy,zu), M = R/(y,u), N = coker of the 3x2 map", example_3_11}},
      {"3.13", {"M = R/(y,u) over k[x,y,z,u]/(xy,zu) is not a vector bundle", example_3_13}},
      {"3.14", {"M = R/(x), N = R/(xz) over k[x,y,z,u]/(xy,zu)", example_3_14}},
      {"pre-3.4", {"M = R/(x) over k[x,y]/(xy): Tor_i(M,M) != 0 iff i = 0 or i odd", example_pre_3_4}},
      {"4.4", {"M = R/(z) over k[x,y,z]/(xy)", example_4_4}},
      {"4.5", {"M = coker(w,y,x,z) over k[x,y,w,z]/(xw-yz)", example_4_5}},
      {"4.19", {"M⊗M* is not reflexive for M = coker(w,y,x,z)", example_4_19}},
      {"cor4.7", {"M = R/(x), N = R/(y) over k[x,y]/(xy)", example_cor_4_7}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {"3.11", "3.13", "3.14", "pre-3.4", "4.4", "4.5", "4.19", "cor4.7"};
  return ids;
}

ExampleReport run_example(const std::string& id, ResultSet& out) {
  auto it = entries().find(id == "cor4.7-instance" ? "cor4.7" : id);
  if (it == entries().end()) fail(ErrorKind::unknown_id, "unknown example id '" + id + "'");
  ExampleReport rep;
  rep.id = it->first;
  rep.title = it->second.title;
  auto start = std::chrono::steady_clock::now();
  Run run(out, rep);
  it->second.fn(run);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.examples.push_back(rep);
  out.sections.push_back(detail::example_section(rep, out.timings));
  return rep;
}

ExampleReport run_example(const std::string& id, const Field& field) {
  ResultSet out;
  out.field = field;
  return run_example(id, out);
}

}  // namespace citor
