#include "citor/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "citor/errors.hpp"
#include "citor/homology.hpp"
#include "citor/resolution.hpp"

namespace citor {

const char* hypothesis_status_name(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::satisfied: return "satisfied";
    case HypothesisStatus::failed: return "failed";
    case HypothesisStatus::model_level: return "model-level";
    case HypothesisStatus::undetermined: return "undetermined";
  }
  return "?";
}

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::exact: return "exact";
    case Basis::estimate: return "estimate-based";
    case Basis::surrogate: return "surrogate";
    case Basis::window: return "window";
    case Basis::model: return "model";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::conclusion_holds: return "conclusion holds";
    case Verdict::conclusion_fails: return "conclusion fails";
    case Verdict::hypotheses_unmet: return "hypotheses unmet";
  }
  return "?";
}

namespace {

const char* status_tag(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::satisfied: return "[ok   ]";
    case HypothesisStatus::failed: return "[FAIL ]";
    case HypothesisStatus::model_level: return "[model]";
    case HypothesisStatus::undetermined: return "[?    ]";
  }
  return "[?    ]";
}

void print_lines(std::ostream& os, const std::vector<HypothesisLine>& lines) {
  for (const auto& l : lines) {
    os << "  " << status_tag(l.status) << " " << l.text;
    if (!l.evidence.empty()) os << " (" << l.evidence << ")";
    os << " {" << basis_name(l.basis) << "}\n";
  }
}

}  // namespace

std::string TheoremReport::to_string(bool with_timing) const {
  std::ostringstream os;
  os << "theorem " << id << ": " << statement << "\n";
  if (!instance.empty()) os << "instance: " << instance << "\n";
  os << "Tor window: 0.." << bound << "\n";
  print_lines(os, checklist);
  os << "verdict: " << verdict_name(verdict);
  if (asserted) {
    os << ": " << conclusion;
    if (!tier.empty()) os << " [" << tier << "]";
    if (!evidence.empty()) os << " (" << evidence << ")";
  } else {
    os << "; nothing asserted";
  }
  os << "\n";
  if (with_timing) {
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << seconds;
    os << "time: " << t.str() << " s\n";
  }
  return os.str();
}

bool report_is_sound(const TheoremReport& r) {
  if (!r.asserted) return r.verdict == Verdict::hypotheses_unmet;
  for (const auto& l : r.checklist) {
    if (!l.ok()) return false;
  }
  return r.verdict != Verdict::hypotheses_unmet;
}

namespace {

enum class Which { m, n, tensor };

const char* label(Which w) {
  switch (w) {
    case Which::m: return "M";
    case Which::n: return "N";
    case Which::tensor: return "M⊗N";
  }
  return "?";
}

// Invariants of an instance, computed on first use.
class Facts {
 public:
  Facts(const Module& m, const Module& n, int bound)
      : m_(m.minimal()), n_(n.minimal()), ring_(m.ring()), bound_(bound) {
    require_same_ring(m, n);
    c = static_cast<int>(ring_->codim());
    d = ring_->dimension();
    steps_ = std::max(bound_, default_steps(*ring_));
  }

  int c = 0;
  int d = 0;
  int bound() const { return bound_; }
  const RingPtr& ring() const { return ring_; }

  const Module& module(Which w) {
    if (w == Which::m) return m_;
    if (w == Which::n) return n_;
    return tor().at(0).module;
  }

  const HomologyProfile& tor() {
    if (!tor_) {
      ProfileOptions opts;
      opts.with_depth = false;
      tor_ = std::make_unique<HomologyProfile>(citor::tor(m_, n_, bound_, opts));
    }
    return *tor_;
  }

  bool tor_zero(int i) { return tor().at(i).vanishes; }

  ExtInt tor_depth(int i) {
    auto it = tor_depths_.find(i);
    if (it == tor_depths_.end()) it = tor_depths_.emplace(i, module_depth(tor().at(i).module)).first;
    return it->second;
  }

  const VanishingEvidence& vanishing() {
    if (!vanishing_) vanishing_ = std::make_unique<VanishingEvidence>(tor_vanishing(tor(), ring_->codim()));
    return *vanishing_;
  }

  const FreeResolution& resolution(Which w) {
    auto it = res_.find(w);
    if (it == res_.end()) it = res_.emplace(w, resolve(module(w), ResolveOver::quotient, steps_)).first;
    return it->second;
  }

  const ComplexityEstimate& cx(Which w) {
    auto it = cx_.find(w);
    if (it == cx_.end()) it = cx_.emplace(w, complexity_estimate(betti_table(resolution(w)).betti, c)).first;
    return it->second;
  }

  ExtInt depth(Which w) {
    auto it = depth_.find(w);
    if (it == depth_.end()) it = depth_.emplace(w, module_depth(module(w))).first;
    return it->second;
  }

  ExtInt dim(Which w) { return w == Which::tensor ? tor().at(0).dim : module(w).dimension(); }

  const SerreReport& serre(Which w, int k) {
    auto key = std::make_pair(w, k);
    auto it = serre_.find(key);
    if (it == serre_.end()) it = serre_.emplace(key, serre_condition(module(w), k)).first;
    return it->second;
  }

  ExtInt nonfree(Which w) {
    auto it = nonfree_.find(w);
    if (it == nonfree_.end()) it = nonfree_.emplace(w, nonfree_locus_codim(module(w))).first;
    return it->second;
  }

  const BidualityReport& bidual(Which w) {
    auto it = bidual_.find(w);
    if (it == bidual_.end()) it = bidual_.emplace(w, biduality_report(module(w))).first;
    return it->second;
  }

  bool constant_rank(Which w) {
    auto it = rank_.find(w);
    if (it == rank_.end()) it = rank_.emplace(w, rank_profile(module(w)).constant_rank).first;
    return it->second;
  }

  // pd over R when the resolution terminated within the computed steps.
  std::optional<int> pd(Which w) { return resolution(w).projective_dimension(); }

 private:
  Module m_;
  Module n_;
  RingPtr ring_;
  int bound_ = 0;
  int steps_ = 0;
  std::unique_ptr<HomologyProfile> tor_;
  std::unique_ptr<VanishingEvidence> vanishing_;
  std::map<int, ExtInt> tor_depths_;
  std::map<Which, FreeResolution> res_;
  std::map<Which, ComplexityEstimate> cx_;
  std::map<Which, ExtInt> depth_;
  std::map<std::pair<Which, int>, SerreReport> serre_;
  std::map<Which, ExtInt> nonfree_;
  std::map<Which, BidualityReport> bidual_;
  std::map<Which, bool> rank_;
};

std::string str(int v) { return std::to_string(v); }

// Sum in the extended integers; -inf wins over +inf.
ExtInt ext_add(ExtInt a, ExtInt b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtInt::neg_infinity();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::infinity();
  return ExtInt(a.value() + b.value());
}

HypothesisLine line(std::string text, bool ok, std::string evidence = "", Basis basis = Basis::exact) {
  return {std::move(text), ok ? HypothesisStatus::satisfied : HypothesisStatus::failed, std::move(evidence), basis};
}

HypothesisLine undetermined(std::string text, std::string evidence, Basis basis = Basis::window) {
  return {std::move(text), HypothesisStatus::undetermined, std::move(evidence), basis};
}

HypothesisLine model(std::string text, std::string evidence) {
  return {std::move(text), HypothesisStatus::model_level, std::move(evidence), Basis::model};
}

// Evaluates a line, turning engine errors into an undetermined line.
HypothesisLine guard(const std::string& text, const std::function<HypothesisLine()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return undetermined(text, std::string(error_kind_name(e.kind())) + ": " + e.what(), Basis::exact);
  }
}

HypothesisLine ci_line(Facts& f) {
  const auto& ring = *f.ring();
  return line("R is a complete intersection of codimension " + str(f.c), ring.certified(),
              ring.certified() ? "regular sequence certified, dim R = " + str(f.d) : "regular sequence not certified");
}

HypothesisLine f_in_n2(Facts& f) {
  int low = 100;
  for (const auto& g : f.ring()->generators()) low = std::min(low, g.degree());
  const bool ok = f.c == 0 || low >= 2;
  return line("f_1..f_c lie in the square of the maximal ideal", ok,
              f.c == 0 ? "no quotient generators" : "lowest generator degree " + str(low));
}

HypothesisLine unramified() {
  return model("S is unramified", "S = k[x_1..x_n] over a field");
}

HypothesisLine admissible() {
  return model("R is admissible", "quotient of a polynomial ring over a field by a regular sequence");
}

HypothesisLine nonzero(Facts& f, Which w) {
  const std::string t = std::string(label(w)) + " is nonzero";
  return guard(t, [&] { return line(t, !f.module(w).is_zero()); });
}

HypothesisLine serre(Facts& f, Which w, int k) {
  const std::string t = std::string(label(w)) + " satisfies (S_" + str(k) + ")";
  if (k <= 0) return line(t, true, "vacuous for index <= 0");
  return guard(t, [&] {
    const auto& rep = f.serre(w, k);
    if (rep.holds) return line(t, true, "Ext^j_S(" + std::string(label(w)) + ",S) supports have the required codimension");
    return line(t, false,
                "Ext^" + str(rep.failing_index) + "_S has support of dimension " + rep.support_dimension.to_string());
  });
}

HypothesisLine free_on(Facts& f, Which w, int k) {
  const std::string t = std::string(label(w)) + " is free on X^" + str(k);
  if (k < 0) return line(t, true, "vacuous for negative index");
  return guard(t, [&] {
    ExtInt codim = f.nonfree(w);
    return line(t, codim > ExtInt(k), "non-free locus codim = " + codim.to_string());
  });
}

HypothesisLine free_constant_rank_x1(Facts& f, Which w) {
  const std::string t = std::string(label(w)) + " is free of constant rank on X^1";
  return guard(t, [&] {
    ExtInt codim = f.nonfree(w);
    bool cr = f.constant_rank(w);
    return line(t, cr && codim > ExtInt(1),
                std::string(cr ? "constant rank" : "rank not constant") + ", non-free locus codim = " + codim.to_string());
  });
}

HypothesisLine mcm(Facts& f, Which w) {
  const std::string t = std::string(label(w)) + " is maximal Cohen-Macaulay";
  return guard(t, [&] {
    if (f.module(w).is_zero()) return line(t, false, "zero module");
    ExtInt dp = f.depth(w);
    return line(t, dp == ExtInt(f.d), "depth " + dp.to_string() + ", dim R = " + str(f.d));
  });
}

HypothesisLine cm(Facts& f, Which w) {
  const std::string t = std::string(label(w)) + " is Cohen-Macaulay";
  return guard(t, [&] {
    if (f.module(w).is_zero()) return line(t, false, "zero module");
    ExtInt dp = f.depth(w);
    ExtInt dm = f.dim(w);
    return line(t, dp == dm, "depth " + dp.to_string() + ", dim " + dm.to_string());
  });
}

HypothesisLine finite_length(Facts& f, Which w) {
  const std::string t = std::string(label(w)) + " has finite length";
  return guard(t, [&] {
    ExtInt dm = f.dim(w);
    return line(t, dm <= ExtInt(0), "dim " + dm.to_string());
  });
}

HypothesisLine torsion_free(Facts& f, Which w) {
  const std::string t = std::string(label(w)) + " is torsion-free";
  return guard(t, [&] {
    const auto& b = f.bidual(w);
    return line(t, b.torsion_free, b.kernel_zero ? "injective into the bidual" : "torsion " + b.kernel.to_string());
  });
}

HypothesisLine reflexive(Facts& f, Which w) {
  const std::string t = std::string(label(w)) + " is reflexive";
  return guard(t, [&] {
    const auto& b = f.bidual(w);
    return line(t, b.reflexive, b.reflexive ? "isomorphic to the bidual"
                                            : (b.kernel_zero ? "cokernel " + b.cokernel.to_string() : "not torsion-free"));
  });
}

HypothesisLine constant_rank(Facts& f, Which w) {
  const std::string t = std::string(label(w)) + " has constant rank";
  return guard(t, [&] { return line(t, f.constant_rank(w), "ranks at the minimal primes"); });
}

HypothesisLine one_constant_rank(Facts& f) {
  const std::string t = "M or N has constant rank";
  return guard(t, [&] {
    bool m = f.constant_rank(Which::m);
    bool n = m || f.constant_rank(Which::n);
    return line(t, n, m ? "M has constant rank" : (n ? "N has constant rank" : "neither has constant rank"));
  });
}

std::string tor_range(int lo, int hi) {
  if (lo == hi) return "Tor_" + str(lo);
  return "Tor_" + str(lo) + ".." + "Tor_" + str(hi);
}

// Tor_n = ... = Tor_{n+len-1} = 0.
HypothesisLine tor_block(Facts& f, int n, int len) {
  if (len <= 0) return line("no Tor vanishing required", true, "block length " + str(len));
  const int hi = n + len - 1;
  const std::string t = tor_range(n, hi) + "(M,N) vanish";
  return guard(t, [&] {
    if (n < 0) return line(t, false, "index " + str(n) + " is negative");
    for (int i = n; i <= std::min(hi, f.bound()); ++i) {
      if (!f.tor_zero(i)) return line(t, false, "Tor_" + str(i) + " is nonzero");
    }
    if (hi > f.bound()) return undetermined(t, "window ends at " + str(f.bound()));
    return line(t, true, "computed");
  });
}

HypothesisLine tor_all_vanish(Facts& f) {
  const std::string t = "Tor_i(M,N) = 0 for all i >= 1";
  return guard(t, [&] {
    const auto& ev = f.vanishing();
    if (!ev.window_vanishes) return line(t, false, ev.detail);
    if (!ev.all_vanish) return undetermined(t, ev.detail);
    return line(t, true, std::string(evidence_tier_name(ev.tier)) + ": " + ev.detail);
  });
}

// Tor_i(M,N)_q = 0 for all i >= 1 and q in X^v.
HypothesisLine tor_local(Facts& f, int v) {
  const std::string t = "Tor_i(M,N)_q = 0 for i >= 1 and q in X^" + str(v);
  return guard(t, [&] {
    ExtInt codim = f.nonfree(Which::m);
    if (codim > ExtInt(v)) return line(t, true, "M is free on X^" + str(v));
    for (int i = 1; i <= f.bound(); ++i) {
      ExtInt dm = f.tor().at(i).dim;
      if (!dm.is_neg_inf() && f.d - dm.value() <= v) {
        return line(t, false, "Supp Tor_" + str(i) + " has codimension " + str(f.d - dm.value()));
      }
    }
    return line(t, true, "codim Supp Tor_i >= " + str(v + 1) + " for 1 <= i <= " + str(f.bound()), Basis::surrogate);
  });
}

std::string cx_text(const ComplexityEstimate& e) {
  std::string s = str(e.value);
  if (e.conflict) s += " (clamped)";
  return s;
}

// r = min or max of the complexity estimates. Returns the line and r.
std::pair<HypothesisLine, int> cx_line(Facts& f, bool take_max) {
  const std::string name = take_max ? "max" : "min";
  std::string t = "r = " + name + "{cx M, cx N}";
  try {
    const auto& a = f.cx(Which::m);
    const auto& b = f.cx(Which::n);
    int r = take_max ? std::max(a.value, b.value) : std::min(a.value, b.value);
    t += " = " + str(r);
    HypothesisLine l{t, HypothesisStatus::satisfied, "cx M ~ " + cx_text(a) + ", cx N ~ " + cx_text(b), Basis::estimate};
    if (a.conflict || b.conflict) l.status = HypothesisStatus::undetermined;
    return {l, r};
  } catch (const Error& e) {
    return {undetermined(t, e.what(), Basis::estimate), 0};
  }
}

// b = max{depth M, depth N}; d - b + 1.
int low_index(Facts& f) {
  ExtInt a = f.depth(Which::m);
  ExtInt b = f.depth(Which::n);
  ExtInt mx = std::max(a, b);
  if (!mx.is_finite()) return 1;
  return f.d - mx.value() + 1;
}

int pick_index(Facts& f, const TheoremInstance& inst, int start, int len, bool even = false) {
  if (inst.index) return *inst.index;
  start = std::max(start, 1);
  for (int n = start; n + std::max(len, 1) - 1 <= f.bound(); ++n) {
    if (even && n % 2) continue;
    bool ok = true;
    for (int i = n; i < n + len; ++i) ok = ok && f.tor_zero(i);
    if (ok) return n;
  }
  return even && start % 2 ? start + 1 : start;
}

struct Conclusion {
  bool holds = false;
  std::string text;
  std::string evidence;
  std::string tier;
};

std::string tier_from(Facts& f, int n) {
  auto pd = f.tor().resolution.projective_dimension();
  if (pd && *pd <= f.bound()) return evidence_tier_name(EvidenceTier::pd_finite);
  const auto& p = f.tor().periodicity;
  if (p.periodic && p.onset <= n && p.onset + p.period <= f.bound()) {
    return evidence_tier_name(EvidenceTier::window_periodicity);
  }
  return evidence_tier_name(EvidenceTier::window_only);
}

Conclusion all_vanish(Facts& f) {
  Conclusion c{false, "Tor_i(M,N) = 0 for all i >= 1", "", ""};
  const auto& ev = f.vanishing();
  c.holds = ev.window_vanishes;
  c.evidence = ev.detail;
  c.tier = ev.window_vanishes ? evidence_tier_name(ev.tier) : "";
  return c;
}

Conclusion vanish_from(Facts& f, int n) {
  Conclusion c{true, "Tor_i(M,N) = 0 for all i >= " + str(n), "", ""};
  for (int i = std::max(n, 0); i <= f.bound(); ++i) {
    if (!f.tor_zero(i)) {
      c.holds = false;
      c.evidence = "Tor_" + str(i) + " is nonzero";
      return c;
    }
  }
  c.evidence = "Tor_" + str(n) + ".." + "Tor_" + str(f.bound()) + " vanish";
  c.tier = tier_from(f, n);
  return c;
}

// Tor_i != 0 exactly for even i in [lo, B].
Conclusion even_pattern(Facts& f, int lo) {
  Conclusion c{true, "Tor_i(M,N) != 0 iff i is even, for " + str(lo) + " <= i <= " + str(f.bound()), "",
               evidence_tier_name(EvidenceTier::window_only)};
  std::string zeros, nonzeros;
  for (int i = lo; i <= f.bound(); ++i) {
    bool z = f.tor_zero(i);
    if (z == (i % 2 == 0)) {
      c.holds = false;
      c.evidence = "Tor_" + str(i) + (z ? " vanishes" : " is nonzero");
      c.tier.clear();
      return c;
    }
  }
  c.evidence = "odd indices vanish, even indices nonzero through " + str(f.bound());
  return c;
}

Conclusion even_vanish_then_all(Facts& f) {
  Conclusion c{true, "Tor_i(M,N) = 0 for even i >= 2, and one odd vanishing Tor forces all to vanish", "",
               evidence_tier_name(EvidenceTier::window_only)};
  for (int i = 2; i <= f.bound(); i += 2) {
    if (!f.tor_zero(i)) {
      c.holds = false;
      c.evidence = "Tor_" + str(i) + " is nonzero";
      c.tier.clear();
      return c;
    }
  }
  int odd = 0;
  for (int j = 1; j <= f.bound() && !odd; j += 2) {
    if (f.tor_zero(j)) odd = j;
  }
  if (!odd) {
    c.evidence = "even Tor vanish through " + str(f.bound()) + "; no odd Tor vanishes in the window";
    return c;
  }
  Conclusion all = all_vanish(f);
  c.holds = all.holds;
  c.evidence = "Tor_" + str(odd) + " = 0; " + all.evidence;
  if (all.holds) c.tier = all.tier;
  return c;
}

Conclusion depth_formula(Facts& f) {
  Conclusion c{false, "depth M + depth N = depth R + depth(M⊗N)", "", ""};
  ExtInt a = f.depth(Which::m), b = f.depth(Which::n), t = f.depth(Which::tensor);
  ExtInt lhs = ext_add(a, b), rhs = ext_add(ExtInt(f.d), t);
  c.holds = lhs == rhs;
  c.evidence = a.to_string() + " + " + b.to_string() + " = " + str(f.d) + " + " + t.to_string() +
               (c.holds ? "" : " fails");
  return c;
}

Conclusion module_free(Facts& f) {
  Conclusion c{false, "M is free", "", ""};
  c.holds = f.module(Which::m).is_free();
  c.evidence = c.holds ? "minimal presentation has no relations"
                       : str(static_cast<int>(f.module(Which::m).minimal().relations().cols())) + " minimal relations";
  return c;
}

struct Plan {
  std::vector<HypothesisLine> lines;
  std::function<Conclusion()> conclude;
};

using Builder = std::function<Plan(Facts&, const TheoremInstance&)>;

struct Entry {
  std::string statement;
  bool single = false;  // statement about one module; N is M (or M* when dual_n)
  bool dual_n = false;
  Builder build;
};

Plan thm_2_1(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(line("R is regular", f.c == 0, "codim " + str(f.c)));
  int n = pick_index(f, inst, 1, 1);
  p.lines.push_back(tor_block(f, n, 1));
  p.conclude = [&f, n] { return vanish_from(f, n); };
  return p;
}

Plan thm_2_2(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(ci_line(f));
  int n = pick_index(f, inst, 1, f.c + 1);
  p.lines.push_back(line("n = " + str(n) + " >= 1", n >= 1));
  p.lines.push_back(tor_block(f, n, f.c + 1));
  p.conclude = [&f, n] { return vanish_from(f, n); };
  return p;
}

Plan thm_2_3(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(f_in_n2(f));
  p.lines.push_back(line("c >= 1", f.c >= 1, "c = " + str(f.c)));
  p.lines.push_back(finite_length(f, Which::tensor));
  p.lines.push_back(guard("dim M + dim N < d + c", [&] {
    ExtInt s = ext_add(f.dim(Which::m), f.dim(Which::n));
    return line("dim M + dim N < d + c", s < ExtInt(f.d + f.c),
                "dim M + dim N = " + s.to_string() + ", d + c = " + str(f.d + f.c));
  }));
  int n = pick_index(f, inst, 1, f.c);
  p.lines.push_back(line("n = " + str(n) + " >= 1", n >= 1));
  p.lines.push_back(tor_block(f, n, f.c));
  if (n > f.d) {
    p.lines.push_back(line("n > d or S is unramified", true, "n = " + str(n) + " > d = " + str(f.d)));
  } else {
    p.lines.push_back(model("n > d or S is unramified", "S = k[x_1..x_n] over a field"));
  }
  p.conclude = [&f, n] { return vanish_from(f, n); };
  return p;
}

Plan thm_2_4(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(nonzero(f, Which::m));
  p.lines.push_back(nonzero(f, Which::n));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  int low = low_index(f);
  int n = pick_index(f, inst, low, r + 1);
  p.lines.push_back(line("n = " + str(n) + " >= d - b + 1 = " + str(low), n >= low));
  p.lines.push_back(tor_block(f, n, r + 1));
  p.conclude = [&f, low] { return vanish_from(f, low); };
  return p;
}

Plan thm_2_6(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(nonzero(f, Which::m));
  p.lines.push_back(nonzero(f, Which::n));
  p.lines.push_back(guard("cx M = 1 or cx N = 1", [&] {
    const auto& a = f.cx(Which::m);
    const auto& b = f.cx(Which::n);
    HypothesisLine l = line("cx M = 1 or cx N = 1", a.value == 1 || b.value == 1,
                            "cx M ~ " + cx_text(a) + ", cx N ~ " + cx_text(b), Basis::estimate);
    if (a.conflict || b.conflict) l.status = HypothesisStatus::undetermined;
    return l;
  }));
  p.conclude = [&f] {
    int low = low_index(f);
    Conclusion c{true, "Tor_i(M,N) ≅ Tor_{i+2}(M,N) for i >= " + str(low), "",
                 evidence_tier_name(EvidenceTier::window_only)};
    for (int i = std::max(low, 0); i + 2 <= f.bound(); ++i) {
      const auto& a = f.tor().at(i);
      const auto& b = f.tor().at(i + 2);
      if (a.vanishes != b.vanishes || a.hilbert.values != b.hilbert.values || a.betti0 != b.betti0) {
        c.holds = false;
        c.tier.clear();
        c.evidence = "Tor_" + str(i) + " and Tor_" + str(i + 2) + " differ in Hilbert data";
        return c;
      }
    }
    c.evidence = "Hilbert data and generator counts agree at distance two through " + str(f.bound());
    return c;
  };
  return p;
}

Plan thm_2_7(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(tor_all_vanish(f));
  p.conclude = [&f] {
    Conclusion c = depth_formula(f);
    c.tier = evidence_tier_name(f.vanishing().tier);
    return c;
  };
  return p;
}

Plan thm_2_8(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(admissible());
  p.lines.push_back(ci_line(f));
  p.lines.push_back(line("c >= 1", f.c >= 1, "c = " + str(f.c)));
  p.lines.push_back(tor_block(f, 1, f.c));
  p.lines.push_back(guard("depth N > 0", [&] {
    ExtInt dp = f.depth(Which::n);
    return line("depth N > 0", dp > ExtInt(0), "depth " + dp.to_string());
  }));
  p.lines.push_back(guard("depth(M⊗N) > 0", [&] {
    ExtInt dp = f.depth(Which::tensor);
    return line("depth(M⊗N) > 0", dp > ExtInt(0), "depth " + dp.to_string());
  }));
  p.lines.push_back(guard("Tor_i(M,N) has finite length for i >> 0", [&] {
    const std::string t = "Tor_i(M,N) has finite length for i >> 0";
    const int lo = std::max(f.c + 1, (f.bound() + 1) / 2);
    for (int i = lo; i <= f.bound(); ++i) {
      if (!f.tor().at(i).finite_length) return undetermined(t, "Tor_" + str(i) + " has dimension " +
                                                                    f.tor().at(i).dim.to_string());
    }
    return line(t, true, "finite length for " + str(lo) + " <= i <= " + str(f.bound()), Basis::window);
  }));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_3_3(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(admissible());
  p.lines.push_back(ci_line(f));
  p.lines.push_back(free_on(f, Which::m, f.c));
  p.lines.push_back(serre(f, Which::m, f.c));
  p.lines.push_back(serre(f, Which::n, f.c));
  p.lines.push_back(serre(f, Which::tensor, f.c + 1));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_3_4(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(f_in_n2(f));
  p.lines.push_back(unramified());
  p.lines.push_back(serre(f, Which::m, f.c - 1));
  p.lines.push_back(serre(f, Which::n, f.c - 1));
  p.lines.push_back(serre(f, Which::tensor, f.c));
  if (f.c >= 2) p.lines.push_back(tor_local(f, f.c - 1));
  p.conclude = [&f] {
    Conclusion v = all_vanish(f);
    Conclusion c{true, "cx M = cx N = c, or Tor_i(M,N) = 0 for all i >= 1", "", ""};
    if (v.holds) {
      c.evidence = v.evidence;
      c.tier = v.tier;
      return c;
    }
    const auto& a = f.cx(Which::m);
    const auto& b = f.cx(Which::n);
    c.holds = a.value == f.c && b.value == f.c;
    c.evidence = v.evidence + "; cx M ~ " + cx_text(a) + ", cx N ~ " + cx_text(b);
    if (c.holds) c.tier = "estimate";
    return c;
  };
  return p;
}

Plan thm_3_5(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(f_in_n2(f));
  p.lines.push_back(unramified());
  p.lines.push_back(serre(f, Which::m, f.c - 1));
  p.lines.push_back(free_on(f, Which::m, f.c - 1));
  p.lines.push_back(serre(f, Which::tensor, f.c));
  p.conclude = [&f] {
    Conclusion c{true, "cx M = c, or M has finite projective dimension", "", ""};
    if (auto pd = f.pd(Which::m)) {
      c.evidence = "pd M = " + str(*pd);
      c.tier = evidence_tier_name(EvidenceTier::pd_finite);
      return c;
    }
    const auto& a = f.cx(Which::m);
    c.holds = a.value == f.c;
    c.evidence = "cx M ~ " + cx_text(a);
    if (c.holds) c.tier = "estimate";
    return c;
  };
  return p;
}

Plan thm_3_7(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(nonzero(f, Which::m));
  p.lines.push_back(nonzero(f, Which::n));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  p.lines.push_back(line("r >= 1", r >= 1, "r = " + str(r), Basis::estimate));
  int low = low_index(f);
  int n = pick_index(f, inst, low, r);
  p.lines.push_back(line("n = " + str(n) + " >= d - b + 1 = " + str(low), n >= low));
  p.lines.push_back(tor_block(f, n, r));
  p.conclude = [&f, n, r] {
    const int first = r % 2 ? n : n + 1;
    Conclusion c{true, "Tor_{" + str(first) + "+2i}(M,N) = 0 for all i >= 0", "",
                 evidence_tier_name(EvidenceTier::window_only)};
    for (int i = first; i <= f.bound(); i += 2) {
      if (!f.tor_zero(i)) {
        c.holds = false;
        c.tier.clear();
        c.evidence = "Tor_" + str(i) + " is nonzero";
        return c;
      }
    }
    c.evidence = "checked through " + str(f.bound());
    return c;
  };
  return p;
}

Plan thm_3_8(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(nonzero(f, Which::m));
  p.lines.push_back(nonzero(f, Which::n));
  p.lines.push_back(mcm(f, Which::m));
  p.lines.push_back(guard("N has finite projective dimension", [&] {
    const std::string t = "N has finite projective dimension";
    if (auto pd = f.pd(Which::n)) return line(t, true, "pd N = " + str(*pd));
    return undetermined(t, "resolution did not terminate within the computed steps");
  }));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_3_9_1(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(mcm(f, Which::m));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  p.lines.push_back(free_on(f, Which::m, r));
  p.lines.push_back(serre(f, Which::n, r));
  p.lines.push_back(serre(f, Which::tensor, r + 1));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_3_9_2(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(mcm(f, Which::m));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  p.lines.push_back(free_on(f, Which::m, r - 1));
  p.lines.push_back(serre(f, Which::n, r - 1));
  p.lines.push_back(serre(f, Which::tensor, r));
  p.conclude = [&f] { return even_vanish_then_all(f); };
  return p;
}

Plan thm_3_12_1(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(mcm(f, Which::m));
  p.lines.push_back(mcm(f, Which::n));
  p.lines.push_back(mcm(f, Which::tensor));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  p.lines.push_back(free_on(f, Which::m, r));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_3_12_2(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(mcm(f, Which::m));
  p.lines.push_back(mcm(f, Which::n));
  p.lines.push_back(mcm(f, Which::tensor));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  p.lines.push_back(free_on(f, Which::m, r - 1));
  p.conclude = [&f] { return even_vanish_then_all(f); };
  return p;
}

Plan thm_3_15(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(f_in_n2(f));
  p.lines.push_back(unramified());
  int n = 0;
  if (inst.index) {
    n = *inst.index;
  } else {
    while (n + 1 <= f.bound() && f.tor_zero(n + 1)) ++n;
    if (n == f.c && n > 0) --n;
  }
  p.lines.push_back(line("n = " + str(n) + ", and n != c when n > 0", n <= 0 || n != f.c, "c = " + str(f.c)));
  p.lines.push_back(serre(f, Which::m, f.c - n));
  p.lines.push_back(serre(f, Which::n, f.c - n));
  p.lines.push_back(free_on(f, Which::m, f.c - n));
  p.lines.push_back(serre(f, Which::tensor, f.c - n + 1));
  p.lines.push_back(tor_block(f, 1, n));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_3_16(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(f_in_n2(f));
  p.lines.push_back(unramified());
  p.lines.push_back(line("c != 1", f.c != 1, "c = " + str(f.c)));
  p.lines.push_back(serre(f, Which::m, f.c - 1));
  p.lines.push_back(serre(f, Which::n, f.c - 1));
  p.lines.push_back(free_on(f, Which::m, f.c - 1));
  p.lines.push_back(serre(f, Which::tensor, f.c));
  p.conclude = [&f] {
    Conclusion v = all_vanish(f);
    Conclusion c{true, "(a) cx M = cx N = c and Tor_1(M,N) != 0, or (b) Tor_i(M,N) = 0 for all i >= 1", "", ""};
    if (v.holds) {
      c.evidence = "(b): " + v.evidence;
      c.tier = v.tier;
      return c;
    }
    const auto& a = f.cx(Which::m);
    const auto& b = f.cx(Which::n);
    c.holds = a.value == f.c && b.value == f.c && !f.tor_zero(1);
    c.evidence = "cx M ~ " + cx_text(a) + ", cx N ~ " + cx_text(b) + ", Tor_1 " + (f.tor_zero(1) ? "= 0" : "!= 0");
    if (c.holds) c.tier = "estimate";
    return c;
  };
  return p;
}

Plan thm_4_1(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(line("R is a hypersurface", f.c == 1, "c = " + str(f.c)));
  p.lines.push_back(f_in_n2(f));
  p.lines.push_back(unramified());
  p.lines.push_back(cm(f, Which::m));
  p.lines.push_back(cm(f, Which::n));
  p.lines.push_back(cm(f, Which::tensor));
  p.lines.push_back(guard("dim M + dim N <= d", [&] {
    ExtInt s = ext_add(f.dim(Which::m), f.dim(Which::n));
    return line("dim M + dim N <= d", s <= ExtInt(f.d), "dim M + dim N = " + s.to_string() + ", d = " + str(f.d));
  }));
  p.lines.push_back(tor_block(f, 1, 1));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_4_3(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(tor_all_vanish(f));
  p.lines.push_back(guard("M or M⊗M is Cohen-Macaulay", [&] {
    const std::string t = "M or M⊗M is Cohen-Macaulay";
    HypothesisLine a = cm(f, Which::m);
    if (a.ok()) return line(t, true, "M: " + a.evidence);
    HypothesisLine b = cm(f, Which::tensor);
    return line(t, b.ok(), "M: " + a.evidence + "; M⊗M: " + b.evidence);
  }));
  p.conclude = [&f] { return module_free(f); };
  return p;
}

Plan thm_4_6(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(nonzero(f, Which::m));
  p.lines.push_back(nonzero(f, Which::n));
  p.lines.push_back(guard("M has finite projective dimension over S", [&] {
    ExtInt pd = module_profile(f.module(Which::m)).pd_ambient;
    return line("M has finite projective dimension over S", pd.is_finite(), "pd_S M = " + pd.to_string());
  }));
  p.lines.push_back(finite_length(f, Which::tensor));
  const int ds = f.ring()->ambient_dimension();
  p.lines.push_back(guard("depth M + depth N >= depth S", [&f, ds] {
    ExtInt s = ext_add(f.depth(Which::m), f.depth(Which::n));
    return line("depth M + depth N >= depth S", s >= ExtInt(ds),
                "depth M + depth N = " + s.to_string() + ", depth S = " + str(ds));
  }));
  p.conclude = [&f, ds] {
    ExtInt s = ext_add(f.depth(Which::m), f.depth(Which::n));
    Conclusion pattern = even_pattern(f, 1);
    Conclusion c{s == ExtInt(ds) && pattern.holds,
                 "depth M + depth N = depth S, and Tor_i(M,N) != 0 iff i is even, for i >= 1", "", ""};
    c.evidence = "depth sum " + s.to_string() + " vs " + str(ds) + "; " + pattern.evidence;
    if (c.holds) c.tier = pattern.tier;
    return c;
  };
  return p;
}

Plan thm_4_7(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(line("R is not a field", f.d >= 1, "dim R = " + str(f.d)));
  p.lines.push_back(line("codim R = dim R", f.c == f.d, "codim " + str(f.c) + ", dim " + str(f.d)));
  p.lines.push_back(mcm(f, Which::m));
  p.lines.push_back(mcm(f, Which::n));
  p.lines.push_back(finite_length(f, Which::tensor));
  p.conclude = [&f] { return even_pattern(f, 0); };
  return p;
}

Plan thm_4_8(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(f_in_n2(f));
  p.lines.push_back(unramified());
  p.lines.push_back(line("c >= 1", f.c >= 1, "c = " + str(f.c)));
  p.lines.push_back(cm(f, Which::m));
  p.lines.push_back(cm(f, Which::n));
  p.lines.push_back(finite_length(f, Which::tensor));
  int n = pick_index(f, inst, 1, f.c, f.c == 1);
  p.lines.push_back(line("n = " + str(n) + " >= 1", n >= 1));
  p.lines.push_back(tor_block(f, n, f.c));
  if (f.c == 1) p.lines.push_back(line("n is even (c = 1)", n % 2 == 0, "n = " + str(n)));
  p.conclude = [&f, n] { return vanish_from(f, n); };
  return p;
}

Plan thm_4_9(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(f_in_n2(f));
  p.lines.push_back(unramified());
  p.lines.push_back(line("c >= 1", f.c >= 1, "c = " + str(f.c)));
  p.lines.push_back(nonzero(f, Which::m));
  p.lines.push_back(nonzero(f, Which::n));
  p.lines.push_back(tor_block(f, 1, f.c));
  p.lines.push_back(cm(f, Which::m));
  p.lines.push_back(cm(f, Which::n));
  p.lines.push_back(cm(f, Which::tensor));
  if (f.c == 1) {
    p.lines.push_back(guard("dim M + dim N <= d", [&] {
      ExtInt s = ext_add(f.dim(Which::m), f.dim(Which::n));
      return line("dim M + dim N <= d", s <= ExtInt(f.d), "dim M + dim N = " + s.to_string());
    }));
  }
  p.conclude = [&f] {
    Conclusion v = all_vanish(f);
    Conclusion df = depth_formula(f);
    Conclusion c{v.holds && df.holds, "Tor_i(M,N) = 0 for all i >= 1 and the depth formula holds",
                 v.evidence + "; " + df.evidence, v.holds ? v.tier : ""};
    return c;
  };
  return p;
}

Plan thm_4_11(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(nonzero(f, Which::m));
  p.lines.push_back(nonzero(f, Which::n));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  int low = low_index(f);
  int n = pick_index(f, inst, low, r);
  const int w = inst.w;
  p.lines.push_back(line("n = " + str(n) + " >= d - b + 1 = " + str(low), n >= low));
  p.lines.push_back(line("w = " + str(w) + " >= 0", w >= 0));
  p.lines.push_back(tor_block(f, n, r));
  const std::string t = "Tor_{n+2w+i}(M,N) has finite length for i = 1.." + str(r);
  p.lines.push_back(guard(t, [&f, n, w, r, t] {
    for (int i = 1; i <= r; ++i) {
      int k = n + 2 * w + i;
      if (k > f.bound()) return undetermined(t, "Tor_" + str(k) + " is outside the window");
      if (!f.tor().at(k).finite_length) {
        return line(t, false, "Tor_" + str(k) + " has dimension " + f.tor().at(k).dim.to_string());
      }
    }
    return line(t, true, "computed");
  }));
  p.conclude = [&f, n, low] {
    Conclusion v = vanish_from(f, low);
    Conclusion c{true, "Tor_i(M,N) = 0 for all i >= " + str(low) + ", or depth Tor_" + str(n - 1) + "(M,N) = 0", "",
                 ""};
    if (v.holds) {
      c.evidence = v.evidence;
      c.tier = v.tier;
      return c;
    }
    ExtInt dp = f.tor_depth(n - 1);
    c.holds = dp == ExtInt(0);
    c.evidence = v.evidence + "; depth Tor_" + str(n - 1) + " = " + dp.to_string();
    return c;
  };
  return p;
}

Plan thm_4_12(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(mcm(f, Which::m));
  p.lines.push_back(guard("depth(M⊗N) > 0", [&] {
    ExtInt dp = f.depth(Which::tensor);
    return line("depth(M⊗N) > 0", dp > ExtInt(0), "depth " + dp.to_string());
  }));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  p.lines.push_back(tor_block(f, 1, r));
  p.lines.push_back(guard("Tor_i(M,N) has finite length for all i >= 1", [&] {
    const std::string t = "Tor_i(M,N) has finite length for all i >= 1";
    for (int i = 1; i <= f.bound(); ++i) {
      if (!f.tor().at(i).finite_length) {
        return line(t, false, "Tor_" + str(i) + " has dimension " + f.tor().at(i).dim.to_string());
      }
    }
    return line(t, true, "finite length through " + str(f.bound()), Basis::window);
  }));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_4_13(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  auto [cl, r] = cx_line(f, false);
  p.lines.push_back(cl);
  p.lines.push_back(tor_block(f, 1, r - 1));
  p.lines.push_back(mcm(f, Which::m));
  p.lines.push_back(reflexive(f, Which::tensor));
  p.lines.push_back(torsion_free(f, Which::n));
  p.lines.push_back(tor_local(f, 1));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_4_14(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(line("dim R = 1", f.d == 1, "dim R = " + str(f.d)));
  p.lines.push_back(one_constant_rank(f));
  auto [cl, r] = cx_line(f, true);
  p.lines.push_back(cl);
  p.lines.push_back(tor_block(f, 1, r - 1));
  p.lines.push_back(torsion_free(f, Which::m));
  p.lines.push_back(torsion_free(f, Which::tensor));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_4_15(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(one_constant_rank(f));
  auto [cl, r] = cx_line(f, true);
  p.lines.push_back(cl);
  p.lines.push_back(tor_block(f, 1, r - 1));
  p.lines.push_back(mcm(f, Which::m));
  p.lines.push_back(reflexive(f, Which::tensor));
  p.lines.push_back(torsion_free(f, Which::n));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

// N is M* for this statement.
Plan thm_4_17(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(torsion_free(f, Which::m));
  p.lines.push_back(reflexive(f, Which::tensor));
  const std::string t = "for q in X^1: an even and an odd Tor_i(M,M*)_q vanish, or M_q has constant rank and cx <= 1";
  p.lines.push_back(guard(t, [&f, t] {
    int even = 0, odd = 0;
    for (int i = 1; i <= f.bound(); ++i) {
      if (!f.tor_zero(i)) continue;
      if (i % 2 == 0 && !even) even = i;
      if (i % 2 == 1 && !odd) odd = i;
    }
    if (even && odd) {
      return line(t, true, "Tor_" + str(even) + " = Tor_" + str(odd) + " = 0 globally", Basis::surrogate);
    }
    const auto& a = f.cx(Which::m);
    if (a.value <= 1 && !a.conflict && f.constant_rank(Which::m)) {
      return line(t, true, "M has constant rank and cx M ~ " + cx_text(a), Basis::surrogate);
    }
    return undetermined(t, "neither global sufficient condition holds", Basis::surrogate);
  }));
  p.conclude = [&f] { return module_free(f); };
  return p;
}

Plan thm_4_20(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(one_constant_rank(f));
  p.lines.push_back(tor_block(f, 1, f.c - 1));
  p.lines.push_back(reflexive(f, Which::tensor));
  if (f.c >= 2) {
    p.lines.push_back(torsion_free(f, Which::m));
    p.lines.push_back(torsion_free(f, Which::n));
  }
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

Plan thm_4_21(Facts& f, const TheoremInstance& inst) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(line("dim R = 2", f.d == 2, "dim R = " + str(f.d)));
  p.lines.push_back(line("c >= 1", f.c >= 1, "c = " + str(f.c)));
  int n = pick_index(f, inst, 1, f.c);
  p.lines.push_back(line("n = " + str(n) + " >= 1", n >= 1));
  p.lines.push_back(tor_block(f, n, f.c));
  p.lines.push_back(torsion_free(f, Which::m));
  p.lines.push_back(torsion_free(f, Which::n));
  p.lines.push_back(constant_rank(f, Which::n));
  p.lines.push_back(free_constant_rank_x1(f, Which::m));
  p.conclude = [&f, n] { return vanish_from(f, n); };
  return p;
}

Plan thm_4_22(Facts& f, const TheoremInstance&) {
  Plan p;
  p.lines.push_back(ci_line(f));
  p.lines.push_back(tor_block(f, 1, f.c - 2));
  p.lines.push_back(serre(f, Which::tensor, 3));
  p.lines.push_back(reflexive(f, Which::m));
  p.lines.push_back(reflexive(f, Which::n));
  p.lines.push_back(constant_rank(f, Which::n));
  p.lines.push_back(free_constant_rank_x1(f, Which::m));
  p.conclude = [&f] { return all_vanish(f); };
  return p;
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> table = {
      {"2.1", {"over a regular ring one vanishing Tor_n forces Tor_i = 0 for i >= n", false, false, thm_2_1}},
      {"2.2", {"c + 1 consecutive vanishing Tor force all later Tor to vanish", false, false, thm_2_2}},
      {"2.3", {"c consecutive vanishing Tor force rigidity under length and dimension bounds", false, false, thm_2_3}},
      {"2.4", {"r + 1 consecutive vanishing Tor past d - b force vanishing past d - b", false, false, thm_2_4}},
      {"2.6", {"complexity one gives Tor_i ≅ Tor_{i+2} past d - b", false, false, thm_2_6}},
      {"2.7", {"total Tor vanishing gives the depth formula", false, false, thm_2_7}},
      {"2.8", {"Tor_1..Tor_c = 0 with positive depths and eventual finite length give total vanishing", false, false,
               thm_2_8}},
      {"3.3", {"M free on X^c with (S_c), (S_c), (S_{c+1}) gives total vanishing", false, false, thm_3_3}},
      {"3.4", {"(S_{c-1}) modules with (S_c) tensor: maximal complexity or total vanishing", false, false, thm_3_4}},
      {"3.5", {"(S_{c-1}) M free on X^{c-1} with (S_c) M⊗M: cx M = c or pd M finite", true, false, thm_3_5}},
      {"3.7", {"r consecutive vanishing Tor force vanishing at every other index", false, false, thm_3_7}},
      {"3.8", {"maximal Cohen-Macaulay against finite projective dimension has no higher Tor", false, false, thm_3_8}},
      {"3.9(1)", {"M MCM free on X^r, N (S_r), M⊗N (S_{r+1}) give total vanishing", false, false, thm_3_9_1}},
      {"3.9(2)", {"M MCM free on X^{r-1}, N (S_{r-1}), M⊗N (S_r) give even vanishing", false, false, thm_3_9_2}},
      {"3.12(1)", {"M, N, M⊗N MCM with M free on X^r give total vanishing", false, false, thm_3_12_1}},
      {"3.12(2)", {"M, N, M⊗N MCM with M free on X^{r-1} give even vanishing", false, false, thm_3_12_2}},
      {"3.15", {"Tor_1..Tor_n = 0 with Serre conditions shifted by n give total vanishing", false, false, thm_3_15}},
      {"3.16", {"maximal complexity with Tor_1 != 0, or total vanishing", false, false, thm_3_16}},
      {"4.1", {"Cohen-Macaulay modules over a hypersurface with Tor_1 = 0 and small dimensions", false, false,
               thm_4_1}},
      {"4.3", {"self-Tor vanishing with M or M⊗M Cohen-Macaulay forces M free", true, false, thm_4_3}},
      {"4.6", {"finite length tensor with large depths: Tor nonzero exactly in even degrees", false, false, thm_4_6}},
      {"4.7", {"MCM modules with finite length tensor when codim = dim: Tor nonzero iff i even", false, false,
               thm_4_7}},
      {"4.8", {"Cohen-Macaulay modules with finite length tensor are c-rigid", false, false, thm_4_8}},
      {"4.9", {"Tor_1..Tor_c = 0 with M, N, M⊗N Cohen-Macaulay give vanishing and the depth formula", false, false,
               thm_4_9}},
      {"4.11", {"finite length ladder: total vanishing or depth Tor_{n-1} = 0", false, false, thm_4_11}},
      {"4.12", {"M MCM, depth(M⊗N) > 0, Tor_1..Tor_r = 0, all finite length: total vanishing", false, false,
                thm_4_12}},
      {"4.13", {"M MCM, M⊗N reflexive, N torsion-free, locally vanishing in codim 1: total vanishing", false, false,
                thm_4_13}},
      {"4.14", {"one-dimensional: Tor_1..Tor_{r-1} = 0 with torsion-free M and M⊗N", false, false, thm_4_14}},
      {"4.15", {"constant rank, M MCM, M⊗N reflexive, N torsion-free: total vanishing", false, false, thm_4_15}},
      {"4.17", {"torsion-free M with M⊗M* reflexive and local Tor conditions is free", true, true, thm_4_17}},
      {"4.20", {"constant rank, Tor_1..Tor_{c-1} = 0 and M⊗N reflexive: total vanishing", false, false, thm_4_20}},
      {"4.21", {"dimension two, c consecutive vanishing Tor: rigidity", false, false, thm_4_21}},
      {"4.22", {"Tor_1..Tor_{c-2} = 0, M⊗N (S_3), reflexive modules: total vanishing", false, false, thm_4_22}},
  };
  return table;
}

int default_bound(const Ring& r) { return std::max(8, 2 * static_cast<int>(r.codim()) + 4); }

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, e] : registry()) out.push_back(id);
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
      auto key = [](const std::string& s) {
        std::size_t dot = s.find('.');
        int major = std::stoi(s.substr(0, dot));
        std::size_t end = dot + 1;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        int minor = std::stoi(s.substr(dot + 1, end - dot - 1));
        return std::make_tuple(major, minor, s.substr(end));
      };
      return key(a) < key(b);
    });
    return out;
  }();
  return ids;
}

TheoremReport check_theorem(const std::string& id, const TheoremInstance& inst) {
  auto it = registry().find(id);
  if (it == registry().end()) fail(ErrorKind::unknown_id, "unknown theorem id " + id);
  const Entry& entry = it->second;
  auto start = std::chrono::steady_clock::now();
  Module n = inst.n ? *inst.n : inst.m;
  if (entry.single) n = entry.dual_n ? dual(inst.m) : inst.m;
  const int bound = inst.bound > 0 ? inst.bound : default_bound(*inst.m.ring());
  Facts facts(inst.m, n, bound);

  TheoremReport rep;
  rep.id = id;
  rep.statement = entry.statement;
  rep.instance = inst.description;
  rep.bound = bound;
  Plan plan = entry.build(facts, inst);
  rep.checklist = plan.lines;
  bool ok = true;
  for (const auto& l : rep.checklist) ok = ok && l.ok();
  if (ok) {
    Conclusion c = plan.conclude();
    rep.asserted = true;
    rep.verdict = c.holds ? Verdict::conclusion_holds : Verdict::conclusion_fails;
    rep.conclusion = c.text;
    rep.evidence = c.evidence;
    rep.tier = c.tier;
  } else {
    rep.verdict = Verdict::hypotheses_unmet;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Open-question search.

std::string SearchLog::to_string() const {
  std::ostringstream os;
  os << "question " << question << ": " << statement << "\n";
  os << "ring " << ring << ", seed " << seed << ", samples " << samples << ", Tor window 0.." << bound << "\n";
  os << "evaluated " << evaluated << ", skipped " << skipped << ", confirmations " << confirmations
     << ", candidates " << candidates << ", near-misses " << near_misses << "\n";
  for (const auto& f : findings) {
    os << "- #" << f.index << " " << f.kind << ": " << f.instance << "\n";
    print_lines(os, f.hypotheses);
    os << "  conclusion " << (f.conclusion_holds ? "holds" : "FAILS") << ": " << f.conclusion << "\n";
  }
  for (const auto& s : skip_reasons) os << "skipped: " << s << "\n";
  return os.str();
}

namespace {

struct QuestionPlan {
  std::vector<HypothesisLine> lines;
  bool conclusion_holds = false;
  std::string conclusion;
};

using QuestionFn = std::function<QuestionPlan(Facts&)>;

struct Question {
  std::string statement;
  bool self_dual = false;  // N is M*
  QuestionFn eval;
};

HypothesisLine domain_line(Facts& f) {
  const std::string t = "R is a domain";
  const auto& primes = f.ring()->minimal_primes();
  if (!primes) return undetermined(t, "minimal primes unknown", Basis::exact);
  bool ok = primes->size() == 1;
  if (ok) {
    for (const auto& g : primes->front().generators) ok = ok && f.ring()->reduce(g).is_zero();
  }
  return line(t, ok, str(static_cast<int>(primes->size())) + " minimal prime(s)");
}

QuestionPlan q_3_17(Facts& f) {
  QuestionPlan q;
  q.lines.push_back(ci_line(f));
  q.lines.push_back(line("R is a hypersurface", f.c == 1, "c = " + str(f.c)));
  q.lines.push_back(f_in_n2(f));
  q.lines.push_back(unramified());
  q.lines.push_back(free_on(f, Which::m, 0));
  q.lines.push_back(torsion_free(f, Which::tensor));
  q.lines.push_back(tor_block(f, 1, 1));
  Conclusion c = vanish_from(f, 1);
  q.conclusion = c.text + " (" + c.evidence + ")";
  q.conclusion_holds = c.holds;
  return q;
}

QuestionPlan q_4_10(Facts& f) {
  QuestionPlan q;
  q.lines.push_back(ci_line(f));
  q.lines.push_back(line("c >= 2", f.c >= 2, "c = " + str(f.c)));
  q.lines.push_back(finite_length(f, Which::tensor));
  // A gap: Tor_i = ... = Tor_{i+n-1} = 0 != Tor_{i+n} with i >= 1, n >= 2.
  int gap_start = 0, gap_len = 0;
  int run = 0;
  for (int i = 1; i <= f.bound(); ++i) {
    if (f.tor_zero(i)) {
      ++run;
    } else {
      if (run >= 2 && !gap_start) {
        gap_start = i - run;
        gap_len = run;
      }
      run = 0;
    }
  }
  q.conclusion_holds = gap_start == 0;
  q.conclusion = gap_start ? "gap Tor_" + str(gap_start) + ".." + "Tor_" + str(gap_start + gap_len - 1) +
                                 " = 0, Tor_" + str(gap_start + gap_len) + " != 0"
                           : "no vanishing gap of length >= 2 followed by a nonzero Tor in the window";
  return q;
}

QuestionPlan q_4_16(Facts& f) {
  QuestionPlan q;
  q.lines.push_back(line("dim R = 1", f.d == 1, "dim R = " + str(f.d)));
  q.lines.push_back(line("R is Gorenstein", f.ring()->certified(), "complete intersection"));
  q.lines.push_back(domain_line(f));
  q.lines.push_back(torsion_free(f, Which::m));
  q.lines.push_back(torsion_free(f, Which::tensor));
  Conclusion c = module_free(f);
  q.conclusion = c.text + " (" + c.evidence + ")";
  q.conclusion_holds = c.holds;
  return q;
}

QuestionPlan q_4_18(Facts& f) {
  QuestionPlan q;
  q.lines.push_back(ci_line(f));
  q.lines.push_back(line("dim R = 1", f.d == 1, "dim R = " + str(f.d)));
  q.lines.push_back(domain_line(f));
  q.lines.push_back(torsion_free(f, Which::m));
  q.lines.push_back(torsion_free(f, Which::tensor));
  q.lines.push_back(guard("Tor_i(M,M*) = 0 for some i >= 1", [&] {
    const std::string t = "Tor_i(M,M*) = 0 for some i >= 1";
    for (int i = 1; i <= f.bound(); ++i) {
      if (f.tor_zero(i)) return line(t, true, "Tor_" + str(i) + " = 0");
    }
    return undetermined(t, "no vanishing Tor through " + str(f.bound()));
  }));
  Conclusion c = module_free(f);
  q.conclusion = c.text + " (" + c.evidence + ")";
  q.conclusion_holds = c.holds;
  return q;
}

const std::map<std::string, Question>& questions() {
  static const std::map<std::string, Question> table = {
      {"3.17", {"hypersurface, M free on X^0, M⊗N torsion-free, Tor_1 = 0: do all Tor_i vanish?", false, q_3_17}},
      {"4.10", {"codim >= 2, M⊗N of finite length: is there a vanishing gap of length >= 2 before a nonzero Tor?",
                false, q_4_10}},
      {"4.16", {"one-dimensional Gorenstein domain, M and M⊗M* torsion-free: is M free?", true, q_4_16}},
      {"4.18", {"one-dimensional complete intersection domain, M and M⊗M* torsion-free, some Tor_i(M,M*) = 0: is M "
                "free?",
                true, q_4_18}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& question_ids() {
  static const std::vector<std::string> ids = {"3.17", "4.10", "4.16", "4.18"};
  return ids;
}

SearchLog counterexample_search(const SearchConfig& cfg) {
  auto it = questions().find(cfg.question);
  if (it == questions().end()) fail(ErrorKind::unknown_id, "unknown question id " + cfg.question);
  if (!cfg.ring) fail(ErrorKind::incompatible_operands, "search needs a ring");
  const Question& question = it->second;
  SearchLog log;
  log.question = cfg.question;
  log.statement = question.statement;
  log.ring = cfg.ring->describe();
  log.seed = cfg.seed;
  log.samples = cfg.samples;
  log.bound = cfg.bound;

  std::vector<std::pair<Module, std::optional<Module>>> instances;
  std::mt19937_64 rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    Module m = random_module(cfg.ring, rng, cfg.shape);
    std::optional<Module> n;
    if (!question.self_dual) n = random_module(cfg.ring, rng, cfg.shape);
    instances.emplace_back(m, n);
  }
  for (const auto& e : cfg.extra) instances.push_back(e);

  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const Module& m = instances[idx].first;
    try {
      Module n = question.self_dual ? dual(m) : (instances[idx].second ? *instances[idx].second : m);
      Facts facts(m, n, cfg.bound);
      QuestionPlan q = question.eval(facts);
      ++log.evaluated;
      int unmet = 0;
      for (const auto& l : q.lines) unmet += !l.ok();
      std::string kind;
      if (unmet == 0 && q.conclusion_holds) ++log.confirmations;
      if (unmet == 0 && !q.conclusion_holds) {
        kind = "candidate";
        ++log.candidates;
      } else if (unmet == 1 && !q.conclusion_holds) {
        kind = "near-miss";
        ++log.near_misses;
      }
      if (kind.empty()) continue;
      Finding f;
      f.index = idx;
      f.kind = kind;
      f.instance =
          "M = " + m.minimal().to_string() + (question.self_dual ? ", N = M*" : ", N = " + n.minimal().to_string());
      f.hypotheses = q.lines;
      f.conclusion = q.conclusion;
      f.conclusion_holds = q.conclusion_holds;
      log.findings.push_back(std::move(f));
    } catch (const Error& e) {
      ++log.skipped;
      log.skip_reasons.push_back("#" + std::to_string(idx) + " " + error_kind_name(e.kind()) + ": " + e.what());
    }
  }
  return log;
}

}  // namespace citor
