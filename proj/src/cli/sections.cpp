#include "sections.hpp"

#include <sstream>

#include "citor/errors.hpp"

namespace citor::detail {

Json ext_json(const ExtInt& v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

std::string join(const std::vector<long>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

namespace {

std::string seconds_text(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s;
  return os.str();
}

Json lines_json(const std::vector<HypothesisLine>& lines) {
  Json out = Json::array();
  for (const auto& l : lines) {
    out.push_back({{"text", l.text},
                   {"status", hypothesis_status_name(l.status)},
                   {"basis", basis_name(l.basis)},
                   {"evidence", l.evidence}});
  }
  return out;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m.at(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

Json certificates_json(const std::vector<Certificate>& certs) {
  Json out = Json::array();
  for (const auto& c : certs) out.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return out;
}

}  // namespace

Section ring_section(const std::string& name, const RingPtr& r) {
  Section s{"ring", Json::object(), ""};
  Json ideal = Json::array();
  for (const auto& g : r->generators()) ideal.push_back(g.to_string());
  s.data = {{"name", name},
            {"description", r->describe()},
            {"vars", r->variables()},
            {"ideal", ideal},
            {"codim", r->codim()},
            {"dim", r->dimension()},
            {"complete_intersection", r->certified()}};
  std::ostringstream os;
  os << "ring " << name << " = " << r->describe() << "  codim " << r->codim() << ", dim " << r->dimension()
     << (r->certified() ? ", complete intersection" : ", regular sequence NOT certified") << "\n";
  s.text = os.str();
  return s;
}

Section module_section(const std::string& name, const std::string& ring, const Module& m) {
  Section s{"module", Json::object(), ""};
  const Module& mm = m.minimal();
  s.data = {{"name", name},
            {"ring", ring},
            {"shifts", mm.degrees()},
            {"matrix", matrix_json(mm.relations())},
            {"generators", mm.generator_count()}};
  s.text = "module " + name + " over " + ring + " = " + mm.to_string() + "\n";
  return s;
}

Section betti_section(const std::string& name, const FreeResolution& res) {
  Section s{"betti", Json::object(), ""};
  BettiTable t = betti_table(res);
  Json graded = Json::array();
  for (const auto& row : t.graded) {
    Json g = Json::object();
    for (const auto& [deg, n] : row) g[std::to_string(deg)] = n;
    graded.push_back(g);
  }
  s.data = {{"module", name}, {"betti", t.betti}, {"graded", graded}, {"bound", t.bound}, {"terminated", t.terminated}};
  std::ostringstream os;
  os << "betti " << name << ": " << t.to_string() << "\n";
  for (std::size_t i = 0; i < t.graded.size(); ++i) {
    os << "  F_" << i << ":";
    for (const auto& [deg, n] : t.graded[i]) os << " R(" << -deg << ")^" << n;
    os << "\n";
  }
  s.text = os.str();
  return s;
}

Section resolution_section(const std::string& name, const FreeResolution& res) {
  Section s{"resolution", Json::object(), ""};
  Json diffs = Json::array();
  std::ostringstream os;
  os << "resolution of " << name << (res.over == ResolveOver::ambient ? " over S" : " over R") << ", "
     << res.length() << " differentials" << (res.terminated ? ", terminated" : "") << "\n";
  for (std::size_t i = 0; i < res.differentials.size(); ++i) {
    const Matrix& d = res.differentials[i];
    diffs.push_back({{"index", i + 1}, {"rows", d.rows()}, {"cols", d.cols()}, {"matrix", matrix_json(d)}});
    os << "  d_" << i + 1 << " (" << d.rows() << "x" << d.cols() << "): " << matrix_text(d) << "\n";
  }
  s.data = {{"module", name},
            {"over", res.over == ResolveOver::ambient ? "ambient" : "quotient"},
            {"terminated", res.terminated},
            {"complex", verify_complex(res)},
            {"differentials", diffs}};
  s.text = os.str();
  return s;
}

Section profile_section(const std::string& name, const Module& m) {
  Section s{"profile", Json::object(), ""};
  ModuleProfile p = module_profile(m);
  s.data = {{"module", name},
            {"dim", ext_json(p.dim)},
            {"depth", ext_json(p.depth)},
            {"length", ext_json(p.length)},
            {"generators", p.betti0},
            {"pd_ambient", ext_json(p.pd_ambient)},
            {"maximal_cohen_macaulay", p.maximal_cohen_macaulay}};
  std::ostringstream os;
  os << "profile " << name << ": " << p.to_string() << "\n";
  try {
    BidualityReport b = biduality_report(m);
    ExtInt nf = nonfree_locus_codim(m);
    s.data["torsion_free"] = b.torsion_free;
    s.data["reflexive"] = b.reflexive;
    s.data["nonfree_locus_codim"] = ext_json(nf);
    os << "  torsion-free " << (b.torsion_free ? "yes" : "no") << ", reflexive " << (b.reflexive ? "yes" : "no")
       << ", non-free locus codim " << nf.to_string() << "\n";
  } catch (const Error& e) {
    s.data["note"] = e.what();
    os << "  " << e.what() << "\n";
  }
  s.text = os.str();
  return s;
}

Section homology_section(const std::string& left, const std::string& right, const HomologyProfile& p,
                         std::size_t codim) {
  const bool is_tor = p.kind == "tor";
  Section s{is_tor ? "tor_profile" : "ext_profile", Json::object(), ""};
  Json entries = Json::array();
  std::ostringstream os;
  os << p.kind << "(" << left << ", " << right << "), window 0.." << p.bound << "\n";
  for (const auto& e : p.entries) {
    entries.push_back({{"i", e.index},
                       {"vanishes", e.vanishes},
                       {"depth", ext_json(e.depth)},
                       {"dim", ext_json(e.dim)},
                       {"finite_length", e.finite_length},
                       {"generators", e.betti0},
                       {"hilbert_start", e.hilbert.start},
                       {"hilbert", e.hilbert.values}});
    os << "  i=" << e.index << ", vanishes=" << (e.vanishes ? "true" : "false") << ", depth=" << e.depth.to_string()
       << ", HF=(" << join(e.hilbert.values) << "), start=" << e.hilbert.start << ", dim=" << e.dim.to_string()
       << ", gens=" << e.betti0 << "\n";
  }
  s.data = {{"kind", p.kind},
            {"left", left},
            {"right", right},
            {"bound", p.bound},
            {"entries", entries},
            {"periodicity", p.periodicity.to_string()},
            {"distance_two_matches", p.distance_two_matches}};
  os << "  resolution: " << p.periodicity.to_string() << "\n";
  os << "  distance-two matches:";
  for (int i : p.distance_two_matches) os << " " << i;
  os << (p.distance_two_matches.empty() ? " none" : "") << "\n";
  if (is_tor) {
    VanishingEvidence ev = tor_vanishing(p, codim);
    s.data["vanishing"] = {{"all_vanish", ev.all_vanish},
                           {"window_vanishes", ev.window_vanishes},
                           {"tier", evidence_tier_name(ev.tier)},
                           {"detail", ev.detail}};
    os << "  Tor_i = 0 for all i >= 1: " << (ev.all_vanish ? "yes" : (ev.window_vanishes ? "in window only" : "no"))
       << " [" << evidence_tier_name(ev.tier) << "] " << ev.detail << "\n";
  }
  s.text = os.str();
  return s;
}

Section theorem_section(const TheoremReport& r, bool timings) {
  Section s{"theorem_reports", Json::object(), ""};
  s.data = {{"id", r.id},
            {"statement", r.statement},
            {"instance", r.instance},
            {"bound", r.bound},
            {"checklist", lines_json(r.checklist)},
            {"verdict", verdict_name(r.verdict)},
            {"asserted", r.asserted},
            {"conclusion", r.conclusion},
            {"evidence", r.evidence},
            {"tier", r.tier}};
  if (timings) s.data["seconds"] = r.seconds;
  s.text = r.to_string(timings);
  return s;
}

Section pushforward_section(const std::string& name, const PushforwardResult& r) {
  Section s{"constructions", Json::object(), ""};
  s.data = {{"kind", "pushforward"},
            {"module", name},
            {"m", r.m},
            {"embedding", matrix_json(r.embedding)},
            {"pushforward", r.pushforward.to_string()},
            {"certificates", certificates_json(r.certificates)}};
  std::ostringstream os;
  os << "pushforward of " << name << ": 0 -> M -> R^" << r.m << " -> M1 -> 0\n";
  os << "  u = " << matrix_text(r.embedding) << "\n";
  os << "  M1 = " << r.pushforward.to_string() << "\n";
  os << certificates_to_string(r.certificates);
  s.text = os.str();
  return s;
}

Section quasilift_section(const std::string& name, const QuasiLiftingResult& q) {
  Section s{"constructions", Json::object(), ""};
  s.data = {{"kind", "quasilift"},
            {"module", name},
            {"split", q.split},
            {"f", q.f.to_string()},
            {"intermediate", q.intermediate->describe()},
            {"lifting", q.lifting.to_string()},
            {"reduction", q.reduction.to_string()},
            {"depth_relation_checked", q.depth_relation_checked},
            {"depth_relation_holds", q.depth_relation_holds},
            {"certificates", certificates_json(q.certificates)}};
  std::ostringstream os;
  os << "quasi-lifting of " << name << " along f = " << q.f.to_string() << " over " << q.intermediate->describe()
     << "\n";
  os << "  E = " << q.lifting.to_string() << "\n";
  os << "  E/fE = " << q.reduction.to_string() << "\n";
  if (q.depth_relation_checked) {
    os << "  depth E = depth M1 + 1: " << (q.depth_relation_holds ? "yes" : "NO") << "\n";
  }
  os << certificates_to_string(q.certificates);
  s.text = os.str();
  return s;
}

Section search_section(const SearchLog& log) {
  Section s{"searches", Json::object(), ""};
  Json findings = Json::array();
  for (const auto& f : log.findings) {
    findings.push_back({{"index", f.index},
                        {"kind", f.kind},
                        {"instance", f.instance},
                        {"hypotheses", lines_json(f.hypotheses)},
                        {"conclusion", f.conclusion},
                        {"conclusion_holds", f.conclusion_holds}});
  }
  s.data = {{"question", log.question},
            {"statement", log.statement},
            {"ring", log.ring},
            {"seed", log.seed},
            {"samples", log.samples},
            {"bound", log.bound},
            {"evaluated", log.evaluated},
            {"skipped", log.skipped},
            {"confirmations", log.confirmations},
            {"candidates", log.candidates},
            {"near_misses", log.near_misses},
            {"findings", findings},
            {"skip_reasons", log.skip_reasons}};
  s.text = log.to_string();
  return s;
}

Section example_section(const ExampleReport& r, bool timings) {
  Section s{"examples", Json::object(), ""};
  Json checks = Json::array();
  std::ostringstream os;
  os << "example " << r.id << ": " << r.title << "\n";
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"provenance", c.provenance},
                      {"pass", c.pass}});
    os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected;
    if (!c.pass) os << ", got " << c.actual;
    os << " [" << c.provenance << "]\n";
  }
  s.data = {{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}};
  if (timings) s.data["seconds"] = r.seconds;
  os << "example " << r.id << ": " << (r.pass() ? "all checks pass" : "MISMATCH");
  if (timings) os << " (" << seconds_text(r.seconds) << " s)";
  os << "\n";
  s.text = os.str();
  return s;
}

}  // namespace citor::detail
