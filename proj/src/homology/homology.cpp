#include "citor/homology.hpp"

#include <algorithm>
#include <sstream>

#include "citor/errors.hpp"

namespace citor {

namespace {

std::vector<int> tensor_degrees(const std::vector<int>& a, const std::vector<int>& b, int sign) {
  std::vector<int> out;
  for (int x : a) {
    for (int y : b) out.push_back(sign * x + y);
  }
  return out;
}

std::vector<int> negated(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}

const Matrix& differential(const FreeResolution& res, int i) {
  return res.differentials.at(static_cast<std::size_t>(i - 1));
}

void require_steps(const FreeResolution& res, int needed) {
  if (static_cast<int>(res.length()) < needed && !res.terminated) {
    fail(ErrorKind::insufficient_window, "resolution has " + std::to_string(res.length()) + " steps, " +
                                             std::to_string(needed) + " needed");
  }
}

ExtInt ext_add(ExtInt a, ExtInt b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::infinity();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtInt::neg_infinity();
  return ExtInt(a.value() + b.value());
}

}  // namespace

Module tor_module(const FreeResolution& res, const Module& n, int i) {
  const Module& nm = n.minimal();
  const RingPtr& ring = res.ring;
  const SpacePtr& s = ring->space();
  const int len = static_cast<int>(res.length());
  if (i > len) {
    require_steps(res, i);
    return Module::zero(ring);
  }
  require_steps(res, i + 1);
  const std::vector<int>& b = nm.degrees();
  const std::vector<int> gi = res.degrees(static_cast<std::size_t>(i));
  const std::vector<int> mid = tensor_degrees(gi, b, 1);
  if (mid.empty()) return Module::zero(ring);
  Matrix a1 = nm.relations().identity_tensor(gi);
  Matrix phi = Matrix(s, {}, mid);
  Matrix a0 = Matrix(s, {}, {});
  if (i >= 1) {
    phi = differential(res, i).tensor_identity(b);
    a0 = nm.relations().identity_tensor(res.degrees(static_cast<std::size_t>(i - 1)));
  }
  Matrix psi = i + 1 <= len ? differential(res, i + 1).tensor_identity(b) : Matrix(s, mid, {});
  Matrix h = homology_presentation(phi, psi, a0, a1, ring->ideal_gb());
  return Module(ring, h).minimal();
}

Module ext_module(const FreeResolution& res, const Module& n, int i) {
  const Module& nm = n.minimal();
  const RingPtr& ring = res.ring;
  const SpacePtr& s = ring->space();
  const int len = static_cast<int>(res.length());
  if (i > len) {
    require_steps(res, i);
    return Module::zero(ring);
  }
  require_steps(res, i + 1);
  const std::vector<int>& b = nm.degrees();
  const std::vector<int> gi = res.degrees(static_cast<std::size_t>(i));
  const std::vector<int> mid = tensor_degrees(gi, b, -1);
  if (mid.empty()) return Module::zero(ring);
  Matrix a1 = nm.relations().identity_tensor(negated(gi));
  Matrix phi = Matrix(s, {}, mid);
  Matrix a0 = Matrix(s, {}, {});
  if (i + 1 <= len) {
    phi = differential(res, i + 1).transpose().tensor_identity(b);
    a0 = nm.relations().identity_tensor(negated(res.degrees(static_cast<std::size_t>(i + 1))));
  }
  Matrix psi = i >= 1 ? differential(res, i).transpose().tensor_identity(b) : Matrix(s, mid, {});
  Matrix h = homology_presentation(phi, psi, a0, a1, ring->ideal_gb());
  return Module(ring, h).minimal();
}

std::string HilbertWindow::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ")";
  if (start != 0) os << " from degree " << start;
  return os.str();
}

HilbertWindow hilbert_window(const Module& m, int count) {
  HilbertWindow w;
  const Module& mm = m.minimal();
  if (mm.generator_count() > 0) w.start = *std::min_element(mm.degrees().begin(), mm.degrees().end());
  for (int d = w.start; d < w.start + count; ++d) w.values.push_back(mm.generator_count() ? mm.hilbert_value(d) : 0);
  return w;
}

const char* evidence_tier_name(EvidenceTier t) {
  switch (t) {
    case EvidenceTier::pd_finite: return "proved-by-pd-finiteness";
    case EvidenceTier::window_periodicity: return "window+periodicity";
    case EvidenceTier::window_rigidity: return "window+rigidity";
    case EvidenceTier::window_only: return "window-only";
    case EvidenceTier::not_vanishing: return "not-vanishing";
  }
  return "?";
}

namespace {

HomologyEntry profile_entry(int i, Module m, const ProfileOptions& opts) {
  HomologyEntry e;
  e.index = i;
  e.module = m.minimal();
  e.betti0 = e.module.generator_count();
  e.vanishes = e.betti0 == 0;
  e.hilbert = hilbert_window(e.module, opts.hilbert_count);
  e.dim = e.module.dimension();
  e.finite_length = e.dim <= ExtInt(0);
  e.depth = opts.with_depth ? module_depth(e.module) : ExtInt::infinity();
  return e;
}

void finish_profile(HomologyProfile& p) {
  if (p.resolution.terminated || p.resolution.length() >= 6) p.periodicity = detect_periodicity(p.resolution);
  for (int i = 1; i + 2 <= p.bound; ++i) {
    const auto& a = p.at(i);
    const auto& b = p.at(i + 2);
    if (a.betti0 == b.betti0 && a.hilbert.values == b.hilbert.values) p.distance_two_matches.push_back(i);
  }
}

}  // namespace

HomologyProfile tor(const Module& m, const Module& n, int bound, const ProfileOptions& opts) {
  require_same_ring(m, n);
  if (bound < 1) fail(ErrorKind::incompatible_operands, "Tor bound must be at least 1");
  HomologyProfile p;
  p.kind = "tor";
  p.bound = bound;
  const Module& first = opts.resolve_second ? n : m;
  const Module& second = opts.resolve_second ? m : n;
  p.resolution = resolve(first, ResolveOver::quotient, bound + 1);
  for (int i = 0; i <= bound; ++i) p.entries.push_back(profile_entry(i, tor_module(p.resolution, second, i), opts));
  finish_profile(p);
  return p;
}

HomologyProfile ext(const Module& m, const Module& n, int bound, const ProfileOptions& opts) {
  require_same_ring(m, n);
  if (bound < 1) fail(ErrorKind::incompatible_operands, "Ext bound must be at least 1");
  HomologyProfile p;
  p.kind = "ext";
  p.bound = bound;
  p.resolution = resolve(m, ResolveOver::quotient, bound + 1);
  for (int i = 0; i <= bound; ++i) p.entries.push_back(profile_entry(i, ext_module(p.resolution, n, i), opts));
  finish_profile(p);
  return p;
}

std::string HomologyProfile::to_string() const {
  std::ostringstream os;
  os << kind << " profile through " << bound << "\n";
  for (const auto& e : entries) {
    os << "  i=" << e.index << " vanishes=" << (e.vanishes ? "true" : "false") << " beta0=" << e.betti0
       << " depth=" << e.depth.to_string() << " dim=" << e.dim.to_string() << " HF=" << e.hilbert.to_string() << "\n";
  }
  os << "  resolution " << periodicity.to_string();
  return os.str();
}

VanishingEvidence tor_vanishing(const HomologyProfile& p, std::size_t codim) {
  VanishingEvidence ev;
  int first_nonzero = 0;
  for (int i = 1; i <= p.bound; ++i) {
    if (!p.at(i).vanishes) {
      first_nonzero = i;
      break;
    }
  }
  if (first_nonzero) {
    ev.tier = EvidenceTier::not_vanishing;
    ev.detail = "Tor_" + std::to_string(first_nonzero) + " is nonzero";
    return ev;
  }
  ev.window_vanishes = true;
  auto pd = p.resolution.projective_dimension();
  if (pd && *pd <= p.bound) {
    ev.all_vanish = true;
    ev.tier = EvidenceTier::pd_finite;
    ev.detail = "resolution terminates at length " + std::to_string(*pd) + " inside the window";
  } else if (p.periodicity.periodic && p.periodicity.onset + p.periodicity.period <= p.bound) {
    ev.all_vanish = true;
    ev.tier = EvidenceTier::window_periodicity;
    ev.detail = "resolution " + p.periodicity.to_string() + ", window covers one full period";
  } else if (p.bound >= static_cast<int>(codim) + 1) {
    ev.all_vanish = true;
    ev.tier = EvidenceTier::window_rigidity;
    ev.detail = "Tor_1..Tor_" + std::to_string(codim + 1) + " vanish; rigidity over a complete intersection of codimension " +
                std::to_string(codim);
  } else {
    ev.tier = EvidenceTier::window_only;
    ev.detail = "vanishing observed through " + std::to_string(p.bound) + " only";
  }
  return ev;
}

std::string DepthFormulaReport::to_string() const {
  std::ostringstream os;
  os << "depth M + depth N = " << depth_m.to_string() << " + " << depth_n.to_string() << " = " << lhs.to_string()
     << "; depth R + depth(M⊗N) = " << depth_r << " + " << depth_tensor.to_string() << " = " << rhs.to_string()
     << "; ";
  if (!asserted) {
    os << "hypothesis not certified (" << evidence.detail << "), formula not asserted";
  } else {
    os << (holds ? "holds" : "FAILS") << " [" << evidence_tier_name(evidence.tier) << "]";
  }
  return os.str();
}

DepthFormulaReport depth_formula_check(const Module& m, const Module& n, int bound) {
  require_same_ring(m, n);
  DepthFormulaReport rep;
  ProfileOptions opts;
  opts.with_depth = false;
  HomologyProfile p = tor(m, n, bound, opts);
  rep.evidence = tor_vanishing(p, m.ring()->codim());
  rep.hypothesis_ok = rep.evidence.all_vanish && m.ring()->certified();
  rep.depth_m = module_depth(m);
  rep.depth_n = module_depth(n);
  rep.depth_r = m.ring()->dimension();
  rep.depth_tensor = module_depth(p.at(0).module);
  rep.lhs = ext_add(rep.depth_m, rep.depth_n);
  rep.rhs = ext_add(ExtInt(rep.depth_r), rep.depth_tensor);
  rep.asserted = rep.hypothesis_ok;
  rep.holds = rep.asserted && rep.lhs == rep.rhs;
  return rep;
}

}  // namespace citor
