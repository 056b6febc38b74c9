#include "citor/constructions.hpp"

#include <sstream>

#include "citor/errors.hpp"

namespace citor {

bool all_ok(const std::vector<Certificate>& certs) {
  for (const auto& c : certs) {
    if (!c.ok) return false;
  }
  return true;
}

std::string certificates_to_string(const std::vector<Certificate>& certs) {
  std::ostringstream os;
  for (const auto& c : certs) {
    os << (c.ok ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

constexpr int hilbert_lo = -4;
constexpr int hilbert_hi = 8;

Module kernel_module(const Matrix& psi, const Matrix& source_rel, const Matrix& target_rel, const RingPtr& r) {
  KernelPresentation k = kernel_of_map(psi, source_rel, target_rel, r->ideal_gb());
  return Module(r, k.relations.with_row_degrees(k.generators.col_degrees()));
}

bool columns_in(const Matrix& cols, const Module& target) {
  const GroebnerBasis& gb = target.relation_basis();
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    if (!gb.contains(cols.column(j))) return false;
  }
  return true;
}

// HF(A) + HF(C) = HF(B) in every degree of the window.
Certificate additivity(const std::string& name, const std::vector<long>& a, const std::vector<long>& b,
                       const std::vector<long>& c) {
  Certificate cert{name, true, ""};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] + c[i] != b[i]) {
      cert.ok = false;
      cert.detail = "degree " + std::to_string(hilbert_lo + static_cast<int>(i)) + ": " + std::to_string(a[i]) + " + " +
                    std::to_string(c[i]) + " != " + std::to_string(b[i]);
      return cert;
    }
  }
  cert.detail = "degrees " + std::to_string(hilbert_lo) + ".." + std::to_string(hilbert_hi);
  return cert;
}

std::vector<long> window(const Module& m) {
  if (m.is_zero()) return std::vector<long>(hilbert_hi - hilbert_lo + 1, 0);
  return m.hilbert_values(hilbert_lo, hilbert_hi);
}

std::vector<long> free_window(const RingPtr& r, const std::vector<int>& degrees) {
  if (degrees.empty()) return std::vector<long>(hilbert_hi - hilbert_lo + 1, 0);
  return Module::free(r, degrees).hilbert_values(hilbert_lo, hilbert_hi);
}

}  // namespace

PushforwardResult pushforward(const Module& m) {
  require_certified(*m.ring(), "pushforward");
  const RingPtr& r = m.ring();
  const SpacePtr& s = r->space();
  const auto& ideal = r->ideal_gb();
  const Module& mm = m.minimal();
  PushforwardResult res{mm, Matrix(s, {}, {}), Matrix(s, {}, {}), 0, Module::zero(r), {}};
  if (mm.generator_count() == 0) {
    res.certificates.push_back({"zero module", true, "M = 0, m = 0, M1 = 0"});
    return res;
  }
  BidualityReport bd = biduality_report(mm);
  if (!bd.kernel_zero) {
    fail(ErrorKind::hypothesis_missing, "pushforward needs a torsion-free module; torsion submodule " +
                                            bd.kernel.to_string());
  }
  const Matrix& a = mm.relations();
  // Columns of k are minimal generators of M* in the dual of F_0, in the
  // order the syzygy computation returns them.
  Matrix k = a.cols() == 0 ? Matrix::identity(s, a.transpose().col_degrees()) : syzygies(a.transpose(), ideal);
  res.functionals = k;
  res.m = k.cols();
  res.embedding = k.transpose();
  res.pushforward = Module(r, res.embedding).minimal();

  Certificate defined{"u is a map out of M", reduce_matrix(res.embedding * a, ideal).is_zero(), "u o A = 0"};
  res.certificates.push_back(defined);
  Module ker = kernel_module(res.embedding, a, Matrix(s, res.embedding.row_degrees(), {}), r);
  res.certificates.push_back({"ker u = 0", ker.is_zero(), ker.is_zero() ? "" : ker.to_string()});
  res.certificates.push_back(additivity("HF(M) + HF(M1) = HF(R^m)", window(mm),
                                        free_window(r, res.embedding.row_degrees()), window(res.pushforward)));
  return res;
}

PushforwardChain pushforward_chain(const Module& m, int k) {
  PushforwardChain chain;
  chain.modules.push_back(m.minimal());
  for (int i = 1; i <= k; ++i) {
    const Module& cur = chain.modules.back();
    BidualityReport bd = biduality_report(cur);
    if (!bd.kernel_zero) {
      chain.stopped_early = true;
      chain.stop_reason = "M_" + std::to_string(i - 1) + " has torsion " + bd.kernel.to_string();
      break;
    }
    chain.steps.push_back(pushforward(cur));
    chain.modules.push_back(chain.steps.back().pushforward);
  }
  return chain;
}

QuasiLiftingResult quasi_lifting(const Module& m, std::size_t split) {
  const RingPtr& r = m.ring();
  if (split >= r->generators().size()) {
    fail(ErrorKind::incompatible_operands, "split index " + std::to_string(split) + " is not a quotient generator");
  }
  RingPtr sp = r->drop_generator(split);
  if (!sp->certified()) {
    fail(ErrorKind::hypothesis_missing, "intermediate ring is not a complete intersection: " +
                                            sp->regular_sequence().to_string());
  }
  const SpacePtr& s = r->space();
  QuasiLiftingResult q{pushforward(m), sp, r->generators()[split], split, Module::zero(sp), Module::zero(r), {}};
  const PushforwardResult& pf = q.pushforward;
  const Matrix& u = pf.embedding;
  const std::size_t n = u.cols();
  const std::size_t mm = pf.m;
  const int e = q.f.degree();
  if (mm == 0) {
    q.certificates.push_back({"zero module", true, "M = 0 gives E = 0"});
    return q;
  }
  // E = im(u) + f S'^m inside S'^m.
  std::vector<int> gen_degrees = u.col_degrees();
  for (int d : u.row_degrees()) gen_degrees.push_back(d + e);
  Matrix g(s, u.row_degrees(), gen_degrees);
  for (std::size_t i = 0; i < mm; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.set(i, j, u.at(i, j));
    g.set(i, n + i, q.f);
  }
  Matrix e_rel = syzygies(g, sp->ideal_gb()).with_row_degrees(gen_degrees);
  Module e_full(sp, e_rel);
  q.lifting = e_full.minimal();
  q.reduction = Module(r, e_rel).minimal();

  Module m1 = pf.pushforward;
  q.certificates.push_back(additivity("HF(E) + HF(M1) = HF(S'^m)", window(e_full), free_window(sp, u.row_degrees()),
                                      window(m1)));

  // 0 -> M1(-e) -> E/fE -> M -> 0 on the generators of E above.
  const Module& src = pf.source;
  Matrix gamma(s, src.degrees(), gen_degrees);
  for (std::size_t j = 0; j < n; ++j) gamma.set(j, j, Polynomial::constant(s, 1));
  Matrix m1_rel = Module(r, u).twist(-e).relations();
  const std::vector<int>& m1_degrees = m1_rel.row_degrees();
  Matrix alpha(s, gen_degrees, m1_degrees);
  for (std::size_t i = 0; i < mm; ++i) alpha.set(n + i, i, Polynomial::constant(s, 1));
  Module red(r, e_rel);
  q.certificates.push_back({"E/fE -> M well defined", columns_in(gamma * e_rel, src), ""});
  q.certificates.push_back({"M1 -> E/fE well defined", columns_in(alpha * m1_rel, red), ""});
  Module ker_alpha = kernel_module(alpha, m1_rel, e_rel, r);
  q.certificates.push_back({"M1 -> E/fE injective", ker_alpha.is_zero(), ""});
  Matrix mid = homology_presentation(gamma, alpha, src.relations(), e_rel, r->ideal_gb());
  q.certificates.push_back({"exact at E/fE", Module(r, mid).is_zero(), ""});
  q.certificates.push_back({"E/fE -> M surjective", true, "identity on the generators of M"});

  // E_p is free whenever f is not in p: a power of f kills the non-free module.
  Module nf = nonfree_locus_module(q.lifting);
  bool killed = nf.is_zero();
  Polynomial power = q.f;
  for (int k = 1; k <= 6 && !killed; ++k, power = power * q.f) {
    bool all = true;
    const GroebnerBasis& gb = nf.relation_basis();
    for (std::size_t i = 0; i < nf.generator_count() && all; ++i) {
      FreeModuleElement v = Matrix::identity(s, nf.degrees()).column(i);
      v.components[i] = power;
      all = gb.contains(v);
    }
    killed = all;
  }
  q.certificates.push_back({"E free off V(f)", killed, "f^k annihilates Ext^1(E, syz E) for some k <= 6"});

  if (!m1.is_zero()) {
    q.depth_relation_checked = true;
    q.depth_relation_holds = module_depth(q.lifting) == ExtInt(module_depth(m1).value() + 1);
  }
  return q;
}

}  // namespace citor
