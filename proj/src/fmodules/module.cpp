#include "citor/module.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <sstream>

#include "citor/errors.hpp"
#include "citor/homology.hpp"
#include "citor/resolution.hpp"

namespace citor {

struct Module::Cache {
  std::once_flag minimal_once;
  std::once_flag ambient_once;
  std::once_flag basis_once;
  bool self_minimal = false;
  std::unique_ptr<Module> minimal;
  Matrix ambient;
  GroebnerBasis basis;
};

Module::Module(RingPtr ring, Matrix relations, std::string name)
    : ring_(std::move(ring)), relations_(std::move(relations)), name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  if (!ring_) fail(ErrorKind::incompatible_operands, "module without a ring");
  if (!relations_.space()) relations_ = Matrix(ring_->space(), {}, {});
  if (!(*relations_.space() == *ring_->space())) {
    fail(ErrorKind::incompatible_operands, "presentation matrix is over a different polynomial ring");
  }
  relations_.validate_homogeneous();
}

Module Module::free(RingPtr ring, std::vector<int> degrees, std::string name) {
  SpacePtr s = ring->space();
  return Module(std::move(ring), Matrix(s, std::move(degrees), {}), std::move(name));
}

Module Module::zero(RingPtr ring) { return free(std::move(ring), {}); }

Module Module::cyclic(RingPtr ring, const std::vector<Polynomial>& ideal, int degree, std::string name) {
  SpacePtr s = ring->space();
  Matrix rel = Matrix::from_rows(s, {degree}, {ideal});
  return Module(std::move(ring), rel, std::move(name));
}

Module Module::named(std::string name) const {
  Module out = *this;
  out.name_ = std::move(name);
  return out;
}

const Module& Module::minimal() const {
  if (!cache_) fail(ErrorKind::incompatible_operands, "empty module handle");
  std::call_once(cache_->minimal_once, [this] {
    if (cache_->self_minimal) return;
    Matrix pruned = prune_presentation(relations_, ring_->ideal_gb());
    if (pruned == relations_) {
      cache_->self_minimal = true;
      return;
    }
    auto m = std::make_unique<Module>(ring_, std::move(pruned), name_);
    m->cache_->self_minimal = true;
    cache_->minimal = std::move(m);
  });
  return cache_->self_minimal ? *this : *cache_->minimal;
}

bool Module::is_minimal_presentation() const { return &minimal() == this; }

const Matrix& Module::ambient_relations() const {
  std::call_once(cache_->ambient_once, [this] {
    std::vector<FreeModuleElement> cols;
    const std::size_t r = generator_count();
    for (std::size_t i = 0; i < r; ++i) {
      for (const auto& f : ring_->generators()) {
        if (f.is_zero()) continue;
        FreeModuleElement e;
        e.shifts = degrees();
        e.components.assign(r, Polynomial(ring_->space()));
        e.components[i] = f;
        cols.push_back(std::move(e));
      }
    }
    cache_->ambient = relations_.hcat(Matrix::from_columns(ring_->space(), degrees(), cols));
  });
  return cache_->ambient;
}

const GroebnerBasis& Module::relation_basis() const {
  std::call_once(cache_->basis_once, [this] { cache_->basis = GroebnerBasis::compute(relations_, ring_->ideal_gb()); });
  return cache_->basis;
}

long Module::hilbert_value(int d) const { return relation_basis().hilbert_value(d); }

std::vector<long> Module::hilbert_values(int lo, int hi) const {
  std::vector<long> out;
  for (int d = lo; d <= hi; ++d) out.push_back(hilbert_value(d));
  return out;
}

ExtInt Module::dimension() const {
  int d = relation_basis().quotient_dimension();
  return d < 0 ? ExtInt::neg_infinity() : ExtInt(d);
}

Module Module::twist(int a) const {
  std::vector<int> rd, cd;
  for (int d : relations_.row_degrees()) rd.push_back(d - a);
  for (int d : relations_.col_degrees()) cd.push_back(d - a);
  Matrix m(relations_.space(), rd, cd);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, relations_.at(i, j));
  }
  return Module(ring_, m, name_);
}

std::string Module::to_string() const {
  std::ostringstream os;
  os << "coker(shifts=[";
  for (std::size_t i = 0; i < degrees().size(); ++i) os << (i ? "," : "") << degrees()[i];
  os << "], matrix=[";
  for (std::size_t i = 0; i < relations_.rows(); ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < relations_.cols(); ++j) os << (j ? ", " : "") << relations_.at(i, j).to_string();
    os << "]";
  }
  os << "])";
  return os.str();
}

void require_same_ring(const Module& a, const Module& b) {
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring())) {
    fail(ErrorKind::incompatible_operands, "modules live over different rings");
  }
}

void require_certified(const Ring& r, const std::string& what) {
  if (!r.certified()) {
    fail(ErrorKind::hypothesis_missing,
         what + " needs a complete intersection; regular sequence check: " + r.regular_sequence().to_string());
  }
}

Matrix prune_presentation(const Matrix& relations, const std::vector<Polynomial>& ideal_gb) {
  Matrix a = reduce_matrix(relations, ideal_gb).drop_zero_columns();
  const SpacePtr& space = a.space();
  for (;;) {
    std::size_t pi = a.rows(), pj = a.cols();
    for (std::size_t j = 0; j < a.cols() && pi == a.rows(); ++j) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.at(i, j).is_unit()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == a.rows()) break;
    // Generator pi is expressed by relation pj; clear row pi, then drop both.
    const Coefficient inv = a.at(pi, pj).leading().coefficient.inverse();
    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != pi) keep_rows.push_back(i);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j != pj) keep_cols.push_back(j);
    }
    std::vector<int> rd, cd;
    for (auto i : keep_rows) rd.push_back(a.row_degrees()[i]);
    for (auto j : keep_cols) cd.push_back(a.col_degrees()[j]);
    Matrix b(space, rd, cd);
    for (std::size_t jj = 0; jj < keep_cols.size(); ++jj) {
      const std::size_t j = keep_cols[jj];
      Polynomial q = a.at(pi, j).scaled(inv);
      for (std::size_t ii = 0; ii < keep_rows.size(); ++ii) {
        const std::size_t i = keep_rows[ii];
        Polynomial e = a.at(i, j);
        if (!q.is_zero() && !a.at(i, pj).is_zero()) e = e - q * a.at(i, pj);
        b.set(ii, jj, std::move(e));
      }
    }
    a = reduce_matrix(b, ideal_gb).drop_zero_columns();
  }
  return a.select_columns(minimal_generators(a, ideal_gb));
}

Module minimalize(const Module& m) { return m.minimal(); }

Module dual(const Module& m) {
  const Module& mm = m.minimal();
  const RingPtr& r = m.ring();
  if (mm.generator_count() == 0) return Module::zero(r);
  const auto& ideal = r->ideal_gb();
  Matrix k = mm.relations().cols() == 0 ? Matrix::identity(r->space(), mm.relations().transpose().col_degrees())
                                        : syzygies(mm.relations().transpose(), ideal);
  Module out(r, syzygies(k, ideal).with_row_degrees(k.col_degrees()));
  return out.minimal();
}

Module tensor(const Module& a, const Module& b) {
  require_same_ring(a, b);
  const Module& ma = a.minimal();
  const Module& mb = b.minimal();
  Matrix left = ma.relations().tensor_identity(mb.degrees());
  Matrix right = mb.relations().identity_tensor(ma.degrees());
  Matrix rel = left.hcat(right);
  return Module(a.ring(), rel).minimal();
}

BidualityReport biduality_report(const Module& m) {
  require_certified(*m.ring(), "biduality");
  const Module& mm = m.minimal();
  const RingPtr& r = m.ring();
  const SpacePtr& s = r->space();
  const auto& ideal = r->ideal_gb();
  BidualityReport rep{Module::zero(r), Module::zero(r)};
  if (mm.generator_count() == 0) return rep;
  const Matrix& a = mm.relations();
  // Columns of k generate M* inside the dual of F_0; b presents M*.
  Matrix k = a.cols() == 0 ? Matrix::identity(s, a.transpose().col_degrees()) : syzygies(a.transpose(), ideal);
  Matrix b = syzygies(k, ideal);
  if (b.rows() != k.cols()) b = Matrix(s, k.col_degrees(), {});
  Matrix ev = k.transpose();
  KernelPresentation ker = kernel_of_map(ev, a, Matrix(s, ev.row_degrees(), {}), ideal);
  rep.kernel = Module(r, ker.relations.with_row_degrees(ker.generators.col_degrees())).minimal();
  Matrix bt = b.transpose();
  if (bt.cols() != ev.rows()) bt = Matrix(s, {}, ev.row_degrees());
  Matrix coker = homology_presentation(bt, ev, Matrix(s, bt.row_degrees(), {}), Matrix(s, ev.row_degrees(), {}), ideal);
  rep.cokernel = Module(r, coker).minimal();
  rep.kernel_zero = rep.kernel.is_zero();
  rep.cokernel_zero = rep.cokernel.is_zero();
  rep.reflexive = rep.kernel_zero && rep.cokernel_zero;
  rep.torsion_free = rep.kernel_zero && serre_condition(m, 1).holds;
  return rep;
}

std::string ModuleProfile::to_string() const {
  std::ostringstream os;
  os << "dim=" << dim.to_string() << " depth=" << depth.to_string() << " length=" << length.to_string()
     << " betti0=" << betti0 << " pd_S=" << pd_ambient.to_string() << (maximal_cohen_macaulay ? " MCM" : "");
  return os.str();
}

ExtInt module_depth(const Module& m) {
  if (m.is_zero()) return ExtInt::infinity();
  FreeResolution res = resolve(m, ResolveOver::ambient, static_cast<int>(m.ring()->nvars()) + 1);
  return ExtInt(static_cast<int>(m.ring()->nvars()) - *res.projective_dimension());
}

ModuleProfile module_profile(const Module& m) {
  ModuleProfile p;
  const Module& mm = m.minimal();
  p.betti0 = mm.generator_count();
  if (p.betti0 == 0) {
    p.dim = ExtInt::neg_infinity();
    p.depth = ExtInt::infinity();
    p.length = ExtInt(0);
    p.pd_ambient = ExtInt::neg_infinity();
    return p;
  }
  const int n = static_cast<int>(m.ring()->nvars());
  FreeResolution res = resolve(mm, ResolveOver::ambient, n + 1);
  const int pd = *res.projective_dimension();
  p.pd_ambient = ExtInt(pd);
  p.depth = ExtInt(n - pd);
  p.dim = mm.dimension();
  if (p.dim == ExtInt(0)) {
    int lo = *std::min_element(mm.degrees().begin(), mm.degrees().end());
    int hi = *std::max_element(mm.degrees().begin(), mm.degrees().end());
    long total = 0;
    for (int d = lo;; ++d) {
      long v = mm.hilbert_value(d);
      total += v;
      if (v == 0 && d >= hi) break;
    }
    p.length = ExtInt(static_cast<int>(total));
  } else {
    p.length = ExtInt::infinity();
  }
  p.maximal_cohen_macaulay = p.depth == ExtInt(m.ring()->dimension());
  return p;
}

std::string SerreReport::to_string() const {
  std::ostringstream os;
  os << "(S" << n << ") " << (holds ? "holds" : "fails");
  if (!holds) os << " at j=" << failing_index << " (dim Ext^j_S(M,S) = " << support_dimension.to_string() << ")";
  return os.str();
}

SerreReport serre_condition(const Module& m, int n) {
  require_certified(*m.ring(), "Serre condition");
  if (n < 1) fail(ErrorKind::incompatible_operands, "Serre condition index must be positive");
  SerreReport rep;
  rep.n = n;
  if (m.is_zero()) return rep;
  const int ds = static_cast<int>(m.ring()->nvars());
  const int c = static_cast<int>(m.ring()->codim());
  FreeResolution res = resolve(m, ResolveOver::ambient, ds + 1);
  const int pd = static_cast<int>(res.length());
  const SpacePtr& s = m.ring()->space();
  for (int j = c + 1; j <= ds; ++j) {
    ExtInt dim = ExtInt::neg_infinity();
    if (j <= pd) {
      Matrix psi = res.differentials[static_cast<std::size_t>(j - 1)].transpose();
      Matrix phi = j + 1 <= pd ? res.differentials[static_cast<std::size_t>(j)].transpose()
                               : Matrix(s, {}, psi.row_degrees());
      Matrix h = homology_presentation(phi, psi, Matrix(s, phi.row_degrees(), {}), Matrix(s, psi.row_degrees(), {}));
      dim = Module(res.ring, h).dimension();
    }
    rep.ext_dimensions.emplace_back(j, dim);
    if (rep.holds && dim > ExtInt(ds - j - n)) {
      rep.holds = false;
      rep.failing_index = j;
      rep.support_dimension = dim;
    }
  }
  return rep;
}

Module nonfree_locus_module(const Module& m) {
  const Module& mm = m.minimal();
  if (mm.relations().cols() == 0) return Module::zero(m.ring());
  FreeResolution res = resolve(mm, ResolveOver::quotient, 2);
  const SpacePtr& s = m.ring()->space();
  Matrix omega = res.length() >= 2 ? res.differentials[1] : Matrix(s, res.degrees(1), {});
  Module syz1(m.ring(), omega);
  return ext_module(res, syz1, 1);
}

ExtInt nonfree_locus_codim(const Module& m) {
  ExtInt d = nonfree_locus_module(m).dimension();
  if (d.is_neg_inf()) return ExtInt::infinity();
  return ExtInt(m.ring()->dimension() - d.value());
}

namespace {

// Determinant by expansion along the first row, memoized on the column set.
class MinorComputer {
 public:
  explicit MinorComputer(const Matrix& a) : a_(a) {}

  Polynomial det(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    memo_.clear();
    rows_ = rows;
    cols_ = cols;
    std::uint64_t mask = (cols.size() >= 64) ? ~0ull : ((1ull << cols.size()) - 1);
    return expand(0, mask);
  }

 private:
  Polynomial expand(std::size_t k, std::uint64_t mask) {
    if (k == rows_.size()) return Polynomial::constant(a_.space(), 1);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    Polynomial total(a_.space());
    int sign = 1;
    for (std::size_t t = 0; t < cols_.size(); ++t) {
      if (!(mask & (1ull << t))) continue;
      const Polynomial& e = a_.at(rows_[k], cols_[t]);
      if (!e.is_zero()) {
        Polynomial sub = expand(k + 1, mask & ~(1ull << t));
        if (!sub.is_zero()) total = sign > 0 ? total + e * sub : total - e * sub;
      }
      sign = -sign;
    }
    memo_.emplace(mask, total);
    return total;
  }

  const Matrix& a_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
  return r;
}

}  // namespace

std::vector<Polynomial> fitting_ideal(const Module& m, int k) {
  const Module& mm = m.minimal();
  const Matrix& a = mm.relations();
  const int r = static_cast<int>(a.rows());
  const int t = r - k;
  const SpacePtr& s = m.ring()->space();
  if (t <= 0) return {Polynomial::constant(s, 1)};
  if (static_cast<std::size_t>(t) > a.cols()) return {};
  const std::size_t tt = static_cast<std::size_t>(t);
  if (binomial(a.rows(), tt) * binomial(a.cols(), tt) > 20000 || a.cols() > 60) {
    fail(ErrorKind::too_large, "Fitting ideal: too many minors");
  }
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  subsets(a.rows(), tt, row_sets);
  subsets(a.cols(), tt, col_sets);
  MinorComputer mc(a);
  std::vector<Polynomial> out;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      Polynomial d = m.ring()->reduce(mc.det(rs, cs));
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

std::string RankProfile::to_string() const {
  std::ostringstream os;
  os << "ranks [";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    os << (i ? ", " : "") << ranks[i].prime.to_string() << ": " << ranks[i].rank
       << (ranks[i].locally_free ? " free" : " not free");
  }
  os << "] " << (constant_rank ? "constant" : "not constant");
  return os.str();
}

RankProfile rank_profile(const Module& m) {
  const auto& primes = m.ring()->minimal_primes();
  if (!primes) fail(ErrorKind::needs_minimal_primes, "rank profile needs the minimal primes of the ring");
  const Module& mm = m.minimal();
  const int r = static_cast<int>(mm.generator_count());
  std::vector<std::vector<Polynomial>> fitt;
  for (int k = 0; k <= r; ++k) fitt.push_back(fitting_ideal(mm, k));
  RankProfile out;
  for (const auto& q : *primes) {
    auto gb = ideal_groebner_basis(q.generators);
    int rank = r;
    for (int k = 0; k <= r; ++k) {
      bool outside = false;
      for (const auto& g : fitt[static_cast<std::size_t>(k)]) {
        if (!ideal_contains(gb, g)) {
          outside = true;
          break;
        }
      }
      if (outside) {
        rank = k;
        break;
      }
    }
    // Locally free of rank k at q iff Fitt_{k-1} vanishes in R_q, i.e. each
    // generator g has (I : g) not contained in q.
    bool free_here = true;
    if (rank > 0) {
      for (const auto& g : fitt[static_cast<std::size_t>(rank - 1)]) {
        auto colon = colon_ideal(m.ring()->generators(), g);
        bool escapes = false;
        for (const auto& h : colon) {
          if (!ideal_contains(gb, h)) {
            escapes = true;
            break;
          }
        }
        if (!escapes) {
          free_here = false;
          break;
        }
      }
    }
    out.ranks.push_back(RankAtPrime{q, rank, free_here});
  }
  out.constant_rank = true;
  for (const auto& x : out.ranks) {
    if (!x.locally_free || x.rank != out.ranks.front().rank) out.constant_rank = false;
  }
  return out;
}

}  // namespace citor
