#include "citor/oracle.hpp"

#include <algorithm>
#include <map>
#include <type_traits>
#include <memory>
#include <unordered_map>

#include "citor/errors.hpp"

namespace citor::oracle {

namespace {

struct PrimeOps {
  using T = std::uint32_t;
  std::uint32_t p;

  T zero() const { return 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T mul(T a, T b) const { return static_cast<T>(static_cast<std::uint64_t>(a) * b % p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const {
    std::uint64_t result = 1, base = a;
    std::uint32_t e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<T>(result);
  }
  bool is_zero(T a) const { return a == 0; }
  T from(const Coefficient& c) const { return c.residue(); }
  // v -= c * w on the index range [from, size).
  void axpy(std::vector<T>& v, T c, const std::vector<T>& w, std::size_t from) const {
    const std::uint64_t nc = p - c;
    for (std::size_t k = from; k < v.size(); ++k) {
      if (w[k]) v[k] = static_cast<T>((v[k] + nc * w[k]) % p);
    }
  }
};

struct RationalOps {
  using T = mpq_class;

  T zero() const { return 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  bool is_zero(const T& a) const { return a == 0; }
  T from(const Coefficient& c) const { return c.rational(); }
  void axpy(std::vector<T>& v, const T& c, const std::vector<T>& w, std::size_t from) const {
    for (std::size_t k = from; k < v.size(); ++k) {
      if (w[k] != 0) v[k] -= c * w[k];
    }
  }
};

template <class T>
T unit_value() {
  if constexpr (std::is_same_v<T, mpq_class>) {
    return mpq_class(1);
  } else {
    return T(1);
  }
}

// Subspace in reduced row echelon form. Rows optionally carry the
// combination of inserted vectors that produced them.
template <class Ops>
class Echelon {
 public:
  using T = typename Ops::T;
  using Vec = std::vector<T>;

  Echelon(const Ops& ops, std::size_t dim, bool track = false, std::size_t sources = 0)
      : ops_(ops), dim_(dim), track_(track), sources_(sources), row_of_col_(dim, -1) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  long row_of_col(std::size_t c) const { return row_of_col_[c]; }
  const Vec& row(std::size_t r) const { return rows_[r]; }

  void reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T c = v[pivots_[r]];
      if (!ops_.is_zero(c)) ops_.axpy(v, c, rows_[r], 0);
    }
  }

  // Returns true when v was independent. With tracking, source is the index
  // of v among inserted vectors; a dependent vector yields a kernel element.
  bool add(Vec v, std::size_t source = 0, Vec* kernel_out = nullptr) {
    Vec combo;
    if (track_) {
      combo.assign(sources_, ops_.zero());
      combo[source] = unit_value<T>();
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T c = v[pivots_[r]];
      if (ops_.is_zero(c)) continue;
      ops_.axpy(v, c, rows_[r], 0);
      if (track_) ops_.axpy(combo, c, combos_[r], 0);
    }
    std::size_t piv = 0;
    while (piv < dim_ && ops_.is_zero(v[piv])) ++piv;
    if (piv == dim_) {
      if (kernel_out) *kernel_out = std::move(combo);
      return false;
    }
    const T inv = ops_.inv(v[piv]);
    for (auto& x : v) x = ops_.mul(x, inv);
    if (track_) {
      for (auto& x : combo) x = ops_.mul(x, inv);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T c = rows_[r][piv];
      if (ops_.is_zero(c)) continue;
      ops_.axpy(rows_[r], c, v, 0);
      if (track_) ops_.axpy(combos_[r], c, combo, 0);
    }
    row_of_col_[piv] = static_cast<long>(rows_.size());
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
    if (track_) combos_.push_back(std::move(combo));
    return true;
  }

 private:
  const Ops& ops_;
  std::size_t dim_;
  bool track_;
  std::size_t sources_;
  std::vector<long> row_of_col_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> rows_;
  std::vector<Vec> combos_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

template <class Ops>
class Engine {
 public:
  using T = typename Ops::T;
  using Vec = std::vector<T>;

  Engine(Ops ops, SpacePtr space, const std::vector<Polynomial>& ideal, const Limits& limits)
      : ops_(std::move(ops)), space_(std::move(space)), ideal_(ideal), limits_(limits) {}

  // ---- ring pieces R_e = S_e / I_e

  struct RingPiece {
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::unique_ptr<Echelon<Ops>> ideal;
    std::vector<std::size_t> basis_cols;
    std::vector<long> coord_of_col;
  };

  const RingPiece& ring(int e) {
    auto it = ring_.find(e);
    if (it != ring_.end()) return *it->second;
    auto piece = std::make_unique<RingPiece>();
    if (e >= 0) {
      piece->monos = monomials_of_degree(space_->nvars(), e);
      check_size(piece->monos.size());
      for (std::size_t k = 0; k < piece->monos.size(); ++k) piece->index.emplace(piece->monos[k], k);
    }
    const std::size_t n = piece->monos.size();
    piece->ideal = std::make_unique<Echelon<Ops>>(ops_, n);
    for (const auto& f : ideal_) {
      if (f.is_zero()) continue;
      const int t = f.degree();
      if (t > e) continue;
      for (const auto& m : monomials_of_degree(space_->nvars(), e - t)) {
        Vec v(n, ops_.zero());
        for (const auto& term : f.terms()) v[piece->index.at(term.monomial * m)] = ops_.from(term.coefficient);
        piece->ideal->add(std::move(v));
      }
    }
    piece->coord_of_col.assign(n, -1);
    for (std::size_t c = 0; c < n; ++c) {
      if (piece->ideal->row_of_col(c) < 0) {
        piece->coord_of_col[c] = static_cast<long>(piece->basis_cols.size());
        piece->basis_cols.push_back(c);
      }
    }
    const RingPiece& ref = *piece;
    ring_.emplace(e, std::move(piece));
    return ref;
  }

  std::size_t ring_dim(int e) { return e < 0 ? 0 : ring(e).basis_cols.size(); }

  // out[offset + .] += coef * (monomial reduced into R_e coordinates).
  void add_monomial(const RingPiece& piece, const Monomial& mono, const T& coef, Vec& out, std::size_t offset) {
    const std::size_t col = piece.index.at(mono);
    const long coord = piece.coord_of_col[col];
    if (coord >= 0) {
      out[offset + static_cast<std::size_t>(coord)] = ops_.add(out[offset + static_cast<std::size_t>(coord)], coef);
      return;
    }
    const Vec& row = piece.ideal->row(static_cast<std::size_t>(piece.ideal->row_of_col(col)));
    for (std::size_t k = 0; k < piece.basis_cols.size(); ++k) {
      const T& r = row[piece.basis_cols[k]];
      if (ops_.is_zero(r)) continue;
      out[offset + k] = ops_.sub(out[offset + k], ops_.mul(coef, r));
    }
  }

  // out[offset + .] += scale * p * (basis element k of R_e).
  void multiply_into(int e, std::size_t k, const Polynomial& p, const T& scale, Vec& out, std::size_t offset) {
    if (p.is_zero()) return;
    const Monomial& base = ring(e).monos[ring(e).basis_cols[k]];
    const int target = e + p.degree();
    const RingPiece& piece = ring(target);
    for (const auto& term : p.terms()) {
      add_monomial(piece, base * term.monomial, ops_.mul(scale, ops_.from(term.coefficient)), out, offset);
    }
  }

  // ---- free modules sum R(-a_i)

  struct Layout {
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;
  };

  Layout layout(const std::vector<int>& degrees, int d) {
    Layout l;
    for (int a : degrees) {
      l.offsets.push_back(l.dim);
      l.dim += ring_dim(d - a);
    }
    check_size(l.dim);
    return l;
  }

  // Images of the basis of (source)_d under the matrix, in (target)_d coordinates.
  std::vector<Vec> map_images(const Matrix& m, int d) {
    Layout src = layout(m.col_degrees(), d);
    Layout dst = layout(m.row_degrees(), d);
    std::vector<Vec> images;
    images.reserve(src.dim);
    const T one = unit();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const int e = d - m.col_degrees()[j];
      for (std::size_t k = 0; k < ring_dim(e); ++k) {
        Vec v(dst.dim, ops_.zero());
        for (std::size_t i = 0; i < m.rows(); ++i) multiply_into(e, k, m.at(i, j), one, v, dst.offsets[i]);
        images.push_back(std::move(v));
      }
    }
    return images;
  }

  std::size_t rank_of(const std::vector<Vec>& vecs, std::size_t dim) {
    Echelon<Ops> ech(ops_, dim);
    for (const auto& v : vecs) ech.add(v);
    return ech.rank();
  }

  std::vector<Vec> kernel_of(const std::vector<Vec>& images, std::size_t target_dim) {
    Echelon<Ops> ech(ops_, target_dim, true, images.size());
    std::vector<Vec> kernel;
    for (std::size_t s = 0; s < images.size(); ++s) {
      Vec k;
      if (!ech.add(images[s], s, &k)) kernel.push_back(std::move(k));
    }
    return kernel;
  }

  // ---- quotient pieces of coker(pres)

  struct QuotientPiece {
    Layout free;
    std::unique_ptr<Echelon<Ops>> relations;
    std::vector<std::size_t> basis_cols;
    std::vector<long> coord_of_col;
    // Which generator block and ring coordinate each column belongs to.
    std::vector<std::size_t> block_of_col;
  };

  const QuotientPiece& quotient(const Matrix& pres, int d) {
    auto key = std::make_pair(&pres, d);
    auto it = quotients_.find(key);
    if (it != quotients_.end()) return *it->second;
    auto q = std::make_unique<QuotientPiece>();
    q->free = layout(pres.row_degrees(), d);
    q->relations = std::make_unique<Echelon<Ops>>(ops_, q->free.dim);
    for (auto& v : map_images(pres, d)) q->relations->add(std::move(v));
    q->coord_of_col.assign(q->free.dim, -1);
    for (std::size_t c = 0; c < q->free.dim; ++c) {
      if (q->relations->row_of_col(c) < 0) {
        q->coord_of_col[c] = static_cast<long>(q->basis_cols.size());
        q->basis_cols.push_back(c);
      }
    }
    for (std::size_t b = 0; b < pres.rows(); ++b) {
      std::size_t end = b + 1 < pres.rows() ? q->free.offsets[b + 1] : q->free.dim;
      for (std::size_t c = q->free.offsets[b]; c < end; ++c) q->block_of_col.push_back(b);
    }
    const QuotientPiece& ref = *q;
    quotients_.emplace(key, std::move(q));
    return ref;
  }

  Vec project(const QuotientPiece& q, Vec v) {
    q.relations->reduce(v);
    Vec out(q.basis_cols.size(), ops_.zero());
    for (std::size_t k = 0; k < q.basis_cols.size(); ++k) out[k] = v[q.basis_cols[k]];
    return out;
  }

  // Image of basis element t of (coker pres)_e under multiplication by p, in
  // (coker pres)_{e + deg p} coordinates, added into out at offset.
  void act(const Matrix& pres, int e, std::size_t t, const Polynomial& p, Vec& out, std::size_t offset) {
    if (p.is_zero()) return;
    const QuotientPiece& src = quotient(pres, e);
    const std::size_t col = src.basis_cols[t];
    const std::size_t block = src.block_of_col[col];
    const std::size_t k = col - src.free.offsets[block];
    const int ring_degree = e - pres.row_degrees()[block];
    const int target = e + p.degree();
    const QuotientPiece& dst = quotient(pres, target);
    Vec lifted(dst.free.dim, ops_.zero());
    multiply_into(ring_degree, k, p, unit(), lifted, dst.free.offsets[block]);
    Vec proj = project(dst, std::move(lifted));
    for (std::size_t a = 0; a < proj.size(); ++a) out[offset + a] = ops_.add(out[offset + a], proj[a]);
  }

  std::size_t quotient_dim(const Matrix& pres, int d) { return quotient(pres, d).basis_cols.size(); }

  // ---- resolutions

  // Next differential: generators of ker(d) chosen degree by degree up to hi.
  Matrix extend(const Matrix& d, int hi) {
    Matrix next(space_, d.col_degrees(), {});
    if (d.cols() == 0) return next;
    int lo = *std::min_element(d.col_degrees().begin(), d.col_degrees().end());
    for (int deg = lo; deg <= hi; ++deg) {
      Layout src = layout(d.col_degrees(), deg);
      std::vector<Vec> kernel = kernel_of(map_images(d, deg), layout(d.row_degrees(), deg).dim);
      if (kernel.empty()) continue;
      Echelon<Ops> covered(ops_, src.dim);
      for (auto& v : map_images(next, deg)) covered.add(std::move(v));
      std::vector<FreeModuleElement> fresh;
      for (auto& v : kernel) {
        if (!covered.add(v)) continue;
        fresh.push_back(to_element(v, d.col_degrees(), deg, src));
      }
      if (!fresh.empty()) {
        Matrix block(space_, d.col_degrees(), std::vector<int>(fresh.size(), deg));
        for (std::size_t j = 0; j < fresh.size(); ++j) {
          for (std::size_t i = 0; i < block.rows(); ++i) block.set(i, j, fresh[j].components[i]);
        }
        next = next.hcat(block);
      }
    }
    return next;
  }

  FreeModuleElement to_element(const Vec& v, const std::vector<int>& degrees, int d, const Layout& l) {
    FreeModuleElement e;
    e.shifts = degrees;
    for (std::size_t b = 0; b < degrees.size(); ++b) {
      const int rd = d - degrees[b];
      std::vector<Term> terms;
      for (std::size_t k = 0; k < ring_dim(rd); ++k) {
        const T& c = v[l.offsets[b] + k];
        if (ops_.is_zero(c)) continue;
        terms.push_back(Term{ring(rd).monos[ring(rd).basis_cols[k]], to_coefficient(c)});
      }
      e.components.emplace_back(space_, std::move(terms));
    }
    return e;
  }

  // d_1 = m, then d_2 .. d_count by extension.
  std::vector<Matrix> resolution(const Matrix& m, int count, int hi) {
    std::vector<Matrix> ds{m};
    while (static_cast<int>(ds.size()) < count) ds.push_back(extend(ds.back(), hi));
    return ds;
  }

  // Degree-d piece of F_j ⊗ N: blocks N_{d - g_k}.
  Layout tensor_layout(const std::vector<int>& gens, const Matrix& n, int d) {
    Layout l;
    for (int g : gens) {
      l.offsets.push_back(l.dim);
      l.dim += quotient_dim(n, d - g);
    }
    check_size(l.dim);
    return l;
  }

  // Images of the basis of (F_src ⊗ N)_d under dmat ⊗ N.
  std::vector<Vec> tensor_images(const Matrix& dmat, const Matrix& n, int d) {
    Layout src = tensor_layout(dmat.col_degrees(), n, d);
    Layout dst = tensor_layout(dmat.row_degrees(), n, d);
    std::vector<Vec> images;
    for (std::size_t k = 0; k < dmat.cols(); ++k) {
      const int e = d - dmat.col_degrees()[k];
      for (std::size_t t = 0; t < quotient_dim(n, e); ++t) {
        Vec v(dst.dim, ops_.zero());
        for (std::size_t l = 0; l < dmat.rows(); ++l) act(n, e, t, dmat.at(l, k), v, dst.offsets[l]);
        images.push_back(std::move(v));
      }
    }
    (void)src;
    return images;
  }

  // Degree-d piece of Hom(F_j, N): blocks N_{d + g_k}.
  Layout hom_layout(const std::vector<int>& gens, const Matrix& n, int d) {
    Layout l;
    for (int g : gens) {
      l.offsets.push_back(l.dim);
      l.dim += quotient_dim(n, d + g);
    }
    check_size(l.dim);
    return l;
  }

  // Images of the basis of Hom(F_j, N)_d under composition with dmat: F_{j+1} -> F_j.
  std::vector<Vec> hom_images(const Matrix& dmat, const Matrix& n, int d) {
    Layout dst = hom_layout(dmat.col_degrees(), n, d);
    std::vector<Vec> images;
    for (std::size_t k = 0; k < dmat.rows(); ++k) {
      const int e = d + dmat.row_degrees()[k];
      for (std::size_t t = 0; t < quotient_dim(n, e); ++t) {
        Vec v(dst.dim, ops_.zero());
        for (std::size_t kk = 0; kk < dmat.cols(); ++kk) act(n, e, t, dmat.at(k, kk), v, dst.offsets[kk]);
        images.push_back(std::move(v));
      }
    }
    return images;
  }

  T unit() const { return unit_value<T>(); }

  Coefficient to_coefficient(const T& c) const {
    if constexpr (std::is_same_v<T, mpq_class>) {
      return Coefficient(space_->field, c);
    } else {
      return Coefficient(space_->field, static_cast<long>(c));
    }
  }

  void check_size(std::size_t n) const {
    if (n > limits_.max_dimension) {
      fail(ErrorKind::oracle_too_large,
           "graded piece of dimension " + std::to_string(n) + " exceeds the oracle limit " +
               std::to_string(limits_.max_dimension));
    }
  }

  Ops ops_;
  SpacePtr space_;
  std::vector<Polynomial> ideal_;
  Limits limits_;
  std::map<int, std::unique_ptr<RingPiece>> ring_;
  std::map<std::pair<const Matrix*, int>, std::unique_ptr<QuotientPiece>> quotients_;
};

template <class Fn>
auto dispatch(const SpacePtr& space, const std::vector<Polynomial>& ideal, const Limits& limits, Fn&& fn) {
  if (space->field.kind == FieldKind::prime) {
    Engine<PrimeOps> e(PrimeOps{space->field.characteristic}, space, ideal, limits);
    return fn(e);
  }
  Engine<RationalOps> e(RationalOps{}, space, ideal, limits);
  return fn(e);
}

}  // namespace

std::vector<long> hilbert_values(const Matrix& pres, const std::vector<Polynomial>& ideal, int lo, int hi,
                                 const Limits& limits) {
  return dispatch(pres.space(), ideal, limits, [&](auto& e) {
    std::vector<long> out;
    for (int d = lo; d <= hi; ++d) out.push_back(static_cast<long>(e.quotient_dim(pres, d)));
    return out;
  });
}

std::vector<long> syzygy_hilbert(const Matrix& m, const std::vector<Polynomial>& ideal, int lo, int hi,
                                 const Limits& limits) {
  return dispatch(m.space(), ideal, limits, [&](auto& e) {
    std::vector<long> out;
    for (int d = lo; d <= hi; ++d) {
      auto src = e.layout(m.col_degrees(), d);
      auto dst = e.layout(m.row_degrees(), d);
      out.push_back(static_cast<long>(src.dim - e.rank_of(e.map_images(m, d), dst.dim)));
    }
    return out;
  });
}

std::vector<long> kernel_hilbert(const Matrix& psi, const Matrix& source, const Matrix& target,
                                 const std::vector<Polynomial>& ideal, int lo, int hi, const Limits& limits) {
  return dispatch(psi.space(), ideal, limits, [&](auto& e) {
    std::vector<long> out;
    for (int d = lo; d <= hi; ++d) {
      const std::size_t src_dim = e.quotient_dim(source, d);
      const std::size_t dst_dim = e.quotient_dim(target, d);
      using Vec = typename std::remove_reference_t<decltype(e)>::Vec;
      std::vector<Vec> images;
      const auto& q = e.quotient(source, d);
      for (std::size_t t = 0; t < src_dim; ++t) {
        Vec v(dst_dim, e.ops_.zero());
        const std::size_t col = q.basis_cols[t];
        const std::size_t block = q.block_of_col[col];
        const std::size_t k = col - q.free.offsets[block];
        const int rd = d - source.row_degrees()[block];
        // psi sends generator `block` to column `block` of psi.
        const auto& tq = e.quotient(target, d);
        Vec lifted(tq.free.dim, e.ops_.zero());
        for (std::size_t i = 0; i < psi.rows(); ++i) {
          e.multiply_into(rd, k, psi.at(i, block), e.unit(), lifted, tq.free.offsets[i]);
        }
        images.push_back(e.project(tq, std::move(lifted)));
      }
      out.push_back(static_cast<long>(src_dim - e.rank_of(images, dst_dim)));
    }
    return out;
  });
}

std::vector<long> tor_hilbert(const Matrix& m, const Matrix& n, const std::vector<Polynomial>& ideal, int i, int lo,
                              int hi, const Limits& limits) {
  return dispatch(m.space(), ideal, limits, [&](auto& e) {
    std::vector<Matrix> ds = e.resolution(m, i + 1, hi);
    std::vector<long> out;
    for (int d = lo; d <= hi; ++d) {
      const std::vector<int>& gens = i == 0 ? ds[0].row_degrees() : ds[static_cast<std::size_t>(i - 1)].col_degrees();
      const std::size_t dim = e.tensor_layout(gens, n, d).dim;
      std::size_t rank_out = 0;
      if (i >= 1) {
        const Matrix& di = ds[static_cast<std::size_t>(i - 1)];
        rank_out = e.rank_of(e.tensor_images(di, n, d), e.tensor_layout(di.row_degrees(), n, d).dim);
      }
      const Matrix& dn = ds[static_cast<std::size_t>(i)];
      const std::size_t rank_in = e.rank_of(e.tensor_images(dn, n, d), dim);
      out.push_back(static_cast<long>(dim - rank_out - rank_in));
    }
    return out;
  });
}

std::vector<long> ext_hilbert(const Matrix& m, const Matrix& n, const std::vector<Polynomial>& ideal, int i, int lo,
                              int hi, int generator_bound, const Limits& limits) {
  return dispatch(m.space(), ideal, limits, [&](auto& e) {
    std::vector<Matrix> ds = e.resolution(m, i + 1, generator_bound);
    std::vector<long> out;
    for (int d = lo; d <= hi; ++d) {
      const std::vector<int>& gens = i == 0 ? ds[0].row_degrees() : ds[static_cast<std::size_t>(i - 1)].col_degrees();
      const std::size_t dim = e.hom_layout(gens, n, d).dim;
      // Outgoing: compose with d_{i+1}; incoming: image of Hom(F_{i-1}, N).
      const Matrix& dn = ds[static_cast<std::size_t>(i)];
      const std::size_t rank_out = e.rank_of(e.hom_images(dn, n, d), e.hom_layout(dn.col_degrees(), n, d).dim);
      std::size_t rank_in = 0;
      if (i >= 1) rank_in = e.rank_of(e.hom_images(ds[static_cast<std::size_t>(i - 1)], n, d), dim);
      out.push_back(static_cast<long>(dim - rank_out - rank_in));
    }
    return out;
  });
}

std::vector<long> betti_numbers(const Matrix& m, const std::vector<Polynomial>& ideal, int steps, int hi,
                                const Limits& limits) {
  return dispatch(m.space(), ideal, limits, [&](auto& e) {
    std::vector<long> out{static_cast<long>(m.rows())};
    // Replace the given relations by a minimal set chosen degree by degree.
    Matrix empty(m.space(), m.row_degrees(), {});
    Matrix d1 = empty;
    int lo = m.cols() ? *std::min_element(m.col_degrees().begin(), m.col_degrees().end()) : 0;
    for (int deg = lo; deg <= hi; ++deg) {
      using Vec = typename std::remove_reference_t<decltype(e)>::Vec;
      auto dst = e.layout(m.row_degrees(), deg);
      std::vector<Vec> target = e.map_images(m, deg);
      std::vector<Vec> have = e.map_images(d1, deg);
      auto r_have = e.rank_of(have, dst.dim);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.col_degrees()[j] != deg) continue;
        Matrix trial = d1.hcat(m.select_columns({j}));
        auto r = e.rank_of(e.map_images(trial, deg), dst.dim);
        if (r > r_have) {
          d1 = trial;
          r_have = r;
        }
      }
      (void)target;
    }
    std::vector<Matrix> ds{d1};
    out.push_back(static_cast<long>(d1.cols()));
    for (int s = 2; s <= steps; ++s) {
      ds.push_back(e.extend(ds.back(), hi));
      out.push_back(static_cast<long>(ds.back().cols()));
    }
    return out;
  });
}

}  // namespace citor::oracle
