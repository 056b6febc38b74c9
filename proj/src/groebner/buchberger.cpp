#include <algorithm>
#include <deque>
#include <map>

#include "citor/errors.hpp"
#include "citor/groebner.hpp"
#include "reducer.hpp"

namespace citor {

using detail::Reducer;
using detail::vector_degree;

void sort_sparse(SparseVector& v, const TermOrder& order) {
  std::sort(v.begin(), v.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return order.compare(a.monomial, a.component, b.monomial, b.component) > 0;
  });
}

SparseVector to_sparse(const FreeModuleElement& e, const TermOrder& order) {
  SparseVector v;
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    for (const auto& t : e.components[i].terms()) {
      v.push_back(ModuleTerm{t.monomial, static_cast<std::uint32_t>(i), t.coefficient});
    }
  }
  sort_sparse(v, order);
  return v;
}

SparseVector column_to_sparse(const Matrix& m, std::size_t j, const TermOrder& order) {
  SparseVector v;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& t : m.at(i, j).terms()) {
      v.push_back(ModuleTerm{t.monomial, static_cast<std::uint32_t>(i), t.coefficient});
    }
  }
  sort_sparse(v, order);
  return v;
}

FreeModuleElement from_sparse(const SparseVector& v, const SpacePtr& space, const std::vector<int>& shifts) {
  std::vector<std::vector<Term>> comps(shifts.size());
  for (const auto& t : v) comps.at(t.component).push_back(Term{t.monomial, t.coefficient});
  FreeModuleElement e;
  e.shifts = shifts;
  for (auto& c : comps) e.components.emplace_back(space, std::move(c));
  return e;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t component;
  bool alive;
};

class Buchberger {
 public:
  explicit Buchberger(const TermOrder& order) : order_(order), reducer_(order) {}

  void run(const std::vector<SparseVector>& gens, const std::vector<SparseVector>& relations, bool track) {
    struct Input {
      const SparseVector* v;
      int degree;
      bool is_gen;
      std::size_t index;
    };
    std::vector<Input> inputs;
    // Relations of a degree are inserted before the generators of that degree.
    for (std::size_t k = 0; k < relations.size(); ++k) {
      if (!relations[k].empty()) inputs.push_back({&relations[k], vector_degree(relations[k], order_), false, k});
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!gens[k].empty()) inputs.push_back({&gens[k], vector_degree(gens[k], order_), true, k});
    }
    std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return !a.is_gen && b.is_gen;
    });
    std::size_t next_input = 0;
    while (true) {
      int d = 0;
      bool have = false;
      if (!pending_.empty()) {
        d = pending_.begin()->first;
        have = true;
      }
      if (next_input < inputs.size() && (!have || inputs[next_input].degree < d)) {
        d = inputs[next_input].degree;
        have = true;
      }
      if (!have) break;
      auto it = pending_.find(d);
      if (it != pending_.end()) {
        std::vector<std::size_t> batch = std::move(it->second);
        pending_.erase(it);
        for (std::size_t p : batch) {
          if (!pairs_[p].alive) continue;
          pairs_[p].alive = false;
          SparseVector s = spoly(pairs_[p]);
          s = reducer_.reduce(std::move(s), true);
          if (!s.empty()) insert(std::move(s));
        }
      }
      while (next_input < inputs.size() && inputs[next_input].degree == d) {
        const Input& in = inputs[next_input++];
        SparseVector r = reducer_.reduce(*in.v, true);
        if (r.empty()) continue;
        if (track && in.is_gen) minimal_.push_back(in.index);
        insert(std::move(r));
      }
    }
    std::sort(minimal_.begin(), minimal_.end());
  }

  std::vector<SparseVector> take_basis() {
    return std::vector<SparseVector>(std::make_move_iterator(basis_.begin()), std::make_move_iterator(basis_.end()));
  }
  std::vector<std::size_t> take_minimal() { return std::move(minimal_); }

 private:
  int pair_degree(const Pair& p) const { return p.lcm.degree() + order_.shift(p.component); }

  SparseVector spoly(const Pair& p) const {
    const SparseVector& a = basis_[p.i];
    const SparseVector& b = basis_[p.j];
    Monomial ma = p.lcm / a.front().monomial;
    Monomial mb = p.lcm / b.front().monomial;
    SparseVector v;
    v.reserve(a.size());
    for (const auto& t : a) v.push_back(ModuleTerm{t.monomial * ma, t.component, t.coefficient});
    return detail::subtract_multiple(v, 0, b, mb, Coefficient::one(b.front().coefficient.field()), order_);
  }

  void insert(SparseVector v) {
    detail::make_monic(v);
    const std::size_t k = basis_.size();
    const Monomial lead = v.front().monomial;
    const std::uint32_t comp = v.front().component;
    basis_.push_back(std::move(v));
    // Chain criterion on existing pairs.
    for (auto& [deg, list] : pending_) {
      for (std::size_t p : list) {
        Pair& pr = pairs_[p];
        if (!pr.alive || pr.component != comp) continue;
        if (!lead.divides(pr.lcm)) continue;
        const Monomial& li = basis_[pr.i].front().monomial;
        const Monomial& lj = basis_[pr.j].front().monomial;
        if (!(li.lcm(lead) == pr.lcm) && !(lj.lcm(lead) == pr.lcm)) pr.alive = false;
      }
    }
    std::vector<Pair> fresh;
    if (comp < by_component_.size()) {
      for (std::size_t i : by_component_[comp]) {
        fresh.push_back(Pair{i, k, basis_[i].front().monomial.lcm(lead), comp, true});
      }
    }
    std::stable_sort(fresh.begin(), fresh.end(),
                     [](const Pair& a, const Pair& b) { return a.lcm.degree() < b.lcm.degree(); });
    std::vector<std::size_t> kept;
    for (const auto& p : fresh) {
      bool redundant = false;
      for (std::size_t q : kept) {
        if (pairs_[q].lcm.divides(p.lcm)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      kept.push_back(pairs_.size());
      pending_[pair_degree(p)].push_back(pairs_.size());
      pairs_.push_back(p);
    }
    if (by_component_.size() <= comp) by_component_.resize(comp + 1);
    by_component_[comp].push_back(k);
    reducer_.add(&basis_[k]);
  }

  const TermOrder& order_;
  Reducer reducer_;
  // deque keeps element addresses stable for the reducer.
  std::deque<SparseVector> basis_;
  std::vector<std::vector<std::size_t>> by_component_;
  std::vector<Pair> pairs_;
  std::map<int, std::vector<std::size_t>> pending_;
  std::vector<std::size_t> minimal_;
};

}  // namespace

GroebnerBasis GroebnerBasis::compute_sparse(SpacePtr space, std::size_t rank, const std::vector<SparseVector>& gens,
                                            const std::vector<SparseVector>& relations, const TermOrder& order,
                                            const GroebnerOptions& opts) {
  for (const auto* list : {&gens, &relations}) {
    for (const auto& v : *list) {
      if (v.empty()) continue;
      const int d = vector_degree(v, order);
      for (const auto& t : v) {
        if (detail::term_degree(t, order) != d) fail(ErrorKind::graded_violation, "inhomogeneous generator");
        if (t.component >= rank) fail(ErrorKind::incompatible_operands, "generator component out of range");
      }
    }
  }
  Buchberger engine(order);
  engine.run(gens, relations, opts.track_minimal);
  GroebnerBasis gb;
  gb.space_ = std::move(space);
  gb.rank_ = rank;
  gb.order_ = order;
  gb.elements_ = engine.take_basis();
  gb.minimal_inputs_ = engine.take_minimal();
  if (opts.reduce) {
    // Degree-by-degree insertion never produces a lead divisible by another
    // lead, so tail reduction alone gives the reduced basis.
    std::vector<SparseVector> out(gb.elements_.size());
    Reducer red(gb.order_);
    for (const auto& e : gb.elements_) red.add(&e);
    for (std::size_t k = 0; k < gb.elements_.size(); ++k) out[k] = red.reduce(gb.elements_[k], true, 1);
    gb.elements_ = std::move(out);
    gb.reduced_ = true;
  }
  std::stable_sort(gb.elements_.begin(), gb.elements_.end(), [&](const SparseVector& a, const SparseVector& b) {
    return gb.order_.compare(a.front().monomial, a.front().component, b.front().monomial, b.front().component) < 0;
  });
  return gb;
}

namespace {

std::vector<SparseVector> ideal_relations(const std::vector<Polynomial>& ideal_gb, std::size_t rank,
                                          const TermOrder& order, std::size_t first = 0) {
  std::vector<SparseVector> rel;
  for (std::size_t i = first; i < rank; ++i) {
    for (const auto& g : ideal_gb) {
      SparseVector v;
      for (const auto& t : g.terms()) v.push_back(ModuleTerm{t.monomial, static_cast<std::uint32_t>(i), t.coefficient});
      sort_sparse(v, order);
      rel.push_back(std::move(v));
    }
  }
  return rel;
}

std::vector<SparseVector> matrix_columns(const Matrix& m, const TermOrder& order) {
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(column_to_sparse(m, j, order));
  return cols;
}

TermOrder default_order(const std::vector<int>& shifts) {
  TermOrder order(MonomialOrder::grevlex);
  order.set_shifts(shifts);
  return order;
}

}  // namespace

GroebnerBasis GroebnerBasis::compute(const Matrix& gens, const std::vector<Polynomial>& ideal_gb,
                                     const TermOrder& order, const GroebnerOptions& opts) {
  gens.validate_homogeneous();
  return compute_sparse(gens.space(), gens.rows(), matrix_columns(gens, order),
                        ideal_relations(ideal_gb, gens.rows(), order), order, opts);
}

GroebnerBasis GroebnerBasis::compute(const Matrix& gens, const std::vector<Polynomial>& ideal_gb) {
  return compute(gens, ideal_gb, default_order(gens.row_degrees()));
}

SparseVector GroebnerBasis::normal_form(SparseVector v) const {
  Reducer red(order_);
  for (const auto& e : elements_) red.add(&e);
  return red.reduce(std::move(v), true);
}

FreeModuleElement GroebnerBasis::normal_form(const FreeModuleElement& e) const {
  if (e.components.size() != rank_) fail(ErrorKind::incompatible_operands, "element rank differs from the basis");
  SparseVector v = normal_form(to_sparse(e, order_));
  std::vector<int> shifts = e.shifts;
  return from_sparse(v, space_ ? space_ : e.components.front().space(), shifts);
}

bool GroebnerBasis::contains(const FreeModuleElement& e) const {
  if (e.components.size() != rank_) fail(ErrorKind::incompatible_operands, "element rank differs from the basis");
  return normal_form(to_sparse(e, order_)).empty();
}

Matrix GroebnerBasis::as_matrix() const {
  std::vector<int> shifts;
  for (std::size_t i = 0; i < rank_; ++i) shifts.push_back(order_.shift(static_cast<std::uint32_t>(i)));
  std::vector<FreeModuleElement> cols;
  for (const auto& e : elements_) cols.push_back(from_sparse(e, space_, shifts));
  return Matrix::from_columns(space_, shifts, cols);
}

long GroebnerBasis::hilbert_value(int d) const {
  const std::size_t n = space_->nvars();
  std::vector<std::vector<const Monomial*>> leads(rank_);
  for (const auto& e : elements_) leads[e.front().component].push_back(&e.front().monomial);
  long total = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    const int e = d - order_.shift(static_cast<std::uint32_t>(i));
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(n, e)) {
      bool standard = true;
      for (const Monomial* l : leads[i]) {
        if (l->divides(m)) {
          standard = false;
          break;
        }
      }
      if (standard) ++total;
    }
  }
  return total;
}

namespace {

// dim k[x]/J for a monomial ideal J given by generators.
int monomial_quotient_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (g[v] > 0) s |= 1u << v;
    }
    if (s == 0) return -1;
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t full = nvars == 32 ? 0xffffffffu : ((1u << nvars) - 1);
  for (std::uint32_t set = 0; set <= full; ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace

int GroebnerBasis::quotient_dimension() const {
  std::vector<std::vector<Monomial>> leads(rank_);
  for (const auto& e : elements_) leads[e.front().component].push_back(e.front().monomial);
  int best = -1;
  for (std::size_t i = 0; i < rank_; ++i) best = std::max(best, monomial_quotient_dimension(leads[i], space_->nvars()));
  return best;
}

bool verify_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& els = gb.elements();
  Reducer red(gb.order());
  std::vector<SparseVector> monic = els;
  for (auto& e : monic) detail::make_monic(e);
  for (const auto& e : monic) red.add(&e);
  for (std::size_t i = 0; i < monic.size(); ++i) {
    for (std::size_t j = i + 1; j < monic.size(); ++j) {
      const auto& a = monic[i];
      const auto& b = monic[j];
      if (a.front().component != b.front().component) continue;
      Monomial l = a.front().monomial.lcm(b.front().monomial);
      SparseVector v;
      Monomial ma = l / a.front().monomial;
      for (const auto& t : a) v.push_back(ModuleTerm{t.monomial * ma, t.component, t.coefficient});
      SparseVector s = detail::subtract_multiple(v, 0, b, l / b.front().monomial,
                                                 Coefficient::one(b.front().coefficient.field()), gb.order());
      if (!red.reduce(std::move(s), true).empty()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> ideal_groebner_basis(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  SpacePtr space = gens.front().space();
  std::vector<std::vector<Polynomial>> rows(1);
  for (const auto& g : gens) {
    if (!g.is_zero() && !g.degree_report().homogeneous) {
      fail(ErrorKind::graded_violation, g.to_string() + " is not homogeneous");
    }
  }
  TermOrder order = default_order({0});
  std::vector<SparseVector> cols;
  for (const auto& g : gens) cols.push_back(to_sparse(FreeModuleElement{{g}, {0}}, order));
  GroebnerBasis gb = GroebnerBasis::compute_sparse(space, 1, cols, {}, order);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) out.push_back(from_sparse(e, space, {0}).components[0]);
  return out;
}

Polynomial reduce_polynomial(const Polynomial& p, const std::vector<Polynomial>& ideal_gb) {
  if (ideal_gb.empty() || p.is_zero()) return p;
  TermOrder order = default_order({0});
  std::vector<SparseVector> basis;
  for (const auto& g : ideal_gb) {
    SparseVector v = to_sparse(FreeModuleElement{{g}, {0}}, order);
    detail::make_monic(v);
    basis.push_back(std::move(v));
  }
  Reducer red(order);
  for (const auto& b : basis) red.add(&b);
  SparseVector r = red.reduce(to_sparse(FreeModuleElement{{p}, {0}}, order), true);
  return from_sparse(r, p.space(), {0}).components[0];
}

Matrix reduce_matrix(const Matrix& m, const std::vector<Polynomial>& ideal_gb) {
  if (ideal_gb.empty()) return m;
  TermOrder order = default_order({0});
  std::vector<SparseVector> basis;
  for (const auto& g : ideal_gb) {
    SparseVector v = to_sparse(FreeModuleElement{{g}, {0}}, order);
    detail::make_monic(v);
    basis.push_back(std::move(v));
  }
  Reducer red(order);
  for (const auto& b : basis) red.add(&b);
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& p = m.at(i, j);
      if (p.is_zero()) continue;
      SparseVector r = red.reduce(to_sparse(FreeModuleElement{{p}, {0}}, order), true);
      out.set(i, j, from_sparse(r, m.space(), {0}).components[0]);
    }
  }
  return out;
}

int ideal_quotient_dimension(const std::vector<Polynomial>& ideal_gb, std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal_gb) {
    if (!g.is_zero()) leads.push_back(g.leading().monomial);
  }
  return monomial_quotient_dimension(leads, nvars);
}

namespace {

Matrix project_rows(const Matrix& m, std::size_t count) {
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = i;
  return m.select_rows(idx);
}

// Minimal generators of (span(cols) + span(extra) + I*F) / (span(extra) + I*F).
std::vector<std::size_t> select_minimal(const Matrix& cols, const Matrix* extra, const std::vector<Polynomial>& ideal_gb) {
  TermOrder order = default_order(cols.row_degrees());
  std::vector<SparseVector> rel = ideal_relations(ideal_gb, cols.rows(), order);
  if (extra) {
    for (std::size_t j = 0; j < extra->cols(); ++j) rel.push_back(column_to_sparse(*extra, j, order));
  }
  GroebnerOptions opts;
  opts.reduce = false;
  GroebnerBasis gb = GroebnerBasis::compute_sparse(cols.space(), cols.rows(), matrix_columns(cols, order), rel, order, opts);
  return gb.minimal_inputs();
}

}  // namespace

std::vector<std::size_t> minimal_generators(const Matrix& m, const std::vector<Polynomial>& ideal_gb) {
  m.validate_homogeneous();
  return select_minimal(m, nullptr, ideal_gb);
}

Matrix syzygies(const Matrix& m, const std::vector<Polynomial>& ideal_gb, bool schreyer) {
  m.validate_homogeneous();
  const std::size_t r = m.rows();
  const std::size_t s = m.cols();
  if (s == 0) return Matrix(m.space(), {}, {});
  if (r == 0) return Matrix::identity(m.space(), m.col_degrees());
  std::vector<int> shifts = m.row_degrees();
  shifts.insert(shifts.end(), m.col_degrees().begin(), m.col_degrees().end());
  std::vector<int> blocks(r, 0);
  blocks.resize(r + s, 1);
  TermOrder base = default_order(m.row_degrees());
  TermOrder order(MonomialOrder::grevlex, schreyer ? ModuleExtension::schreyer : ModuleExtension::term_over_position);
  order.set_shifts(shifts).set_blocks(blocks);
  std::vector<SparseVector> cols = matrix_columns(m, base);
  if (schreyer) {
    std::vector<SchreyerLead> leads;
    for (const auto& c : cols) {
      if (c.empty()) {
        leads.push_back(SchreyerLead{Monomial(m.space()->nvars()), 0});
      } else {
        leads.push_back(SchreyerLead{c.front().monomial, c.front().component});
      }
    }
    order.set_schreyer(static_cast<std::uint32_t>(r), std::move(leads));
  }
  const Coefficient one = Coefficient::one(m.space()->field);
  std::vector<SparseVector> gens;
  for (std::size_t j = 0; j < s; ++j) {
    SparseVector v = cols[j];
    v.push_back(ModuleTerm{Monomial(m.space()->nvars()), static_cast<std::uint32_t>(r + j), one});
    sort_sparse(v, order);
    gens.push_back(std::move(v));
  }
  std::vector<SparseVector> rel = ideal_relations(ideal_gb, r, order);
  GroebnerOptions opts;
  opts.reduce = false;
  opts.track_minimal = false;
  GroebnerBasis gb = GroebnerBasis::compute_sparse(m.space(), r + s, gens, rel, order, opts);
  std::vector<FreeModuleElement> kernel;
  for (const auto& e : gb.elements()) {
    if (e.front().component < r) continue;
    SparseVector shifted;
    for (const auto& t : e) {
      shifted.push_back(ModuleTerm{t.monomial, static_cast<std::uint32_t>(t.component - r), t.coefficient});
    }
    kernel.push_back(from_sparse(shifted, m.space(), m.col_degrees()));
  }
  Matrix k = reduce_matrix(Matrix::from_columns(m.space(), m.col_degrees(), kernel), ideal_gb).drop_zero_columns();
  return k.select_columns(select_minimal(k, nullptr, ideal_gb));
}

KernelPresentation kernel_of_map(const Matrix& psi, const Matrix& source_rel, const Matrix& target_rel,
                                 const std::vector<Polynomial>& ideal_gb) {
  if (psi.cols() != source_rel.rows() || psi.rows() != target_rel.rows()) {
    fail(ErrorKind::incompatible_operands, "map does not match the given presentations");
  }
  const std::size_t n = psi.cols();
  Matrix k = reduce_matrix(project_rows(syzygies(psi.hcat(target_rel), ideal_gb), n), ideal_gb).drop_zero_columns();
  k = k.select_columns(select_minimal(k, &source_rel, ideal_gb));
  Matrix rel = project_rows(syzygies(k.hcat(source_rel), ideal_gb), k.cols());
  return KernelPresentation{k, reduce_matrix(rel, ideal_gb)};
}

Matrix homology_presentation(const Matrix& phi, const Matrix& psi, const Matrix& a0, const Matrix& a1,
                             const std::vector<Polynomial>& ideal_gb) {
  const std::size_t n = phi.cols();
  Matrix k = reduce_matrix(project_rows(syzygies(phi.hcat(a0), ideal_gb), n), ideal_gb).drop_zero_columns();
  Matrix boundaries = psi.hcat(a1);
  k = k.select_columns(select_minimal(k, &boundaries, ideal_gb));
  Matrix rel = project_rows(syzygies(k.hcat(boundaries), ideal_gb), k.cols());
  return reduce_matrix(rel, ideal_gb);
}

}  // namespace citor
