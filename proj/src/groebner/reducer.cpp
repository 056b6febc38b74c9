#include "reducer.hpp"

namespace citor::detail {

int term_degree(const ModuleTerm& t, const TermOrder& order) {
  return t.monomial.degree() + order.shift(t.component);
}

int vector_degree(const SparseVector& v, const TermOrder& order) { return term_degree(v.front(), order); }

SparseVector subtract_multiple(const SparseVector& v, std::size_t pos, const SparseVector& g, const Monomial& m,
                               const Coefficient& c, const TermOrder& order) {
  SparseVector out;
  out.reserve(v.size() + g.size());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos));
  std::size_t i = pos + 1;
  std::size_t j = 1;
  while (i < v.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(v[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    if (i == v.size()) {
      out.push_back(ModuleTerm{gm, g[j].component, -(g[j].coefficient * c)});
      ++j;
      continue;
    }
    auto cmp = order.compare(v[i].monomial, v[i].component, gm, g[j].component);
    if (cmp > 0) {
      out.push_back(v[i++]);
    } else if (cmp < 0) {
      out.push_back(ModuleTerm{gm, g[j].component, -(g[j].coefficient * c)});
      ++j;
    } else {
      Coefficient s = v[i].coefficient - g[j].coefficient * c;
      if (!s.is_zero()) out.push_back(ModuleTerm{v[i].monomial, v[i].component, s});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(SparseVector& v) {
  if (v.empty() || v.front().coefficient.is_one()) return;
  Coefficient inv = v.front().coefficient.inverse();
  for (auto& t : v) t.coefficient *= inv;
}

void Reducer::add(const SparseVector* g) {
  std::uint32_t comp = g->front().component;
  if (by_component_.size() <= comp) by_component_.resize(comp + 1);
  by_component_[comp].push_back(basis_.size());
  basis_.push_back(g);
}

long Reducer::find_divisor(const Monomial& m, std::uint32_t comp) const {
  if (comp >= by_component_.size()) return -1;
  for (std::size_t idx : by_component_[comp]) {
    if (basis_[idx]->front().monomial.divides(m)) return static_cast<long>(idx);
  }
  return -1;
}

SparseVector Reducer::reduce(SparseVector v, bool full, std::size_t start) const {
  std::size_t pos = start;
  while (pos < v.size()) {
    const ModuleTerm& t = v[pos];
    long k = find_divisor(t.monomial, t.component);
    if (k < 0) {
      if (!full) return v;
      ++pos;
      continue;
    }
    const SparseVector& g = *basis_[static_cast<std::size_t>(k)];
    Monomial q = t.monomial / g.front().monomial;
    Coefficient c = t.coefficient;
    v = subtract_multiple(v, pos, g, q, c, order_);
  }
  return v;
}

}  // namespace citor::detail
