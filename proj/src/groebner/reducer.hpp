#pragma once

#include <vector>

#include "citor/groebner.hpp"

namespace citor::detail {

int term_degree(const ModuleTerm& t, const TermOrder& order);
int vector_degree(const SparseVector& v, const TermOrder& order);

// v - c*m*g, where the lead of m*g cancels v[pos]. Terms before pos are kept.
SparseVector subtract_multiple(const SparseVector& v, std::size_t pos, const SparseVector& g, const Monomial& m,
                               const Coefficient& c, const TermOrder& order);
void make_monic(SparseVector& v);

// Division by a fixed list of monic vectors.
class Reducer {
 public:
  explicit Reducer(const TermOrder& order) : order_(order) {}

  void add(const SparseVector* g);
  std::size_t size() const { return basis_.size(); }
  const SparseVector& at(std::size_t i) const { return *basis_[i]; }

  // Index of a basis element whose lead divides m*e_comp, or -1.
  long find_divisor(const Monomial& m, std::uint32_t comp) const;
  // Full reduction when full is set; otherwise stops once the lead is irreducible.
  SparseVector reduce(SparseVector v, bool full, std::size_t start = 0) const;

 private:
  const TermOrder& order_;
  std::vector<const SparseVector*> basis_;
  std::vector<std::vector<std::size_t>> by_component_;
};

}  // namespace citor::detail
