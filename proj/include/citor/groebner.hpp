#pragma once

#include <cstdint>
#include <vector>

#include "citor/matrix.hpp"
#include "citor/term_order.hpp"

namespace citor {

struct ModuleTerm {
  Monomial monomial;
  std::uint32_t component = 0;
  Coefficient coefficient;
};

// Vector in S^r as a list of terms sorted descending by a TermOrder.
using SparseVector = std::vector<ModuleTerm>;

SparseVector to_sparse(const FreeModuleElement& e, const TermOrder& order);
SparseVector column_to_sparse(const Matrix& m, std::size_t j, const TermOrder& order);
FreeModuleElement from_sparse(const SparseVector& v, const SpacePtr& space, const std::vector<int>& shifts);
void sort_sparse(SparseVector& v, const TermOrder& order);

struct GroebnerOptions {
  bool reduce = true;
  // Record which input columns were needed as minimal generators modulo
  // the ring relations.
  bool track_minimal = true;
};

// Gröbner basis of the submodule of S^r (generator degrees = shifts of the
// order) spanned by the input columns and by g*e_i for each g in ideal_gb
// and each component i.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  static GroebnerBasis compute(const Matrix& gens, const std::vector<Polynomial>& ideal_gb, const TermOrder& order,
                               const GroebnerOptions& opts = {});
  static GroebnerBasis compute(const Matrix& gens, const std::vector<Polynomial>& ideal_gb = {});
  // Sparse entry point; every vector must be homogeneous.
  static GroebnerBasis compute_sparse(SpacePtr space, std::size_t rank, const std::vector<SparseVector>& gens,
                                      const std::vector<SparseVector>& relations, const TermOrder& order,
                                      const GroebnerOptions& opts = {});

  const SpacePtr& space() const { return space_; }
  std::size_t rank() const { return rank_; }
  const TermOrder& order() const { return order_; }
  const std::vector<SparseVector>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }
  // Indices of input generators that are minimal generators modulo the
  // relations, in input order.
  const std::vector<std::size_t>& minimal_inputs() const { return minimal_inputs_; }

  SparseVector normal_form(SparseVector v) const;
  FreeModuleElement normal_form(const FreeModuleElement& e) const;
  bool contains(const FreeModuleElement& e) const;

  Matrix as_matrix() const;

  // Hilbert function of S^r / U at degree d, via standard monomials.
  long hilbert_value(int d) const;
  // Krull dimension of S^r / U (-1 for the zero module).
  int quotient_dimension() const;

 private:
  SpacePtr space_;
  std::size_t rank_ = 0;
  TermOrder order_;
  std::vector<SparseVector> elements_;
  std::vector<std::size_t> minimal_inputs_;
  bool reduced_ = false;
};

// S-pair check: every S-pair of the basis reduces to zero.
bool verify_buchberger_criterion(const GroebnerBasis& gb);

// Reduced Gröbner basis of an ideal in grevlex.
std::vector<Polynomial> ideal_groebner_basis(const std::vector<Polynomial>& gens);
Polynomial reduce_polynomial(const Polynomial& p, const std::vector<Polynomial>& ideal_gb);
// Entrywise normal form modulo the ideal.
Matrix reduce_matrix(const Matrix& m, const std::vector<Polynomial>& ideal_gb);
// dim S/J for the ideal generated by the given polynomials (via lead terms of a GB).
int ideal_quotient_dimension(const std::vector<Polynomial>& ideal_gb, std::size_t nvars);

// Columns generating the kernel of m over R = S/(ideal): minimal generators,
// entries reduced modulo the ideal, ordered by degree.
Matrix syzygies(const Matrix& m, const std::vector<Polynomial>& ideal_gb = {}, bool schreyer = true);

// Indices of columns forming a minimal generating set of the submodule of
// R^r they span, in column order.
std::vector<std::size_t> minimal_generators(const Matrix& m, const std::vector<Polynomial>& ideal_gb = {});

// Kernel of the map coker(source_rel) -> coker(target_rel) given on
// generators by psi. generators: columns in the source free module;
// relations: presentation on those generators.
struct KernelPresentation {
  Matrix generators;
  Matrix relations;
};

KernelPresentation kernel_of_map(const Matrix& psi, const Matrix& source_rel, const Matrix& target_rel,
                                 const std::vector<Polynomial>& ideal_gb = {});

// Homology of coker(a0) <-phi- coker(a1) <-psi- coker(a2) at the middle,
// where phi, psi are given on generators. Returns a presentation matrix of
// ker(phi)/im(psi) (not minimalized).
Matrix homology_presentation(const Matrix& phi, const Matrix& psi, const Matrix& a0, const Matrix& a1,
                             const std::vector<Polynomial>& ideal_gb = {});

}  // namespace citor
