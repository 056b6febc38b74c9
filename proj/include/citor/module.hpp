#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "citor/ext_int.hpp"
#include "citor/groebner.hpp"
#include "citor/ring.hpp"

namespace citor {

// coker(A) for a homogeneous matrix A over R: rows are generators (degrees =
// row degrees), columns are relations. The zero module has no generators.
// Derived data (minimal form, relation basis over S) is computed once and
// shared between copies.
class Module {
 public:
  Module() = default;
  Module(RingPtr ring, Matrix relations, std::string name = "");

  static Module free(RingPtr ring, std::vector<int> degrees, std::string name = "");
  static Module zero(RingPtr ring);
  // R/J shifted so the generator sits in degree `degree`.
  static Module cyclic(RingPtr ring, const std::vector<Polynomial>& ideal, int degree = 0, std::string name = "");

  const RingPtr& ring() const { return ring_; }
  const Matrix& relations() const { return relations_; }
  const std::vector<int>& degrees() const { return relations_.row_degrees(); }
  std::size_t generator_count() const { return relations_.rows(); }
  const std::string& name() const { return name_; }
  Module named(std::string name) const;

  const Module& minimal() const;
  bool is_minimal_presentation() const;
  bool is_zero() const { return minimal().generator_count() == 0; }
  bool is_free() const { return minimal().relations().cols() == 0; }

  // Presentation over S: the relations with f_k*e_i appended.
  const Matrix& ambient_relations() const;
  // Gröbner basis over S of the ambient relations (term-over-position grevlex).
  const GroebnerBasis& relation_basis() const;

  long hilbert_value(int d) const;
  std::vector<long> hilbert_values(int lo, int hi) const;
  // Krull dimension; -inf for the zero module.
  ExtInt dimension() const;

  // M(a): generator degrees lowered by a.
  Module twist(int a) const;

  std::string to_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  Matrix relations_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

void require_same_ring(const Module& a, const Module& b);
void require_certified(const Ring& r, const std::string& what);

// Unit elimination, reduction modulo the ideal and removal of redundant
// relations. Rows that survive keep their relative order.
Matrix prune_presentation(const Matrix& relations, const std::vector<Polynomial>& ideal_gb);
Module minimalize(const Module& m);

Module dual(const Module& m);
Module tensor(const Module& a, const Module& b);

struct BidualityReport {
  Module kernel;
  Module cokernel;
  bool kernel_zero = true;
  bool cokernel_zero = true;
  bool torsion_free = true;
  bool reflexive = true;
};

BidualityReport biduality_report(const Module& m);

struct ModuleProfile {
  ExtInt dim;
  ExtInt depth;
  ExtInt length;
  std::size_t betti0 = 0;
  ExtInt pd_ambient;  // projective dimension over S
  bool maximal_cohen_macaulay = false;

  std::string to_string() const;
};

ModuleProfile module_profile(const Module& m);
ExtInt module_depth(const Module& m);

struct SerreReport {
  bool holds = true;
  int n = 0;
  // First failing j and the dimension of Ext^j_S(M,S), when it fails.
  int failing_index = 0;
  ExtInt support_dimension;
  // dim Ext^j_S(M,S) for j = c+1..dim S.
  std::vector<std::pair<int, ExtInt>> ext_dimensions;

  std::string to_string() const;
};

SerreReport serre_condition(const Module& m, int n);

// Ext^1_R(M, syz^1 M), whose support is the non-free locus of M.
Module nonfree_locus_module(const Module& m);
// Codimension in Spec R of the non-free locus.
ExtInt nonfree_locus_codim(const Module& m);

// Ideal generated by the (r-k)-minors of a presentation with r generators.
std::vector<Polynomial> fitting_ideal(const Module& m, int k);

struct RankAtPrime {
  PrimeIdeal prime;
  int rank = 0;
  bool locally_free = false;
};

struct RankProfile {
  std::vector<RankAtPrime> ranks;
  bool constant_rank = false;

  std::string to_string() const;
};

RankProfile rank_profile(const Module& m);

}  // namespace citor
