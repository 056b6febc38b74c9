#pragma once

#include <cstddef>
#include <vector>

#include "citor/matrix.hpp"

// Independent verification path: graded pieces of rings, modules and
// complexes are assembled as dense coefficient matrices, one degree at a time,
// and every answer comes from ranks. Nothing here touches the Gröbner engine;
// the ring is given by its ideal generators, not by a basis.
namespace citor::oracle {

struct Limits {
  // Largest dimension of a single graded piece before giving up.
  std::size_t max_dimension = 4000;
};

// Hilbert values of coker(pres) over S/(ideal) at degrees lo..hi.
std::vector<long> hilbert_values(const Matrix& pres, const std::vector<Polynomial>& ideal, int lo, int hi,
                                 const Limits& limits = {});

// Hilbert values of ker(m) as a submodule of the source free module of m, over S/(ideal).
std::vector<long> syzygy_hilbert(const Matrix& m, const std::vector<Polynomial>& ideal, int lo, int hi,
                                 const Limits& limits = {});

// Hilbert values of the kernel of coker(source) -> coker(target) given on generators by psi.
std::vector<long> kernel_hilbert(const Matrix& psi, const Matrix& source, const Matrix& target,
                                 const std::vector<Polynomial>& ideal, int lo, int hi, const Limits& limits = {});

// Hilbert values of Tor_i(coker m, coker n) at degrees lo..hi. The resolution
// of coker m is built degree by degree up to hi, which is exact for these degrees.
std::vector<long> tor_hilbert(const Matrix& m, const Matrix& n, const std::vector<Polynomial>& ideal, int i, int lo,
                              int hi, const Limits& limits = {});

// Hilbert values of Ext^i(coker m, coker n) at degrees lo..hi. Generators of
// the resolution are searched up to generator_bound; the answer is exact when
// every generator of F_{i+1} has degree at most that bound.
std::vector<long> ext_hilbert(const Matrix& m, const Matrix& n, const std::vector<Polynomial>& ideal, int i, int lo,
                              int hi, int generator_bound, const Limits& limits = {});

// Degree-truncated Betti numbers: number of generators of F_i of degree <= hi
// in a minimal resolution of coker m, for i = 0..steps.
std::vector<long> betti_numbers(const Matrix& m, const std::vector<Polynomial>& ideal, int steps, int hi,
                                const Limits& limits = {});

}  // namespace citor::oracle
