#pragma once

#include <optional>
#include <string>
#include <vector>

#include "citor/polynomial.hpp"

namespace citor {

// Element of a graded free module sum S(-a_i).
struct FreeModuleElement {
  std::vector<Polynomial> components;
  std::vector<int> shifts;

  bool is_zero() const;
  // Common value of deg(component_i) + shift_i; nullopt for zero or inhomogeneous.
  std::optional<int> degree() const;
  bool homogeneous() const;
};

// Homogeneous map between graded free modules: column j is the image of the
// j-th source generator (degree col_degrees[j]) in the target with generator
// degrees row_degrees. Entry (i,j) is homogeneous of degree col - row.
class Matrix {
 public:
  Matrix() = default;
  Matrix(SpacePtr space, std::vector<int> row_degrees, std::vector<int> col_degrees);
  // Column degrees inferred from the entries (zero columns get degree row_degrees[0], or 0).
  static Matrix from_rows(SpacePtr space, std::vector<int> row_degrees, const std::vector<std::vector<Polynomial>>& rows);
  static Matrix identity(SpacePtr space, const std::vector<int>& degrees);
  static Matrix from_columns(SpacePtr space, std::vector<int> row_degrees, const std::vector<FreeModuleElement>& cols);

  const SpacePtr& space() const { return space_; }
  std::size_t rows() const { return row_degrees_.size(); }
  std::size_t cols() const { return col_degrees_.size(); }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  void set(std::size_t i, std::size_t j, Polynomial p);

  FreeModuleElement column(std::size_t j) const;
  bool is_zero() const;
  bool column_is_zero(std::size_t j) const;
  // True when no entry has a nonzero constant term.
  bool is_minimal() const;

  // Throws graded_violation naming the offending entry.
  void validate_homogeneous() const;

  // Dual map: rows and columns swap, degrees negate.
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-() const;
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  Matrix block_diag(const Matrix& o) const;
  // A ⊗ id on a free module with the given generator degrees:
  // rows (i,k) of degree row_i + b_k, columns (j,k) of degree col_j + b_k.
  Matrix tensor_identity(const std::vector<int>& degrees) const;
  // id ⊗ A.
  Matrix identity_tensor(const std::vector<int>& degrees) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix drop_zero_columns() const;
  Matrix with_row_degrees(std::vector<int> degrees) const;

  bool operator==(const Matrix& o) const;
  std::string to_string() const;

 private:
  SpacePtr space_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<Polynomial> entries_;
};

}  // namespace citor
