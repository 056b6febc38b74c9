#include "citor/matrix.hpp"

#include "citor/errors.hpp"

namespace citor {

bool FreeModuleElement::is_zero() const {
  for (const auto& p : components) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::optional<int> FreeModuleElement::degree() const {
  std::optional<int> d;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& p = components[i];
    if (p.is_zero()) continue;
    DegreeReport r = p.degree_report();
    if (!r.homogeneous) return std::nullopt;
    int di = r.degree + (i < shifts.size() ? shifts[i] : 0);
    if (d && *d != di) return std::nullopt;
    d = di;
  }
  return d;
}

bool FreeModuleElement::homogeneous() const { return is_zero() || degree().has_value(); }

Matrix::Matrix(SpacePtr space, std::vector<int> row_degrees, std::vector<int> col_degrees)
    : space_(std::move(space)), row_degrees_(std::move(row_degrees)), col_degrees_(std::move(col_degrees)) {
  entries_.assign(rows() * cols(), Polynomial(space_));
}

Matrix Matrix::from_rows(SpacePtr space, std::vector<int> row_degrees,
                         const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.size() != row_degrees.size()) {
    fail(ErrorKind::graded_violation, "matrix has " + std::to_string(rows.size()) + " rows but " +
                                          std::to_string(row_degrees.size()) + " shifts");
  }
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != ncols) fail(ErrorKind::graded_violation, "matrix rows have different lengths");
  }
  std::vector<int> col_degrees(ncols, row_degrees.empty() ? 0 : row_degrees[0]);
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Polynomial& p = rows[i][j];
      if (p.is_zero()) continue;
      DegreeReport r = p.degree_report();
      if (!r.homogeneous) {
        fail(ErrorKind::graded_violation,
             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") " + p.to_string() + " is not homogeneous");
      }
      col_degrees[j] = row_degrees[i] + r.degree;
      break;
    }
  }
  Matrix m(space, row_degrees, col_degrees);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, rows[i][j]);
  }
  m.validate_homogeneous();
  return m;
}

Matrix Matrix::identity(SpacePtr space, const std::vector<int>& degrees) {
  Matrix m(space, degrees, degrees);
  for (std::size_t i = 0; i < degrees.size(); ++i) m.set(i, i, Polynomial::constant(space, 1));
  return m;
}

Matrix Matrix::from_columns(SpacePtr space, std::vector<int> row_degrees, const std::vector<FreeModuleElement>& cols) {
  std::vector<int> col_degrees;
  for (const auto& c : cols) {
    auto d = c.degree();
    if (!d && !c.is_zero()) fail(ErrorKind::graded_violation, "column is not homogeneous");
    col_degrees.push_back(d.value_or(row_degrees.empty() ? 0 : row_degrees[0]));
  }
  Matrix m(space, row_degrees, col_degrees);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].components.size() != row_degrees.size()) {
      fail(ErrorKind::incompatible_operands, "column length does not match the target rank");
    }
    for (std::size_t i = 0; i < row_degrees.size(); ++i) m.set(i, j, cols[j].components[i]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Polynomial p) { entries_[i * cols() + j] = std::move(p); }

FreeModuleElement Matrix::column(std::size_t j) const {
  FreeModuleElement e;
  e.shifts = row_degrees_;
  for (std::size_t i = 0; i < rows(); ++i) e.components.push_back(at(i, j));
  return e;
}

bool Matrix::is_zero() const {
  for (const auto& p : entries_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool Matrix::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows(); ++i) {
    if (!at(i, j).is_zero()) return false;
  }
  return true;
}

bool Matrix::is_minimal() const {
  for (const auto& p : entries_) {
    if (!p.constant_term().is_zero()) return false;
  }
  return true;
}

void Matrix::validate_homogeneous() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const Polynomial& p = at(i, j);
      if (p.is_zero()) continue;
      DegreeReport r = p.degree_report();
      const int want = col_degrees_[j] - row_degrees_[i];
      if (!r.homogeneous || r.degree != want) {
        fail(ErrorKind::graded_violation, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                                              p.to_string() + " has degree " + r.to_string() + ", expected " +
                                              std::to_string(want));
      }
    }
  }
}

Matrix Matrix::transpose() const {
  std::vector<int> rd, cd;
  for (int d : col_degrees_) rd.push_back(-d);
  for (int d : row_degrees_) cd.push_back(-d);
  Matrix t(space_, rd, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) t.set(j, i, at(i, j));
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols() != o.rows()) fail(ErrorKind::incompatible_operands, "matrix product with mismatched sizes");
  Matrix out(space_, row_degrees_, o.col_degrees_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < o.cols(); ++j) {
      Polynomial acc(space_);
      for (std::size_t k = 0; k < cols(); ++k) {
        const Polynomial& a = at(i, k);
        const Polynomial& b = o.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc = acc + a * b;
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) fail(ErrorKind::incompatible_operands, "matrix sum with mismatched sizes");
  Matrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + o.entries_[k];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& p : out.entries_) p = -p;
  return out;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows() != o.rows()) fail(ErrorKind::incompatible_operands, "hcat with different row counts");
  std::vector<int> cd = col_degrees_;
  cd.insert(cd.end(), o.col_degrees_.begin(), o.col_degrees_.end());
  Matrix out(space_ ? space_ : o.space_, row_degrees_, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols(); ++j) out.set(i, cols() + j, o.at(i, j));
  }
  return out;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols() != o.cols()) fail(ErrorKind::incompatible_operands, "vcat with different column counts");
  std::vector<int> rd = row_degrees_;
  rd.insert(rd.end(), o.row_degrees_.begin(), o.row_degrees_.end());
  Matrix out(space_ ? space_ : o.space_, rd, col_degrees_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t i = 0; i < rows(); ++i) out.set(i, j, at(i, j));
    for (std::size_t i = 0; i < o.rows(); ++i) out.set(rows() + i, j, o.at(i, j));
  }
  return out;
}

Matrix Matrix::block_diag(const Matrix& o) const {
  std::vector<int> rd = row_degrees_, cd = col_degrees_;
  rd.insert(rd.end(), o.row_degrees_.begin(), o.row_degrees_.end());
  cd.insert(cd.end(), o.col_degrees_.begin(), o.col_degrees_.end());
  Matrix out(space_ ? space_ : o.space_, rd, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out.set(i, j, at(i, j));
  }
  for (std::size_t i = 0; i < o.rows(); ++i) {
    for (std::size_t j = 0; j < o.cols(); ++j) out.set(rows() + i, cols() + j, o.at(i, j));
  }
  return out;
}

Matrix Matrix::tensor_identity(const std::vector<int>& degrees) const {
  const std::size_t n = degrees.size();
  std::vector<int> rd, cd;
  for (int r : row_degrees_) {
    for (int b : degrees) rd.push_back(r + b);
  }
  for (int c : col_degrees_) {
    for (int b : degrees) cd.push_back(c + b);
  }
  Matrix out(space_, rd, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out.set(i * n + k, j * n + k, at(i, j));
    }
  }
  return out;
}

Matrix Matrix::identity_tensor(const std::vector<int>& degrees) const {
  const std::size_t n = degrees.size();
  std::vector<int> rd, cd;
  for (int b : degrees) {
    for (int r : row_degrees_) rd.push_back(b + r);
  }
  for (int b : degrees) {
    for (int c : col_degrees_) cd.push_back(b + c);
  }
  Matrix out(space_, rd, cd);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) out.set(k * rows() + i, k * cols() + j, at(i, j));
    }
  }
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  std::vector<int> cd;
  for (auto j : idx) cd.push_back(col_degrees_[j]);
  Matrix out(space_, row_degrees_, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t k = 0; k < idx.size(); ++k) out.set(i, k, at(i, idx[k]));
  }
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  std::vector<int> rd;
  for (auto i : idx) rd.push_back(row_degrees_[i]);
  Matrix out(space_, rd, col_degrees_);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (std::size_t j = 0; j < cols(); ++j) out.set(k, j, at(idx[k], j));
  }
  return out;
}

Matrix Matrix::drop_zero_columns() const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols(); ++j) {
    if (!column_is_zero(j)) keep.push_back(j);
  }
  return select_columns(keep);
}

Matrix Matrix::with_row_degrees(std::vector<int> degrees) const {
  Matrix out = *this;
  out.row_degrees_ = std::move(degrees);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return row_degrees_ == o.row_degrees_ && col_degrees_ == o.col_degrees_ && entries_ == o.entries_;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace citor
