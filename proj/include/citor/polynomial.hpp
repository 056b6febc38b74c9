#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "citor/coefficient.hpp"
#include "citor/monomial.hpp"

namespace citor {

// Field and variable names of an ambient polynomial ring k[x1..xn].
struct VariableSpace {
  Field field;
  std::vector<std::string> names;

  std::size_t nvars() const { return names.size(); }
  bool operator==(const VariableSpace& o) const { return field == o.field && names == o.names; }
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

SpacePtr make_space(const Field& field, std::vector<std::string> names);

struct Term {
  Monomial monomial;
  Coefficient coefficient;
};

enum class PolyOp { add, sub, mul };

// Result of homogeneous_degree: zero polynomials are homogeneous of any degree.
struct DegreeReport {
  bool is_zero = false;
  bool homogeneous = false;
  int degree = 0;
  std::set<int> degrees;

  std::string to_string() const;
};

// Terms are kept sorted descending in grevlex with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(SpacePtr space) : space_(std::move(space)) {}
  Polynomial(SpacePtr space, std::vector<Term> terms);  // canonicalizes

  static Polynomial constant(SpacePtr space, const Coefficient& c);
  static Polynomial constant(SpacePtr space, long c);
  static Polynomial monomial(SpacePtr space, const Monomial& m, const Coefficient& c);
  static Polynomial variable(SpacePtr space, std::size_t index);

  const SpacePtr& space() const { return space_; }
  Field field() const { return space_->field; }
  std::size_t nvars() const { return space_->nvars(); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  // Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
  // Coefficient of the constant monomial (zero if absent).
  Coefficient constant_term() const;

  DegreeReport degree_report() const;
  // Degree of a homogeneous nonzero polynomial; throws graded_violation otherwise.
  int degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coefficient& c) const;
  Polynomial times(const Monomial& m, const Coefficient& c) const;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  SpacePtr space_;
  std::vector<Term> terms_;
};

Polynomial poly_combine(const Polynomial& p, const Polynomial& q, PolyOp op);
DegreeReport homogeneous_degree(const Polynomial& p);

}  // namespace citor
