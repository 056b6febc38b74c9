#include "citor/polynomial.hpp"

#include <algorithm>

#include "citor/errors.hpp"

namespace citor {

namespace {

bool term_greater(const Term& a, const Term& b) {
  return compare_unchecked(a.monomial, b.monomial, MonomialOrder::grevlex) > 0;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
      continue;
    }
    auto c = compare_unchecked(a[i].monomial, b[j].monomial, MonomialOrder::grevlex);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Coefficient s = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back(Term{a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SpacePtr make_space(const Field& field, std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    fail(ErrorKind::too_large, "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  return std::make_shared<const VariableSpace>(VariableSpace{field, std::move(names)});
}

std::string DegreeReport::to_string() const {
  if (is_zero) return "any";
  if (homogeneous) return std::to_string(degree);
  std::string s = "inhomogeneous {";
  bool first = true;
  for (int d : degrees) {
    if (!first) s += ",";
    s += std::to_string(d);
    first = false;
  }
  return s + "}";
}

Polynomial::Polynomial(SpacePtr space, std::vector<Term> terms) : space_(std::move(space)) {
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (t.monomial.nvars() != space_->nvars()) {
      fail(ErrorKind::incompatible_operands, "term has the wrong number of variables");
    }
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
      if (terms_.back().coefficient.is_zero()) terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(SpacePtr space, const Coefficient& c) {
  Monomial one(space->nvars());
  return monomial(std::move(space), one, c);
}

Polynomial Polynomial::constant(SpacePtr space, long c) {
  Coefficient k(space->field, c);
  return constant(std::move(space), k);
}

Polynomial Polynomial::monomial(SpacePtr space, const Monomial& m, const Coefficient& c) {
  Polynomial p(std::move(space));
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::variable(SpacePtr space, std::size_t index) {
  const std::size_t n = space->nvars();
  Coefficient one = Coefficient::one(space->field);
  return monomial(std::move(space), Monomial::variable(n, index), one);
}

Coefficient Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Coefficient::zero(field());
}

DegreeReport Polynomial::degree_report() const {
  DegreeReport r;
  if (terms_.empty()) {
    r.is_zero = true;
    r.homogeneous = true;
    return r;
  }
  for (const auto& t : terms_) r.degrees.insert(t.monomial.degree());
  r.homogeneous = r.degrees.size() == 1;
  r.degree = *r.degrees.rbegin();
  return r;
}

int Polynomial::degree() const {
  DegreeReport r = degree_report();
  if (r.is_zero) fail(ErrorKind::graded_violation, "the zero polynomial has no degree");
  if (!r.homogeneous) fail(ErrorKind::graded_violation, to_string() + " is not homogeneous");
  return r.degree;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!space_ || !o.space_) fail(ErrorKind::incompatible_operands, "polynomial without a variable space");
  if (space_ != o.space_ && !(*space_ == *o.space_)) {
    fail(ErrorKind::incompatible_operands, "polynomials over different rings or fields");
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out(space_);
  out.terms_ = merge(terms_, o.terms_, false);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out(space_);
  out.terms_ = merge(terms_, o.terms_, true);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out(space_);
  for (const auto& t : o.terms_) {
    Polynomial part = times(t.monomial, t.coefficient);
    out.terms_ = merge(out.terms_, part.terms_, false);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(space_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.monomial, -t.coefficient});
  return out;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  Polynomial out(space_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.monomial, t.coefficient * c});
  return out;
}

Polynomial Polynomial::times(const Monomial& m, const Coefficient& c) const {
  Polynomial out(space_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) out.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == o.terms_[i].monomial) || !(terms_[i].coefficient == o.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coefficient.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.nvars(); ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += space_->names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c;
    } else if (c == "1") {
      s += mono;
    } else {
      s += c + "*" + mono;
    }
  }
  return s;
}

Polynomial poly_combine(const Polynomial& p, const Polynomial& q, PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  return p;
}

DegreeReport homogeneous_degree(const Polynomial& p) { return p.degree_report(); }

}  // namespace citor
