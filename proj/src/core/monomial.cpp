#include "citor/monomial.hpp"

#include <algorithm>
#include <string>

#include "citor/errors.hpp"

namespace citor {

namespace {

void check_nvars(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    fail(ErrorKind::too_large, "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::span<const int> exponents) : nvars_(static_cast<std::uint8_t>(exponents.size())) {
  check_nvars(exponents.size());
  int deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff) {
      fail(ErrorKind::incompatible_operands, "monomial exponent out of range");
    }
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
    deg += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(deg);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.exp_[index] = static_cast<std::uint16_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exp_.begin(), exp_.begin() + nvars_);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < nvars_; ++i) out.exp_[i] = static_cast<std::uint16_t>(exp_[i] + o.exp_[i]);
  out.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < nvars_; ++i) out.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  out.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return out;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial out = *this;
  int deg = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    out.exp_[i] = std::max(exp_[i], o.exp_[i]);
    deg += out.exp_[i];
  }
  out.degree_ = static_cast<std::uint16_t>(deg);
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exp_[i];
  return h;
}

const char* monomial_order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::grevlex: return "grevlex";
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::graded_lex: return "graded-lex";
  }
  return "?";
}

std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const std::size_t n = a.nvars();
  switch (order) {
    case MonomialOrder::grevlex: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    case MonomialOrder::graded_lex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      [[fallthrough]];
    case MonomialOrder::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.nvars() != b.nvars()) {
    fail(ErrorKind::incompatible_operands, "monomials over different variable counts");
  }
  return compare_unchecked(a, b, order);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Enumerate compositions of `degree` into nvars parts.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace citor
