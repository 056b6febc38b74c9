#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace citor {

inline constexpr std::size_t kMaxVariables = 14;

// Exponent vector over a fixed number of variables, standard grading.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  std::vector<int> exponents() const;

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& o) const;

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && exp_ == o.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class MonomialOrder : std::uint8_t { grevlex, lex, graded_lex };

const char* monomial_order_name(MonomialOrder order);

// Throws incompatible_operands when the variable counts differ.
std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

// Unchecked comparison for hot loops.
std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b, MonomialOrder order);

// All monomials of the given degree in nvars variables (degree < 0 gives none).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace citor
