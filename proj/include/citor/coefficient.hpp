#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace citor {

enum class FieldKind : std::uint8_t { prime, rational };

// Tag for the coefficient field k: a prime field F_p (p odd) or Q.
struct Field {
  FieldKind kind = FieldKind::prime;
  std::uint32_t characteristic = 32003;

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field{FieldKind::rational, 0}; }
  static Field default_field() { return Field{}; }
  // Accepts "F32003", "f32003", "QQ", "rational".
  static Field from_tag(const std::string& tag);

  std::string tag() const;
  bool operator==(const Field&) const = default;
};

// An element of a Field in canonical form: residue in [0,p) or a reduced
// fraction. Arithmetic between different fields throws incompatible_operands.
class Coefficient {
 public:
  Coefficient() = default;  // zero of the default prime field
  Coefficient(const Field& field, long value);
  Coefficient(const Field& field, const mpq_class& value);

  static Coefficient zero(const Field& f) { return Coefficient(f, 0); }
  static Coefficient one(const Field& f) { return Coefficient(f, 1); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient inverse() const;

  bool operator==(const Coefficient& o) const;

  // Residue for prime fields; rationals are rejected.
  std::uint32_t residue() const;
  // Value for rational coefficients; residues are rejected.
  mpq_class rational() const;
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  std::variant<Residue, mpq_class> rep_{Residue{0, 32003}};
};

}  // namespace citor
