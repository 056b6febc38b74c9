#include "citor/coefficient.hpp"

#include <cctype>

#include "citor/errors.hpp"

namespace citor {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce_mod(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

[[noreturn]] void field_mismatch() {
  fail(ErrorKind::incompatible_operands, "coefficients belong to different fields");
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_odd_prime(p)) {
    fail(ErrorKind::incompatible_operands, "field characteristic must be an odd prime, got " + std::to_string(p));
  }
  return Field{FieldKind::prime, p};
}

Field Field::from_tag(const std::string& tag) {
  std::string t;
  for (char ch : tag) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "qq" || t == "q" || t == "rational" || t == "rationals") return rationals();
  if (t.size() > 1 && t[0] == 'f') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i])) || p > 0xffffffffULL / 10) {
        fail(ErrorKind::parse_error, "bad field tag '" + tag + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(t[i] - '0');
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  fail(ErrorKind::parse_error, "bad field tag '" + tag + "'");
}

std::string Field::tag() const {
  return kind == FieldKind::rational ? "QQ" : "F" + std::to_string(characteristic);
}

Coefficient::Coefficient(const Field& field, long value) {
  if (field.kind == FieldKind::prime) {
    rep_ = Residue{reduce_mod(value, field.characteristic), field.characteristic};
  } else {
    rep_ = mpq_class(value);
  }
}

Coefficient::Coefficient(const Field& field, const mpq_class& value) {
  if (field.kind == FieldKind::prime) {
    mpz_class num = value.get_num();
    mpz_class den = value.get_den();
    const std::uint32_t p = field.characteristic;
    std::uint32_t n = static_cast<std::uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
    std::uint32_t d = static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
    if (d == 0) fail(ErrorKind::incompatible_operands, "denominator vanishes modulo " + std::to_string(p));
    rep_ = Residue{static_cast<std::uint32_t>((static_cast<std::uint64_t>(n) * inverse_mod(d, p)) % p), p};
  } else {
    mpq_class q = value;
    q.canonicalize();
    rep_ = q;
  }
}

Field Coefficient::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return Field{FieldKind::prime, r->modulus};
  return Field::rationals();
}

bool Coefficient::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Coefficient::is_one() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&o.rep_);
  if (a && b) {
    if (a->modulus != b->modulus) field_mismatch();
    Coefficient out;
    std::uint32_t s = a->value + b->value;
    if (s >= a->modulus) s -= a->modulus;
    out.rep_ = Residue{s, a->modulus};
    return out;
  }
  if (a || b) field_mismatch();
  Coefficient out;
  out.rep_ = mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_));
  return out;
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&o.rep_);
  if (a && b) {
    if (a->modulus != b->modulus) field_mismatch();
    Coefficient out;
    std::uint32_t s = a->value >= b->value ? a->value - b->value : a->value + a->modulus - b->value;
    out.rep_ = Residue{s, a->modulus};
    return out;
  }
  if (a || b) field_mismatch();
  Coefficient out;
  out.rep_ = mpq_class(std::get<mpq_class>(rep_) - std::get<mpq_class>(o.rep_));
  return out;
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&o.rep_);
  if (a && b) {
    if (a->modulus != b->modulus) field_mismatch();
    Coefficient out;
    out.rep_ = Residue{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a->value) * b->value) % a->modulus),
                       a->modulus};
    return out;
  }
  if (a || b) field_mismatch();
  Coefficient out;
  out.rep_ = mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_));
  return out;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) fail(ErrorKind::incompatible_operands, "division by zero coefficient");
  Coefficient out;
  if (const auto* a = std::get_if<Residue>(&rep_)) {
    out.rep_ = Residue{inverse_mod(a->value, a->modulus), a->modulus};
  } else {
    out.rep_ = mpq_class(1 / std::get<mpq_class>(rep_));
  }
  return out;
}

Coefficient Coefficient::operator/(const Coefficient& o) const { return *this * o.inverse(); }

Coefficient Coefficient::operator-() const {
  Coefficient out;
  if (const auto* a = std::get_if<Residue>(&rep_)) {
    out.rep_ = Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus};
  } else {
    out.rep_ = mpq_class(-std::get<mpq_class>(rep_));
  }
  return out;
}

bool Coefficient::operator==(const Coefficient& o) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&o.rep_);
  if (a && b) return a->modulus == b->modulus && a->value == b->value;
  if (a || b) return false;
  return std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
}

std::uint32_t Coefficient::residue() const {
  if (const auto* a = std::get_if<Residue>(&rep_)) return a->value;
  fail(ErrorKind::incompatible_operands, "residue() requested for a rational coefficient");
}

mpq_class Coefficient::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  fail(ErrorKind::incompatible_operands, "rational() requested for a residue");
}

std::string Coefficient::to_string() const {
  if (const auto* a = std::get_if<Residue>(&rep_)) {
    // Symmetric representative reads better: p-1 prints as -1.
    if (a->value > a->modulus / 2) return "-" + std::to_string(a->modulus - a->value);
    return std::to_string(a->value);
  }
  return std::get<mpq_class>(rep_).get_str();
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::incompatible_operands: return "incompatible-operands";
    case ErrorKind::graded_violation: return "graded-violation";
    case ErrorKind::hypothesis_missing: return "hypothesis-missing";
    case ErrorKind::needs_minimal_primes: return "needs-minimal-primes";
    case ErrorKind::insufficient_window: return "insufficient-window";
    case ErrorKind::minimality_required: return "minimality-required";
    case ErrorKind::oracle_too_large: return "oracle-too-large";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::unknown_id: return "unknown-id";
    case ErrorKind::undeclared_name: return "undeclared-name";
    case ErrorKind::too_large: return "too-large";
  }
  return "error";
}

}  // namespace citor
