#pragma once

#include <climits>
#include <compare>
#include <string>

namespace citor {

// Integer extended by +inf and -inf. Used for depth (inf for the zero module),
// Krull dimension (-inf for the zero module), lengths and codimensions.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt infinity() { return ExtInt(kPosInf, 0); }
  static constexpr ExtInt neg_infinity() { return ExtInt(kNegInf, 0); }

  constexpr bool is_finite() const { return v_ != kPosInf && v_ != kNegInf; }
  constexpr bool is_pos_inf() const { return v_ == kPosInf; }
  constexpr bool is_neg_inf() const { return v_ == kNegInf; }
  constexpr int value() const { return v_; }

  constexpr auto operator<=>(const ExtInt&) const = default;
  constexpr bool operator==(const ExtInt&) const = default;

  std::string to_string() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(v_);
  }

 private:
  static constexpr int kPosInf = INT_MAX;
  static constexpr int kNegInf = INT_MIN;
  constexpr ExtInt(int v, int /*tag*/) : v_(v) {}

  int v_ = 0;
};

}  // namespace citor
