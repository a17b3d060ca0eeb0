#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "knapsack/errors.hpp"

namespace knapsack {

using Int128 = __int128;

inline constexpr Int128 kInt128Max = static_cast<Int128>(~static_cast<unsigned __int128>(0) >> 1);
inline constexpr Int128 kInt128Min = -kInt128Max - 1;

[[noreturn]] void throw_overflow(const char* what);

/// Checked 128-bit arithmetic. Throws OverflowError instead of wrapping.
inline Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) [[unlikely]] throw_overflow("128-bit profit addition overflow");
  return r;
}
inline Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) [[unlikely]] throw_overflow("128-bit profit multiplication overflow");
  return r;
}

std::string to_string(Int128 v);
/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
Int128 parse_int128(std::string_view text);

/// Profit value in Z ∪ {-inf}.
///
/// Finite values are 128-bit signed integers. The minimum representable
/// integer is reserved as the NEG_INF sentinel, so the built-in ordering
/// already treats NEG_INF as strictly minimal. Addition absorbs NEG_INF and
/// throws on overflow.
class ExtProfit {
 public:
  constexpr ExtProfit() = default;
  template <class T>
    requires(std::is_integral_v<T> || std::is_same_v<T, Int128>)
  constexpr ExtProfit(T v) : v_(static_cast<Int128>(v)) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtProfit neg_inf() { return ExtProfit(Tag{}); }

  constexpr bool is_neg_inf() const { return v_ == kInt128Min; }
  constexpr bool is_finite() const { return v_ != kInt128Min; }

  /// Raw value; precondition is_finite().
  constexpr Int128 value() const { return v_; }

  friend ExtProfit operator+(ExtProfit a, ExtProfit b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    Int128 r = checked_add(a.v_, b.v_);
    if (r == kInt128Min) [[unlikely]] throw_overflow("ExtProfit addition reached the NEG_INF sentinel");
    return ExtProfit(r);
  }
  ExtProfit& operator+=(ExtProfit o) { return *this = *this + o; }

  /// Negation of a finite value. Negating NEG_INF is a precondition violation.
  friend ExtProfit operator-(ExtProfit a) {
    if (a.is_neg_inf()) throw PreconditionError("cannot negate NEG_INF");
    return ExtProfit(-a.v_);
  }

  friend constexpr auto operator<=>(ExtProfit a, ExtProfit b) = default;
  friend constexpr bool operator==(ExtProfit a, ExtProfit b) = default;

  friend std::ostream& operator<<(std::ostream& os, ExtProfit p);

 private:
  struct Tag {};
  constexpr explicit ExtProfit(Tag) : v_(kInt128Min) {}

  Int128 v_ = 0;
};

inline constexpr ExtProfit kNegInf = ExtProfit::neg_inf();

std::string to_string(ExtProfit p);

inline ExtProfit max(ExtProfit a, ExtProfit b) { return a < b ? b : a; }

}  // namespace knapsack
