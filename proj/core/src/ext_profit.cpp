#include "knapsack/ext_profit.hpp"

#include <algorithm>
#include <stdexcept>

namespace knapsack {

void throw_overflow(const char* what) { throw OverflowError(what); }

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work in unsigned space so kInt128Min does not overflow on negation.
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int128 parse_int128(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("missing digits");
  Int128 v = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal integer: " + std::string(text));
    const int digit = c - '0';
    if (__builtin_mul_overflow(v, 10, &v) ||
        __builtin_add_overflow(v, negative ? -digit : digit, &v)) {
      throw std::invalid_argument("integer out of 128-bit range: " + std::string(text));
    }
  }
  return v;
}

std::string to_string(ExtProfit p) { return p.is_neg_inf() ? std::string("-inf") : to_string(p.value()); }

std::ostream& operator<<(std::ostream& os, ExtProfit p) { return os << to_string(p); }

}  // namespace knapsack
