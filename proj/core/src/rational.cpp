#include "egini/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace egini {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// cpp_int's string constructor rejects a leading '+'.
BigInt parse_bigint(const std::string& s) {
  return s[0] == '+' ? BigInt(s.substr(1)) : BigInt(s);
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) return std::nullopt;
    return Rational(parse_bigint(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  BigInt n = parse_bigint(num);
  BigInt d = parse_bigint(den);
  if (d == 0) return std::nullopt;
  // cpp_rational requires a positive denominator.
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string decimal_approx(const Rational& r, int digits) {
  BigInt num = numerator(r);
  const BigInt den = denominator(r);
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  out += BigInt(num / den).str();
  if (digits <= 0) return out;
  out += '.';
  BigInt rem = num % den;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += BigInt(rem / den).str();
    rem %= den;
  }
  return out;
}

}  // namespace egini
