#include "cutcover/rational.hpp"

#include <cctype>

#include "cutcover/errors.hpp"

namespace cutcover {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace cutcover
