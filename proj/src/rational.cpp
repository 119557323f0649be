#include "paretocheck/rational.hpp"

#include <cctype>

namespace paretocheck {

namespace {

// GMP's own string constructor aborts the process on "1/0", so digits and
// the denominator sign are validated here before mpq ever sees the text.
Int parse_integer(const std::string& text, const std::string& whole) {
  if (text.empty()) {
    throw std::invalid_argument("bad rational '" + whole + "': empty part");
  }
  std::size_t start = 0;
  if (text[0] == '-' || text[0] == '+') start = 1;
  if (start == text.size()) {
    throw std::invalid_argument("bad rational '" + whole + "': sign only");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("bad rational '" + whole +
                                  "': unexpected character '" +
                                  std::string(1, text[i]) + "'");
    }
  }
  return Int(text);
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_integer(text, text));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw std::invalid_argument("bad rational '" + text + "': extra '/'");
  }
  const Int num = parse_integer(text.substr(0, slash), text);
  const Int den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("bad rational '" + text +
                                "': zero denominator");
  }
  return Rat(num, den);
}

std::string format_rational(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat vec_sum(const RatVec& v) {
  Rat acc = 0;
  for (const Rat& x : v) acc += x;
  return acc;
}

bool is_constant_vec(const RatVec& v) {
  for (const Rat& x : v) {
    if (x != v.front()) return false;
  }
  return true;
}

}  // namespace paretocheck
