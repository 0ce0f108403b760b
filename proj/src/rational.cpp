#include "sgkernel/rational.hpp"

#include <cctype>

#include "sgkernel/errors.hpp"

namespace sgkernel {

std::string format_rational(const Rational& q) {
  std::string num = numerator(q).str();
  if (denominator(q) == 1) return num;
  return num + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw ParseError("not a rational: '" + text + "'");
    return Rational(Int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw ParseError("not a rational: '" + text + "'");
  Int d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(Int(num), d);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace sgkernel
