#include "superorb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace superorb {

namespace {

Int parse_int(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw std::invalid_argument("integer expected: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("integer expected: '" + s + "'");
  Int v(s.substr(i));
  return s[0] == '-' ? Int(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + input + "'");
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

long long mod_ll(long long a, long long m) {
  long long v = a % m;
  return v < 0 ? v + m : v;
}

}  // namespace superorb
