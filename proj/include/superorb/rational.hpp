#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace superorb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rational parse_rational(const std::string& s);

// Lowest terms, positive denominator: "p" or "p/q".
std::string rational_str(const Rational& r);

double to_double(const Rational& r);

// Representative of a mod m in [0, m). m > 0.
long long mod_ll(long long a, long long m);

}  // namespace superorb
