#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sgkernel {

// All measure, eigenvector and field computations run on exact rationals;
// floating point is confined to the numeric Abel-limit diagnostic.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" for integers, "p/q" otherwise, lowest terms.
std::string format_rational(const Rational& q);

// Accepts "p" and "p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace sgkernel
