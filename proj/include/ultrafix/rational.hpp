#ifndef ULTRAFIX_RATIONAL_HPP
#define ULTRAFIX_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ultrafix
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "n/d" with d > 0, always including the denominator.
std::string to_fraction_string(const Rational &q);
// "n" for integers, "n/d" otherwise.
std::string to_short_string(const Rational &q);
// Accepts "n", "-n", "n/d".
Rational parse_rational(const std::string &s);

Rational factorial_inverse(unsigned k);

} // namespace ultrafix

#endif
