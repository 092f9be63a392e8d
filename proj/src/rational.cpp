#include <ultrafix/rational.hpp>

#include <cctype>

#include <ultrafix/errors.hpp>

namespace ultrafix
{

namespace
{

Integer parse_integer(const std::string &s, const std::string &whole)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size()) {
        throw ParseError("malformed rational '" + whole + "'");
    }
    Integer value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw ParseError("malformed rational '" + whole + "'");
        }
        value = value * 10 + (s[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

} // namespace

std::string to_fraction_string(const Rational &q)
{
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_short_string(const Rational &q)
{
    if (boost::multiprecision::denominator(q) == 1) {
        return boost::multiprecision::numerator(q).str();
    }
    return to_fraction_string(q);
}

Rational parse_rational(const std::string &s)
{
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(s, s));
    }
    const auto num = parse_integer(s.substr(0, slash), s);
    const auto den = parse_integer(s.substr(slash + 1), s);
    if (den == 0) {
        throw ParseError("zero denominator in '" + s + "'");
    }
    return Rational(num, den);
}

Rational factorial_inverse(unsigned k)
{
    Integer f = 1;
    for (unsigned i = 2; i <= k; ++i) {
        f *= i;
    }
    return Rational(Integer(1), f);
}

} // namespace ultrafix
