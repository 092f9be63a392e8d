#ifndef ULTRAFIX_POLYNOMIAL_HPP
#define ULTRAFIX_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <ultrafix/rational.hpp>

namespace ultrafix
{

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed list of variable names.
class Polynomial
{
public:
    using Monomial = std::vector<unsigned>;

    explicit Polynomial(std::vector<std::string> variables);

    // Grammar: sums and differences of products of integer/rational
    // literals, variables, parenthesized expressions and powers v^k.
    // Division is only by nonzero constants. Throws ParseError.
    static Polynomial parse(const std::string &text, std::vector<std::string> variables);

    static Polynomial constant(std::vector<std::string> variables, const Rational &c);
    static Polynomial variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string> &variables() const noexcept
    {
        return m_vars;
    }
    const std::map<Monomial, Rational> &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const Rational &c);
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(Polynomial a, const Polynomial &b)
    {
        return a *= b;
    }
    Polynomial pow(unsigned k) const;
    Polynomial derivative(std::size_t index) const;

    unsigned degree(std::size_t index) const;
    bool has_integer_coefficients() const;

    // Canonical text; parse(to_string()) reproduces the polynomial.
    std::string to_string() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void add_term(const Monomial &m, const Rational &c);
    void check_compatible(const Polynomial &other) const;

    std::vector<std::string> m_vars;
    std::map<Monomial, Rational> m_terms;
};

} // namespace ultrafix

#endif
