#ifndef ULTRAFIX_INSTANCES_LEX_SERIES_HPP
#define ULTRAFIX_INSTANCES_LEX_SERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <ultrafix/driver.hpp>
#include <ultrafix/radius.hpp>
#include <ultrafix/rational.hpp>

namespace ultrafix
{

// Sum of c_{m,n} u^m v^n with m < cap_m and n < cap_n. Distance is the
// lexicographically least exponent pair of the difference, in LexPairOrder.
class LexSeriesQ
{
public:
    LexSeriesQ(std::size_t cap_m, std::size_t cap_n);

    static LexSeriesQ monomial(std::size_t cap_m, std::size_t cap_n, std::size_t m, std::size_t n,
                               const Rational &c = Rational(1));

    std::size_t cap_m() const noexcept
    {
        return m_cap_m;
    }
    std::size_t cap_n() const noexcept
    {
        return m_cap_n;
    }
    const Rational &at(std::size_t m, std::size_t n) const
    {
        return m_coeffs.at(m * m_cap_n + n);
    }
    void set(std::size_t m, std::size_t n, const Rational &c)
    {
        m_coeffs.at(m * m_cap_n + n) = c;
    }
    // Row-major coefficients, m outer.
    const std::vector<Rational> &coefficients() const noexcept
    {
        return m_coeffs;
    }
    // Least nonzero exponent pair, infinity for zero.
    LexPair order() const;

    friend LexSeriesQ operator+(const LexSeriesQ &a, const LexSeriesQ &b);
    friend LexSeriesQ operator-(const LexSeriesQ &a, const LexSeriesQ &b);
    friend LexSeriesQ operator*(const LexSeriesQ &a, const LexSeriesQ &b);
    LexSeriesQ scale(const Rational &c) const;
    // Times c u^i v^j; exponents outside the caps are dropped.
    LexSeriesQ shift(std::size_t i, std::size_t j, const Rational &c = Rational(1)) const;

    std::string to_string() const;

    friend bool operator==(const LexSeriesQ &, const LexSeriesQ &) = default;

private:
    void check_same(const LexSeriesQ &other) const;

    std::size_t m_cap_m;
    std::size_t m_cap_n;
    std::vector<Rational> m_coeffs;
};

class LexSeriesSpace
{
public:
    using point_type = LexSeriesQ;
    using order_type = LexPairOrder;

    LexSeriesSpace(std::size_t cap_m, std::size_t cap_n);

    const LexPairOrder &order() const noexcept
    {
        return m_order;
    }
    LexPair distance(const LexSeriesQ &a, const LexSeriesQ &b) const
    {
        return (a - b).order();
    }
    bool equal(const LexSeriesQ &a, const LexSeriesQ &b) const
    {
        return a == b;
    }
    std::vector<LexSeriesQ> sample_points() const;
    // Every exponent pair inside the caps.
    std::vector<LexPair> sample_radii() const;
    std::string format_point(const LexSeriesQ &x) const
    {
        return x.to_string();
    }
    std::string precision() const;

    std::size_t cap_m() const noexcept
    {
        return m_cap_m;
    }
    std::size_t cap_n() const noexcept
    {
        return m_cap_n;
    }
    LexSeriesQ zero_point() const
    {
        return LexSeriesQ(m_cap_m, m_cap_n);
    }

private:
    std::size_t m_cap_m;
    std::size_t m_cap_n;
    LexPairOrder m_order;
};

// x -> b + c u^i v^j x with (i, j) != (0, 0).
struct LexAffine {
    LexSeriesQ b;
    Rational c;
    std::size_t i = 0;
    std::size_t j = 1;
};

ContractingMap<LexSeriesQ> lex_affine_map(const LexAffine &f);

// b * sum_k (c u^i v^j)^k, summed until the powers leave the caps.
LexSeriesQ lex_affine_fixed_point(const LexAffine &f);

LimitOracle<LexSeriesQ, LexPair> lex_affine_oracle(const LexAffine &f);

} // namespace ultrafix

#endif
