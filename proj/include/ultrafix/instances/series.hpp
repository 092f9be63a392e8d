#ifndef ULTRAFIX_INSTANCES_SERIES_HPP
#define ULTRAFIX_INSTANCES_SERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <ultrafix/driver.hpp>
#include <ultrafix/polynomial.hpp>
#include <ultrafix/radius.hpp>
#include <ultrafix/rational.hpp>

namespace ultrafix
{

// Power series in t truncated at t^cap, with exact rational coefficients.
class SeriesQ
{
public:
    explicit SeriesQ(std::size_t cap);
    // Coefficients beyond the cap are dropped; missing ones are zero.
    SeriesQ(std::size_t cap, std::vector<Rational> coefficients);

    static SeriesQ constant(std::size_t cap, const Rational &c);
    // t^k, zero when k >= cap.
    static SeriesQ monomial(std::size_t cap, std::size_t k, const Rational &c = Rational(1));

    std::size_t cap() const noexcept
    {
        return m_coeffs.size();
    }
    const std::vector<Rational> &coefficients() const noexcept
    {
        return m_coeffs;
    }
    const Rational &operator[](std::size_t k) const
    {
        return m_coeffs.at(k);
    }
    bool is_zero() const;
    // Index of the first nonzero coefficient; cap() for zero.
    std::size_t order() const;
    // Highest k with a nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> degree() const;

    // Throw CapMismatch.
    friend SeriesQ operator+(const SeriesQ &a, const SeriesQ &b);
    friend SeriesQ operator-(const SeriesQ &a, const SeriesQ &b);
    friend SeriesQ operator*(const SeriesQ &a, const SeriesQ &b);
    SeriesQ operator-() const;
    SeriesQ scale(const Rational &c) const;
    // Term-wise integral from 0: c_k t^k -> c_k t^(k+1) / (k+1).
    SeriesQ integrate() const;
    SeriesQ derivative() const;
    // Coefficients below degree k kept, the rest zeroed.
    SeriesQ truncate(std::size_t k) const;

    std::string to_string() const;

    friend bool operator==(const SeriesQ &, const SeriesQ &) = default;

private:
    void check_same(const SeriesQ &other) const;

    std::vector<Rational> m_coeffs;
};

// f(t, y) over the variables {t, y}, evaluated at y.
SeriesQ poly_eval(const Polynomial &f, const SeriesQ &y);

std::vector<std::string> series_variables();

class SeriesSpace
{
public:
    using point_type = SeriesQ;
    using order_type = NatExpOrder;

    explicit SeriesSpace(std::size_t cap);

    const NatExpOrder &order() const noexcept
    {
        return m_order;
    }
    NatExp distance(const SeriesQ &a, const SeriesQ &b) const;
    bool equal(const SeriesQ &a, const SeriesQ &b) const;
    // Small deterministic polynomials.
    std::vector<SeriesQ> sample_points() const;
    std::vector<NatExp> sample_radii() const;
    std::string format_point(const SeriesQ &x) const
    {
        return x.to_string();
    }
    std::string precision() const;

    // x + t^k, at distance index k from x.
    std::optional<SeriesQ> witness(const SeriesQ &x, NatExp gamma) const;
    // Coefficient-wise limit: every coefficient must agree across the last
    // two members.
    std::optional<SeriesQ> stabilized_limit(const std::vector<SeriesQ> &fam) const;

    std::size_t cap() const noexcept
    {
        return m_cap;
    }
    SeriesQ zero_point() const
    {
        return SeriesQ(m_cap);
    }

private:
    std::size_t m_cap;
    NatExpOrder m_order;
};

// x -> b + a*x with ord(a) >= 1.
ContractingMap<SeriesQ> affine_series_map(const SeriesQ &b, const SeriesQ &a);

// The fixed point b * sum_k a^k of the affine map, summed through the cap.
SeriesQ affine_series_fixed_point(const SeriesQ &b, const SeriesQ &a);

// Oracle answering with the closed-form affine fixed point.
LimitOracle<SeriesQ, NatExp> affine_series_oracle(const SeriesQ &b, const SeriesQ &a);

} // namespace ultrafix

#endif
