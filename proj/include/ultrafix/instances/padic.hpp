#ifndef ULTRAFIX_INSTANCES_PADIC_HPP
#define ULTRAFIX_INSTANCES_PADIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <ultrafix/radius.hpp>

namespace ultrafix
{

// Residue mod p^N standing for a p-adic integer at precision N.
class PadicInt
{
public:
    // Reduces `value` mod p^N. Requires p prime and p^N < 2^62.
    PadicInt(std::uint64_t p, unsigned precision, std::int64_t value);

    std::uint64_t prime() const noexcept
    {
        return m_p;
    }
    unsigned precision() const noexcept
    {
        return m_n;
    }
    std::uint64_t modulus() const noexcept
    {
        return m_modulus;
    }
    std::uint64_t residue() const noexcept
    {
        return m_residue;
    }

    // Exponent of p in the residue; precision() for zero.
    unsigned valuation() const noexcept;
    bool is_unit() const noexcept
    {
        return m_residue % m_p != 0;
    }
    // Base-p digits, least significant first, exactly precision() of them.
    std::vector<std::uint64_t> digits() const;

    // Throws MixedPrecision.
    friend PadicInt operator+(const PadicInt &a, const PadicInt &b);
    friend PadicInt operator-(const PadicInt &a, const PadicInt &b);
    friend PadicInt operator*(const PadicInt &a, const PadicInt &b);
    PadicInt operator-() const;
    // Throws NonUnit.
    PadicInt unit_inverse() const;

    friend bool operator==(const PadicInt &, const PadicInt &) = default;

private:
    PadicInt(std::uint64_t p, unsigned n, std::uint64_t modulus, std::uint64_t residue) noexcept
        : m_p(p), m_n(n), m_modulus(modulus), m_residue(residue)
    {
    }
    void check_same(const PadicInt &other) const;

    std::uint64_t m_p;
    unsigned m_n;
    std::uint64_t m_modulus;
    std::uint64_t m_residue;
};

bool is_prime(std::uint64_t n) noexcept;

// Distance index between residues: valuation of the difference, infinity
// when equal mod p^N. Throws MixedPrecision.
NatExp padic_distance(const PadicInt &a, const PadicInt &b);

// Z_p mod p^N, optionally restricted to the residue ball r + pZ. Solid over
// its realized radii: index 0..N-1 (1..N-1 on a ball).
class PadicSpace
{
public:
    using point_type = PadicInt;
    using order_type = NatExpOrder;

    PadicSpace(std::uint64_t p, unsigned precision, std::optional<std::uint64_t> ball = std::nullopt,
               std::size_t sample_limit = 64);

    const NatExpOrder &order() const noexcept
    {
        return m_order;
    }
    NatExp distance(const PadicInt &a, const PadicInt &b) const
    {
        return padic_distance(a, b);
    }
    bool equal(const PadicInt &a, const PadicInt &b) const noexcept
    {
        return a == b;
    }
    std::vector<PadicInt> sample_points() const;
    std::vector<NatExp> sample_radii() const;
    std::string format_point(const PadicInt &x) const
    {
        return std::to_string(x.residue());
    }
    std::string precision() const;

    // x + p^k, at distance index k from x.
    std::optional<PadicInt> witness(const PadicInt &x, NatExp gamma) const;
    // Digit-wise limit: every digit must agree across the last two members.
    std::optional<PadicInt> stabilized_limit(const std::vector<PadicInt> &fam) const;

    PadicInt make(std::int64_t value) const
    {
        return PadicInt(m_p, m_n, value);
    }
    // Parses a decimal residue in [0, p^N).
    PadicInt parse_point(const std::string &text) const;
    bool contains(const PadicInt &x) const;

    std::uint64_t prime() const noexcept
    {
        return m_p;
    }
    unsigned precision_digits() const noexcept
    {
        return m_n;
    }
    const std::optional<std::uint64_t> &ball() const noexcept
    {
        return m_ball;
    }

private:
    std::uint64_t m_p;
    unsigned m_n;
    std::optional<std::uint64_t> m_ball;
    std::size_t m_sample_limit;
    NatExpOrder m_order;
};

} // namespace ultrafix

#endif
