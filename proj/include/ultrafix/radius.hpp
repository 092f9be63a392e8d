#ifndef ULTRAFIX_RADIUS_HPP
#define ULTRAFIX_RADIUS_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <ultrafix/report.hpp>

namespace ultrafix
{

// Outcome of comparing two radii. Radius sets may be partially ordered, so
// incomparability is an ordinary answer rather than an error.
enum class Ordering { less, greater, equal, incomparable };

const char *to_string(Ordering o) noexcept;

constexpr Ordering converse(Ordering o) noexcept
{
    switch (o) {
        case Ordering::less:
            return Ordering::greater;
        case Ordering::greater:
            return Ordering::less;
        default:
            return o;
    }
}

// An ordered set of radii with a least element (the zero radius).
template <typename O>
concept RadiusOrder = requires(const O &o, const typename O::value_type &a, const std::string &s) {
    requires std::equality_comparable<typename O::value_type>;
    { o.compare(a, a) } -> std::same_as<Ordering>;
    { o.zero() } -> std::convertible_to<typename O::value_type>;
    { o.sample() } -> std::convertible_to<std::vector<typename O::value_type>>;
    { o.format(a) } -> std::convertible_to<std::string>;
    { o.parse(s) } -> std::convertible_to<typename O::value_type>;
};

template <RadiusOrder O>
bool leq(const O &order, const typename O::value_type &a, const typename O::value_type &b)
{
    const auto c = order.compare(a, b);
    return c == Ordering::less || c == Ordering::equal;
}

template <RadiusOrder O>
bool lt(const O &order, const typename O::value_type &a, const typename O::value_type &b)
{
    return order.compare(a, b) == Ordering::less;
}

template <RadiusOrder O>
bool is_zero(const O &order, const typename O::value_type &a)
{
    return order.compare(a, order.zero()) == Ordering::equal;
}

// Reflexivity, antisymmetry (consistency of compare with its converse),
// transitivity of <= and the least-element property, over the given sample.
template <RadiusOrder O>
Report check_order_axioms(const O &order, const std::vector<typename O::value_type> &sample)
{
    Report report;
    const auto zero = order.zero();
    for (const auto &a : sample) {
        if (order.compare(a, a) != Ordering::equal) {
            report.add("reflexivity", order.format(a) + " is not equal to itself");
        }
        const auto c = order.compare(zero, a);
        if (c != Ordering::less && c != Ordering::equal) {
            report.add("least-element", "zero " + order.format(zero) + " is not <= " + order.format(a));
        }
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.size(); ++j) {
            const auto &a = sample[i];
            const auto &b = sample[j];
            const auto ab = order.compare(a, b);
            const auto ba = order.compare(b, a);
            if (ba != converse(ab)) {
                report.add("antisymmetry", "compare(" + order.format(a) + ", " + order.format(b) + ") = "
                                               + to_string(ab) + " but compare(" + order.format(b) + ", "
                                               + order.format(a) + ") = " + to_string(ba));
            } else if (ab == Ordering::equal && !(a == b)) {
                report.add("antisymmetry",
                           "distinct values " + order.format(a) + " and " + order.format(b) + " compare equal");
            }
        }
    }
    for (const auto &a : sample) {
        for (const auto &b : sample) {
            if (!leq(order, a, b)) {
                continue;
            }
            for (const auto &c : sample) {
                if (leq(order, b, c) && !leq(order, a, c)) {
                    report.add("transitivity", order.format(a) + " <= " + order.format(b) + " <= " + order.format(c)
                                                   + " but not " + order.format(a) + " <= " + order.format(c));
                }
            }
        }
    }
    return report;
}

// k in N or infinity, read as the radius 2^-k. Larger k is a smaller radius;
// infinity is the zero radius.
class NatExp
{
public:
    static constexpr std::uint64_t infinity_index = std::numeric_limits<std::uint64_t>::max();

    constexpr NatExp() noexcept = default;
    constexpr explicit NatExp(std::uint64_t k) noexcept : m_index(k) {}

    static constexpr NatExp infinity() noexcept
    {
        return NatExp{};
    }

    constexpr std::uint64_t index() const noexcept
    {
        return m_index;
    }
    constexpr bool is_infinite() const noexcept
    {
        return m_index == infinity_index;
    }

    friend constexpr bool operator==(NatExp, NatExp) noexcept = default;

private:
    std::uint64_t m_index = infinity_index;
};

class NatExpOrder
{
public:
    using value_type = NatExp;

    explicit NatExpOrder(std::uint64_t sample_bound = 8) : m_sample_bound(sample_bound) {}

    Ordering compare(NatExp a, NatExp b) const noexcept
    {
        if (a.index() == b.index()) {
            return Ordering::equal;
        }
        return a.index() > b.index() ? Ordering::less : Ordering::greater;
    }
    NatExp zero() const noexcept
    {
        return NatExp::infinity();
    }
    // Nonzero radii 2^0 .. 2^-bound.
    std::vector<NatExp> sample() const;
    std::string format(NatExp a) const;
    NatExp parse(const std::string &s) const;

private:
    std::uint64_t m_sample_bound;
};

struct PosetRadius {
    std::uint64_t order_id = 0;
    std::size_t index = 0;

    friend bool operator==(const PosetRadius &, const PosetRadius &) = default;
};

// An explicit finite radius set with a <= table. The table is taken as given
// by from_table (so broken relations can be constructed and reported), and
// closed reflexively and transitively by from_pairs.
class FinitePoset
{
public:
    using value_type = PosetRadius;

    static FinitePoset from_table(std::vector<std::string> names, std::size_t zero_index,
                                  std::vector<std::vector<bool>> leq_table);
    static FinitePoset from_pairs(std::vector<std::string> names, const std::string &zero_name,
                                  const std::vector<std::pair<std::string, std::string>> &less_pairs);
    // 0 < 1 < ... < n-1, names "0".."n-1".
    static FinitePoset chain(std::size_t n);
    // 0 < a, b < 1 with a, b incomparable.
    static FinitePoset diamond();
    // 0 < a < b, a < c with b, c incomparable.
    static FinitePoset fork();

    Ordering compare(const PosetRadius &a, const PosetRadius &b) const;
    PosetRadius zero() const noexcept
    {
        return {m_id, m_zero};
    }
    // Every element other than the designated zero.
    std::vector<PosetRadius> sample() const;
    // Every element, zero included.
    std::vector<PosetRadius> elements() const;
    std::string format(const PosetRadius &a) const;
    PosetRadius parse(const std::string &s) const;

    PosetRadius value(const std::string &name) const;
    PosetRadius value(std::size_t index) const;
    const std::string &name(const PosetRadius &a) const;
    std::size_t size() const noexcept
    {
        return m_names.size();
    }
    const std::vector<std::string> &names() const noexcept
    {
        return m_names;
    }
    bool table_leq(std::size_t i, std::size_t j) const
    {
        return m_leq[i][j];
    }
    std::uint64_t id() const noexcept
    {
        return m_id;
    }

private:
    FinitePoset(std::vector<std::string> names, std::size_t zero_index, std::vector<std::vector<bool>> leq);

    void check_owner(const PosetRadius &a) const;

    std::uint64_t m_id;
    std::vector<std::string> m_names;
    std::size_t m_zero;
    std::vector<std::vector<bool>> m_leq;
};

// (m, n) in N^2 or infinity under reversed lexicographic comparison: a
// lexicographically larger pair is a smaller radius; infinity is zero.
class LexPair
{
public:
    constexpr LexPair() noexcept = default;
    constexpr LexPair(std::uint64_t m, std::uint64_t n) noexcept : m_m(m), m_n(n), m_finite(true) {}

    static constexpr LexPair infinity() noexcept
    {
        return LexPair{};
    }

    constexpr std::uint64_t first() const noexcept
    {
        return m_m;
    }
    constexpr std::uint64_t second() const noexcept
    {
        return m_n;
    }
    constexpr bool is_infinite() const noexcept
    {
        return !m_finite;
    }

    friend constexpr bool operator==(const LexPair &, const LexPair &) noexcept = default;

private:
    std::uint64_t m_m = 0;
    std::uint64_t m_n = 0;
    bool m_finite = false;
};

class LexPairOrder
{
public:
    using value_type = LexPair;

    explicit LexPairOrder(std::uint64_t sample_bound = 3) : m_sample_bound(sample_bound) {}

    Ordering compare(const LexPair &a, const LexPair &b) const noexcept;
    LexPair zero() const noexcept
    {
        return LexPair::infinity();
    }
    // All (m, n) with m, n <= bound.
    std::vector<LexPair> sample() const;
    std::string format(const LexPair &a) const;
    LexPair parse(const std::string &s) const;

private:
    std::uint64_t m_sample_bound;
};

} // namespace ultrafix

#endif
