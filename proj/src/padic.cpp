#include <ultrafix/instances/padic.hpp>

#include <charconv>
#include <random>
#include <set>
#include <tuple>
#include <utility>

#include <ultrafix/errors.hpp>

namespace ultrafix
{

namespace
{

constexpr std::uint64_t modulus_limit = std::uint64_t{1} << 62;

std::uint64_t checked_modulus(std::uint64_t p, unsigned n)
{
    if (!is_prime(p)) {
        throw PreconditionError(std::to_string(p) + " is not prime");
    }
    if (n < 1) {
        throw PreconditionError("p-adic precision must be at least 1");
    }
    std::uint64_t m = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (m > modulus_limit / p) {
            throw PreconditionError("p^N exceeds 2^62");
        }
        m *= p;
    }
    return m;
}

std::uint64_t power(std::uint64_t p, unsigned k)
{
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) {
        m *= p;
    }
    return m;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PadicInt::PadicInt(std::uint64_t p, unsigned precision, std::int64_t value)
    : m_p(p), m_n(precision), m_modulus(checked_modulus(p, precision)), m_residue(0)
{
    const auto m = static_cast<__int128>(m_modulus);
    auto r = static_cast<__int128>(value) % m;
    if (r < 0) {
        r += m;
    }
    m_residue = static_cast<std::uint64_t>(r);
}

void PadicInt::check_same(const PadicInt &other) const
{
    if (m_p != other.m_p || m_n != other.m_n) {
        throw MixedPrecision("p-adic operands mod " + std::to_string(m_p) + "^" + std::to_string(m_n) + " and mod "
                             + std::to_string(other.m_p) + "^" + std::to_string(other.m_n));
    }
}

unsigned PadicInt::valuation() const noexcept
{
    if (m_residue == 0) {
        return m_n;
    }
    unsigned v = 0;
    auto r = m_residue;
    while (r % m_p == 0) {
        r /= m_p;
        ++v;
    }
    return v;
}

std::vector<std::uint64_t> PadicInt::digits() const
{
    std::vector<std::uint64_t> out;
    auto r = m_residue;
    for (unsigned i = 0; i < m_n; ++i) {
        out.push_back(r % m_p);
        r /= m_p;
    }
    return out;
}

PadicInt operator+(const PadicInt &a, const PadicInt &b)
{
    a.check_same(b);
    auto s = a.m_residue + b.m_residue;
    if (s >= a.m_modulus) {
        s -= a.m_modulus;
    }
    return {a.m_p, a.m_n, a.m_modulus, s};
}

PadicInt PadicInt::operator-() const
{
    return {m_p, m_n, m_modulus, m_residue == 0 ? 0 : m_modulus - m_residue};
}

PadicInt operator-(const PadicInt &a, const PadicInt &b)
{
    return a + (-b);
}

PadicInt operator*(const PadicInt &a, const PadicInt &b)
{
    a.check_same(b);
    const auto prod = static_cast<unsigned __int128>(a.m_residue) * b.m_residue;
    return {a.m_p, a.m_n, a.m_modulus, static_cast<std::uint64_t>(prod % a.m_modulus)};
}

PadicInt PadicInt::unit_inverse() const
{
    if (!is_unit()) {
        throw NonUnit(std::to_string(m_residue) + " is divisible by " + std::to_string(m_p));
    }
    // Extended Euclid on (residue, modulus).
    __int128 r0 = m_modulus, r1 = m_residue;
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const auto q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    auto inv = s0 % static_cast<__int128>(m_modulus);
    if (inv < 0) {
        inv += m_modulus;
    }
    return {m_p, m_n, m_modulus, static_cast<std::uint64_t>(inv)};
}

NatExp padic_distance(const PadicInt &a, const PadicInt &b)
{
    const auto diff = a - b;
    if (diff.residue() == 0) {
        return NatExp::infinity();
    }
    return NatExp(diff.valuation());
}

PadicSpace::PadicSpace(std::uint64_t p, unsigned precision, std::optional<std::uint64_t> ball,
                       std::size_t sample_limit)
    : m_p(p), m_n(precision), m_ball(ball), m_sample_limit(sample_limit), m_order(precision - 1)
{
    checked_modulus(p, precision);
    if (m_ball && *m_ball >= p) {
        throw PreconditionError("ball residue must lie in [0, p)");
    }
    if (m_ball && precision < 2) {
        throw PreconditionError("a residue ball needs precision at least 2");
    }
    if (sample_limit < 2) {
        throw PreconditionError("sample limit must be at least 2");
    }
}

std::vector<PadicInt> PadicSpace::sample_points() const
{
    const auto modulus = power(m_p, m_n);
    const std::uint64_t base = m_ball.value_or(0);
    const std::uint64_t stride = m_ball ? m_p : 1;
    const auto count = modulus / stride;
    std::vector<PadicInt> out;
    if (count <= m_sample_limit) {
        for (std::uint64_t j = 0; j < count; ++j) {
            out.push_back(make(static_cast<std::int64_t>(base + stride * j)));
        }
        return out;
    }
    std::set<std::uint64_t> seen;
    auto push = [&](std::uint64_t r) {
        if (out.size() < m_sample_limit && seen.insert(r).second) {
            out.push_back(make(static_cast<std::int64_t>(r)));
        }
    };
    push(base);
    for (unsigned k = m_ball ? 1 : 0; k < m_n; ++k) {
        push((base + power(m_p, k)) % modulus);
    }
    std::mt19937_64 rng(0x5eed + m_p * 131 + m_n);
    std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
    while (out.size() < m_sample_limit) {
        push(base + stride * pick(rng));
    }
    return out;
}

std::vector<NatExp> PadicSpace::sample_radii() const
{
    std::vector<NatExp> out;
    for (unsigned k = m_ball ? 1 : 0; k < m_n; ++k) {
        out.emplace_back(k);
    }
    return out;
}

std::string PadicSpace::precision() const
{
    return "mod " + std::to_string(m_p) + "^" + std::to_string(m_n);
}

std::optional<PadicInt> PadicSpace::witness(const PadicInt &x, NatExp gamma) const
{
    if (gamma.is_infinite() || gamma.index() >= m_n || (m_ball && gamma.index() == 0)) {
        return std::nullopt;
    }
    return x + make(static_cast<std::int64_t>(power(m_p, static_cast<unsigned>(gamma.index()))));
}

std::optional<PadicInt> PadicSpace::stabilized_limit(const std::vector<PadicInt> &fam) const
{
    if (fam.size() < 2) {
        return std::nullopt;
    }
    const auto last = fam.back().digits();
    const auto prev = fam[fam.size() - 2].digits();
    std::uint64_t r = 0;
    std::uint64_t scale = 1;
    for (unsigned j = 0; j < m_n; ++j) {
        if (last[j] != prev[j]) {
            return std::nullopt;
        }
        r += last[j] * scale;
        scale *= m_p;
    }
    return make(static_cast<std::int64_t>(r));
}

PadicInt PadicSpace::parse_point(const std::string &text) const
{
    std::uint64_t value = 0;
    const auto *last = text.data() + text.size();
    const auto res = std::from_chars(text.data(), last, value);
    if (text.empty() || res.ec != std::errc{} || res.ptr != last || value >= power(m_p, m_n)) {
        throw ParseError("malformed residue '" + text + "' for " + precision());
    }
    return make(static_cast<std::int64_t>(value));
}

bool PadicSpace::contains(const PadicInt &x) const
{
    if (x.prime() != m_p || x.precision() != m_n) {
        return false;
    }
    return !m_ball || x.residue() % m_p == *m_ball;
}

} // namespace ultrafix
