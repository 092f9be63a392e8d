#include <ultrafix/instances/series.hpp>

#include <random>

#include <ultrafix/errors.hpp>

namespace ultrafix
{

SeriesQ::SeriesQ(std::size_t cap) : m_coeffs(cap, Rational(0))
{
    if (cap < 1) {
        throw PreconditionError("series cap must be at least 1");
    }
}

SeriesQ::SeriesQ(std::size_t cap, std::vector<Rational> coefficients) : SeriesQ(cap)
{
    for (std::size_t k = 0; k < cap && k < coefficients.size(); ++k) {
        m_coeffs[k] = std::move(coefficients[k]);
    }
}

SeriesQ SeriesQ::constant(std::size_t cap, const Rational &c)
{
    return monomial(cap, 0, c);
}

SeriesQ SeriesQ::monomial(std::size_t cap, std::size_t k, const Rational &c)
{
    SeriesQ s(cap);
    if (k < cap) {
        s.m_coeffs[k] = c;
    }
    return s;
}

bool SeriesQ::is_zero() const
{
    return order() == cap();
}

std::size_t SeriesQ::order() const
{
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        if (m_coeffs[k] != 0) {
            return k;
        }
    }
    return m_coeffs.size();
}

std::optional<std::size_t> SeriesQ::degree() const
{
    for (std::size_t k = m_coeffs.size(); k-- > 0;) {
        if (m_coeffs[k] != 0) {
            return k;
        }
    }
    return std::nullopt;
}

void SeriesQ::check_same(const SeriesQ &other) const
{
    if (cap() != other.cap()) {
        throw CapMismatch("series with caps " + std::to_string(cap()) + " and " + std::to_string(other.cap()));
    }
}

SeriesQ operator+(const SeriesQ &a, const SeriesQ &b)
{
    a.check_same(b);
    SeriesQ out = a;
    for (std::size_t k = 0; k < a.cap(); ++k) {
        out.m_coeffs[k] += b.m_coeffs[k];
    }
    return out;
}

SeriesQ SeriesQ::operator-() const
{
    return scale(Rational(-1));
}

SeriesQ operator-(const SeriesQ &a, const SeriesQ &b)
{
    return a + (-b);
}

SeriesQ operator*(const SeriesQ &a, const SeriesQ &b)
{
    a.check_same(b);
    const auto n = a.cap();
    SeriesQ out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.m_coeffs[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            out.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return out;
}

SeriesQ SeriesQ::scale(const Rational &c) const
{
    SeriesQ out = *this;
    for (auto &v : out.m_coeffs) {
        v *= c;
    }
    return out;
}

SeriesQ SeriesQ::integrate() const
{
    SeriesQ out(cap());
    for (std::size_t k = 0; k + 1 < cap(); ++k) {
        out.m_coeffs[k + 1] = m_coeffs[k] / Rational(k + 1);
    }
    return out;
}

SeriesQ SeriesQ::derivative() const
{
    SeriesQ out(cap());
    for (std::size_t k = 1; k < cap(); ++k) {
        out.m_coeffs[k - 1] = m_coeffs[k] * Rational(k);
    }
    return out;
}

SeriesQ SeriesQ::truncate(std::size_t k) const
{
    SeriesQ out = *this;
    for (std::size_t i = k; i < cap(); ++i) {
        out.m_coeffs[i] = 0;
    }
    return out;
}

std::string SeriesQ::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        const auto &c = m_coeffs[k];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string power = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (power.empty()) {
            out += to_short_string(mag);
        } else if (mag == 1) {
            out += power;
        } else {
            out += to_short_string(mag) + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> series_variables()
{
    return {"t", "y"};
}

SeriesQ poly_eval(const Polynomial &f, const SeriesQ &y)
{
    if (f.variables() != series_variables()) {
        throw PreconditionError("right-hand side must be a polynomial in t and y");
    }
    const auto cap = y.cap();
    std::vector<SeriesQ> powers{SeriesQ::constant(cap, Rational(1))};
    const auto deg = f.degree(1);
    for (unsigned k = 1; k <= deg; ++k) {
        powers.push_back(powers.back() * y);
    }
    SeriesQ out(cap);
    for (const auto &[m, c] : f.terms()) {
        out = out + SeriesQ::monomial(cap, m[0], c) * powers[m[1]];
    }
    return out;
}

SeriesSpace::SeriesSpace(std::size_t cap) : m_cap(cap), m_order(cap == 0 ? 0 : cap - 1)
{
    if (cap < 1) {
        throw PreconditionError("series cap must be at least 1");
    }
}

NatExp SeriesSpace::distance(const SeriesQ &a, const SeriesQ &b) const
{
    const auto k = (a - b).order();
    return k == a.cap() ? NatExp::infinity() : NatExp(k);
}

bool SeriesSpace::equal(const SeriesQ &a, const SeriesQ &b) const
{
    return a == b;
}

std::vector<SeriesQ> SeriesSpace::sample_points() const
{
    std::vector<SeriesQ> out{zero_point(), SeriesQ::constant(m_cap, Rational(1))};
    for (std::size_t k = 1; k < m_cap; ++k) {
        out.push_back(SeriesQ::monomial(m_cap, k));
    }
    std::mt19937 rng(0x5e21e5 + static_cast<unsigned>(m_cap));
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 3);
    while (out.size() < 20) {
        std::vector<Rational> c;
        for (std::size_t k = 0; k < m_cap; ++k) {
            c.emplace_back(num(rng), den(rng));
        }
        out.emplace_back(m_cap, std::move(c));
    }
    return out;
}

std::vector<NatExp> SeriesSpace::sample_radii() const
{
    std::vector<NatExp> out;
    for (std::size_t k = 0; k < m_cap; ++k) {
        out.emplace_back(k);
    }
    return out;
}

std::string SeriesSpace::precision() const
{
    return "mod t^" + std::to_string(m_cap);
}

std::optional<SeriesQ> SeriesSpace::witness(const SeriesQ &x, NatExp gamma) const
{
    if (gamma.is_infinite() || gamma.index() >= m_cap) {
        return std::nullopt;
    }
    return x + SeriesQ::monomial(m_cap, static_cast<std::size_t>(gamma.index()));
}

std::optional<SeriesQ> SeriesSpace::stabilized_limit(const std::vector<SeriesQ> &fam) const
{
    if (fam.size() < 2) {
        return std::nullopt;
    }
    const auto &last = fam.back();
    const auto &prev = fam[fam.size() - 2];
    std::vector<Rational> c;
    for (std::size_t k = 0; k < m_cap; ++k) {
        if (last[k] != prev[k]) {
            return std::nullopt;
        }
        c.push_back(last[k]);
    }
    return SeriesQ(m_cap, std::move(c));
}

ContractingMap<SeriesQ> affine_series_map(const SeriesQ &b, const SeriesQ &a)
{
    if (a.order() < 1) {
        throw PreconditionError("affine multiplier must have order at least 1");
    }
    return {"affine(" + b.to_string() + " + (" + a.to_string() + ")*x)",
            [b, a](const SeriesQ &x) { return b + a * x; }};
}

SeriesQ affine_series_fixed_point(const SeriesQ &b, const SeriesQ &a)
{
    if (a.order() < 1) {
        throw PreconditionError("affine multiplier must have order at least 1");
    }
    auto sum = SeriesQ::constant(b.cap(), Rational(1));
    auto power = sum;
    for (std::size_t k = 1; k < b.cap(); ++k) {
        power = power * a;
        sum = sum + power;
    }
    return b * sum;
}

LimitOracle<SeriesQ, NatExp> affine_series_oracle(const SeriesQ &b, const SeriesQ &a)
{
    auto z = affine_series_fixed_point(b, a);
    return {"affine-closed-form", [z](const Trace<SeriesQ, NatExp> &) { return std::optional<SeriesQ>(z); }};
}

} // namespace ultrafix
