#include <ultrafix/instances/lex_series.hpp>

#include <algorithm>
#include <random>

#include <ultrafix/errors.hpp>

namespace ultrafix
{

LexSeriesQ::LexSeriesQ(std::size_t cap_m, std::size_t cap_n)
    : m_cap_m(cap_m), m_cap_n(cap_n), m_coeffs(cap_m * cap_n, Rational(0))
{
    if (cap_m < 1 || cap_n < 1) {
        throw PreconditionError("lex series caps must be at least 1");
    }
}

LexSeriesQ LexSeriesQ::monomial(std::size_t cap_m, std::size_t cap_n, std::size_t m, std::size_t n,
                                const Rational &c)
{
    LexSeriesQ s(cap_m, cap_n);
    if (m < cap_m && n < cap_n) {
        s.set(m, n, c);
    }
    return s;
}

LexPair LexSeriesQ::order() const
{
    for (std::size_t m = 0; m < m_cap_m; ++m) {
        for (std::size_t n = 0; n < m_cap_n; ++n) {
            if (at(m, n) != 0) {
                return {m, n};
            }
        }
    }
    return LexPair::infinity();
}

void LexSeriesQ::check_same(const LexSeriesQ &other) const
{
    if (m_cap_m != other.m_cap_m || m_cap_n != other.m_cap_n) {
        throw CapMismatch("lex series with different caps");
    }
}

LexSeriesQ operator+(const LexSeriesQ &a, const LexSeriesQ &b)
{
    a.check_same(b);
    auto out = a;
    for (std::size_t k = 0; k < out.m_coeffs.size(); ++k) {
        out.m_coeffs[k] += b.m_coeffs[k];
    }
    return out;
}

LexSeriesQ operator-(const LexSeriesQ &a, const LexSeriesQ &b)
{
    return a + b.scale(Rational(-1));
}

LexSeriesQ operator*(const LexSeriesQ &a, const LexSeriesQ &b)
{
    a.check_same(b);
    LexSeriesQ out(a.m_cap_m, a.m_cap_n);
    for (std::size_t m = 0; m < a.m_cap_m; ++m) {
        for (std::size_t n = 0; n < a.m_cap_n; ++n) {
            if (a.at(m, n) != 0) {
                out = out + b.shift(m, n, a.at(m, n));
            }
        }
    }
    return out;
}

LexSeriesQ LexSeriesQ::scale(const Rational &c) const
{
    auto out = *this;
    for (auto &v : out.m_coeffs) {
        v *= c;
    }
    return out;
}

LexSeriesQ LexSeriesQ::shift(std::size_t i, std::size_t j, const Rational &c) const
{
    LexSeriesQ out(m_cap_m, m_cap_n);
    for (std::size_t m = 0; m + i < m_cap_m; ++m) {
        for (std::size_t n = 0; n + j < m_cap_n; ++n) {
            out.set(m + i, n + j, at(m, n) * c);
        }
    }
    return out;
}

std::string LexSeriesQ::to_string() const
{
    std::string out;
    for (std::size_t m = 0; m < m_cap_m; ++m) {
        for (std::size_t n = 0; n < m_cap_n; ++n) {
            const auto &c = at(m, n);
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
            std::string factors;
            auto add = [&](const char *var, std::size_t e) {
                if (e == 0) {
                    return;
                }
                if (!factors.empty()) {
                    factors += "*";
                }
                factors += var;
                if (e > 1) {
                    factors += "^" + std::to_string(e);
                }
            };
            add("u", m);
            add("v", n);
            if (factors.empty()) {
                out += to_short_string(mag);
            } else if (mag == 1) {
                out += factors;
            } else {
                out += to_short_string(mag) + "*" + factors;
            }
        }
    }
    return out.empty() ? "0" : out;
}

LexSeriesSpace::LexSeriesSpace(std::size_t cap_m, std::size_t cap_n)
    : m_cap_m(cap_m), m_cap_n(cap_n), m_order(std::max(cap_m, cap_n) - 1)
{
    if (cap_m < 1 || cap_n < 1) {
        throw PreconditionError("lex series caps must be at least 1");
    }
}

std::vector<LexSeriesQ> LexSeriesSpace::sample_points() const
{
    std::vector<LexSeriesQ> out{zero_point()};
    for (std::size_t m = 0; m < m_cap_m; ++m) {
        for (std::size_t n = 0; n < m_cap_n; ++n) {
            out.push_back(LexSeriesQ::monomial(m_cap_m, m_cap_n, m, n));
        }
    }
    std::mt19937 rng(0x1e5 + static_cast<unsigned>(m_cap_m * 31 + m_cap_n));
    std::uniform_int_distribution<int> num(-1, 1);
    const auto target = out.size() + 8;
    while (out.size() < target) {
        auto x = zero_point();
        for (std::size_t m = 0; m < m_cap_m; ++m) {
            for (std::size_t n = 0; n < m_cap_n; ++n) {
                x.set(m, n, Rational(num(rng)));
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<LexPair> LexSeriesSpace::sample_radii() const
{
    std::vector<LexPair> out;
    for (std::size_t m = 0; m < m_cap_m; ++m) {
        for (std::size_t n = 0; n < m_cap_n; ++n) {
            out.emplace_back(m, n);
        }
    }
    return out;
}

std::string LexSeriesSpace::precision() const
{
    return "mod u^" + std::to_string(m_cap_m) + ", v^" + std::to_string(m_cap_n);
}

ContractingMap<LexSeriesQ> lex_affine_map(const LexAffine &f)
{
    if (f.i == 0 && f.j == 0) {
        throw PreconditionError("lex affine shift must be nonzero");
    }
    auto name = "lexaffine(" + f.b.to_string() + " + " + to_short_string(f.c) + "*u^" + std::to_string(f.i) + "*v^"
                + std::to_string(f.j) + "*x)";
    return {std::move(name), [f](const LexSeriesQ &x) { return f.b + x.shift(f.i, f.j, f.c); }};
}

LexSeriesQ lex_affine_fixed_point(const LexAffine &f)
{
    if (f.i == 0 && f.j == 0) {
        throw PreconditionError("lex affine shift must be nonzero");
    }
    auto sum = f.b;
    auto term = f.b;
    const auto rounds = f.b.cap_m() * f.b.cap_n();
    for (std::size_t k = 0; k < rounds; ++k) {
        term = term.shift(f.i, f.j, f.c);
        sum = sum + term;
    }
    return sum;
}

LimitOracle<LexSeriesQ, LexPair> lex_affine_oracle(const LexAffine &f)
{
    auto z = lex_affine_fixed_point(f);
    return {"lexaffine-closed-form",
            [z](const Trace<LexSeriesQ, LexPair> &) { return std::optional<LexSeriesQ>(z); }};
}

} // namespace ultrafix
