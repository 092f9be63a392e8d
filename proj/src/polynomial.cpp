#include <ultrafix/polynomial.hpp>

#include <cctype>
#include <utility>

#include <ultrafix/errors.hpp>

namespace ultrafix
{

namespace
{

class Parser
{
public:
    Parser(const std::string &text, const std::vector<std::string> &vars) : m_text(text), m_vars(vars) {}

    Polynomial parse()
    {
        skip_space();
        if (m_pos == m_text.size()) {
            fail("empty polynomial");
        }
        auto p = expression();
        skip_space();
        if (m_pos != m_text.size()) {
            fail(std::string("unexpected '") + m_text[m_pos] + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError(what, 1, m_pos + 1);
    }

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (m_pos < m_text.size() && m_text[m_pos] == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    Polynomial expression()
    {
        auto acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term()
    {
        auto acc = power();
        while (true) {
            if (accept('*')) {
                acc *= power();
            } else if (accept('/')) {
                const auto at = m_pos;
                const auto divisor = power();
                if (divisor.is_zero()) {
                    m_pos = at;
                    fail("division by zero");
                }
                const auto &terms = divisor.terms();
                const bool constant = terms.size() == 1 && [&] {
                    for (auto e : terms.begin()->first) {
                        if (e != 0) {
                            return false;
                        }
                    }
                    return true;
                }();
                if (!constant) {
                    m_pos = at;
                    fail("division by a non-constant");
                }
                acc *= Rational(1) / terms.begin()->second;
            } else {
                return acc;
            }
        }
    }

    Polynomial power()
    {
        if (accept('-')) {
            auto p = power();
            p *= Rational(-1);
            return p;
        }
        if (accept('+')) {
            return power();
        }
        auto base = atom();
        if (accept('^')) {
            skip_space();
            const auto k = unsigned_literal();
            return base.pow(k);
        }
        return base;
    }

    unsigned unsigned_literal()
    {
        if (m_pos >= m_text.size() || !std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            fail("expected a non-negative integer exponent");
        }
        unsigned long k = 0;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            k = k * 10 + static_cast<unsigned long>(m_text[m_pos] - '0');
            if (k > 1000) {
                fail("exponent too large");
            }
            ++m_pos;
        }
        return static_cast<unsigned>(k);
    }

    Polynomial atom()
    {
        skip_space();
        if (m_pos >= m_text.size()) {
            fail("unexpected end of input");
        }
        const char c = m_text[m_pos];
        if (c == '(') {
            ++m_pos;
            auto p = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer value = 0;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
                value = value * 10 + (m_text[m_pos] - '0');
                ++m_pos;
            }
            return Polynomial::constant(m_vars, Rational(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto begin = m_pos;
            while (m_pos < m_text.size()
                   && (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) || m_text[m_pos] == '_')) {
                ++m_pos;
            }
            const auto name = m_text.substr(begin, m_pos - begin);
            for (std::size_t i = 0; i < m_vars.size(); ++i) {
                if (m_vars[i] == name) {
                    return Polynomial::variable(m_vars, i);
                }
            }
            m_pos = begin;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string &m_text;
    const std::vector<std::string> &m_vars;
    std::size_t m_pos = 0;
};

} // namespace

Polynomial::Polynomial(std::vector<std::string> variables) : m_vars(std::move(variables)) {}

Polynomial Polynomial::parse(const std::string &text, std::vector<std::string> variables)
{
    return Parser(text, variables).parse();
}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational &c)
{
    Polynomial p(std::move(variables));
    p.add_term(Monomial(p.m_vars.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index)
{
    Polynomial p(std::move(variables));
    Monomial m(p.m_vars.size(), 0);
    m.at(index) = 1;
    p.add_term(m, Rational(1));
    return p;
}

void Polynomial::add_term(const Monomial &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto it = m_terms.find(m);
    if (it == m_terms.end()) {
        m_terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) {
        m_terms.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial &other) const
{
    if (m_vars != other.m_vars) {
        throw PreconditionError("polynomials over different variables");
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    check_compatible(other);
    for (const auto &[m, c] : other.m_terms) {
        add_term(m, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    check_compatible(other);
    for (const auto &[m, c] : other.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    check_compatible(other);
    Polynomial out(m_vars);
    for (const auto &[ma, ca] : m_terms) {
        for (const auto &[mb, cb] : other.m_terms) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
            }
            out.add_term(m, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (c == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[m, v] : m_terms) {
        v *= c;
    }
    return *this;
}

Polynomial Polynomial::pow(unsigned k) const
{
    auto out = constant(m_vars, Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        out *= *this;
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t index) const
{
    Polynomial out(m_vars);
    for (const auto &[m, c] : m_terms) {
        if (m.at(index) == 0) {
            continue;
        }
        auto dm = m;
        --dm[index];
        out.add_term(dm, c * m[index]);
    }
    return out;
}

unsigned Polynomial::degree(std::size_t index) const
{
    unsigned d = 0;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, m.at(index));
    }
    return d;
}

bool Polynomial::has_integer_coefficients() const
{
    for (const auto &[m, c] : m_terms) {
        if (boost::multiprecision::denominator(c) != 1) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        const auto &[m, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (!factors.empty()) {
                factors += "*";
            }
            factors += m_vars[i];
            if (m[i] > 1) {
                factors += "^" + std::to_string(m[i]);
            }
        }
        if (factors.empty()) {
            out += to_short_string(mag);
        } else if (mag == 1) {
            out += factors;
        } else {
            out += to_short_string(mag) + "*" + factors;
        }
    }
    return out;
}

} // namespace ultrafix
