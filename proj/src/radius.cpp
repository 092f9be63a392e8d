#include <ultrafix/radius.hpp>

#include <atomic>
#include <charconv>
#include <string_view>

#include <ultrafix/errors.hpp>

namespace ultrafix
{

namespace
{

std::uint64_t parse_index(std::string_view text, const std::string &whole)
{
    std::uint64_t value = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (text.empty() || res.ec != std::errc{} || res.ptr != last) {
        throw ParseError("malformed radius '" + whole + "'");
    }
    return value;
}

std::string_view strip_tag(const std::string &s, std::string_view tag)
{
    if (s.size() < tag.size() || std::string_view(s).substr(0, tag.size()) != tag) {
        throw ParseError("radius '" + s + "' lacks the '" + std::string(tag) + "' tag");
    }
    return std::string_view(s).substr(tag.size());
}

std::uint64_t next_poset_id()
{
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

} // namespace

const char *to_string(Ordering o) noexcept
{
    switch (o) {
        case Ordering::less:
            return "Lt";
        case Ordering::greater:
            return "Gt";
        case Ordering::equal:
            return "Eq";
        case Ordering::incomparable:
            return "Incomparable";
    }
    return "?";
}

std::vector<NatExp> NatExpOrder::sample() const
{
    std::vector<NatExp> out;
    for (std::uint64_t k = 0; k <= m_sample_bound; ++k) {
        out.emplace_back(k);
    }
    return out;
}

std::string NatExpOrder::format(NatExp a) const
{
    return a.is_infinite() ? std::string("natexp:inf") : "natexp:" + std::to_string(a.index());
}

NatExp NatExpOrder::parse(const std::string &s) const
{
    const auto body = strip_tag(s, "natexp:");
    if (body == "inf") {
        return NatExp::infinity();
    }
    const auto k = parse_index(body, s);
    if (k == NatExp::infinity_index) {
        throw ParseError("radius index out of range in '" + s + "'");
    }
    return NatExp{k};
}

FinitePoset::FinitePoset(std::vector<std::string> names, std::size_t zero_index, std::vector<std::vector<bool>> leq)
    : m_id(next_poset_id()), m_names(std::move(names)), m_zero(zero_index), m_leq(std::move(leq))
{
    if (m_names.empty()) {
        throw PreconditionError("a radius poset needs at least one element");
    }
    if (m_zero >= m_names.size()) {
        throw PreconditionError("zero index out of range");
    }
    if (m_leq.size() != m_names.size()) {
        throw PreconditionError("order table has the wrong number of rows");
    }
    for (const auto &row : m_leq) {
        if (row.size() != m_names.size()) {
            throw PreconditionError("order table has a row of the wrong length");
        }
    }
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        for (std::size_t j = i + 1; j < m_names.size(); ++j) {
            if (m_names[i] == m_names[j]) {
                throw PreconditionError("duplicate radius name '" + m_names[i] + "'");
            }
        }
    }
}

FinitePoset FinitePoset::from_table(std::vector<std::string> names, std::size_t zero_index,
                                    std::vector<std::vector<bool>> leq_table)
{
    return FinitePoset(std::move(names), zero_index, std::move(leq_table));
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> names, const std::string &zero_name,
                                    const std::vector<std::pair<std::string, std::string>> &less_pairs)
{
    const auto n = names.size();
    auto index_of = [&](const std::string &s) {
        for (std::size_t i = 0; i < n; ++i) {
            if (names[i] == s) {
                return i;
            }
        }
        throw PreconditionError("unknown radius '" + s + "'");
    };
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        leq[i][i] = true;
    }
    for (const auto &[a, b] : less_pairs) {
        leq[index_of(a)][index_of(b)] = true;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!leq[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (leq[k][j]) {
                    leq[i][j] = true;
                }
            }
        }
    }
    const auto zero = index_of(zero_name);
    return FinitePoset(std::move(names), zero, std::move(leq));
}

FinitePoset FinitePoset::chain(std::size_t n)
{
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        for (std::size_t j = i; j < n; ++j) {
            leq[i][j] = true;
        }
    }
    return FinitePoset(std::move(names), 0, std::move(leq));
}

FinitePoset FinitePoset::diamond()
{
    return from_pairs({"0", "a", "b", "1"}, "0", {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

FinitePoset FinitePoset::fork()
{
    return from_pairs({"0", "a", "b", "c"}, "0", {{"0", "a"}, {"a", "b"}, {"a", "c"}});
}

void FinitePoset::check_owner(const PosetRadius &a) const
{
    if (a.order_id != m_id) {
        throw MixedOrders("radius belongs to a different order");
    }
    if (a.index >= m_names.size()) {
        throw MixedOrders("radius index out of range for this order");
    }
}

Ordering FinitePoset::compare(const PosetRadius &a, const PosetRadius &b) const
{
    check_owner(a);
    check_owner(b);
    const bool ab = m_leq[a.index][b.index];
    if (a.index == b.index) {
        return ab ? Ordering::equal : Ordering::incomparable;
    }
    if (ab) {
        return Ordering::less;
    }
    if (m_leq[b.index][a.index]) {
        return Ordering::greater;
    }
    return Ordering::incomparable;
}

std::vector<PosetRadius> FinitePoset::sample() const
{
    std::vector<PosetRadius> out;
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        if (i != m_zero) {
            out.push_back({m_id, i});
        }
    }
    return out;
}

std::vector<PosetRadius> FinitePoset::elements() const
{
    std::vector<PosetRadius> out;
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        out.push_back({m_id, i});
    }
    return out;
}

std::string FinitePoset::format(const PosetRadius &a) const
{
    return "poset:" + name(a);
}

PosetRadius FinitePoset::parse(const std::string &s) const
{
    return value(std::string(strip_tag(s, "poset:")));
}

PosetRadius FinitePoset::value(const std::string &n) const
{
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        if (m_names[i] == n) {
            return {m_id, i};
        }
    }
    throw ParseError("unknown radius '" + n + "'");
}

PosetRadius FinitePoset::value(std::size_t index) const
{
    if (index >= m_names.size()) {
        throw PreconditionError("radius index out of range");
    }
    return {m_id, index};
}

const std::string &FinitePoset::name(const PosetRadius &a) const
{
    check_owner(a);
    return m_names[a.index];
}

Ordering LexPairOrder::compare(const LexPair &a, const LexPair &b) const noexcept
{
    if (a == b) {
        return Ordering::equal;
    }
    if (a.is_infinite()) {
        return Ordering::less;
    }
    if (b.is_infinite()) {
        return Ordering::greater;
    }
    const auto ka = std::pair{a.first(), a.second()};
    const auto kb = std::pair{b.first(), b.second()};
    return ka > kb ? Ordering::less : Ordering::greater;
}

std::vector<LexPair> LexPairOrder::sample() const
{
    std::vector<LexPair> out;
    for (std::uint64_t m = 0; m <= m_sample_bound; ++m) {
        for (std::uint64_t n = 0; n <= m_sample_bound; ++n) {
            out.emplace_back(m, n);
        }
    }
    return out;
}

std::string LexPairOrder::format(const LexPair &a) const
{
    if (a.is_infinite()) {
        return "lexpair:inf";
    }
    return "lexpair:" + std::to_string(a.first()) + "," + std::to_string(a.second());
}

LexPair LexPairOrder::parse(const std::string &s) const
{
    const auto body = strip_tag(s, "lexpair:");
    if (body == "inf") {
        return LexPair::infinity();
    }
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("malformed radius '" + s + "'");
    }
    return LexPair{parse_index(body.substr(0, comma), s), parse_index(body.substr(comma + 1), s)};
}

} // namespace ultrafix
