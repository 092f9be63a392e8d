#include <ultrafix/instances/finite_space.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <ultrafix/errors.hpp>
#include <ultrafix/space.hpp>

namespace ultrafix
{

FiniteSpace::FiniteSpace(FinitePoset order, std::vector<std::string> names, Table table)
    : m_order(std::move(order)), m_names(std::move(names)), m_table(std::move(table))
{
    if (m_names.empty()) {
        throw PreconditionError("a finite space needs at least one point");
    }
    if (m_table.size() != m_names.size()) {
        throw PreconditionError("distance table has the wrong number of rows");
    }
    for (const auto &row : m_table) {
        if (row.size() != m_names.size()) {
            throw PreconditionError("distance table has a row of the wrong length");
        }
        for (const auto &r : row) {
            if (r.order_id != m_order.id()) {
                throw MixedOrders("distance table entry from a different radius order");
            }
        }
    }
}

FiniteSpace FiniteSpace::unchecked(FinitePoset order, std::vector<std::string> names, Table table)
{
    return FiniteSpace(std::move(order), std::move(names), std::move(table));
}

FiniteSpace FiniteSpace::create(FinitePoset order, std::vector<std::string> names, Table table)
{
    FiniteSpace space(std::move(order), std::move(names), std::move(table));
    const auto report = check_space_axioms(space, space.order().sample());
    if (!report.ok()) {
        std::ostringstream os;
        os << report;
        throw AxiomViolation("distance table violates the ultrametric axioms:\n" + os.str());
    }
    return space;
}

FiniteSpace FiniteSpace::f3()
{
    auto order = FinitePoset::chain(3);
    const auto z = order.value(std::size_t{0});
    const auto one = order.value(std::size_t{1});
    const auto two = order.value(std::size_t{2});
    Table t{{z, two, two}, {two, z, one}, {two, one, z}};
    return create(std::move(order), {"a", "b", "c"}, std::move(t));
}

std::vector<std::size_t> FiniteSpace::sample_points() const
{
    std::vector<std::size_t> out(m_names.size());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

std::size_t FiniteSpace::point(const std::string &name) const
{
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        if (m_names[i] == name) {
            return i;
        }
    }
    throw ParseError("unknown point '" + name + "'");
}

std::string describe_images(const FiniteSpace &space, const std::vector<std::size_t> &images)
{
    std::string out;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += space.format_point(i) + "->" + space.format_point(images[i]);
    }
    return out;
}

ContractingMap<std::size_t> finite_map(const FiniteSpace &space, std::vector<std::size_t> images)
{
    if (images.size() != space.size()) {
        throw PreconditionError("map table size differs from the space size");
    }
    for (auto v : images) {
        if (v >= space.size()) {
            throw PreconditionError("map image out of range");
        }
    }
    auto name = describe_images(space, images);
    return {std::move(name), [images = std::move(images)](const std::size_t &x) { return images.at(x); }};
}

std::vector<std::vector<std::size_t>> all_contracting_selfmaps(const FiniteSpace &space)
{
    const auto n = space.size();
    const auto &order = space.order();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> images(n, 0);
    while (true) {
        bool contracting = true;
        for (std::size_t x = 0; x < n && contracting; ++x) {
            for (std::size_t y = x + 1; y < n && contracting; ++y) {
                contracting = lt(order, space.distance(images[x], images[y]), space.distance(x, y));
            }
        }
        if (contracting) {
            out.push_back(images);
        }
        // Next map in mixed-radix order.
        std::size_t k = 0;
        while (k < n && ++images[k] == n) {
            images[k++] = 0;
        }
        if (k == n) {
            break;
        }
    }
    return out;
}

namespace
{

class Enumerator
{
public:
    Enumerator(const FinitePoset &order, std::size_t n) : m_order(order), m_n(n), m_radii(order.sample())
    {
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                m_pairs.emplace_back(i, j);
            }
        }
        m_d.assign(n, std::vector<std::size_t>(n, 0));
        m_leq.assign(order.size(), std::vector<bool>(order.size(), false));
        for (std::size_t a = 0; a < order.size(); ++a) {
            for (std::size_t b = 0; b < order.size(); ++b) {
                m_leq[a][b] = leq(order, order.value(a), order.value(b));
            }
        }
    }

    std::vector<FiniteSpace> run()
    {
        if (m_n == 1) {
            add_current();
        } else {
            assign(0);
        }
        return std::move(m_out);
    }

private:
    bool triangle_ok(std::size_t xy, std::size_t yz, std::size_t xz) const
    {
        for (const auto &g : m_radii) {
            if (m_leq[xy][g.index] && m_leq[yz][g.index] && !m_leq[xz][g.index]) {
                return false;
            }
        }
        return true;
    }

    bool consistent(std::size_t i, std::size_t j) const
    {
        for (std::size_t x = 0; x < i; ++x) {
            const auto a = m_d[x][i];
            const auto b = m_d[x][j];
            const auto c = m_d[i][j];
            if (!triangle_ok(a, c, b) || !triangle_ok(b, c, a) || !triangle_ok(a, b, c)) {
                return false;
            }
        }
        return true;
    }

    void assign(std::size_t k)
    {
        if (k == m_pairs.size()) {
            add_current();
            return;
        }
        const auto [i, j] = m_pairs[k];
        for (const auto &r : m_radii) {
            m_d[i][j] = m_d[j][i] = r.index;
            if (consistent(i, j)) {
                assign(k + 1);
            }
        }
    }

    void add_current()
    {
        std::vector<std::size_t> perm(m_n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::vector<std::size_t> best;
        do {
            std::vector<std::size_t> code;
            code.reserve(m_pairs.size());
            for (const auto &[i, j] : m_pairs) {
                code.push_back(m_d[perm[i]][perm[j]]);
            }
            if (best.empty() || code < best) {
                best = std::move(code);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!m_seen.insert(best).second) {
            return;
        }
        FiniteSpace::Table table(m_n, std::vector<PosetRadius>(m_n, m_order.zero()));
        for (std::size_t k = 0; k < m_pairs.size(); ++k) {
            const auto [i, j] = m_pairs[k];
            table[i][j] = table[j][i] = m_order.value(best[k]);
        }
        std::vector<std::string> names;
        for (std::size_t i = 0; i < m_n; ++i) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        }
        m_out.push_back(FiniteSpace::unchecked(m_order, std::move(names), std::move(table)));
    }

    const FinitePoset &m_order;
    std::size_t m_n;
    std::vector<PosetRadius> m_radii;
    std::vector<std::pair<std::size_t, std::size_t>> m_pairs;
    std::vector<std::vector<std::size_t>> m_d;
    std::vector<std::vector<bool>> m_leq;
    std::set<std::vector<std::size_t>> m_seen;
    std::vector<FiniteSpace> m_out;
};

} // namespace

std::vector<FiniteSpace> finite_space_enumerate(std::size_t max_points, const FinitePoset &order)
{
    if (max_points > 6) {
        throw PreconditionError("finite enumeration is limited to 6 points");
    }
    std::vector<FiniteSpace> out;
    for (std::size_t n = 2; n <= max_points; ++n) {
        auto spaces = Enumerator(order, n).run();
        out.insert(out.end(), std::make_move_iterator(spaces.begin()), std::make_move_iterator(spaces.end()));
    }
    return out;
}

} // namespace ultrafix
