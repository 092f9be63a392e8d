#ifndef ULTRAFIX_INSTANCES_FINITE_SPACE_HPP
#define ULTRAFIX_INSTANCES_FINITE_SPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <ultrafix/driver.hpp>
#include <ultrafix/radius.hpp>

namespace ultrafix
{

// Points 0..n-1 with an explicit distance table into a finite radius poset.
class FiniteSpace
{
public:
    using point_type = std::size_t;
    using order_type = FinitePoset;
    using Table = std::vector<std::vector<PosetRadius>>;

    // Throws AxiomViolation unless (d1)-(d3) hold exhaustively.
    static FiniteSpace create(FinitePoset order, std::vector<std::string> names, Table table);
    // No axiom check; used to load and report on arbitrary tables.
    static FiniteSpace unchecked(FinitePoset order, std::vector<std::string> names, Table table);

    // Points a, b, c over 0 < 1 < 2 with d(a,b) = d(a,c) = 2 and d(b,c) = 1.
    static FiniteSpace f3();

    const FinitePoset &order() const noexcept
    {
        return m_order;
    }
    PosetRadius distance(std::size_t x, std::size_t y) const
    {
        return m_table.at(x).at(y);
    }
    bool equal(std::size_t x, std::size_t y) const noexcept
    {
        return x == y;
    }
    std::vector<std::size_t> sample_points() const;
    std::vector<PosetRadius> sample_radii() const
    {
        return m_order.sample();
    }
    std::string format_point(std::size_t x) const
    {
        return m_names.at(x);
    }

    std::size_t size() const noexcept
    {
        return m_names.size();
    }
    const std::vector<std::string> &names() const noexcept
    {
        return m_names;
    }
    const Table &table() const noexcept
    {
        return m_table;
    }
    std::size_t point(const std::string &name) const;

private:
    FiniteSpace(FinitePoset order, std::vector<std::string> names, Table table);

    FinitePoset m_order;
    std::vector<std::string> m_names;
    Table m_table;
};

// Map given by its image table.
ContractingMap<std::size_t> finite_map(const FiniteSpace &space, std::vector<std::size_t> images);

std::string describe_images(const FiniteSpace &space, const std::vector<std::size_t> &images);

// All n^n self-maps passing the exhaustive strict-contraction check.
std::vector<std::vector<std::size_t>> all_contracting_selfmaps(const FiniteSpace &space);

// Every finite ultrametric space with 2..max_points points over `order`, one
// per isomorphism class (point relabeling). max_points must be at most 6.
std::vector<FiniteSpace> finite_space_enumerate(std::size_t max_points, const FinitePoset &order);

} // namespace ultrafix

#endif
