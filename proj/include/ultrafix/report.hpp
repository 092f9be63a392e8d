#ifndef ULTRAFIX_REPORT_HPP
#define ULTRAFIX_REPORT_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ultrafix
{

struct Violation {
    std::string rule;
    std::string detail;

    friend bool operator==(const Violation &, const Violation &) = default;
};

// Result of an axiom or trace check. An empty report means the check passed.
class Report
{
public:
    void add(std::string rule, std::string detail)
    {
        m_items.push_back({std::move(rule), std::move(detail)});
    }

    void append(const Report &other)
    {
        m_items.insert(m_items.end(), other.m_items.begin(), other.m_items.end());
    }

    bool ok() const noexcept
    {
        return m_items.empty();
    }
    std::size_t size() const noexcept
    {
        return m_items.size();
    }
    const std::vector<Violation> &items() const noexcept
    {
        return m_items;
    }

    std::size_t count(const std::string &rule) const
    {
        std::size_t n = 0;
        for (const auto &v : m_items) {
            n += (v.rule == rule);
        }
        return n;
    }

    friend std::ostream &operator<<(std::ostream &os, const Report &r)
    {
        for (const auto &v : r.m_items) {
            os << v.rule << ": " << v.detail << '\n';
        }
        return os;
    }

private:
    std::vector<Violation> m_items;
};

} // namespace ultrafix

#endif
