#ifndef ULTRAFIX_APPS_FINITE_SUITE_HPP
#define ULTRAFIX_APPS_FINITE_SUITE_HPP

#include <cstddef>

#include <ultrafix/instances/finite_space.hpp>
#include <ultrafix/radius.hpp>
#include <ultrafix/report.hpp>

namespace ultrafix
{

struct FiniteSuiteSummary {
    std::size_t spaces = 0;
    std::size_t maps = 0;
    std::size_t runs = 0;
    // Runs whose solution family was long enough for pseudo-convergence.
    std::size_t pc_checked = 0;
    std::size_t cauchy_checked = 0;
    Report report;
};

// Every space from the enumerator over `order` and every strictly
// contracting self-map: a unique fixed point, Reached at it from every
// start, valid traces, and the solution-family diagnostics.
FiniteSuiteSummary run_finite_suite(std::size_t max_points, const FinitePoset &order);

} // namespace ultrafix

#endif
