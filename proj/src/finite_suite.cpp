#include <ultrafix/apps/finite_suite.hpp>

#include <ultrafix/diagnostics.hpp>
#include <ultrafix/driver.hpp>

namespace ultrafix
{

FiniteSuiteSummary run_finite_suite(std::size_t max_points, const FinitePoset &order)
{
    FiniteSuiteSummary summary;
    for (const auto &space : finite_space_enumerate(max_points, order)) {
        ++summary.spaces;
        const auto axioms = check_space_axioms(space, space.sample_radii());
        summary.report.append(axioms);
        for (const auto &images : all_contracting_selfmaps(space)) {
            ++summary.maps;
            const auto map = finite_map(space, images);
            const auto where = "space " + std::to_string(summary.spaces) + " map " + map.name;
            std::size_t fixed = 0;
            std::size_t z = 0;
            for (std::size_t x = 0; x < space.size(); ++x) {
                if (images[x] == x) {
                    ++fixed;
                    z = x;
                }
            }
            if (fixed != 1) {
                summary.report.add("fpt", where + ": " + std::to_string(fixed) + " fixed points");
                continue;
            }
            const DriverConfig config{space.size() + 1, 1};
            for (std::size_t start = 0; start < space.size(); ++start) {
                ++summary.runs;
                const auto outcome = run(space, map, start, config);
                const auto at = where + " from " + space.format_point(start);
                if (outcome.kind != OutcomeKind::reached || !outcome.point || *outcome.point != z) {
                    summary.report.add("reach", at + ": outcome " + to_string(outcome.kind));
                    continue;
                }
                for (const auto &v : validate_outcome(space, map, outcome).items()) {
                    summary.report.add(v.rule, at + ": " + v.detail);
                }
                const auto diag = solution_diagnostics(space, map, outcome);
                summary.pc_checked += diag.pc_checked;
                summary.cauchy_checked += diag.cauchy_checked;
                for (const auto &v : diag.report.items()) {
                    summary.report.add(v.rule, at + ": " + v.detail);
                }
            }
        }
    }
    return summary;
}

} // namespace ultrafix
