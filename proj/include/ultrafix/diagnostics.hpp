#ifndef ULTRAFIX_DIAGNOSTICS_HPP
#define ULTRAFIX_DIAGNOSTICS_HPP

#include <ultrafix/analysis.hpp>
#include <ultrafix/driver.hpp>
#include <ultrafix/report.hpp>
#include <ultrafix/space.hpp>

namespace ultrafix
{

struct SolutionDiagnostics {
    Report report;
    // The family had at least three members, so pseudo-convergence applied.
    bool pc_checked = false;
    // Sigma was coinitial in the realized radii, so the Cauchy checks applied.
    bool cauchy_checked = false;
};

// Pseudo-convergence, gauge, pseudo-limit and (when Sigma is coinitial in
// the instance's realized radii) Cauchy and limit checks on the solution
// family of an outcome that found a fixed point.
template <UltrametricSpace S>
SolutionDiagnostics solution_diagnostics(const S &space, const ContractingMap<point_of<S>> &map,
                                         const Outcome<point_of<S>, radius_of<S>> &outcome)
{
    SolutionDiagnostics out;
    if (!outcome.point) {
        out.report.add("outcome", "no fixed point to diagnose");
        return out;
    }
    const auto &z = *outcome.point;
    const auto fam = solution_family(space, map, outcome);
    if (fam.size() >= 3) {
        out.pc_checked = true;
        const auto pc = pseudo_convergence(space, fam);
        if (!pc.is_pc) {
            out.report.add("pc", "solution family is not pseudo-convergent");
        } else {
            if (!gauge_strictly_decreasing(space.order(), pc.gauge)) {
                out.report.add("gauge", "gauge is not strictly decreasing");
            }
            if (!pc.tail_identity) {
                out.report.add("tail", "d(x_i, x_m) differs from the gauge at i");
            }
            if (!is_pseudo_limit(space, fam, pc, z)) {
                out.report.add("pseudo-limit", space.format_point(z) + " is not a pseudo-limit");
            }
        }
    }
    const auto radii = space.sample_radii();
    if (fam.size() >= 2 && sigma_coinitial(space, outcome.trace, radii)) {
        out.cauchy_checked = true;
        if (!is_cauchy(space, fam, radii)) {
            out.report.add("cauchy", "solution family is not Cauchy over the realized radii");
        } else {
            for (const bool oracle_free : {true, false}) {
                const auto lim = cauchy_limit(space, fam, oracle_free);
                if (!lim || !space.equal(*lim, z)) {
                    out.report.add("limit", std::string(oracle_free ? "tail" : "instance")
                                                + " limit differs from the fixed point");
                }
            }
            if (!is_limit(space, fam, radii, z)) {
                out.report.add("limit", space.format_point(z) + " is not a limit of the family");
            }
        }
    }
    return out;
}

} // namespace ultrafix

#endif
