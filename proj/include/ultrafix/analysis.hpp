#ifndef ULTRAFIX_ANALYSIS_HPP
#define ULTRAFIX_ANALYSIS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <ultrafix/driver.hpp>
#include <ultrafix/errors.hpp>
#include <ultrafix/radius.hpp>
#include <ultrafix/report.hpp>
#include <ultrafix/space.hpp>

// Diagnostics on finite prefixes of families: pseudo-convergence, gauges,
// pseudo-limits, Cauchy families and limits, coinitiality of the step
// distances, solidness, and extension of a map by continuity. "Eventually"
// always means "on a tail of the given prefix"; "for every radius" ranges
// over the radii passed in (normally the instance's realized radii).

namespace ultrafix
{

template <typename R>
struct PCReport {
    bool is_pc = false;
    // Least index from which the family is pseudo-convergent.
    std::size_t start = 0;
    // gauge[k] = d(x_{start+k}, x_{start+k+1}).
    std::vector<R> gauge;
    // d(x_i, x_m) = gauge at i for all start <= i < m.
    bool tail_identity = false;
};

template <UltrametricSpace S>
PCReport<radius_of<S>> pseudo_convergence(const S &space, std::span<const point_of<S>> fam)
{
    const auto n = fam.size();
    if (n < 3) {
        throw PreconditionError("pseudo-convergence needs at least three elements");
    }
    const auto &order = space.order();
    std::vector<std::vector<radius_of<S>>> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d[i].push_back(space.distance(fam[i], fam[j]));
        }
    }
    // good[i]: d(x_k, x_m) < d(x_i, x_k) for all i < k < m.
    std::vector<bool> good(n - 2, true);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t k = i + 1; k < n && good[i]; ++k) {
            for (std::size_t m = k + 1; m < n; ++m) {
                if (!lt(order, d[k][m], d[i][k])) {
                    good[i] = false;
                    break;
                }
            }
        }
    }
    PCReport<radius_of<S>> report;
    std::size_t start = n - 2;
    while (start > 0 && good[start - 1]) {
        --start;
    }
    if (start == n - 2) {
        return report;
    }
    report.is_pc = true;
    report.start = start;
    for (std::size_t i = start; i + 1 < n; ++i) {
        report.gauge.push_back(d[i][i + 1]);
    }
    report.tail_identity = true;
    for (std::size_t i = start; i + 1 < n; ++i) {
        for (std::size_t m = i + 1; m < n; ++m) {
            if (order.compare(d[i][m], d[i][i + 1]) != Ordering::equal) {
                report.tail_identity = false;
            }
        }
    }
    return report;
}

template <UltrametricSpace S>
PCReport<radius_of<S>> pseudo_convergence(const S &space, const std::vector<point_of<S>> &fam)
{
    return pseudo_convergence(space, std::span<const point_of<S>>(fam));
}

// Gauge strictly decreasing along the report.
template <RadiusOrder O>
bool gauge_strictly_decreasing(const O &order, const std::vector<typename O::value_type> &gauge)
{
    for (std::size_t k = 0; k + 1 < gauge.size(); ++k) {
        if (!lt(order, gauge[k + 1], gauge[k])) {
            return false;
        }
    }
    return true;
}

// y is a pseudo-limit when, from some gauged index on, d(y, x_i) <= gauge_i.
template <UltrametricSpace S>
bool is_pseudo_limit(const S &space, const std::vector<point_of<S>> &fam, const PCReport<radius_of<S>> &report,
                     const point_of<S> &y)
{
    if (!report.is_pc) {
        throw PreconditionError("pseudo-limit of a family that is not pseudo-convergent");
    }
    const auto &order = space.order();
    for (std::size_t first = 0; first < report.gauge.size(); ++first) {
        bool all = true;
        for (std::size_t k = first; k < report.gauge.size() && all; ++k) {
            all = leq(order, space.distance(y, fam[report.start + k]), report.gauge[k]);
        }
        if (all) {
            return true;
        }
    }
    return false;
}

template <UltrametricSpace S>
bool is_cauchy(const S &space, const std::vector<point_of<S>> &fam, const std::vector<radius_of<S>> &radii)
{
    const auto &order = space.order();
    const auto n = fam.size();
    if (n < 2) {
        throw PreconditionError("a Cauchy check needs at least two elements");
    }
    for (const auto &g : radii) {
        if (is_zero(order, g)) {
            throw PreconditionError("Cauchy radii must be nonzero");
        }
        bool found = false;
        for (std::size_t first = 0; first + 1 < n && !found; ++first) {
            bool all = true;
            for (std::size_t i = first; i < n && all; ++i) {
                for (std::size_t k = i + 1; k < n && all; ++k) {
                    all = lt(order, space.distance(fam[i], fam[k]), g);
                }
            }
            found = all;
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

// y is a limit when for every radius, d(y, x_i) < radius on a tail.
template <UltrametricSpace S>
bool is_limit(const S &space, const std::vector<point_of<S>> &fam, const std::vector<radius_of<S>> &radii,
              const point_of<S> &y)
{
    const auto &order = space.order();
    for (const auto &g : radii) {
        bool found = false;
        for (std::size_t first = 0; first < fam.size() && !found; ++first) {
            bool all = true;
            for (std::size_t i = first; i < fam.size() && all; ++i) {
                all = lt(order, space.distance(y, fam[i]), g);
            }
            found = all;
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

// Limit of a Cauchy family inside the (complete) instance. With oracle_free
// the limit is read off the stabilized tail of the family; otherwise the
// instance's coordinate-wise stabilization is used when it has one.
template <UltrametricSpace S>
std::optional<point_of<S>> cauchy_limit(const S &space, const std::vector<point_of<S>> &fam, bool oracle_free)
{
    const auto radii = space.sample_radii();
    if (fam.size() < 2 || !is_cauchy(space, fam, radii)) {
        throw NotCauchy("family is not Cauchy over the instance radii");
    }
    if (!oracle_free) {
        if constexpr (requires { { space.stabilized_limit(fam) } -> std::convertible_to<std::optional<point_of<S>>>; }) {
            return space.stabilized_limit(fam);
        }
    }
    for (std::size_t i = fam.size(); i-- > 0;) {
        if (is_limit(space, fam, radii, fam[i])) {
            return fam[i];
        }
    }
    return std::nullopt;
}

// Sigma_alpha, with zero included when the trace reached its fixed point.
template <UltrametricSpace S>
std::vector<radius_of<S>> sigma_set(const S &space, const Trace<point_of<S>, radius_of<S>> &trace)
{
    auto out = trace.sigma();
    if (trace.reached()) {
        out.push_back(space.order().zero());
    }
    return out;
}

// Every sampled value of Lambda_phi dominates some element of Sigma_alpha.
template <UltrametricSpace S>
bool sigma_coinitial(const S &space, const Trace<point_of<S>, radius_of<S>> &trace,
                     const std::vector<radius_of<S>> &lambda_sample)
{
    const auto &order = space.order();
    const auto sigma = sigma_set(space, trace);
    for (const auto &l : lambda_sample) {
        bool dominated = false;
        for (const auto &s : sigma) {
            if (leq(order, s, l)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            return false;
        }
    }
    return true;
}

// Nonzero values d(x, phi x) over the given points.
template <UltrametricSpace S>
std::vector<radius_of<S>> sample_lambda(const S &space, const ContractingMap<point_of<S>> &map,
                                        const std::vector<point_of<S>> &points)
{
    std::vector<radius_of<S>> out;
    for (const auto &x : points) {
        const auto d = space.distance(x, map(x));
        if (!is_zero(space.order(), d)) {
            out.push_back(d);
        }
    }
    return out;
}

// For every sampled (x, gamma), look for y with d(x, y) = gamma among at
// most `witness_budget` candidates: the instance's own witness first (when
// it has one), then the sample points.
template <UltrametricSpace S>
Report solidness_check(const S &space, std::size_t witness_budget)
{
    const auto &order = space.order();
    const auto points = space.sample_points();
    Report report;
    for (const auto &x : points) {
        for (const auto &g : space.sample_radii()) {
            std::vector<point_of<S>> candidates;
            if constexpr (requires { { space.witness(x, g) } -> std::convertible_to<std::optional<point_of<S>>>; }) {
                if (auto w = space.witness(x, g)) {
                    candidates.push_back(*w);
                }
            }
            for (const auto &p : points) {
                if (candidates.size() >= witness_budget) {
                    break;
                }
                candidates.push_back(p);
            }
            bool found = false;
            for (std::size_t i = 0; i < candidates.size() && i < witness_budget && !found; ++i) {
                found = order.compare(space.distance(x, candidates[i]), g) == Ordering::equal;
            }
            if (!found) {
                report.add("solid", "no point at distance " + order.format(g) + " from " + space.format_point(x));
            }
        }
    }
    return report;
}

// For a target x_hat and nonzero radius gamma, returns y in the dense
// subspace with d(y, x_hat) < gamma.
template <typename P, typename R>
struct DenseAccessor {
    std::string name;
    std::function<P(const P &, const R &)> approximate;
};

// psi(y) for an approximant y of x_hat within gamma. Any strictly contracting
// extension phi of psi satisfies d(psi y, phi x_hat) < d(y, x_hat) < gamma.
template <UltrametricSpace S>
point_of<S> extend_by_continuity(const S &space, const ContractingMap<point_of<S>> &psi,
                                 const DenseAccessor<point_of<S>, radius_of<S>> &access, const point_of<S> &x_hat,
                                 const radius_of<S> &gamma,
                                 const std::vector<std::pair<point_of<S>, point_of<S>>> &contraction_sample = {})
{
    const auto &order = space.order();
    if (is_zero(order, gamma)) {
        throw PreconditionError("extension radius must be nonzero");
    }
    if (!contraction_sample.empty()) {
        const auto r = check_strict_contraction(space, psi, contraction_sample);
        if (!r.ok()) {
            throw ContractionViolation("map " + psi.name + " is not strictly contracting on the sample");
        }
    }
    const auto y = access.approximate(x_hat, gamma);
    const auto d = space.distance(y, x_hat);
    if (!lt(order, d, gamma)) {
        throw AccessorViolation("accessor " + access.name + " returned a point at distance " + order.format(d)
                                + ", not below " + order.format(gamma));
    }
    return psi(y);
}

// The orbit of an outcome: its iterates continued by one application of the
// map at the final point.
template <UltrametricSpace S>
std::vector<point_of<S>> solution_family(const S &space, const ContractingMap<point_of<S>> &map,
                                         const Outcome<point_of<S>, radius_of<S>> &outcome)
{
    auto fam = flatten(space, outcome.trace);
    if (outcome.point) {
        if (outcome.kind == OutcomeKind::reached) {
            fam.push_back(map(*outcome.point));
        } else {
            fam.push_back(*outcome.point);
        }
    }
    return fam;
}

} // namespace ultrafix

#endif
