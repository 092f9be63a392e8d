#ifndef ULTRAFIX_DRIVER_HPP
#define ULTRAFIX_DRIVER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ultrafix/errors.hpp>
#include <ultrafix/radius.hpp>
#include <ultrafix/report.hpp>
#include <ultrafix/space.hpp>

namespace ultrafix
{

// A self-map expected to be strictly contracting. The driver never trusts
// that claim: every realized step is checked.
template <typename P>
struct ContractingMap {
    std::string name;
    std::function<P(const P &)> apply;

    P operator()(const P &x) const
    {
        return apply(x);
    }
};

enum class StageEntry { start, limit_oracle };

const char *to_string(StageEntry e) noexcept;

// One run of successor steps a_{i+1} = phi(a_i). sigma[i] = d(a_i, a_{i+1})
// and balls[i] = B_{sigma[i]}(a_i) for every step inside the segment. When
// `reached` is set the final iterate is a fixed point.
template <typename P, typename R>
struct StageSegment {
    StageEntry entry = StageEntry::start;
    std::vector<P> iterates;
    std::vector<R> sigma;
    std::vector<Ball<P, R>> balls;
    bool reached = false;
};

template <typename P, typename R>
struct Trace {
    std::vector<StageSegment<P, R>> stages;

    bool empty() const noexcept
    {
        return stages.empty();
    }

    const P &last_iterate() const
    {
        return stages.back().iterates.back();
    }

    bool reached() const noexcept
    {
        return !stages.empty() && stages.back().reached;
    }

    // Sigma chain of the concatenated trace.
    std::vector<R> sigma() const
    {
        std::vector<R> out;
        for (const auto &s : stages) {
            out.insert(out.end(), s.sigma.begin(), s.sigma.end());
        }
        return out;
    }

    std::vector<Ball<P, R>> balls() const
    {
        std::vector<Ball<P, R>> out;
        for (const auto &s : stages) {
            out.insert(out.end(), s.balls.begin(), s.balls.end());
        }
        return out;
    }

    std::size_t step_count() const noexcept
    {
        std::size_t n = 0;
        for (const auto &s : stages) {
            n += s.sigma.size();
        }
        return n;
    }
};

// Concatenated iterates. A stage entry equal to the previous stage's final
// iterate (the fallback limit choice) is not repeated.
template <UltrametricSpace S>
std::vector<point_of<S>> flatten(const S &space, const Trace<point_of<S>, radius_of<S>> &trace)
{
    std::vector<point_of<S>> out;
    for (const auto &stage : trace.stages) {
        auto first = stage.iterates.begin();
        if (!out.empty() && first != stage.iterates.end() && space.equal(out.back(), *first)) {
            ++first;
        }
        out.insert(out.end(), first, stage.iterates.end());
    }
    return out;
}

struct DriverConfig {
    std::size_t steps_per_stage = 64;
    std::size_t max_stages = 1;

    void validate() const
    {
        if (steps_per_stage < 1 || max_stages < 1) {
            throw PreconditionError("driver budgets must be at least 1");
        }
    }
};

// Chooses the entry point of a limit stage from I(alpha). Returning nullopt
// selects the fallback, the last iterate.
template <typename P, typename R>
struct LimitOracle {
    std::string name;
    std::function<std::optional<P>(const Trace<P, R> &)> resolve;
};

enum class OutcomeKind { reached, approximated, inconclusive };

const char *to_string(OutcomeKind k) noexcept;

template <typename P, typename R>
struct Outcome {
    OutcomeKind kind = OutcomeKind::inconclusive;
    // The fixed point for reached / approximated.
    std::optional<P> point;
    // Position of the fixed point in the trace when reached.
    std::size_t stage_index = 0;
    std::size_t step_index = 0;
    Trace<P, R> trace;
    // Set by truncated models: zero distance means equality at this precision.
    std::optional<std::string> precision;
};

namespace detail
{

template <UltrametricSpace S>
StageSegment<point_of<S>, radius_of<S>> run_stage(const S &space, const ContractingMap<point_of<S>> &map,
                                                   const point_of<S> &start, std::size_t budget, StageEntry entry,
                                                   const std::optional<radius_of<S>> &bound)
{
    const auto &order = space.order();
    StageSegment<point_of<S>, radius_of<S>> seg;
    seg.entry = entry;
    seg.iterates.push_back(start);
    std::optional<radius_of<S>> previous = bound;
    std::size_t steps = 0;
    while (true) {
        const auto &current = seg.iterates.back();
        auto next = map(current);
        const auto dist = space.distance(current, next);
        if (is_zero(order, dist)) {
            seg.reached = true;
            break;
        }
        if (previous && !lt(order, dist, *previous)) {
            throw ContractionViolation("map " + map.name + ": step from " + space.format_point(current)
                                       + " has distance " + order.format(dist) + ", not below "
                                       + order.format(*previous));
        }
        if (steps == budget) {
            break;
        }
        seg.sigma.push_back(dist);
        seg.balls.push_back({current, dist});
        seg.iterates.push_back(std::move(next));
        previous = dist;
        ++steps;
    }
    return seg;
}

// True when b lies in the ball B_{d(a, phi a)}(a) of every earlier iterate a.
template <UltrametricSpace S>
bool in_all_iterate_balls(const S &space, const ContractingMap<point_of<S>> &map,
                          const Trace<point_of<S>, radius_of<S>> &trace, const point_of<S> &b,
                          std::string *failure = nullptr)
{
    const auto &order = space.order();
    for (const auto &stage : trace.stages) {
        for (std::size_t i = 0; i < stage.iterates.size(); ++i) {
            const auto &a = stage.iterates[i];
            const auto step = i < stage.sigma.size() ? stage.sigma[i] : space.distance(a, map(a));
            if (!leq(order, space.distance(b, a), step)) {
                if (failure) {
                    *failure = "d(" + space.format_point(b) + ", " + space.format_point(a) + ") = "
                               + order.format(space.distance(b, a)) + " is not <= " + order.format(step);
                }
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

// Successor steps from `start` until the current iterate is fixed or `budget`
// steps have been taken. Throws ContractionViolation when a step distance
// fails to drop strictly below the previous one.
template <UltrametricSpace S>
StageSegment<point_of<S>, radius_of<S>> iterate_stage(const S &space, const ContractingMap<point_of<S>> &map,
                                                       const point_of<S> &start, std::size_t budget)
{
    if (budget < 1) {
        throw PreconditionError("stage budget must be at least 1");
    }
    return detail::run_stage(space, map, start, budget, StageEntry::start, std::nullopt);
}

// Recheck of (i) successor steps, (ii) strictly decreasing sigma, (iii)
// limit-stage entries inside every earlier iterate ball, and strict nesting
// of the ball chain.
template <UltrametricSpace S>
Report validate_trace(const S &space, const ContractingMap<point_of<S>> &map,
                      const Trace<point_of<S>, radius_of<S>> &trace)
{
    using P = point_of<S>;
    using R = radius_of<S>;
    const auto &order = space.order();
    auto fmt = [&](const P &p) { return space.format_point(p); };

    Report report;
    if (trace.empty()) {
        report.add("structure", "trace has no stages");
        return report;
    }
    Trace<P, R> prefix;
    for (std::size_t s = 0; s < trace.stages.size(); ++s) {
        const auto &stage = trace.stages[s];
        const auto where = "stage " + std::to_string(s);
        if (stage.iterates.empty()) {
            report.add("structure", where + " has no iterates");
            continue;
        }
        if (stage.sigma.size() + 1 != stage.iterates.size() || stage.balls.size() != stage.sigma.size()) {
            report.add("structure", where + " has mismatched iterate/sigma/ball counts");
            continue;
        }
        const auto expected_entry = s == 0 ? StageEntry::start : StageEntry::limit_oracle;
        if (stage.entry != expected_entry) {
            report.add("structure", where + " has entry " + to_string(stage.entry));
        }
        if (stage.reached && s + 1 != trace.stages.size()) {
            report.add("structure", where + " is reached but is not the final stage");
        }
        for (std::size_t i = 0; i + 1 < stage.iterates.size(); ++i) {
            const auto &a = stage.iterates[i];
            const auto &b = stage.iterates[i + 1];
            const auto image = map(a);
            if (!space.equal(image, b)) {
                report.add("i", where + " step " + std::to_string(i) + ": " + fmt(b) + " is not phi(" + fmt(a)
                                    + ") = " + fmt(image));
            }
            if (space.equal(a, b)) {
                report.add("i", where + " step " + std::to_string(i) + ": iterate does not move");
            }
            const auto d = space.distance(a, b);
            if (order.compare(d, stage.sigma[i]) != Ordering::equal) {
                report.add("sigma", where + " step " + std::to_string(i) + ": recorded " + order.format(stage.sigma[i])
                                        + " but d = " + order.format(d));
            }
            const auto &ball = stage.balls[i];
            if (!space.equal(ball.center, a) || order.compare(ball.radius, stage.sigma[i]) != Ordering::equal) {
                report.add("ball", where + " step " + std::to_string(i) + ": ball is not B_sigma(a_i)");
            }
        }
        if (stage.reached) {
            const auto &z = stage.iterates.back();
            if (!is_zero(order, space.distance(z, map(z)))) {
                report.add("reached", where + ": final iterate " + fmt(z) + " is not fixed");
            }
        }
        if (s > 0) {
            std::string failure;
            if (!detail::in_all_iterate_balls(space, map, prefix, stage.iterates.front(), &failure)) {
                report.add("iii", where + " entry " + fmt(stage.iterates.front()) + ": " + failure);
            }
        }
        prefix.stages.push_back(stage);
    }

    const auto sigma = trace.sigma();
    for (std::size_t k = 0; k + 1 < sigma.size(); ++k) {
        if (!lt(order, sigma[k + 1], sigma[k])) {
            report.add("ii", "sigma[" + std::to_string(k + 1) + "] = " + order.format(sigma[k + 1])
                                 + " is not below sigma[" + std::to_string(k) + "] = " + order.format(sigma[k]));
        }
    }
    const auto balls = trace.balls();
    for (std::size_t k = 0; k + 1 < balls.size(); ++k) {
        const auto &outer = balls[k];
        const auto &inner = balls[k + 1];
        // B_{k+1} is inside B_k iff its radius is <= and its centre lies in B_k.
        const bool inside = leq(order, inner.radius, outer.radius) && ball_contains(space, outer, inner.center);
        if (!inside || ball_contains(space, inner, outer.center)) {
            report.add("nesting", "ball " + std::to_string(k + 1) + " is not strictly inside ball " + std::to_string(k));
        }
    }
    return report;
}

template <UltrametricSpace S>
bool verify_fixed_point(const S &space, const ContractingMap<point_of<S>> &map, const point_of<S> &z)
{
    return is_zero(space.order(), space.distance(z, map(z)));
}

template <UltrametricSpace S>
Report check_strict_contraction(const S &space, const ContractingMap<point_of<S>> &map,
                                const std::vector<std::pair<point_of<S>, point_of<S>>> &pairs)
{
    const auto &order = space.order();
    Report report;
    for (const auto &[x, y] : pairs) {
        if (space.equal(x, y)) {
            continue;
        }
        const auto before = space.distance(x, y);
        const auto after = space.distance(map(x), map(y));
        if (!lt(order, after, before)) {
            report.add("contraction", "d(phi " + space.format_point(x) + ", phi " + space.format_point(y) + ") = "
                                          + order.format(after) + " is not below d = " + order.format(before));
        }
    }
    return report;
}

// Every ordered pair of distinct sample points.
template <UltrametricSpace S>
std::vector<std::pair<point_of<S>, point_of<S>>> sample_pairs(const S &space)
{
    const auto points = space.sample_points();
    std::vector<std::pair<point_of<S>, point_of<S>>> out;
    for (const auto &x : points) {
        for (const auto &y : points) {
            if (!space.equal(x, y)) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

// Stage-wise approximation. Each stage iterates the map; if it does not reach
// a fixed point, the oracle (or the last-iterate fallback) picks a point of
// I(alpha), which is either the fixed point or the entry of the next stage.
template <UltrametricSpace S>
Outcome<point_of<S>, radius_of<S>> run(const S &space, const ContractingMap<point_of<S>> &map,
                                       const point_of<S> &start, const DriverConfig &config,
                                       const std::optional<LimitOracle<point_of<S>, radius_of<S>>> &oracle = std::nullopt)
{
    config.validate();
    using P = point_of<S>;
    using R = radius_of<S>;
    Outcome<P, R> out;
    out.precision = precision_descriptor(space);

    P entry_point = start;
    for (std::size_t s = 0; s < config.max_stages; ++s) {
        std::optional<R> bound;
        if (!out.trace.empty()) {
            const auto sig = out.trace.sigma();
            if (!sig.empty()) {
                bound = sig.back();
            }
        }
        auto seg = detail::run_stage(space, map, entry_point, config.steps_per_stage,
                                     s == 0 ? StageEntry::start : StageEntry::limit_oracle, bound);
        out.trace.stages.push_back(std::move(seg));
        const auto &stage = out.trace.stages.back();
        if (stage.reached) {
            out.kind = OutcomeKind::reached;
            out.point = stage.iterates.back();
            out.stage_index = s;
            out.step_index = stage.iterates.size() - 1;
            return out;
        }

        std::optional<P> chosen;
        if (oracle) {
            chosen = oracle->resolve(out.trace);
        }
        if (chosen) {
            std::string failure;
            if (!detail::in_all_iterate_balls(space, map, out.trace, *chosen, &failure)) {
                throw OracleMembershipViolation("oracle " + oracle->name + " returned " + space.format_point(*chosen)
                                                + ": " + failure);
            }
        } else {
            chosen = out.trace.last_iterate();
        }
        if (verify_fixed_point(space, map, *chosen)) {
            out.kind = OutcomeKind::approximated;
            out.point = *chosen;
            return out;
        }
        entry_point = *chosen;
    }
    out.kind = OutcomeKind::inconclusive;
    return out;
}

// Trace validation plus the outcome's own invariants.
template <UltrametricSpace S>
Report validate_outcome(const S &space, const ContractingMap<point_of<S>> &map,
                        const Outcome<point_of<S>, radius_of<S>> &outcome)
{
    auto report = validate_trace(space, map, outcome.trace);
    switch (outcome.kind) {
        case OutcomeKind::reached:
            if (!outcome.point || !verify_fixed_point(space, map, *outcome.point)) {
                report.add("outcome", "reached point is not fixed");
            } else if (!outcome.trace.reached()) {
                report.add("outcome", "reached outcome whose trace does not end at a fixed point");
            }
            break;
        case OutcomeKind::approximated:
            if (!outcome.point || !verify_fixed_point(space, map, *outcome.point)) {
                report.add("outcome", "approximated point is not fixed");
            } else {
                if (outcome.trace.reached()) {
                    report.add("outcome", "approximated outcome whose final stage reached");
                }
                for (const auto &b : outcome.trace.balls()) {
                    if (!ball_contains(space, b, *outcome.point)) {
                        report.add("outcome", "approximated point lies outside a trace ball");
                    }
                }
            }
            break;
        case OutcomeKind::inconclusive:
            if (outcome.trace.reached()) {
                report.add("outcome", "inconclusive outcome whose trace reached");
            }
            break;
    }
    return report;
}

} // namespace ultrafix

#endif
