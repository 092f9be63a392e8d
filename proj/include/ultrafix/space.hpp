#ifndef ULTRAFIX_SPACE_HPP
#define ULTRAFIX_SPACE_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <ultrafix/errors.hpp>
#include <ultrafix/radius.hpp>
#include <ultrafix/report.hpp>

namespace ultrafix
{

// A set of points with a distance into a radius order. sample_points() is
// the finite point set used by the checks (the whole space when finite);
// sample_radii() the nonzero radii they range over.
template <typename S>
concept UltrametricSpace = requires(const S &s, const typename S::point_type &x) {
    typename S::point_type;
    typename S::order_type;
    requires RadiusOrder<typename S::order_type>;
    { s.order() } -> std::convertible_to<const typename S::order_type &>;
    { s.distance(x, x) } -> std::convertible_to<typename S::order_type::value_type>;
    { s.equal(x, x) } -> std::convertible_to<bool>;
    { s.sample_points() } -> std::convertible_to<std::vector<typename S::point_type>>;
    { s.sample_radii() } -> std::convertible_to<std::vector<typename S::order_type::value_type>>;
    { s.format_point(x) } -> std::convertible_to<std::string>;
};

template <UltrametricSpace S>
using point_of = typename S::point_type;

template <UltrametricSpace S>
using radius_of = typename S::order_type::value_type;

// Truncated models report what "distance zero" means for them.
template <UltrametricSpace S>
std::optional<std::string> precision_descriptor(const S &space)
{
    if constexpr (requires { { space.precision() } -> std::convertible_to<std::string>; }) {
        return std::string(space.precision());
    } else {
        return std::nullopt;
    }
}

template <typename P, typename R>
struct Ball {
    P center;
    R radius;
};

template <UltrametricSpace S>
bool ball_contains(const S &space, const Ball<point_of<S>, radius_of<S>> &b, const point_of<S> &x)
{
    if (is_zero(space.order(), b.radius)) {
        throw PreconditionError("ball radius must be nonzero");
    }
    return leq(space.order(), space.distance(b.center, x), b.radius);
}

// B(x, y), the ball centred at x with radius d(x, y).
template <UltrametricSpace S>
Ball<point_of<S>, radius_of<S>> principal_ball(const S &space, const point_of<S> &x, const point_of<S> &y)
{
    if (space.equal(x, y)) {
        throw EqualPoints("principal ball of " + space.format_point(x) + " with itself");
    }
    return {x, space.distance(x, y)};
}

template <UltrametricSpace S>
Report check_space_axioms(const S &space, const std::vector<radius_of<S>> &radii)
{
    const auto &order = space.order();
    const auto points = space.sample_points();
    const auto n = points.size();
    if (n == 0) {
        throw PreconditionError("space has no sample points");
    }
    auto name = [&](std::size_t i) { return space.format_point(points[i]); };

    std::vector<std::vector<radius_of<S>>> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            d[i].push_back(space.distance(points[i], points[j]));
        }
    }

    Report report;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(order, d[i][j]) != space.equal(points[i], points[j])) {
                if (j >= i) {
                    report.add("d1", "d(" + name(i) + ", " + name(j) + ") = " + order.format(d[i][j]));
                }
            }
            if (j > i && order.compare(d[i][j], d[j][i]) != Ordering::equal) {
                report.add("d2", "d(" + name(i) + ", " + name(j) + ") = " + order.format(d[i][j]) + " but d("
                                     + name(j) + ", " + name(i) + ") = " + order.format(d[j][i]));
            }
        }
    }
    for (const auto &g : radii) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!leq(order, d[i][j], g)) {
                    continue;
                }
                for (std::size_t k = i + 1; k < n; ++k) {
                    if (leq(order, d[j][k], g) && !leq(order, d[i][k], g)) {
                        report.add("d3", "triple (" + name(i) + ", " + name(j) + ", " + name(k) + ") at gamma = "
                                             + order.format(g) + ": d(" + name(i) + ", " + name(k)
                                             + ") = " + order.format(d[i][k]));
                    }
                }
            }
        }
    }
    return report;
}

namespace detail
{

using Membership = std::vector<bool>;

inline bool intersects(const Membership &a, const Membership &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && b[i]) {
            return true;
        }
    }
    return false;
}

inline bool subset(const Membership &a, const Membership &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) {
            return false;
        }
    }
    return true;
}

template <UltrametricSpace S>
Membership members(const S &space, const std::vector<point_of<S>> &points, const point_of<S> &center,
                   const radius_of<S> &radius)
{
    Membership m(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        m[i] = leq(space.order(), space.distance(center, points[i]), radius);
    }
    return m;
}

} // namespace detail

// Ball calculus over the sample: (1a) and (1b) for arbitrary balls, (2a)-(2c)
// for principal balls. Set relations are evaluated on the sample, so the
// check is exact when the sample is the whole space.
template <UltrametricSpace S>
Report check_ball_lemma(const S &space)
{
    const auto &order = space.order();
    const auto points = space.sample_points();
    const auto radii = space.sample_radii();
    const auto n = points.size();
    auto name = [&](std::size_t i) { return space.format_point(points[i]); };

    // balls[i][g] = B_{radii[g]}(points[i])
    std::vector<std::vector<detail::Membership>> balls(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto &g : radii) {
            balls[i].push_back(detail::members(space, points, points[i], g));
        }
    }

    Report report;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t g = 0; g < radii.size(); ++g) {
                for (std::size_t e = 0; e < radii.size(); ++e) {
                    const auto &bx = balls[x][g];
                    const auto &by = balls[y][e];
                    const auto tag = "B_" + order.format(radii[g]) + "(" + name(x) + "), B_"
                                     + order.format(radii[e]) + "(" + name(y) + ")";
                    if (leq(order, radii[g], radii[e]) && detail::intersects(bx, by) && !detail::subset(bx, by)) {
                        report.add("balls-1a", tag + ": intersect but not nested");
                    }
                    if (detail::subset(by, bx) && !detail::subset(bx, by) && leq(order, radii[g], radii[e])) {
                        report.add("balls-1b", tag + ": proper containment with gamma <= delta");
                    }
                }
            }
        }
    }

    struct Principal {
        std::size_t center;
        radius_of<S> radius;
        detail::Membership set;
    };
    std::vector<Principal> principal;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
            if (space.equal(points[x], points[z])) {
                continue;
            }
            const auto r = space.distance(points[x], points[z]);
            bool seen = false;
            for (const auto &p : principal) {
                seen = seen || (p.center == x && p.radius == r);
            }
            if (!seen) {
                principal.push_back({x, r, detail::members(space, points, points[x], r)});
            }
        }
    }
    for (const auto &p : principal) {
        const auto ptag = "B(" + name(p.center) + ", r=" + order.format(p.radius) + ")";
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t e = 0; e < radii.size(); ++e) {
                const auto &by = balls[y][e];
                const bool contained = detail::subset(p.set, by);
                const bool rhs = leq(order, p.radius, radii[e]) && by[p.center];
                const auto tag = ptag + ", B_" + order.format(radii[e]) + "(" + name(y) + ")";
                if (contained != rhs) {
                    report.add("balls-2a", tag + ": containment does not match radius test");
                }
                if (contained && !detail::subset(by, p.set) && !lt(order, p.radius, radii[e])) {
                    report.add("balls-2b", tag + ": proper containment without d(x,z) < delta");
                }
            }
        }
        for (const auto &q : principal) {
            if (p.set == q.set && order.compare(p.radius, q.radius) != Ordering::equal) {
                report.add("balls-2c", ptag + " and B(" + name(q.center) + ", r=" + order.format(q.radius)
                                           + ") are equal sets with different radii");
            }
        }
    }
    return report;
}

// (3a)-(3c), which hold for solid spaces.
template <UltrametricSpace S>
Report check_solid_ball_lemma(const S &space)
{
    const auto &order = space.order();
    const auto points = space.sample_points();
    const auto radii = space.sample_radii();
    const auto n = points.size();
    auto name = [&](std::size_t i) { return space.format_point(points[i]); };

    std::vector<std::vector<detail::Membership>> balls(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto &g : radii) {
            balls[i].push_back(detail::members(space, points, points[i], g));
        }
    }
    Report report;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t g = 0; g < radii.size(); ++g) {
                for (std::size_t e = 0; e < radii.size(); ++e) {
                    const auto &bx = balls[x][g];
                    const auto &by = balls[y][e];
                    const auto tag = "B_" + order.format(radii[g]) + "(" + name(x) + "), B_"
                                     + order.format(radii[e]) + "(" + name(y) + ")";
                    const bool contained = detail::subset(bx, by);
                    if (contained != (leq(order, radii[g], radii[e]) && by[x])) {
                        report.add("balls-3a", tag + ": containment does not match radius test");
                    }
                    if (contained && !detail::subset(by, bx) && !lt(order, radii[g], radii[e])) {
                        report.add("balls-3b", tag + ": proper containment without gamma < delta");
                    }
                    if (contained && detail::subset(by, bx) && order.compare(radii[g], radii[e]) != Ordering::equal) {
                        report.add("balls-3c", tag + ": equal balls with different radii");
                    }
                }
            }
        }
    }
    return report;
}

} // namespace ultrafix

#endif
