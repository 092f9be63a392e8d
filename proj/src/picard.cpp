#include <ultrafix/apps/picard.hpp>

#include <ultrafix/analysis.hpp>
#include <ultrafix/errors.hpp>

namespace ultrafix
{

namespace
{

void check_problem(const OdeProblem &prob)
{
    if (prob.cap < 1) {
        throw PreconditionError("series cap must be at least 1");
    }
    if (prob.rhs.variables() != series_variables()) {
        throw PreconditionError("right-hand side must be a polynomial in t and y");
    }
}

} // namespace

ContractingMap<SeriesQ> picard_operator(const OdeProblem &prob)
{
    check_problem(prob);
    auto name = "picard(" + prob.rhs.to_string() + ", y0 = " + to_short_string(prob.y0) + ")";
    return {std::move(name), [rhs = prob.rhs, y0 = prob.y0](const SeriesQ &y) {
                return SeriesQ::constant(y.cap(), y0) + poly_eval(rhs, y).integrate();
            }};
}

PicardResult picard_solve(const OdeProblem &prob, const DriverConfig &config)
{
    check_problem(prob);
    const SeriesSpace space(prob.cap);
    const auto map = picard_operator(prob);
    auto outcome = run(space, map, SeriesQ::constant(prob.cap, prob.y0), config);
    auto solution = outcome.point ? *outcome.point : outcome.trace.last_iterate();
    return {std::move(outcome), std::move(solution)};
}

PicardResult picard_solve(const OdeProblem &prob)
{
    // Each step fixes at least one more coefficient.
    return picard_solve(prob, DriverConfig{prob.cap + 1, 1});
}

SeriesQ residual(const OdeProblem &prob, const SeriesQ &y)
{
    check_problem(prob);
    return (y.derivative() - poly_eval(prob.rhs, y)).truncate(prob.cap - 1);
}

Report picard_as_extension_demo(const OdeProblem &prob, const SeriesQ &x_hat, NatExp gamma)
{
    check_problem(prob);
    if (gamma.is_infinite() || gamma.index() >= prob.cap) {
        throw PreconditionError("extension radius index must be below the cap");
    }
    const SeriesSpace space(prob.cap);
    const auto &order = space.order();
    const auto psi = picard_operator(prob);

    const DenseAccessor<SeriesQ, NatExp> truncating{"truncate", [](const SeriesQ &x, const NatExp &g) {
                                                        return x.truncate(static_cast<std::size_t>(g.index()) + 1);
                                                    }};
    const DenseAccessor<SeriesQ, NatExp> perturbed{"truncate+perturb", [](const SeriesQ &x, const NatExp &g) {
                                                       const auto j = static_cast<std::size_t>(g.index()) + 1;
                                                       return x.truncate(j) + SeriesQ::monomial(x.cap(), j);
                                                   }};
    const auto sample = sample_pairs(space);

    Report report;
    std::vector<SeriesQ> results;
    for (const auto *access : {&truncating, &perturbed}) {
        try {
            results.push_back(extend_by_continuity(space, psi, *access, x_hat, gamma, sample));
        } catch (const AccessorViolation &e) {
            report.add("accessor", e.what());
        }
    }
    if (results.size() != 2) {
        return report;
    }
    const auto direct = psi(x_hat);
    const auto where = " at gamma " + order.format(gamma);
    if (!lt(order, space.distance(results[0], results[1]), gamma)) {
        report.add("agreement", "extensions " + results[0].to_string() + " and " + results[1].to_string()
                                    + " differ" + where);
    }
    for (const auto &r : results) {
        if (!lt(order, space.distance(r, direct), gamma)) {
            report.add("direct", "extension " + r.to_string() + " differs from T(x_hat) = " + direct.to_string()
                                     + where);
        }
    }
    return report;
}

} // namespace ultrafix
