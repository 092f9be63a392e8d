#include <doctest.h>

#include <ultrafix/analysis.hpp>
#include <ultrafix/apps/hensel.hpp>
#include <ultrafix/apps/picard.hpp>
#include <ultrafix/diagnostics.hpp>
#include <ultrafix/instances/finite_space.hpp>
#include <ultrafix/instances/padic.hpp>
#include <ultrafix/instances/series.hpp>

#include "oracles.hpp"

using namespace ultrafix;

namespace
{

SeriesQ exp_series(std::size_t cap)
{
    const auto c = oracle::exp_coefficients(cap);
    return SeriesQ(cap, {c.begin(), c.end()});
}

OdeProblem exp_problem(std::size_t cap)
{
    OdeProblem prob;
    prob.rhs = Polynomial::parse("y", series_variables());
    prob.y0 = 1;
    prob.cap = cap;
    return prob;
}

HenselProblem sqrt2_mod7(unsigned n)
{
    HenselProblem prob;
    prob.p = 7;
    prob.precision = n;
    prob.f = Polynomial::parse("x^2 - 2", {"x"});
    prob.seed = 3;
    return prob;
}

} // namespace

TEST_CASE("picard iterates are pseudo-convergent with a shrinking gauge")
{
    const auto prob = exp_problem(6);
    const SeriesSpace s(6);
    const auto result = picard_solve(prob);
    const auto fam = flatten(s, result.outcome.trace);
    REQUIRE(fam.size() == 6);
    const auto pc = pseudo_convergence(s, fam);
    REQUIRE(pc.is_pc);
    CHECK(pc.start == 0);
    CHECK(pc.gauge.front() == NatExp(1));
    CHECK(gauge_strictly_decreasing(s.order(), pc.gauge));
    CHECK(pc.tail_identity);
    CHECK(is_pseudo_limit(s, fam, pc, exp_series(6)));
    CHECK(is_pseudo_limit(s, fam, pc, fam.back()));
    CHECK_FALSE(is_pseudo_limit(s, fam, pc, exp_series(6) - SeriesQ::monomial(6, 1)));
}

TEST_CASE("a constant family is not pseudo-convergent")
{
    const auto f3 = FiniteSpace::f3();
    const std::vector<std::size_t> fam{2, 2, 2};
    const auto pc = pseudo_convergence(f3, fam);
    CHECK_FALSE(pc.is_pc);
    CHECK_THROWS_AS(is_pseudo_limit(f3, fam, pc, 2), PreconditionError);
}

TEST_CASE("an approximated affine trace is pseudo-convergent")
{
    const SeriesSpace s(6);
    const auto b = SeriesQ::constant(6, 1);
    const auto a = SeriesQ::monomial(6, 1);
    const auto map = affine_series_map(b, a);
    const auto out = run(s, map, s.zero_point(), DriverConfig{3, 1}, affine_series_oracle(b, a));
    REQUIRE(out.kind == OutcomeKind::approximated);
    const auto fam = solution_family(s, map, out);
    CHECK(fam.back() == *out.point);
    const auto pc = pseudo_convergence(s, fam);
    REQUIRE(pc.is_pc);
    CHECK(is_pseudo_limit(s, fam, pc, *out.point));
    CHECK(solution_diagnostics(s, map, out).report.ok());
}

TEST_CASE("cauchy families and their limits")
{
    const auto f3 = FiniteSpace::f3();
    const std::vector<std::size_t> alternating{0, 1, 0, 1};
    CHECK_FALSE(is_cauchy(f3, alternating, f3.sample_radii()));
    CHECK_THROWS_AS(cauchy_limit(f3, alternating, true), NotCauchy);

    const std::vector<std::size_t> settles{0, 1, 2, 2};
    CHECK(is_cauchy(f3, settles, f3.sample_radii()));
    CHECK(cauchy_limit(f3, settles, true) == std::optional<std::size_t>(2));

    const PadicSpace z7(7, 3);
    const std::vector<PadicInt> fam{z7.make(3), z7.make(10), z7.make(108), z7.make(108)};
    const auto roots = oracle::roots_mod({-2, 0, 1}, 343);
    std::uint64_t root = 0;
    for (auto r : roots) {
        if (r % 7 == 3) {
            root = r;
        }
    }
    REQUIRE(root == 108);
    for (const bool oracle_free : {true, false}) {
        const auto lim = cauchy_limit(z7, fam, oracle_free);
        REQUIRE(lim);
        CHECK(lim->residue() == root);
    }
    CHECK(is_limit(z7, fam, z7.sample_radii(), z7.make(108)));
    CHECK_FALSE(is_limit(z7, fam, z7.sample_radii(), z7.make(10)));
}

TEST_CASE("partial sums of exp converge to the truncated series")
{
    const std::size_t cap = 6;
    const SeriesSpace s(cap);
    const auto c = oracle::exp_coefficients(cap + 1);
    std::vector<SeriesQ> sums;
    SeriesQ acc(cap);
    for (std::size_t k = 0; k <= cap; ++k) {
        acc = acc + SeriesQ::monomial(cap, k, c[k]);
        sums.push_back(acc);
    }
    CHECK(is_cauchy(s, sums, s.sample_radii()));
    for (const bool oracle_free : {true, false}) {
        const auto lim = cauchy_limit(s, sums, oracle_free);
        REQUIRE(lim);
        CHECK(*lim == exp_series(cap));
    }
}

TEST_CASE("step distances of a reached newton trace")
{
    const auto prob = sqrt2_mod7(6);
    const auto space = hensel_space(prob);
    const auto map = newton_map(prob);
    const auto result = hensel_solve(prob, DriverConfig{16, 1});
    const auto &trace = result.outcome.trace;
    const auto lambda = sample_lambda(space, map, space.sample_points());
    CHECK(sigma_coinitial(space, trace, lambda));

    // Only the first step kept: finer values of Lambda are not dominated.
    auto cut = trace;
    auto &stage = cut.stages.front();
    stage.iterates.erase(stage.iterates.begin() + 2, stage.iterates.end());
    stage.sigma.erase(stage.sigma.begin() + 1, stage.sigma.end());
    stage.balls.erase(stage.balls.begin() + 1, stage.balls.end());
    stage.reached = false;
    CHECK_FALSE(sigma_coinitial(space, cut, lambda));

    // Every radius index 1..N-1 is a value of d(x, phi x).
    const auto z = result.root;
    std::int64_t pk = 1;
    for (unsigned k = 1; k < prob.precision; ++k) {
        pk *= 7;
        const auto x = z + space.make(pk);
        CHECK(space.distance(x, map(x)) == NatExp(k));
    }
}

TEST_CASE("solidness")
{
    const PadicSpace z7(7, 4);
    CHECK(z7.witness(z7.make(0), NatExp(2))->residue() == 49);
    CHECK(solidness_check(z7, 4).ok());
    const SeriesSpace s(5);
    CHECK(*s.witness(s.zero_point(), NatExp(3)) == SeriesQ::monomial(5, 3));
    CHECK(solidness_check(s, 4).ok());
    const auto report = solidness_check(FiniteSpace::f3(), 4);
    CHECK(report.count("solid") == 1);
    CHECK(report.items().front().detail == "no point at distance poset:1 from a");
}

TEST_CASE("extension by continuity")
{
    const SeriesSpace s(6);
    const auto map = affine_series_map(SeriesQ::constant(6, 1), SeriesQ::monomial(6, 1));
    const SeriesQ x_hat(6, {1, 2, 3, 4, 5, 6});
    const DenseAccessor<SeriesQ, NatExp> exact{"exact", [](const SeriesQ &x, NatExp) { return x; }};
    CHECK(extend_by_continuity(s, map, exact, x_hat, NatExp(2)) == map(x_hat));

    const DenseAccessor<SeriesQ, NatExp> truncate{
        "truncate", [](const SeriesQ &x, NatExp g) { return x.truncate(g.index() + 1); }};
    for (std::uint64_t g = 0; g < 5; ++g) {
        const auto y = extend_by_continuity(s, map, truncate, x_hat, NatExp(g), sample_pairs(s));
        CHECK(lt(s.order(), s.distance(y, map(x_hat)), NatExp(g)));
    }

    const DenseAccessor<SeriesQ, NatExp> coarse{
        "coarse", [](const SeriesQ &x, NatExp g) { return x.truncate(g.index()); }};
    CHECK_THROWS_AS(extend_by_continuity(s, map, coarse, x_hat, NatExp(2)), AccessorViolation);
    CHECK_THROWS_AS(extend_by_continuity(s, map, exact, x_hat, NatExp::infinity()), PreconditionError);
}

TEST_CASE("diagnostics on a reached finite run")
{
    const auto f3 = FiniteSpace::f3();
    const auto map = finite_map(f3, {1, 2, 2});
    const auto out = run(f3, map, 0, DriverConfig{4, 1});
    const auto diag = solution_diagnostics(f3, map, out);
    CHECK(diag.report.ok());
    CHECK(diag.pc_checked);
    CHECK(diag.cauchy_checked);
}
