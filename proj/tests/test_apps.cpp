#include <doctest.h>

#include <ultrafix/analysis.hpp>
#include <ultrafix/apps/finite_suite.hpp>
#include <ultrafix/apps/hensel.hpp>
#include <ultrafix/apps/picard.hpp>
#include <ultrafix/diagnostics.hpp>

#include "oracles.hpp"

using namespace ultrafix;

namespace
{

HenselProblem hensel(std::uint64_t p, unsigned n, const std::string &f, std::int64_t seed)
{
    HenselProblem prob;
    prob.p = p;
    prob.precision = n;
    prob.f = Polynomial::parse(f, {"x"});
    prob.seed = seed;
    return prob;
}

OdeProblem ode(const std::string &rhs, Rational y0, std::size_t cap)
{
    OdeProblem prob;
    prob.rhs = Polynomial::parse(rhs, series_variables());
    prob.y0 = y0;
    prob.cap = cap;
    return prob;
}

// The unique root of f mod p^n congruent to seed mod p.
std::uint64_t oracle_root(const std::vector<std::int64_t> &f, std::uint64_t p, unsigned n, std::uint64_t seed)
{
    std::uint64_t m = 1;
    for (unsigned k = 0; k < n; ++k) {
        m *= p;
    }
    std::vector<std::uint64_t> lifted;
    for (auto r : oracle::roots_mod(f, m)) {
        if (r % p == seed % p) {
            lifted.push_back(r);
        }
    }
    REQUIRE(lifted.size() == 1);
    return lifted.front();
}

std::vector<Rational> coefficients(const SeriesQ &s)
{
    return s.coefficients();
}

} // namespace

TEST_CASE("hensel roots match the exhaustive search")
{
    CHECK(oracle_root({-2, 0, 1}, 7, 2, 3) == 10);
    CHECK(oracle_root({-2, 0, 1}, 7, 3, 3) == 108);
    CHECK(oracle_root({1, 0, 1}, 5, 2, 2) == 7);

    CHECK(hensel_solve(hensel(7, 2, "x^2 - 2", 3), DriverConfig{16, 1}).root.residue() == 10);
    CHECK(hensel_solve(hensel(7, 3, "x^2 - 2", 3), DriverConfig{16, 1}).root.residue() == 108);
    CHECK(hensel_solve(hensel(5, 2, "x^2 + 1", 2), DriverConfig{16, 1}).root.residue() == 7);
    for (unsigned n = 2; n <= 5; ++n) {
        CHECK(hensel_solve(hensel(7, n, "x^2 - 2", 4), DriverConfig{16, 1}).root.residue()
              == oracle_root({-2, 0, 1}, 7, n, 4));
        CHECK(hensel_solve(hensel(5, n, "x^3 - x - 1", 2), DriverConfig{16, 1}).root.residue()
              == oracle_root({-1, -1, 0, 1}, 5, n, 2));
    }
}

TEST_CASE("hensel at precision 6")
{
    const auto prob = hensel(7, 6, "x^2 - 2", 3);
    const auto result = hensel_solve(prob, DriverConfig{16, 1});
    const auto z = result.root;
    CHECK((z * z).residue() == 2);
    CHECK(z.residue() == 38181);
    CHECK(result.contraction.ok());
    CHECK(result.outcome.kind == OutcomeKind::reached);
    CHECK(result.outcome.precision == "mod 7^6");
    const auto iterates = flatten(hensel_space(prob), result.outcome.trace);
    CHECK(iterates.front().residue() == 3);
    CHECK(iterates[1].residue() % 343 == 59);
    CHECK(iterates[2].residue() % 343 == 108);
    const auto space = hensel_space(prob);
    const auto map = newton_map(prob);
    CHECK(validate_outcome(space, map, result.outcome).ok());
    const auto diag = solution_diagnostics(space, map, result.outcome);
    CHECK(diag.report.ok());
    CHECK(diag.cauchy_checked);
}

TEST_CASE("hensel preconditions")
{
    CHECK_THROWS_AS(newton_map(hensel(2, 4, "x^2 - 3", 1)), HenselConditionFailed);
    CHECK_THROWS_AS(newton_map(hensel(7, 4, "x^2 - 2", 2)), HenselConditionFailed);
    CHECK_THROWS_AS(hensel_space(hensel(7, 1, "x^2 - 2", 3)), PreconditionError);
    CHECK_THROWS_AS(hensel_space(hensel(7, 3, "x^2/2 - 1", 3)), PreconditionError);
}

TEST_CASE("newton steps contract on the residue ball")
{
    const auto prob = hensel(5, 4, "x^2 + 1", 2);
    const auto space = hensel_space(prob);
    CHECK(check_strict_contraction(space, newton_map(prob), sample_pairs(space)).ok());
    CHECK(evaluate_mod(prob.f, space.make(7)).residue() % 25 == 0);
}

TEST_CASE("picard for y' = y gives the exponential series")
{
    for (const std::size_t cap : {5u, 12u}) {
        const auto prob = ode("y", 1, cap);
        const auto result = picard_solve(prob);
        CHECK(result.outcome.kind == OutcomeKind::reached);
        const auto c = coefficients(result.solution);
        CHECK(c == oracle::exp_coefficients(cap));
        CHECK(oracle::solves_y_prime_eq_y(c));
        CHECK(residual(prob, result.solution).is_zero());
        const SeriesSpace s(cap);
        const auto map = picard_operator(prob);
        CHECK(validate_outcome(s, map, result.outcome).ok());
        CHECK(solution_diagnostics(s, map, result.outcome).report.ok());
    }
}

TEST_CASE("picard for polynomial right-hand sides")
{
    const auto linear = picard_solve(ode("2*t", 0, 5));
    REQUIRE(linear.outcome.kind == OutcomeKind::reached);
    CHECK(linear.outcome.step_index <= 2);
    CHECK(linear.solution == SeriesQ(5, {0, 0, 1}));

    const auto prob = ode("y^2", 1, 6);
    const auto square = picard_solve(prob);
    CHECK(square.solution == SeriesQ(6, {1, 1, 1, 1, 1, 1}));
    CHECK(oracle::solves_y_prime_eq_y_squared(coefficients(square.solution)));
    CHECK(residual(prob, square.solution).is_zero());
    CHECK_FALSE(residual(prob, SeriesQ(6, {1, 1})).is_zero());
}

TEST_CASE("picard iterates settle one coefficient per step")
{
    const std::size_t cap = 8;
    const auto prob = ode("t*y + 1", 0, cap);
    const auto result = picard_solve(prob);
    const SeriesSpace s(cap);
    const auto fam = flatten(s, result.outcome.trace);
    for (std::size_t k = 0; k + 1 < fam.size(); ++k) {
        const auto d = s.distance(fam[k], fam[k + 1]);
        CHECK((d.is_infinite() || d.index() > k));
    }
    CHECK(residual(prob, result.solution).is_zero());
    // A larger cap only extends the coefficient list.
    const auto wide = picard_solve(ode("t*y + 1", 0, 2 * cap));
    for (std::size_t k = 0; k < cap; ++k) {
        CHECK(wide.solution[k] == result.solution[k]);
    }
}

TEST_CASE("picard operator as an extension by continuity")
{
    const auto prob = ode("y", 1, 12);
    const auto x_hat = picard_solve(prob).solution;
    for (std::uint64_t g = 1; g <= 6; ++g) {
        CHECK(picard_as_extension_demo(prob, x_hat, NatExp(g)).ok());
    }
    CHECK(picard_as_extension_demo(prob, SeriesQ(12, {1, 2, 3}), NatExp(4)).ok());
    CHECK_THROWS_AS(picard_as_extension_demo(prob, x_hat, NatExp(12)), PreconditionError);
}

TEST_CASE("finite suite over small posets")
{
    for (const auto &order : {FinitePoset::chain(3), FinitePoset::diamond()}) {
        const auto summary = run_finite_suite(3, order);
        CHECK(summary.report.ok());
        CHECK(summary.spaces > 0);
        CHECK(summary.maps > 0);
        CHECK(summary.runs >= summary.maps * 2);
    }
    const auto chain = run_finite_suite(4, FinitePoset::chain(3));
    CHECK(chain.spaces == 10);
    CHECK(chain.maps == 51);
    CHECK(chain.runs == 185);
    CHECK(chain.report.ok());
}
