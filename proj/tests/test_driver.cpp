#include <doctest.h>

#include <ultrafix/driver.hpp>
#include <ultrafix/instances/finite_space.hpp>
#include <ultrafix/instances/series.hpp>

using namespace ultrafix;

namespace
{

SeriesQ geometric(std::size_t cap)
{
    return SeriesQ(cap, std::vector<Rational>(cap, Rational(1)));
}

} // namespace

TEST_CASE("constant map reaches in one step")
{
    const auto f3 = FiniteSpace::f3();
    const auto c = f3.point("c");
    const auto map = finite_map(f3, {c, c, c});
    const auto seg = iterate_stage(f3, map, f3.point("a"), 8);
    CHECK(seg.reached);
    CHECK(seg.iterates == std::vector<std::size_t>{0, c});
    CHECK(seg.sigma == std::vector{f3.order().value("2")});
    const auto out = run(f3, map, 0, DriverConfig{4, 1});
    CHECK(out.kind == OutcomeKind::reached);
    CHECK(*out.point == c);
    CHECK(out.stage_index == 0);
    CHECK(out.step_index == 1);
    CHECK(validate_outcome(f3, map, out).ok());
}

TEST_CASE("three point map a->b, b->c, c->c")
{
    const auto f3 = FiniteSpace::f3();
    const auto &order = f3.order();
    const auto map = finite_map(f3, {1, 2, 2});
    CHECK(map.name == "a->b,b->c,c->c");
    CHECK(check_strict_contraction(f3, map, sample_pairs(f3)).ok());
    const auto out = run(f3, map, 0, DriverConfig{4, 1});
    REQUIRE(out.kind == OutcomeKind::reached);
    CHECK(out.trace.stages.front().iterates == std::vector<std::size_t>{0, 1, 2});
    CHECK(out.trace.sigma() == std::vector{order.value("2"), order.value("1")});
    CHECK(out.step_index == 2);
    CHECK(verify_fixed_point(f3, map, 2));
    CHECK_FALSE(verify_fixed_point(f3, map, 0));
    CHECK(validate_outcome(f3, map, out).ok());
}

TEST_CASE("identity map fails the contraction check")
{
    const auto f3 = FiniteSpace::f3();
    const auto id = finite_map(f3, {0, 1, 2});
    CHECK(check_strict_contraction(f3, id, sample_pairs(f3)).count("contraction") == 6);
}

TEST_CASE("a swap is caught by the driver")
{
    auto order = FinitePoset::chain(2);
    const auto r0 = order.value("0");
    const auto r1 = order.value("1");
    const auto space = FiniteSpace::create(order, {"a", "b"}, {{r0, r1}, {r1, r0}});
    const auto swap = finite_map(space, {1, 0});
    CHECK_THROWS_AS(iterate_stage(space, swap, 0, 8), ContractionViolation);
    CHECK_THROWS_AS(run(space, swap, 0, DriverConfig{8, 1}), ContractionViolation);
}

TEST_CASE("budgets must be positive")
{
    const auto f3 = FiniteSpace::f3();
    const auto map = finite_map(f3, {1, 2, 2});
    CHECK_THROWS_AS(iterate_stage(f3, map, 0, 0), PreconditionError);
    CHECK_THROWS_AS(run(f3, map, 0, DriverConfig{0, 1}), PreconditionError);
    CHECK_THROWS_AS(run(f3, map, 0, DriverConfig{1, 0}), PreconditionError);
}

TEST_CASE("a stage stops at its budget")
{
    const SeriesSpace s(6);
    const auto map = affine_series_map(SeriesQ::constant(6, 1), SeriesQ::monomial(6, 1));
    const auto seg = iterate_stage(s, map, s.zero_point(), 3);
    CHECK_FALSE(seg.reached);
    CHECK(seg.iterates.size() == 4);
    CHECK(seg.sigma == std::vector{NatExp(0), NatExp(1), NatExp(2)});
}

TEST_CASE("affine oracle gives an approximated outcome at stage 0")
{
    const SeriesSpace s(6);
    const auto b = SeriesQ::constant(6, 1);
    const auto a = SeriesQ::monomial(6, 1);
    const auto map = affine_series_map(b, a);
    const auto out = run(s, map, s.zero_point(), DriverConfig{3, 1}, affine_series_oracle(b, a));
    REQUIRE(out.kind == OutcomeKind::approximated);
    CHECK(*out.point == geometric(6));
    CHECK(out.trace.stages.size() == 1);
    CHECK(out.precision == "mod t^6");
    CHECK(validate_outcome(s, map, out).ok());
}

TEST_CASE("an oracle answer outside the iterate balls throws")
{
    const SeriesSpace s(6);
    const auto map = affine_series_map(SeriesQ::constant(6, 1), SeriesQ::monomial(6, 1));
    const LimitOracle<SeriesQ, NatExp> bad{"bad", [](const auto &) { return SeriesQ::monomial(6, 3); }};
    CHECK_THROWS_AS(run(s, map, s.zero_point(), DriverConfig{2, 2}, bad), OracleMembershipViolation);
}

TEST_CASE("fallback stages replay a single long stage")
{
    const SeriesSpace s(8);
    const auto map = affine_series_map(SeriesQ::constant(8, 1), SeriesQ::monomial(8, 1));
    const auto staged = run(s, map, s.zero_point(), DriverConfig{2, 3});
    const auto single = run(s, map, s.zero_point(), DriverConfig{6, 1});
    CHECK(staged.kind == OutcomeKind::inconclusive);
    CHECK(single.kind == OutcomeKind::inconclusive);
    CHECK(flatten(s, staged.trace) == flatten(s, single.trace));
    CHECK(staged.trace.sigma() == single.trace.sigma());
    CHECK(validate_outcome(s, map, staged).ok());

    const auto staged_long = run(s, map, s.zero_point(), DriverConfig{3, 4});
    const auto single_long = run(s, map, s.zero_point(), DriverConfig{12, 1});
    REQUIRE(staged_long.kind == OutcomeKind::reached);
    REQUIRE(single_long.kind == OutcomeKind::reached);
    CHECK(*staged_long.point == *single_long.point);
    CHECK(*staged_long.point == geometric(8));
    CHECK(flatten(s, staged_long.trace) == flatten(s, single_long.trace));
}

TEST_CASE("validation catches a repeated distance")
{
    const SeriesSpace s(6);
    const auto map = affine_series_map(SeriesQ::constant(6, 1), SeriesQ::monomial(6, 1));
    auto out = run(s, map, s.zero_point(), DriverConfig{3, 1});
    REQUIRE(validate_outcome(s, map, out).ok());
    auto &stage = out.trace.stages.front();
    stage.sigma[2] = stage.sigma[1];
    stage.balls[2].radius = stage.sigma[1];
    const auto report = validate_trace(s, map, out.trace);
    CHECK(report.count("ii") == 1);
    CHECK(report.count("sigma") == 1);
}

TEST_CASE("validation catches a limit stage entry outside the balls")
{
    const SeriesSpace s(6);
    const auto map = affine_series_map(SeriesQ::constant(6, 1), SeriesQ::monomial(6, 1));
    Trace<SeriesQ, NatExp> trace;
    trace.stages.push_back(iterate_stage(s, map, s.zero_point(), 2));
    auto far = iterate_stage(s, map, SeriesQ::monomial(6, 3), 1);
    far.entry = StageEntry::limit_oracle;
    trace.stages.push_back(far);
    CHECK(validate_trace(s, map, trace).count("iii") == 1);
}

TEST_CASE("validation catches a step that is not the map")
{
    const auto f3 = FiniteSpace::f3();
    const auto map = finite_map(f3, {1, 2, 2});
    auto out = run(f3, map, 0, DriverConfig{4, 1});
    out.trace.stages.front().iterates[1] = 0;
    CHECK(validate_trace(f3, map, out.trace).count("i") >= 1);
}

TEST_CASE("the one point space")
{
    auto order = FinitePoset::chain(2);
    const auto space = FiniteSpace::create(order, {"a"}, {{order.value("0")}});
    const auto map = finite_map(space, {0});
    CHECK(check_strict_contraction(space, map, sample_pairs(space)).ok());
    CHECK(all_contracting_selfmaps(space).size() == 1);
    const auto out = run(space, map, 0, DriverConfig{1, 1});
    CHECK(out.kind == OutcomeKind::reached);
    CHECK(out.step_index == 0);
    CHECK(out.trace.sigma().empty());
    CHECK(validate_outcome(space, map, out).ok());
}
