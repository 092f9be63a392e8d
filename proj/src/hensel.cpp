#include <ultrafix/apps/hensel.hpp>

#include <ultrafix/errors.hpp>

namespace ultrafix
{

namespace
{

PadicInt reduce(const Rational &c, const PadicInt &like)
{
    if (boost::multiprecision::denominator(c) != 1) {
        throw PreconditionError("Hensel polynomials need integer coefficients");
    }
    const Integer modulus = like.modulus();
    Integer r = boost::multiprecision::numerator(c) % modulus;
    if (r < 0) {
        r += modulus;
    }
    return PadicInt(like.prime(), like.precision(), static_cast<std::int64_t>(r));
}

void check_problem(const HenselProblem &prob)
{
    if (prob.f.variables() != std::vector<std::string>{"x"}) {
        throw PreconditionError("Hensel polynomial must be in the variable x");
    }
    if (!prob.f.has_integer_coefficients()) {
        throw PreconditionError("Hensel polynomials need integer coefficients");
    }
    if (prob.precision < 2) {
        throw PreconditionError("Hensel precision must be at least 2");
    }
}

} // namespace

PadicInt evaluate_mod(const Polynomial &f, const PadicInt &x)
{
    PadicInt out(x.prime(), x.precision(), 0);
    const auto deg = f.degree(0);
    std::vector<PadicInt> powers{PadicInt(x.prime(), x.precision(), 1)};
    for (unsigned k = 1; k <= deg; ++k) {
        powers.push_back(powers.back() * x);
    }
    for (const auto &[m, c] : f.terms()) {
        out = out + reduce(c, x) * powers[m[0]];
    }
    return out;
}

PadicSpace hensel_space(const HenselProblem &prob)
{
    check_problem(prob);
    const auto p = static_cast<std::int64_t>(prob.p);
    const auto seed_class = ((prob.seed % p) + p) % p;
    return PadicSpace(prob.p, prob.precision, static_cast<std::uint64_t>(seed_class));
}

ContractingMap<PadicInt> newton_map(const HenselProblem &prob)
{
    const auto space = hensel_space(prob);
    const auto x0 = space.make(prob.seed);
    const auto df = prob.f.derivative(0);
    const auto fx0 = evaluate_mod(prob.f, x0);
    if (fx0.residue() % prob.p != 0) {
        throw HenselConditionFailed("f(" + std::to_string(prob.seed) + ") = " + std::to_string(fx0.residue())
                                    + " is not divisible by " + std::to_string(prob.p));
    }
    const auto dfx0 = evaluate_mod(df, x0);
    if (!dfx0.is_unit()) {
        throw HenselConditionFailed("f'(" + std::to_string(prob.seed) + ") = " + std::to_string(dfx0.residue())
                                    + " is not a unit mod " + std::to_string(prob.p));
    }
    auto name = "newton(" + prob.f.to_string() + ")";
    return {std::move(name), [f = prob.f, df](const PadicInt &x) {
                // f'(x) = f'(x0) mod p on the ball, so it stays a unit.
                return x - evaluate_mod(f, x) * evaluate_mod(df, x).unit_inverse();
            }};
}

HenselResult hensel_solve(const HenselProblem &prob, const DriverConfig &config)
{
    const auto space = hensel_space(prob);
    const auto map = newton_map(prob);
    auto outcome = run(space, map, space.make(prob.seed), config);
    if (outcome.kind != OutcomeKind::reached || !outcome.point) {
        throw HenselConditionFailed("Newton iteration did not reach a root within the budget");
    }
    const auto root = *outcome.point;
    if (evaluate_mod(prob.f, root).residue() != 0) {
        throw HenselConditionFailed("fixed point " + std::to_string(root.residue()) + " is not a root");
    }
    auto contraction = check_strict_contraction(space, map, sample_pairs(space));
    return {std::move(outcome), root, std::move(contraction)};
}

} // namespace ultrafix
