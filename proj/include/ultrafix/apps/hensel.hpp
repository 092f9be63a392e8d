#ifndef ULTRAFIX_APPS_HENSEL_HPP
#define ULTRAFIX_APPS_HENSEL_HPP

#include <cstdint>
#include <string>

#include <ultrafix/driver.hpp>
#include <ultrafix/instances/padic.hpp>
#include <ultrafix/polynomial.hpp>
#include <ultrafix/report.hpp>

namespace ultrafix
{

// Root of f mod p^N lifted from a simple root x0 mod p.
struct HenselProblem {
    std::uint64_t p = 0;
    unsigned precision = 0;
    // Integer coefficients, variable x.
    Polynomial f{std::vector<std::string>{"x"}};
    std::int64_t seed = 0;
};

// f(x) mod p^N. Throws PreconditionError for non-integer coefficients.
PadicInt evaluate_mod(const Polynomial &f, const PadicInt &x);

// The space x0 + pZ mod p^N that the Newton map acts on.
PadicSpace hensel_space(const HenselProblem &prob);

// x -> x - f(x) f'(x)^-1. Throws HenselConditionFailed unless f(x0) = 0 mod p
// and f'(x0) is a unit.
ContractingMap<PadicInt> newton_map(const HenselProblem &prob);

struct HenselResult {
    Outcome<PadicInt, NatExp> outcome;
    PadicInt root;
    // Strict contraction of the Newton map on sampled pairs of the ball.
    Report contraction;
};

// Throws HenselConditionFailed when the outcome does not reach a root.
HenselResult hensel_solve(const HenselProblem &prob, const DriverConfig &config);

} // namespace ultrafix

#endif
