#ifndef ULTRAFIX_APPS_PICARD_HPP
#define ULTRAFIX_APPS_PICARD_HPP

#include <cstddef>

#include <ultrafix/driver.hpp>
#include <ultrafix/instances/series.hpp>
#include <ultrafix/polynomial.hpp>
#include <ultrafix/rational.hpp>
#include <ultrafix/report.hpp>

namespace ultrafix
{

// y' = f(t, y), y(0) = y0, solved mod t^cap.
struct OdeProblem {
    Polynomial rhs{series_variables()};
    Rational y0{0};
    std::size_t cap = 1;
};

// T(y) = y0 + integral_0^t f(s, y(s)) ds.
ContractingMap<SeriesQ> picard_operator(const OdeProblem &prob);

struct PicardResult {
    Outcome<SeriesQ, NatExp> outcome;
    SeriesQ solution;
};

// Iterates T from the constant y0. The default budget is enough to reach
// the fixed point mod t^cap.
PicardResult picard_solve(const OdeProblem &prob, const DriverConfig &config);
PicardResult picard_solve(const OdeProblem &prob);

// y' - f(t, y) with the top coefficient dropped, as the derivative of a
// truncated series is only known through t^(cap-2).
SeriesQ residual(const OdeProblem &prob, const SeriesQ &y);

// Extending T from polynomials to a series x_hat by continuity, with two
// independent polynomial approximants within gamma. Rules: "accessor"
// (approximant too far), "agreement" (the two extensions differ by gamma or
// more), "direct" (an extension differs from T(x_hat) by gamma or more).
Report picard_as_extension_demo(const OdeProblem &prob, const SeriesQ &x_hat, NatExp gamma);

} // namespace ultrafix

#endif
