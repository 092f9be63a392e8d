// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <ultrafix/analysis.hpp>
#include <ultrafix/apps/finite_suite.hpp>
#include <ultrafix/apps/hensel.hpp>
#include <ultrafix/apps/picard.hpp>
#include <ultrafix/diagnostics.hpp>
#include <ultrafix/instances/lex_series.hpp>
#include <ultrafix/io/trace_document.hpp>

#include "../oracles.hpp"

using namespace ultrafix;

namespace
{

struct Result {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char *title, double limit_s, const std::function<Result()> &body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception &e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s >= limit_s && r.pass) {
        r.pass = false;
        r.detail = "runtime over " + std::to_string(limit_s) + " s";
    }
    failures += r.pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", r.pass ? "PASS" : "FAIL", id, title, s,
                r.detail.empty() ? "" : ": ", r.detail.c_str());
}

HenselProblem sqrt2(unsigned n)
{
    HenselProblem prob;
    prob.p = 7;
    prob.precision = n;
    prob.f = Polynomial::parse("x^2 - 2", {"x"});
    prob.seed = 3;
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

std::uint64_t oracle_root(unsigned n)
{
    std::uint64_t m = 1;
    for (unsigned k = 0; k < n; ++k) {
        m *= 7;
    }
    for (auto r : oracle::roots_mod({-2, 0, 1}, m)) {
        if (r % 7 == 3) {
            return r;
        }
    }
    return m;
}

// Finite traces checked by criterion 4 beyond the suite's own diagnostics.
template <typename S>
void diagnose(Result &r, const S &space, const ContractingMap<point_of<S>> &map,
              const Outcome<point_of<S>, radius_of<S>> &outcome, const std::string &label, std::size_t &cauchy)
{
    const auto d = solution_diagnostics(space, map, outcome);
    r.require(d.report.ok(), label + ": " + (d.report.ok() ? "" : d.report.items().front().detail));
    r.require(d.pc_checked, label + ": solution family too short for pseudo-convergence");
    cauchy += d.cauchy_checked ? 1 : 0;
}

void round_trip(Result &r, const TraceDocument &doc, const std::string &label, std::size_t &count)
{
    ++count;
    const auto text = doc.emit();
    const auto parsed = TraceDocument::parse(text);
    const auto report = revalidate(parsed);
    r.require(report.ok(), label + ": " + (report.ok() ? "" : report.items().front().detail));
    r.require(parsed.emit() == text, label + ": re-emission differs");
    r.require(reencode(parsed).emit() == text, label + ": re-encoding differs");
}

} // namespace

int main()
{
    criterion(1, "finite fixed point suite over the chain and the diamond, up to 4 points", 30.0, [] {
        Result r;
        std::string summary;
        for (const auto &order : {FinitePoset::chain(3), FinitePoset::diamond()}) {
            const auto s = run_finite_suite(4, order);
            r.require(s.report.ok(), s.report.ok() ? "" : s.report.items().front().detail);
            r.require(s.maps > 0 && s.runs > 0, "nothing enumerated");
            summary += (summary.empty() ? "" : "; ") + std::to_string(s.spaces) + " spaces, "
                       + std::to_string(s.maps) + " maps, " + std::to_string(s.runs) + " runs";
        }
        if (r.pass) {
            r.detail = summary;
        }
        return r;
    });

    criterion(2, "hensel lifting of x^2 - 2 over p = 7 from seed 3", 1.0, [] {
        Result r;
        const auto z = hensel_solve(sqrt2(6), DriverConfig{32, 1}).root;
        r.require((z * z).residue() == 2, "z^2 is not 2 mod 7^6");
        r.require(oracle_root(2) == 10 && oracle_root(3) == 108, "exhaustive oracle disagrees with 10, 108");
        for (unsigned n = 2; n <= 4; ++n) {
            const auto root = hensel_solve(sqrt2(n), DriverConfig{32, 1}).root.residue();
            r.require(root == oracle_root(n), "N = " + std::to_string(n) + ": root " + std::to_string(root));
        }
        if (r.pass) {
            r.detail = "z = " + std::to_string(z.residue()) + " mod 7^6";
        }
        return r;
    });

    criterion(3, "picard iteration for y' = y at cap 12 and y' = 2t", 1.0, [] {
        Result r;
        const auto prob = ode("y", 1, 12);
        const auto exp = picard_solve(prob);
        const auto &c = exp.solution.coefficients();
        r.require(exp.outcome.kind == OutcomeKind::reached, "y' = y not reached");
        r.require(c == oracle::exp_coefficients(12), "coefficients differ from 1/k!");
        r.require(oracle::solves_y_prime_eq_y(c), "term-wise residual is nonzero");
        r.require(residual(prob, exp.solution).is_zero(), "library residual is nonzero");
        const auto lin = picard_solve(ode("2*t", 0, 12));
        r.require(lin.outcome.kind == OutcomeKind::reached, "y' = 2t not reached");
        r.require(lin.outcome.step_index <= 2 && lin.outcome.trace.step_count() <= 2, "y' = 2t took over 2 steps");
        r.require(lin.solution == SeriesQ::monomial(12, 2), "y' = 2t solution is not t^2");
        return r;
    });

    criterion(4, "diagnostics on every reached or approximated trace from criteria 1-3", 0, [] {
        Result r;
        std::size_t pc = 0;
        std::size_t cauchy = 0;
        for (const auto &order : {FinitePoset::chain(3), FinitePoset::diamond()}) {
            const auto s = run_finite_suite(4, order);
            r.require(s.report.ok(), s.report.ok() ? "" : s.report.items().front().detail);
            pc += s.pc_checked;
            cauchy += s.cauchy_checked;
        }
        for (unsigned n = 2; n <= 6; ++n) {
            const auto prob = sqrt2(n);
            const auto result = hensel_solve(prob, DriverConfig{32, 1});
            diagnose(r, hensel_space(prob), newton_map(prob), result.outcome, "hensel N = " + std::to_string(n),
                     cauchy);
            ++pc;
        }
        for (const auto &prob : {ode("y", 1, 12), ode("2*t", 0, 12)}) {
            const auto result = picard_solve(prob);
            diagnose(r, SeriesSpace(prob.cap), picard_operator(prob), result.outcome, "picard", cauchy);
            ++pc;
        }
        if (r.pass) {
            r.detail = std::to_string(pc) + " pseudo-convergence checks, " + std::to_string(cauchy) + " Cauchy checks";
        }
        return r;
    });

    criterion(5, "extension of the picard operator at gamma indices 1..6", 0, [] {
        Result r;
        const auto prob = ode("y", 1, 12);
        const auto x_hat = picard_solve(prob).solution;
        for (std::uint64_t g = 1; g <= 6; ++g) {
            const auto report = picard_as_extension_demo(prob, x_hat, NatExp(g));
            r.require(report.ok(), "gamma " + std::to_string(g) + ": "
                                       + (report.ok() ? "" : report.items().front().detail));
        }
        return r;
    });

    criterion(6, "100 trace documents re-validate and re-emit byte-identically", 0, [] {
        Result r;
        std::size_t count = 0;
        // 40 finite traces.
        for (const auto &order : {FinitePoset::chain(3), FinitePoset::diamond()}) {
            std::size_t taken = 0;
            for (const auto &space : finite_space_enumerate(4, order)) {
                for (const auto &images : all_contracting_selfmaps(space)) {
                    if (taken == 20) {
                        break;
                    }
                    const auto map = finite_map(space, images);
                    const auto start = taken % space.size();
                    const auto out = run(space, map, start, DriverConfig{space.size() + 1, 1});
                    round_trip(r, make_trace_document(space, images, out, std::nullopt), "finite " + map.name, count);
                    ++taken;
                }
            }
        }
        // 20 Newton traces.
        const std::vector<std::tuple<std::uint64_t, std::string, std::int64_t>> polys = {
            {7, "x^2 - 2", 3}, {7, "x^2 - 2", 4}, {5, "x^2 + 1", 2}, {5, "x^2 + 1", 3}, {5, "x^3 - x - 1", 2}};
        for (const auto &[p, f, seed] : polys) {
            for (unsigned n = 2; n <= 5; ++n) {
                HenselProblem prob;
                prob.p = p;
                prob.precision = n;
                prob.f = Polynomial::parse(f, {"x"});
                prob.seed = seed;
                const auto out = hensel_solve(prob, DriverConfig{32, 1}).outcome;
                round_trip(r, make_trace_document(prob, out), "newton " + f, count);
            }
        }
        // 20 Picard traces.
        const std::vector<std::pair<std::string, int>> rhs = {{"y", 1}, {"2*t", 0}, {"y^2", 1}, {"t*y + 1", 0},
                                                              {"1 - y", 2}};
        for (const auto &[f, y0] : rhs) {
            for (const std::size_t cap : {3u, 5u, 8u, 12u}) {
                const auto prob = ode(f, y0, cap);
                round_trip(r, make_trace_document(prob, picard_solve(prob).outcome), "picard " + f, count);
            }
        }
        // 10 affine series traces through the closed-form oracle.
        for (std::size_t k = 0; k < 10; ++k) {
            const std::size_t cap = 4 + k % 4;
            const SeriesSpace s(cap);
            const SeriesQ b(cap, {Rational(1 + static_cast<long>(k)), Rational(-1, 2)});
            const auto a = SeriesQ::monomial(cap, 1 + k % 2, Rational(static_cast<long>(k % 3) + 1));
            const auto out = run(s, affine_series_map(b, a), s.zero_point(), DriverConfig{2, 1 + k % 2},
                                 affine_series_oracle(b, a));
            round_trip(r, make_trace_document(AffineSeriesSpec{b, a}, out, std::string("affine-closed-form")),
                       "affine", count);
        }
        // 10 lex series traces.
        for (std::size_t k = 0; k < 10; ++k) {
            const LexSeriesSpace s(3, 3);
            LexAffine f{LexSeriesQ::monomial(3, 3, k % 3, 0, Rational(static_cast<long>(k) + 1)),
                        Rational(static_cast<long>(k % 2) + 1), k % 2, 1 - k % 2};
            const bool with_oracle = k < 5;
            const auto oracle = with_oracle ? std::optional(lex_affine_oracle(f)) : std::nullopt;
            const auto out = run(s, lex_affine_map(f), s.zero_point(), DriverConfig{with_oracle ? 2u : 16u, 1},
                                 oracle);
            round_trip(r, make_trace_document(f, out, with_oracle ? std::optional(oracle->name) : std::nullopt),
                       "lexaffine", count);
        }
        r.require(count == 100, std::to_string(count) + " documents instead of 100");
        if (r.pass) {
            r.detail = std::to_string(count) + " documents";
        }
        return r;
    });

    return failures == 0 ? 0 : 1;
}
