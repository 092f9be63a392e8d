#include <ultrafix/cli/commands.hpp>

#include <fstream>
#include <sstream>
#include <variant>

#include <ultrafix/analysis.hpp>
#include <ultrafix/apps/finite_suite.hpp>
#include <ultrafix/apps/hensel.hpp>
#include <ultrafix/apps/picard.hpp>
#include <ultrafix/errors.hpp>
#include <ultrafix/instances/lex_series.hpp>
#include <ultrafix/instances/padic.hpp>
#include <ultrafix/instances/series.hpp>
#include <ultrafix/io/instance_file.hpp>
#include <ultrafix/io/trace_document.hpp>

namespace ultrafix::cli
{

namespace
{

// Prints the report under `title`; true when it is empty.
bool section(std::ostream &out, const std::string &title, const Report &report)
{
    if (report.ok()) {
        out << title << ": ok\n";
        return true;
    }
    out << title << ": " << report.size() << " violation" << (report.size() == 1 ? "" : "s") << '\n';
    for (const auto &v : report.items()) {
        out << "  [" << v.rule << "] " << v.detail << '\n';
    }
    return false;
}

template <UltrametricSpace S>
Report order_report(const S &space)
{
    auto sample = space.sample_radii();
    sample.push_back(space.order().zero());
    return check_order_axioms(space.order(), sample);
}

template <UltrametricSpace S>
bool verify_generic(const S &space, std::ostream &out)
{
    bool ok = section(out, "order axioms", order_report(space));
    ok = section(out, "space axioms", check_space_axioms(space, space.sample_radii())) && ok;
    ok = section(out, "ball lemma", check_ball_lemma(space)) && ok;
    return ok;
}

bool verify_finite(const FiniteInstance &inst, std::ostream &out)
{
    const auto &space = inst.space;
    const auto &order = space.order();
    out << "finite space: " << space.size() << " points over " << order.size() << " radii\n";
    bool ok = section(out, "order axioms", check_order_axioms(order, order.elements()));
    const auto axioms = check_space_axioms(space, order.sample());
    ok = section(out, "space axioms", axioms) && ok;
    if (!axioms.ok()) {
        return false;
    }
    ok = section(out, "ball lemma", check_ball_lemma(space)) && ok;
    if (!inst.map) {
        return ok;
    }
    const auto map = finite_map(space, *inst.map);
    const auto contraction = check_strict_contraction(space, map, sample_pairs(space));
    ok = section(out, "strict contraction of " + map.name, contraction) && ok;
    if (!contraction.ok()) {
        return false;
    }
    const DriverConfig config{space.size() + 1, 1};
    Report runs;
    for (std::size_t start = 0; start < space.size(); ++start) {
        const auto outcome = run(space, map, start, config);
        runs.append(validate_outcome(space, map, outcome));
        if (outcome.kind != OutcomeKind::reached) {
            runs.add("reach", "run from " + space.format_point(start) + " ended " + to_string(outcome.kind));
        } else if (start == 0) {
            out << "fixed point: " << space.format_point(*outcome.point) << '\n';
        }
    }
    return section(out, "driver runs", runs) && ok;
}

bool verify_padic(const PadicInstance &inst, std::ostream &out)
{
    const PadicSpace space(inst.p, inst.precision, inst.ball);
    out << "p-adic space " << space.precision() << (inst.ball ? " on the ball " + std::to_string(*inst.ball) + " + pZ" : "")
        << ", " << space.sample_points().size() << " sample points\n";
    bool ok = verify_generic(space, out);
    ok = section(out, "solidness", solidness_check(space, 4)) && ok;
    return ok;
}

bool verify_series(const SeriesInstance &inst, std::ostream &out)
{
    const SeriesSpace space(inst.cap);
    out << "series space " << space.precision() << ", " << space.sample_points().size() << " sample points\n";
    bool ok = verify_generic(space, out);
    ok = section(out, "solidness", solidness_check(space, 4)) && ok;
    return ok;
}

bool verify_lexseries(const LexSeriesInstance &inst, std::ostream &out)
{
    const LexSeriesSpace space(inst.cap_m, inst.cap_n);
    out << "lex series space " << space.precision() << ", " << space.sample_points().size() << " sample points\n";
    return verify_generic(space, out);
}

void write_document(const TraceDocument &doc, const std::optional<std::filesystem::path> &path, std::ostream &out)
{
    if (!path) {
        out << doc.emit();
        return;
    }
    std::ofstream file(*path);
    if (!file) {
        throw ParseError("cannot write trace to '" + path->string() + "'");
    }
    file << doc.emit();
    out << "trace written to " << path->string() << '\n';
}

std::string describe(const std::optional<std::string> &precision, std::size_t stage, std::size_t step,
                     OutcomeKind kind)
{
    std::string s = "outcome ";
    s += to_string(kind);
    if (kind == OutcomeKind::reached) {
        s += " at stage " + std::to_string(stage) + " step " + std::to_string(step);
    }
    if (precision) {
        s += " (" + *precision + ")";
    }
    return s;
}

// Maps library errors onto the exit-code contract.
template <typename F>
int guarded(std::ostream &err, F &&body)
{
    try {
        return body();
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const HenselConditionFailed &e) {
        err << "Hensel condition failed: " << e.what() << '\n';
        return exit_failure;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace

int cmd_verify(const std::filesystem::path &file, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        const auto inst = load_instance_file(file);
        const bool ok = std::visit(
            [&](const auto &i) {
                using T = std::decay_t<decltype(i)>;
                if constexpr (std::is_same_v<T, FiniteInstance>) {
                    return verify_finite(i, out);
                } else if constexpr (std::is_same_v<T, PadicInstance>) {
                    return verify_padic(i, out);
                } else if constexpr (std::is_same_v<T, SeriesInstance>) {
                    return verify_series(i, out);
                } else {
                    return verify_lexseries(i, out);
                }
            },
            inst);
        out << (ok ? "verified\n" : "verification failed\n");
        return ok ? exit_ok : exit_failure;
    });
}

int cmd_hensel(const HenselOptions &opts, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        HenselProblem prob;
        prob.p = opts.p;
        prob.precision = opts.precision;
        prob.f = Polynomial::parse(opts.poly, {"x"});
        prob.seed = opts.seed;
        const auto result = hensel_solve(prob, DriverConfig{opts.steps, 1});
        out << "root " << result.root.residue() << '\n';
        const auto &o = result.outcome;
        out << describe(o.precision, o.stage_index, o.step_index, o.kind) << '\n';
        if (!result.contraction.ok()) {
            section(out, "strict contraction", result.contraction);
        }
        write_document(make_trace_document(prob, result.outcome), opts.trace_out, out);
        return result.contraction.ok() ? exit_ok : exit_failure;
    });
}

int cmd_ode(const OdeOptions &opts, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        OdeProblem prob;
        prob.rhs = Polynomial::parse(opts.rhs, series_variables());
        prob.y0 = parse_rational(opts.y0);
        prob.cap = opts.cap;
        const auto result = picard_solve(prob);
        out << "coefficients";
        const auto &c = result.solution.coefficients();
        for (std::size_t k = 0; k < c.size(); ++k) {
            out << (k ? ", " : " ") << to_short_string(c[k]);
        }
        out << '\n';
        const auto &o = result.outcome;
        out << describe(o.precision, o.stage_index, o.step_index, o.kind) << '\n';
        write_document(make_trace_document(prob, result.outcome), opts.trace_out, out);
        return o.kind == OutcomeKind::inconclusive ? exit_failure : exit_ok;
    });
}

int cmd_demo_finite(const DemoFiniteOptions &opts, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        bool ok = true;
        for (const auto &[label, order] :
             {std::pair{"chain 0 < 1 < 2", FinitePoset::chain(3)}, std::pair{"diamond 0 < a, b < 1", FinitePoset::diamond()}}) {
            const auto summary = run_finite_suite(opts.max_points, order);
            out << label << ": " << summary.spaces << " spaces, " << summary.maps << " contracting maps, "
                << summary.runs << " runs\n";
            ok = section(out, "  fixed point suite", summary.report) && ok;
        }
        return ok ? exit_ok : exit_failure;
    });
}

int cmd_validate(const std::filesystem::path &trace, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        std::ifstream in(trace);
        if (!in) {
            throw ParseError("cannot open trace '" + trace.string() + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const auto doc = TraceDocument::parse(buf.str());
        bool ok = section(out, "trace validation", revalidate(doc));
        const bool identical = reencode(doc).emit() == doc.emit();
        out << "re-encoding: " << (identical ? "identical" : "differs") << '\n';
        ok = ok && identical;
        return ok ? exit_ok : exit_failure;
    });
}

} // namespace ultrafix::cli
