// ultrafix: verify instance files, lift Hensel roots, solve polynomial ODEs
// by Picard iteration, and run the exhaustive finite fixed point suite.

#include <iostream>

#include <CLI11.hpp>

#include <ultrafix/cli/commands.hpp>

int main(int argc, char **argv)
{
    namespace cli = ultrafix::cli;

    CLI::App app{"Fixed points of strictly contracting maps on ultrametric spaces"};
    app.require_subcommand(1);

    std::string instance;
    auto *verify = app.add_subcommand("verify", "Check order axioms, space axioms and the ball lemma");
    verify->add_option("file", instance, "Instance file")->required();

    cli::HenselOptions hensel;
    std::string hensel_trace;
    auto *hen = app.add_subcommand("hensel", "Lift a simple root mod p to a root mod p^N");
    hen->add_option("--p", hensel.p, "Prime")->required();
    hen->add_option("--N", hensel.precision, "Precision exponent")->capture_default_str();
    hen->add_option("--poly", hensel.poly, "Integer polynomial in x")->required();
    hen->add_option("--seed", hensel.seed, "Root mod p")->required();
    hen->add_option("--steps", hensel.steps, "Step budget")->capture_default_str();
    hen->add_option("--trace-out", hensel_trace, "Write the trace document here");

    cli::OdeOptions ode;
    std::string ode_trace;
    auto *od = app.add_subcommand("ode", "Solve y' = f(t, y) mod t^cap by Picard iteration");
    od->add_option("--rhs", ode.rhs, "Polynomial in t and y")->required();
    od->add_option("--y0", ode.y0, "Initial value (integer or n/d)")->capture_default_str();
    od->add_option("--cap", ode.cap, "Series cap")->capture_default_str();
    od->add_option("--trace-out", ode_trace, "Write the trace document here");

    cli::DemoFiniteOptions demo;
    auto *dem = app.add_subcommand("demo-finite", "Exhaustive fixed point suite on small finite spaces");
    dem->add_option("--max-points", demo.max_points, "Largest space size (at most 6)")->capture_default_str();

    std::string trace;
    auto *val = app.add_subcommand("validate", "Re-validate a trace document");
    val->add_option("file", trace, "Trace document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? cli::exit_ok : cli::exit_usage;
    }

    if (!hensel_trace.empty()) {
        hensel.trace_out = hensel_trace;
    }
    if (!ode_trace.empty()) {
        ode.trace_out = ode_trace;
    }
    if (verify->parsed()) {
        return cli::cmd_verify(instance, std::cout, std::cerr);
    }
    if (hen->parsed()) {
        return cli::cmd_hensel(hensel, std::cout, std::cerr);
    }
    if (od->parsed()) {
        return cli::cmd_ode(ode, std::cout, std::cerr);
    }
    if (dem->parsed()) {
        return cli::cmd_demo_finite(demo, std::cout, std::cerr);
    }
    return cli::cmd_validate(trace, std::cout, std::cerr);
}
