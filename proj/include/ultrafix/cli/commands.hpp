#ifndef ULTRAFIX_CLI_COMMANDS_HPP
#define ULTRAFIX_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace ultrafix::cli
{

// Stable exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

// Order axioms, space axioms and the ball lemma on an instance file; for a
// finite file with a map line, also strict contraction and a driver run.
int cmd_verify(const std::filesystem::path &file, std::ostream &out, std::ostream &err);

struct HenselOptions {
    std::uint64_t p = 0;
    unsigned precision = 8;
    std::string poly;
    std::int64_t seed = 0;
    std::size_t steps = 64;
    // Written here instead of stdout when set.
    std::optional<std::filesystem::path> trace_out;
};
int cmd_hensel(const HenselOptions &opts, std::ostream &out, std::ostream &err);

struct OdeOptions {
    std::string rhs;
    std::string y0 = "0";
    std::size_t cap = 8;
    std::optional<std::filesystem::path> trace_out;
};
int cmd_ode(const OdeOptions &opts, std::ostream &out, std::ostream &err);

struct DemoFiniteOptions {
    std::size_t max_points = 4;
};
// The exhaustive fixed point suite over the chain 0 < 1 < 2 and the diamond.
int cmd_demo_finite(const DemoFiniteOptions &opts, std::ostream &out, std::ostream &err);

// Re-validates a trace document and checks its re-encoding is identical.
int cmd_validate(const std::filesystem::path &trace, std::ostream &out, std::ostream &err);

} // namespace ultrafix::cli

#endif
