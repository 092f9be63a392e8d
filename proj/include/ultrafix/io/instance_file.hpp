#ifndef ULTRAFIX_IO_INSTANCE_FILE_HPP
#define ULTRAFIX_IO_INSTANCE_FILE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <ultrafix/instances/finite_space.hpp>

// Line-oriented instance files. Blank lines and text after '#' are ignored.
//
//   space finite              space padic      space series   space lexseries
//   radii 0 1 2               p 7              cap 6          cap_m 3
//   zero 0                    N 4                             cap_n 4
//   less 0 1                  ball 3  (opt.)
//   less 1 2
//   points a b c
//   row a 0 2 2
//   row b 2 0 1
//   row c 2 1 0
//   map b c c   (optional images, in point order)
//
// `less x y` pairs are closed transitively. Rows may come in any order but
// every point needs exactly one.

namespace ultrafix
{

struct FiniteInstance {
    // Loaded without the axiom check; verify reports violations.
    FiniteSpace space;
    std::optional<std::vector<std::size_t>> map;
};

struct PadicInstance {
    std::uint64_t p = 0;
    unsigned precision = 0;
    std::optional<std::uint64_t> ball;
};

struct SeriesInstance {
    std::size_t cap = 0;
};

struct LexSeriesInstance {
    std::size_t cap_m = 0;
    std::size_t cap_n = 0;
};

using Instance = std::variant<FiniteInstance, PadicInstance, SeriesInstance, LexSeriesInstance>;

// Throws ParseError with the offending line and column.
Instance parse_instance(const std::string &text);
Instance load_instance_file(const std::filesystem::path &path);

std::string to_instance_text(const FiniteInstance &inst);

} // namespace ultrafix

#endif
