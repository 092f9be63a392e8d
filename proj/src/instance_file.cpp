#include <ultrafix/io/instance_file.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <ultrafix/errors.hpp>
#include <ultrafix/instances/padic.hpp>

namespace ultrafix
{

namespace
{

struct Token {
    std::string text;
    std::size_t column = 0;
};

struct Line {
    std::size_t number = 0;
    std::vector<Token> tokens;

    [[noreturn]] void fail(const std::string &what, std::size_t token = 0) const
    {
        const auto column = token < tokens.size() ? tokens[token].column : 1;
        throw ParseError(what, number, column);
    }

    const std::string &key() const
    {
        return tokens.front().text;
    }
};

std::vector<Line> tokenize(const std::string &text)
{
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            const auto begin = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
            }
            line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

std::uint64_t number_at(const Line &line, std::size_t token)
{
    if (token >= line.tokens.size()) {
        line.fail("missing value for '" + line.key() + "'", line.tokens.size() - 1);
    }
    const auto &t = line.tokens[token].text;
    std::uint64_t value = 0;
    const auto *last = t.data() + t.size();
    const auto res = std::from_chars(t.data(), last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        line.fail("expected a non-negative integer, got '" + t + "'", token);
    }
    return value;
}

// Key -> line, each key at most once, only from `allowed`.
std::map<std::string, const Line *> index_keys(const std::vector<Line> &lines, const std::set<std::string> &allowed,
                                               const std::set<std::string> &repeatable)
{
    std::map<std::string, const Line *> out;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto &line = lines[k];
        if (!allowed.count(line.key())) {
            line.fail("unknown key '" + line.key() + "'");
        }
        if (!repeatable.count(line.key()) && !out.emplace(line.key(), &line).second) {
            line.fail("duplicate key '" + line.key() + "'");
        }
    }
    return out;
}

const Line &require(const std::map<std::string, const Line *> &keys, const std::string &key,
                    const std::vector<Line> &lines)
{
    const auto it = keys.find(key);
    if (it == keys.end()) {
        throw ParseError("missing '" + key + "' line", lines.back().number + 1, 1);
    }
    return *it->second;
}

std::uint64_t single_number(const Line &line)
{
    if (line.tokens.size() != 2) {
        line.fail("'" + line.key() + "' takes exactly one value");
    }
    return number_at(line, 1);
}

FiniteInstance parse_finite(const std::vector<Line> &lines)
{
    const auto keys = index_keys(lines, {"radii", "zero", "less", "points", "row", "map"}, {"less", "row"});
    const auto &radii_line = require(keys, "radii", lines);
    const auto &zero_line = require(keys, "zero", lines);
    const auto &points_line = require(keys, "points", lines);

    std::vector<std::string> radii;
    for (std::size_t i = 1; i < radii_line.tokens.size(); ++i) {
        for (const auto &r : radii) {
            if (r == radii_line.tokens[i].text) {
                radii_line.fail("duplicate radius '" + r + "'", i);
            }
        }
        radii.push_back(radii_line.tokens[i].text);
    }
    if (radii.empty()) {
        radii_line.fail("no radii declared");
    }
    auto known_radius = [&](const Line &line, std::size_t token) {
        const auto &t = line.tokens.at(token).text;
        for (const auto &r : radii) {
            if (r == t) {
                return;
            }
        }
        line.fail("unknown radius '" + t + "'", token);
    };
    if (zero_line.tokens.size() != 2) {
        zero_line.fail("'zero' takes exactly one radius");
    }
    known_radius(zero_line, 1);

    std::vector<std::pair<std::string, std::string>> less;
    for (const auto &line : lines) {
        if (line.key() != "less") {
            continue;
        }
        if (line.tokens.size() != 3) {
            line.fail("'less' takes two radii");
        }
        known_radius(line, 1);
        known_radius(line, 2);
        less.emplace_back(line.tokens[1].text, line.tokens[2].text);
    }
    auto order = FinitePoset::from_pairs(radii, zero_line.tokens[1].text, less);

    std::vector<std::string> points;
    for (std::size_t i = 1; i < points_line.tokens.size(); ++i) {
        for (const auto &p : points) {
            if (p == points_line.tokens[i].text) {
                points_line.fail("duplicate point '" + p + "'", i);
            }
        }
        points.push_back(points_line.tokens[i].text);
    }
    if (points.empty()) {
        points_line.fail("no points declared");
    }
    auto point_index = [&](const Line &line, std::size_t token) {
        const auto &t = line.tokens.at(token).text;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] == t) {
                return i;
            }
        }
        line.fail("unknown point '" + t + "'", token);
    };

    FiniteSpace::Table table(points.size());
    for (const auto &line : lines) {
        if (line.key() != "row") {
            continue;
        }
        if (line.tokens.size() != points.size() + 2) {
            line.fail("'row' takes a point and " + std::to_string(points.size()) + " radii");
        }
        const auto p = point_index(line, 1);
        if (!table[p].empty()) {
            line.fail("second row for point '" + points[p] + "'", 1);
        }
        for (std::size_t j = 0; j < points.size(); ++j) {
            known_radius(line, j + 2);
            table[p].push_back(order.value(line.tokens[j + 2].text));
        }
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (table[p].empty()) {
            throw ParseError("missing row for point '" + points[p] + "'", lines.back().number + 1, 1);
        }
    }

    std::optional<std::vector<std::size_t>> map;
    if (const auto it = keys.find("map"); it != keys.end()) {
        const auto &line = *it->second;
        if (line.tokens.size() != points.size() + 1) {
            line.fail("'map' takes one image per point");
        }
        std::vector<std::size_t> images;
        for (std::size_t j = 0; j < points.size(); ++j) {
            images.push_back(point_index(line, j + 1));
        }
        map = std::move(images);
    }
    return {FiniteSpace::unchecked(std::move(order), std::move(points), std::move(table)), std::move(map)};
}

PadicInstance parse_padic(const std::vector<Line> &lines)
{
    const auto keys = index_keys(lines, {"p", "N", "ball"}, {});
    PadicInstance inst;
    const auto &p_line = require(keys, "p", lines);
    inst.p = single_number(p_line);
    const auto &n_line = require(keys, "N", lines);
    const auto n = single_number(n_line);
    if (n < 1 || n > 62) {
        n_line.fail("precision must lie in 1..62", 1);
    }
    inst.precision = static_cast<unsigned>(n);
    if (const auto it = keys.find("ball"); it != keys.end()) {
        inst.ball = single_number(*it->second);
    }
    try {
        PadicSpace(inst.p, inst.precision, inst.ball);
    } catch (const PreconditionError &e) {
        p_line.fail(e.what(), 1);
    }
    return inst;
}

std::size_t positive(const Line &line)
{
    const auto v = single_number(line);
    if (v < 1 || v > 4096) {
        line.fail("'" + line.key() + "' must lie in 1..4096", 1);
    }
    return static_cast<std::size_t>(v);
}

} // namespace

Instance parse_instance(const std::string &text)
{
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError("empty instance file", 1, 1);
    }
    const auto &head = lines.front();
    if (head.key() != "space" || head.tokens.size() != 2) {
        head.fail("first line must be 'space <finite|padic|series|lexseries>'");
    }
    const auto &kind = head.tokens[1].text;
    if (kind == "finite") {
        return parse_finite(lines);
    }
    if (kind == "padic") {
        return parse_padic(lines);
    }
    if (kind == "series") {
        const auto keys = index_keys(lines, {"cap"}, {});
        return SeriesInstance{positive(require(keys, "cap", lines))};
    }
    if (kind == "lexseries") {
        const auto keys = index_keys(lines, {"cap_m", "cap_n"}, {});
        return LexSeriesInstance{positive(require(keys, "cap_m", lines)), positive(require(keys, "cap_n", lines))};
    }
    head.fail("unknown space kind '" + kind + "'", 1);
}

Instance load_instance_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open instance file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string to_instance_text(const FiniteInstance &inst)
{
    const auto &space = inst.space;
    const auto &order = space.order();
    std::ostringstream out;
    out << "space finite\nradii";
    for (const auto &n : order.names()) {
        out << ' ' << n;
    }
    out << "\nzero " << order.name(order.zero()) << '\n';
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < order.size(); ++j) {
            if (i != j && order.table_leq(i, j)) {
                out << "less " << order.names()[i] << ' ' << order.names()[j] << '\n';
            }
        }
    }
    out << "points";
    for (const auto &n : space.names()) {
        out << ' ' << n;
    }
    out << '\n';
    for (std::size_t i = 0; i < space.size(); ++i) {
        out << "row " << space.names()[i];
        for (std::size_t j = 0; j < space.size(); ++j) {
            out << ' ' << order.name(space.distance(i, j));
        }
        out << '\n';
    }
    if (inst.map) {
        out << "map";
        for (auto v : *inst.map) {
            out << ' ' << space.names().at(v);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ultrafix
