#include <ultrafix/io/trace_document.hpp>

#include <functional>

#include <ultrafix/errors.hpp>

namespace ultrafix
{

using nlohmann::ordered_json;

namespace
{

constexpr const char *format_tag = "ultrafix-trace/1";

[[noreturn]] void bad(const std::string &what)
{
    throw ParseError("trace document: " + what);
}

const ordered_json &field(const ordered_json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::string text(const ordered_json &j, const char *key)
{
    const auto &v = field(j, key);
    if (!v.is_string()) {
        bad(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

std::uint64_t unsigned_number(const ordered_json &j, const char *key)
{
    const auto &v = field(j, key);
    if (!v.is_number_unsigned()) {
        bad(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

const ordered_json &array(const ordered_json &j, const char *key)
{
    const auto &v = field(j, key);
    if (!v.is_array()) {
        bad(std::string("field '") + key + "' must be an array");
    }
    return v;
}

std::optional<std::string> optional_text(const ordered_json &j, const char *key)
{
    const auto &v = field(j, key);
    if (v.is_null()) {
        return std::nullopt;
    }
    if (!v.is_string()) {
        bad(std::string("field '") + key + "' must be a string or null");
    }
    return v.get<std::string>();
}

ordered_json optional_json(const std::optional<std::string> &s)
{
    return s ? ordered_json(*s) : ordered_json(nullptr);
}

Rational rational_of(const ordered_json &j)
{
    if (!j.is_string()) {
        bad("rationals must be \"n/d\" strings");
    }
    return parse_rational(j.get<std::string>());
}

ordered_json encode_rationals(const std::vector<Rational> &v)
{
    auto out = ordered_json::array();
    for (const auto &q : v) {
        out.push_back(to_fraction_string(q));
    }
    return out;
}

// Point codecs, one pair per space kind.

ordered_json encode_point(const FiniteSpace &space, std::size_t x)
{
    return space.format_point(x);
}

std::size_t decode_point(const FiniteSpace &space, const ordered_json &j)
{
    if (!j.is_string()) {
        bad("finite points are names");
    }
    return space.point(j.get<std::string>());
}

ordered_json encode_point(const PadicSpace &, const PadicInt &x)
{
    return std::to_string(x.residue());
}

PadicInt decode_point(const PadicSpace &space, const ordered_json &j)
{
    if (!j.is_string()) {
        bad("p-adic points are decimal residue strings");
    }
    return space.parse_point(j.get<std::string>());
}

ordered_json encode_point(const SeriesSpace &, const SeriesQ &x)
{
    return encode_rationals(x.coefficients());
}

SeriesQ decode_point(const SeriesSpace &space, const ordered_json &j)
{
    if (!j.is_array() || j.size() != space.cap()) {
        bad("series points are arrays of cap coefficients");
    }
    std::vector<Rational> c;
    for (const auto &v : j) {
        c.push_back(rational_of(v));
    }
    return SeriesQ(space.cap(), std::move(c));
}

ordered_json encode_point(const LexSeriesSpace &, const LexSeriesQ &x)
{
    auto out = ordered_json::array();
    for (std::size_t m = 0; m < x.cap_m(); ++m) {
        auto row = ordered_json::array();
        for (std::size_t n = 0; n < x.cap_n(); ++n) {
            row.push_back(to_fraction_string(x.at(m, n)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

LexSeriesQ decode_point(const LexSeriesSpace &space, const ordered_json &j)
{
    if (!j.is_array() || j.size() != space.cap_m()) {
        bad("lex series points are cap_m rows of cap_n coefficients");
    }
    auto x = space.zero_point();
    for (std::size_t m = 0; m < space.cap_m(); ++m) {
        const auto &row = j[m];
        if (!row.is_array() || row.size() != space.cap_n()) {
            bad("lex series points are cap_m rows of cap_n coefficients");
        }
        for (std::size_t n = 0; n < space.cap_n(); ++n) {
            x.set(m, n, rational_of(row[n]));
        }
    }
    return x;
}

template <typename S>
radius_of<S> decode_radius(const S &space, const ordered_json &j)
{
    if (!j.is_string()) {
        bad("radii are tagged strings");
    }
    return space.order().parse(j.get<std::string>());
}

// Instance descriptors.

ordered_json encode_instance(const FiniteSpace &space)
{
    const auto &order = space.order();
    auto radii = ordered_json::array();
    for (const auto &n : order.names()) {
        radii.push_back(n);
    }
    auto leq = ordered_json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (i != k && order.table_leq(i, k)) {
                leq.push_back(ordered_json::array({order.names()[i], order.names()[k]}));
            }
        }
    }
    auto points = ordered_json::array();
    auto distances = ordered_json::array();
    for (std::size_t x = 0; x < space.size(); ++x) {
        points.push_back(space.names()[x]);
        auto row = ordered_json::array();
        for (std::size_t y = 0; y < space.size(); ++y) {
            row.push_back(order.format(space.distance(x, y)));
        }
        distances.push_back(std::move(row));
    }
    ordered_json j;
    j["kind"] = "finite";
    j["radii"] = std::move(radii);
    j["zero"] = order.name(order.zero());
    j["less"] = std::move(leq);
    j["points"] = std::move(points);
    j["distances"] = std::move(distances);
    return j;
}

std::vector<std::string> string_list(const ordered_json &j)
{
    std::vector<std::string> out;
    for (const auto &v : j) {
        if (!v.is_string()) {
            bad("expected a list of strings");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

FiniteSpace decode_finite_instance(const ordered_json &j)
{
    const auto radii = string_list(array(j, "radii"));
    std::vector<std::pair<std::string, std::string>> less;
    for (const auto &pair : array(j, "less")) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
            bad("'less' entries are pairs of radius names");
        }
        less.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    auto order = [&] {
        try {
            return FinitePoset::from_pairs(radii, text(j, "zero"), less);
        } catch (const PreconditionError &e) {
            bad(e.what());
        }
    }();
    auto points = string_list(array(j, "points"));
    const auto &rows = array(j, "distances");
    if (rows.size() != points.size()) {
        bad("one distance row per point expected");
    }
    FiniteSpace::Table table;
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != points.size()) {
            bad("distance rows must have one entry per point");
        }
        std::vector<PosetRadius> r;
        for (const auto &v : row) {
            if (!v.is_string()) {
                bad("radii are tagged strings");
            }
            r.push_back(order.parse(v.get<std::string>()));
        }
        table.push_back(std::move(r));
    }
    try {
        return FiniteSpace::unchecked(std::move(order), std::move(points), std::move(table));
    } catch (const PreconditionError &e) {
        bad(e.what());
    }
}

ordered_json encode_instance(const PadicSpace &space)
{
    ordered_json j;
    j["kind"] = "padic";
    j["p"] = space.prime();
    j["N"] = space.precision_digits();
    j["ball"] = space.ball() ? ordered_json(*space.ball()) : ordered_json(nullptr);
    return j;
}

ordered_json encode_instance(const SeriesSpace &space)
{
    ordered_json j;
    j["kind"] = "series";
    j["cap"] = space.cap();
    return j;
}

ordered_json encode_instance(const LexSeriesSpace &space)
{
    ordered_json j;
    j["kind"] = "lexseries";
    j["cap_m"] = space.cap_m();
    j["cap_n"] = space.cap_n();
    return j;
}

// Trace and outcome.

template <typename S>
ordered_json encode_trace(const S &space, const Trace<point_of<S>, radius_of<S>> &trace)
{
    const auto &order = space.order();
    auto stages = ordered_json::array();
    for (const auto &stage : trace.stages) {
        auto iterates = ordered_json::array();
        for (const auto &x : stage.iterates) {
            iterates.push_back(encode_point(space, x));
        }
        auto sigma = ordered_json::array();
        for (const auto &r : stage.sigma) {
            sigma.push_back(order.format(r));
        }
        auto balls = ordered_json::array();
        for (const auto &b : stage.balls) {
            ordered_json ball;
            ball["center"] = encode_point(space, b.center);
            ball["radius"] = order.format(b.radius);
            balls.push_back(std::move(ball));
        }
        ordered_json s;
        s["entry"] = to_string(stage.entry);
        s["iterates"] = std::move(iterates);
        s["sigma"] = std::move(sigma);
        s["balls"] = std::move(balls);
        s["reached"] = stage.reached;
        stages.push_back(std::move(s));
    }
    return stages;
}

StageEntry decode_entry(const std::string &s)
{
    if (s == to_string(StageEntry::start)) {
        return StageEntry::start;
    }
    if (s == to_string(StageEntry::limit_oracle)) {
        return StageEntry::limit_oracle;
    }
    bad("unknown stage entry '" + s + "'");
}

template <typename S>
Trace<point_of<S>, radius_of<S>> decode_trace(const S &space, const ordered_json &stages)
{
    if (!stages.is_array()) {
        bad("'stages' must be an array");
    }
    Trace<point_of<S>, radius_of<S>> trace;
    for (const auto &s : stages) {
        StageSegment<point_of<S>, radius_of<S>> seg;
        seg.entry = decode_entry(text(s, "entry"));
        for (const auto &x : array(s, "iterates")) {
            seg.iterates.push_back(decode_point(space, x));
        }
        for (const auto &r : array(s, "sigma")) {
            seg.sigma.push_back(decode_radius(space, r));
        }
        for (const auto &b : array(s, "balls")) {
            seg.balls.push_back({decode_point(space, field(b, "center")), decode_radius(space, field(b, "radius"))});
        }
        const auto &reached = field(s, "reached");
        if (!reached.is_boolean()) {
            bad("'reached' must be a boolean");
        }
        seg.reached = reached.get<bool>();
        trace.stages.push_back(std::move(seg));
    }
    return trace;
}

template <typename S>
ordered_json encode_outcome(const S &space, const Outcome<point_of<S>, radius_of<S>> &outcome)
{
    ordered_json j;
    j["kind"] = to_string(outcome.kind);
    j["point"] = outcome.point ? encode_point(space, *outcome.point) : ordered_json(nullptr);
    j["stage_index"] = outcome.stage_index;
    j["step_index"] = outcome.step_index;
    j["precision"] = optional_json(outcome.precision);
    return j;
}

OutcomeKind decode_kind(const std::string &s)
{
    for (auto k : {OutcomeKind::reached, OutcomeKind::approximated, OutcomeKind::inconclusive}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    bad("unknown outcome kind '" + s + "'");
}

template <typename S>
Outcome<point_of<S>, radius_of<S>> decode_outcome(const S &space, const ordered_json &j,
                                                  Trace<point_of<S>, radius_of<S>> trace)
{
    Outcome<point_of<S>, radius_of<S>> out;
    out.kind = decode_kind(text(j, "kind"));
    if (const auto &p = field(j, "point"); !p.is_null()) {
        out.point = decode_point(space, p);
    }
    out.stage_index = static_cast<std::size_t>(unsigned_number(j, "stage_index"));
    out.step_index = static_cast<std::size_t>(unsigned_number(j, "step_index"));
    out.precision = optional_text(j, "precision");
    out.trace = std::move(trace);
    return out;
}

ordered_json encode_report(const Report &report)
{
    auto items = ordered_json::array();
    for (const auto &v : report.items()) {
        ordered_json item;
        item["rule"] = v.rule;
        item["detail"] = v.detail;
        items.push_back(std::move(item));
    }
    ordered_json j;
    j["ok"] = report.ok();
    j["violations"] = std::move(items);
    return j;
}

Report decode_report(const ordered_json &j)
{
    Report report;
    for (const auto &v : array(j, "violations")) {
        report.add(text(v, "rule"), text(v, "detail"));
    }
    const auto &ok = field(j, "ok");
    if (!ok.is_boolean() || ok.get<bool>() != report.ok()) {
        bad("validation 'ok' flag disagrees with its violations");
    }
    return report;
}

template <typename S>
TraceDocument assemble(const S &space, ordered_json map, const Outcome<point_of<S>, radius_of<S>> &outcome,
                       const std::optional<std::string> &oracle, const Report &validation)
{
    ordered_json j;
    j["format"] = format_tag;
    j["instance"] = encode_instance(space);
    j["map"] = std::move(map);
    j["oracle"] = optional_json(oracle);
    j["stages"] = encode_trace(space, outcome.trace);
    j["outcome"] = encode_outcome(space, outcome);
    j["validation"] = encode_report(validation);
    return TraceDocument(std::move(j));
}

// Map descriptors.

ordered_json table_descriptor(const FiniteSpace &space, const std::vector<std::size_t> &images)
{
    auto names = ordered_json::array();
    for (auto v : images) {
        names.push_back(space.format_point(v));
    }
    ordered_json j;
    j["kind"] = "table";
    j["images"] = std::move(names);
    return j;
}

ordered_json newton_descriptor(const HenselProblem &prob)
{
    ordered_json j;
    j["kind"] = "newton";
    j["poly"] = prob.f.to_string();
    j["seed"] = prob.seed;
    return j;
}

ordered_json picard_descriptor(const OdeProblem &prob)
{
    ordered_json j;
    j["kind"] = "picard";
    j["rhs"] = prob.rhs.to_string();
    j["y0"] = to_fraction_string(prob.y0);
    return j;
}

ordered_json affine_descriptor(const AffineSeriesSpec &spec)
{
    ordered_json j;
    j["kind"] = "affine";
    j["b"] = encode_rationals(spec.b.coefficients());
    j["a"] = encode_rationals(spec.a.coefficients());
    return j;
}

ordered_json lexaffine_descriptor(const LexAffine &f)
{
    const LexSeriesSpace space(f.b.cap_m(), f.b.cap_n());
    ordered_json j;
    j["kind"] = "lexaffine";
    j["b"] = encode_point(space, f.b);
    j["c"] = to_fraction_string(f.c);
    j["i"] = f.i;
    j["j"] = f.j;
    return j;
}

Polynomial parse_poly(const std::string &s, std::vector<std::string> vars)
{
    try {
        return Polynomial::parse(s, std::move(vars));
    } catch (const ParseError &e) {
        bad(std::string("polynomial: ") + e.what());
    }
}

// A decoded document, ready for validation or re-encoding.
struct Decoded {
    std::function<Report()> validate;
    std::function<TraceDocument()> encode;
};

template <typename S>
Decoded finish(S space, ContractingMap<point_of<S>> map, ordered_json descriptor, const ordered_json &doc,
               Report extra = {})
{
    auto trace = decode_trace(space, field(doc, "stages"));
    auto outcome = decode_outcome(space, field(doc, "outcome"), std::move(trace));
    auto oracle = optional_text(doc, "oracle");
    auto recorded = decode_report(field(doc, "validation"));
    Decoded d;
    d.validate = [space, map, outcome, extra]() {
        auto report = extra;
        try {
            report.append(validate_outcome(space, map, outcome));
        } catch (const Error &e) {
            report.add("evaluation", e.what());
        }
        return report;
    };
    d.encode = [space, descriptor, outcome, oracle, recorded]() {
        return assemble(space, descriptor, outcome, oracle, recorded);
    };
    return d;
}

Decoded decode(const TraceDocument &doc)
{
    const auto &j = doc.json();
    const auto &inst = field(j, "instance");
    const auto &map = field(j, "map");
    const auto ikind = text(inst, "kind");
    const auto mkind = text(map, "kind");

    if (ikind == "finite" && mkind == "table") {
        auto space = decode_finite_instance(inst);
        std::vector<std::size_t> images;
        for (const auto &v : array(map, "images")) {
            images.push_back(decode_point(space, v));
        }
        if (images.size() != space.size()) {
            bad("map table size differs from the space size");
        }
        auto descriptor = table_descriptor(space, images);
        auto m = finite_map(space, images);
        auto axioms = check_space_axioms(space, space.sample_radii());
        return finish(std::move(space), std::move(m), std::move(descriptor), j, std::move(axioms));
    }
    if (ikind == "padic" && mkind == "newton") {
        HenselProblem prob;
        prob.p = unsigned_number(inst, "p");
        prob.precision = static_cast<unsigned>(unsigned_number(inst, "N"));
        prob.f = parse_poly(text(map, "poly"), {"x"});
        const auto &seed = field(map, "seed");
        if (!seed.is_number_integer()) {
            bad("'seed' must be an integer");
        }
        prob.seed = seed.get<std::int64_t>();
        auto space = [&] {
            try {
                return hensel_space(prob);
            } catch (const PreconditionError &e) {
                bad(e.what());
            }
        }();
        const auto &ball = field(inst, "ball");
        if (ball.is_null() || !ball.is_number_unsigned() || ball.get<std::uint64_t>() != *space.ball()) {
            bad("p-adic ball does not match the Newton seed");
        }
        auto m = newton_map(prob);
        return finish(std::move(space), std::move(m), newton_descriptor(prob), j);
    }
    if (ikind == "series" && (mkind == "picard" || mkind == "affine")) {
        const auto cap = static_cast<std::size_t>(unsigned_number(inst, "cap"));
        if (cap < 1) {
            bad("series cap must be at least 1");
        }
        SeriesSpace space(cap);
        if (mkind == "picard") {
            OdeProblem prob;
            prob.rhs = parse_poly(text(map, "rhs"), series_variables());
            prob.y0 = rational_of(field(map, "y0"));
            prob.cap = cap;
            return finish(std::move(space), picard_operator(prob), picard_descriptor(prob), j);
        }
        AffineSeriesSpec spec{decode_point(space, field(map, "b")), decode_point(space, field(map, "a"))};
        if (spec.a.order() < 1) {
            bad("affine multiplier must have order at least 1");
        }
        auto m = affine_series_map(spec.b, spec.a);
        return finish(std::move(space), std::move(m), affine_descriptor(spec), j);
    }
    if (ikind == "lexseries" && mkind == "lexaffine") {
        const auto cap_m = static_cast<std::size_t>(unsigned_number(inst, "cap_m"));
        const auto cap_n = static_cast<std::size_t>(unsigned_number(inst, "cap_n"));
        if (cap_m < 1 || cap_n < 1) {
            bad("lex series caps must be at least 1");
        }
        LexSeriesSpace space(cap_m, cap_n);
        LexAffine f{decode_point(space, field(map, "b")), rational_of(field(map, "c")),
                    static_cast<std::size_t>(unsigned_number(map, "i")),
                    static_cast<std::size_t>(unsigned_number(map, "j"))};
        if (f.i == 0 && f.j == 0) {
            bad("lex affine shift must be nonzero");
        }
        return finish(std::move(space), lex_affine_map(f), lexaffine_descriptor(f), j);
    }
    bad("unsupported instance/map combination '" + ikind + "'/'" + mkind + "'");
}

} // namespace

TraceDocument TraceDocument::parse(const std::string &text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &e) {
        throw ParseError(std::string("trace document is not JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("format") || j["format"] != format_tag) {
        bad(std::string("expected format '") + format_tag + "'");
    }
    return TraceDocument(std::move(j));
}

std::string TraceDocument::emit() const
{
    return m_doc.dump(2) + "\n";
}

TraceDocument make_trace_document(const FiniteSpace &space, const std::vector<std::size_t> &images,
                                  const Outcome<std::size_t, PosetRadius> &outcome,
                                  const std::optional<std::string> &oracle)
{
    const auto map = finite_map(space, images);
    return assemble(space, table_descriptor(space, images), outcome, oracle, validate_outcome(space, map, outcome));
}

TraceDocument make_trace_document(const HenselProblem &prob, const Outcome<PadicInt, NatExp> &outcome)
{
    const auto space = hensel_space(prob);
    const auto map = newton_map(prob);
    return assemble(space, newton_descriptor(prob), outcome, std::nullopt, validate_outcome(space, map, outcome));
}

TraceDocument make_trace_document(const OdeProblem &prob, const Outcome<SeriesQ, NatExp> &outcome)
{
    const SeriesSpace space(prob.cap);
    const auto map = picard_operator(prob);
    return assemble(space, picard_descriptor(prob), outcome, std::nullopt, validate_outcome(space, map, outcome));
}

TraceDocument make_trace_document(const AffineSeriesSpec &spec, const Outcome<SeriesQ, NatExp> &outcome,
                                  const std::optional<std::string> &oracle)
{
    const SeriesSpace space(spec.b.cap());
    const auto map = affine_series_map(spec.b, spec.a);
    return assemble(space, affine_descriptor(spec), outcome, oracle, validate_outcome(space, map, outcome));
}

TraceDocument make_trace_document(const LexAffine &spec, const Outcome<LexSeriesQ, LexPair> &outcome,
                                  const std::optional<std::string> &oracle)
{
    const LexSeriesSpace space(spec.b.cap_m(), spec.b.cap_n());
    const auto map = lex_affine_map(spec);
    return assemble(space, lexaffine_descriptor(spec), outcome, oracle, validate_outcome(space, map, outcome));
}

Report revalidate(const TraceDocument &doc)
{
    return decode(doc).validate();
}

TraceDocument reencode(const TraceDocument &doc)
{
    return decode(doc).encode();
}

} // namespace ultrafix
