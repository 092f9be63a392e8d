#ifndef ULTRAFIX_IO_TRACE_DOCUMENT_HPP
#define ULTRAFIX_IO_TRACE_DOCUMENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <ultrafix/apps/hensel.hpp>
#include <ultrafix/apps/picard.hpp>
#include <ultrafix/driver.hpp>
#include <ultrafix/instances/finite_space.hpp>
#include <ultrafix/instances/lex_series.hpp>
#include <ultrafix/instances/series.hpp>
#include <ultrafix/report.hpp>

// JSON trace documents ("ultrafix-trace/1"): instance descriptor, map
// descriptor, stages with iterates, sigma chain and balls, the outcome and
// the validation report. Radii carry their encoding tag (natexp:k,
// poset:name, lexpair:m,n) and rationals are always "n/d" strings, so a
// document is interpretable without the generating instance.

namespace ultrafix
{

class TraceDocument
{
public:
    explicit TraceDocument(nlohmann::ordered_json doc) : m_doc(std::move(doc)) {}

    // Throws ParseError on malformed JSON or a wrong format tag.
    static TraceDocument parse(const std::string &text);
    // Two-space indented JSON with a trailing newline.
    std::string emit() const;

    const nlohmann::ordered_json &json() const noexcept
    {
        return m_doc;
    }

private:
    nlohmann::ordered_json m_doc;
};

struct AffineSeriesSpec {
    SeriesQ b;
    SeriesQ a;
};

TraceDocument make_trace_document(const FiniteSpace &space, const std::vector<std::size_t> &images,
                                  const Outcome<std::size_t, PosetRadius> &outcome,
                                  const std::optional<std::string> &oracle = std::nullopt);
TraceDocument make_trace_document(const HenselProblem &prob, const Outcome<PadicInt, NatExp> &outcome);
TraceDocument make_trace_document(const OdeProblem &prob, const Outcome<SeriesQ, NatExp> &outcome);
TraceDocument make_trace_document(const AffineSeriesSpec &spec, const Outcome<SeriesQ, NatExp> &outcome,
                                  const std::optional<std::string> &oracle = std::nullopt);
TraceDocument make_trace_document(const LexAffine &spec, const Outcome<LexSeriesQ, LexPair> &outcome,
                                  const std::optional<std::string> &oracle = std::nullopt);

// Rebuilds space, map, trace and outcome from the document and validates
// them afresh. Throws ParseError on malformed content.
Report revalidate(const TraceDocument &doc);

// Decodes every field into library objects and encodes them again.
TraceDocument reencode(const TraceDocument &doc);

} // namespace ultrafix

#endif
