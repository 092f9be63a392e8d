#include <ultrafix/driver.hpp>

namespace ultrafix
{

const char *to_string(StageEntry e) noexcept
{
    switch (e) {
        case StageEntry::start:
            return "start";
        case StageEntry::limit_oracle:
            return "limit_oracle";
    }
    return "unknown";
}

const char *to_string(OutcomeKind k) noexcept
{
    switch (k) {
        case OutcomeKind::reached:
            return "reached";
        case OutcomeKind::approximated:
            return "approximated";
        case OutcomeKind::inconclusive:
            return "inconclusive";
    }
    return "unknown";
}

} // namespace ultrafix
