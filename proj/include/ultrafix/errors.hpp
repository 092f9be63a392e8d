#ifndef ULTRAFIX_ERRORS_HPP
#define ULTRAFIX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ultrafix
{

// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define ULTRAFIX_DECLARE_ERROR(name)                                                                                   \
    class name : public Error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        using Error::Error;                                                                                            \
    }

ULTRAFIX_DECLARE_ERROR(MixedOrders);
ULTRAFIX_DECLARE_ERROR(EqualPoints);
ULTRAFIX_DECLARE_ERROR(ContractionViolation);
ULTRAFIX_DECLARE_ERROR(OracleMembershipViolation);
ULTRAFIX_DECLARE_ERROR(AccessorViolation);
ULTRAFIX_DECLARE_ERROR(NotCauchy);
ULTRAFIX_DECLARE_ERROR(NonUnit);
ULTRAFIX_DECLARE_ERROR(MixedPrecision);
ULTRAFIX_DECLARE_ERROR(CapMismatch);
ULTRAFIX_DECLARE_ERROR(HenselConditionFailed);
ULTRAFIX_DECLARE_ERROR(AxiomViolation);
ULTRAFIX_DECLARE_ERROR(PreconditionError);

#undef ULTRAFIX_DECLARE_ERROR

// Malformed text input. Line and column are 1-based; zero means unknown.
class ParseError : public Error
{
public:
    ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), m_line(line), m_column(column)
    {
    }

    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_column;
    }

private:
    static std::string format(const std::string &what, std::size_t line, std::size_t column)
    {
        if (line == 0) {
            return what;
        }
        std::string out = "line " + std::to_string(line);
        if (column != 0) {
            out += ", column " + std::to_string(column);
        }
        return out + ": " + what;
    }

    std::size_t m_line;
    std::size_t m_column;
};

} // namespace ultrafix

#endif
