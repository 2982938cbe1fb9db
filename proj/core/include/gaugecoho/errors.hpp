#ifndef GAUGECOHO_ERRORS_HPP
#define GAUGECOHO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaugecoho {

// Base of every error raised by the library. The CLI maps these to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
    using Error::Error;
};

// Operands live over different generator sets.
struct ContextMismatch : Error {
    using Error::Error;
};

// Operands agree on generators but not on the coefficient ring.
struct DomainMismatch : Error {
    using Error::Error;
};

// A weight beyond the active weight cap was requested.
struct CapError : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

class ParseError : public Error
{
public:
    enum class Kind { syntax, unknown_generator, index_out_of_range };

    ParseError(Kind kind, std::size_t offset, const std::string &what)
        : Error(what + " at offset " + std::to_string(offset)), m_kind(kind), m_offset(offset)
    {
    }

    Kind kind() const noexcept { return m_kind; }
    std::size_t offset() const noexcept { return m_offset; }

private:
    Kind m_kind;
    std::size_t m_offset;
};

} // namespace gaugecoho

#endif
