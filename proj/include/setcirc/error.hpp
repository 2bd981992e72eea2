#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace setcirc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Errc {
    syntax,
    unknown_reference,
    forward_reference,
    arity_mismatch,
    duplicate_id,
    missing_output,
    kind_mismatch,
    dimension_mismatch,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::syntax: return "syntax error";
    case Errc::unknown_reference: return "unknown gate reference";
    case Errc::forward_reference: return "forward reference";
    case Errc::arity_mismatch: return "arity mismatch";
    case Errc::duplicate_id: return "duplicate gate id";
    case Errc::missing_output: return "missing output";
    case Errc::kind_mismatch: return "gate kind not allowed here";
    case Errc::dimension_mismatch: return "dimension mismatch";
    }
    return "invalid circuit";
}

/// Structural problem with a circuit. `gate_index` points into the gate list when known.
class ValidationError : public Error {
public:
    ValidationError(Errc code, std::string msg, std::optional<std::size_t> gate_index = {})
        : Error(std::string(errc_name(code)) + ": " + msg), code_(code), gate_index_(gate_index), detail_(msg)
    {
    }
    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> gate_index() const noexcept { return gate_index_; }
    /// Message without the error-class prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::optional<std::size_t> gate_index_;
    std::string detail_;
};

/// Error in circuit text, with 1-based line and column.
class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t line, std::size_t column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + errc_name(code) + ": " + msg),
          code_(code), line_(line), column_(column)
    {
    }
    Errc code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    Errc code_;
    std::size_t line_;
    std::size_t column_;
};

/// The operation set of a circuit is outside what an engine or transform accepts.
class FragmentError : public Error {
public:
    using Error::Error;
};

/// Fragments mixing complement, addition and multiplication have no known decision procedure.
class UnsupportedFragment : public Error {
public:
    using Error::Error;
};

/// A configured resource limit was hit. Never a verdict.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Arithmetic precondition violated (zero in a GCD-free basis, unrepresentable number, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace setcirc
