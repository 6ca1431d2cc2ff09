#pragma once

#include <stdexcept>
#include <string>

namespace kreg {

// Error taxonomy shared by the library and the CLI. Every error carries a
// stable category string; the CLI maps categories to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

// Invalid arguments, bad preconditions, malformed configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message) : Error("invalid-config", message) {}
};

// Malformed input data (CSV cells, kernel spec strings). Carries a 1-based
// line number when the source is a file; 0 means "not line-addressable".
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : Error("parse-error", line ? message + " (line " + std::to_string(line) + ")" : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

// Numeric failures: quadrature tolerance not met, cross-validation with no
// admissible bandwidth.
class NumericError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public NumericError {
public:
    explicit QuadratureError(const std::string& message)
        : NumericError("quadrature-tolerance", message) {}
};

class AllInfiniteCvError : public NumericError {
public:
    explicit AllInfiniteCvError(const std::string& message)
        : NumericError("all-infinite-cv", message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("io", message) {}
};

// Exit code convention used by the CLI.
inline int exit_code_for(const Error& e) {
    const std::string& c = e.category();
    if (c == "invalid-config") return 2;
    if (c == "parse-error") return 3;
    if (c == "quadrature-tolerance" || c == "all-infinite-cv" || c == "numeric") return 4;
    if (c == "io") return 5;
    return 1;
}

} // namespace kreg
