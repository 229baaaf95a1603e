#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slpa {

// User-correctable problem: unreadable file, bad flag value, infeasible
// parameters. The CLI maps this to exit code 2.
class UserError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input parse failure carrying a 1-based line number.
class ParseError : public UserError {
public:
    ParseError(const std::string &what, std::size_t line)
        : UserError(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Broken internal invariant: a bug, not a usage problem. CLI exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace slpa

#define SLPA_INVARIANT(cond, msg)                                              \
    do {                                                                       \
        if (!(cond))                                                           \
            throw ::slpa::InternalError(msg);                                  \
    } while (0)
