#ifndef PALEY_ERRORS_HPP
#define PALEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paley {

// Bad user input: non-admissible modulus, malformed arguments.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A brute-force request above the configured ceiling.
class LimitExceeded : public std::runtime_error {
public:
    explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A consistency check failed; indicates a bug, not a usage error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace paley

#endif
