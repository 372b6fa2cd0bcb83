#pragma once

#include <stdexcept>
#include <string>

namespace qunip {

// Bad input: malformed datum, non-reduced word, wrong data length.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size bound (height, word length, degree) was exceeded.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Signals an engine bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Domain violation of an arithmetic operation (division by zero, eval0 at a pole, k > n).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline void check(bool cond, const std::string& what)
{
    if (!cond)
        throw InternalError(what);
}

} // namespace qunip
