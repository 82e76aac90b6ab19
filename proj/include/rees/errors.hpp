#pragma once

#include <stdexcept>
#include <string>

namespace rees {

// Bad user-facing input: malformed JSON, unparsable polynomials, matrices
// violating the standing shape assumptions.  The CLI maps this to exit 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation ran past the cooperative deadline (--timeout).  Exit 3.
class TimeoutError : public std::runtime_error {
public:
    explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

// An invariant the library itself guarantees was violated; a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rees
