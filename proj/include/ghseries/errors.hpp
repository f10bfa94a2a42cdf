#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghseries {

/// Malformed arguments: bad rational text, order mismatch, out-of-range index.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation hit a zero divisor at index `n` (only possible for
/// instances outside the positivity hypothesis).
class DegenerateInstance : public std::domain_error {
public:
    DegenerateInstance(std::size_t n, const std::string& what)
        : std::domain_error(what + " (first bad n = " + std::to_string(n) + ")"), n_(n) {}

    std::size_t index() const noexcept { return n_; }

private:
    std::size_t n_;
};

} // namespace ghseries
