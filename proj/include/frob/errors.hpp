#pragma once

#include <stdexcept>
#include <string>

namespace frob {

/// Input violates an operation's precondition (wild action, bad prime, arity mismatch, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structural invariant failed to hold on computed data.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Polynomial text could not be parsed; carries the byte offset of the failure.
class parse_error : public precondition_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : precondition_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace frob
