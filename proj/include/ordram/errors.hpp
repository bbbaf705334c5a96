#pragma once

#include <stdexcept>
#include <string>

namespace ordram
{
    /// A caller-supplied parameter violates an operation's precondition.
    class InvalidArgument : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A materialization cap, node cap or wall-clock budget was hit.
    class BudgetExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A malformed input file or target description.
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An internal invariant failed. Always a bug or a false claim being checked.
    class InvariantViolation : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };
}
