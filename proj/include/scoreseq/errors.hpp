#pragma once

#include <stdexcept>
#include <string>

namespace scoreseq {

/// A caller broke a documented precondition (bad parameters, mismatched sizes).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The score sequence is not realizable, so there is nothing to reconstruct.
class InfeasibleInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The reconstruction produced something that violates its own postconditions.
/// Never expected on accepted input; seeing one means there is a bug.
class AlgorithmInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exhaustive oracle refused to run because its outcome space is too large.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace scoreseq
