#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperlag {

// Invalid arguments are reported with std::invalid_argument; the types below
// cover the failure modes that callers are expected to handle specifically.

/// An operation's documented precondition on its input graph does not hold.
class precondition_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The weighting handed to the growth transform has zero objective value.
class degenerate_start_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A campaign would need more solver invocations than its budget allows.
class budget_exceeded_error : public std::runtime_error {
public:
    budget_exceeded_error(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("campaign refused: requires " + std::to_string(required) +
                             " solver invocations, budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace hyperlag
