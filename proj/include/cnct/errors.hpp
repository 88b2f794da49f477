// SPDX-License-Identifier: MIT

#ifndef CNCT_ERRORS_HPP
#define CNCT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cnct {

/// A sequence transformation denominator fell below the breakdown floor.
/// Carries the last estimate computed before the denominator collapsed.
class BreakdownError : public std::runtime_error {
public:
    BreakdownError(std::string what, double last_estimate, int order)
        : std::runtime_error(std::move(what)),
          last_estimate_(last_estimate),
          order_(order) {}

    double last_estimate() const noexcept { return last_estimate_; }
    int order() const noexcept { return order_; }

private:
    double last_estimate_;
    int order_;
};

/// A summation failed to converge within its structural limits
/// (index cap, scan cap); distinct from merely running out of budget.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The caller-imposed term budget (max_terms) ran out mid-computation.
/// Drivers catch this and report a non-converged result instead.
class TermBudgetExhausted : public std::runtime_error {
public:
    explicit TermBudgetExhausted(std::int64_t budget)
        : std::runtime_error("term budget of " + std::to_string(budget) + " oracle calls exhausted"),
          budget_(budget) {}

    std::int64_t budget() const noexcept { return budget_; }

private:
    std::int64_t budget_;
};

}  // namespace cnct

#endif
