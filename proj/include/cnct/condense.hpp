// SPDX-License-Identifier: MIT

#ifndef CNCT_CONDENSE_HPP
#define CNCT_CONDENSE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cnct/kernel.hpp"
#include "cnct/oracle.hpp"

namespace cnct {

/// Van Wijngaarden condensation of a convergent series with nonnegative
/// terms a(0), a(1), ...:
///
///   sum_{k>=0} a(k) = sum_{j>=0} (-1)^j A_j,   A_j = sum_{i>=0} 2^i a(2^i (j+1) - 1)
///
/// The inner sums A_j converge geometrically, so the alternating outer
/// series carries the full value of the input and is fit for acceleration.
///
/// Indices are 64-bit integers; the map (i, j) -> 2^i (j+1) - 1 covers the
/// nonnegative integers exactly once. Terms at indices beyond 2^53 see the
/// index rounded by at most 1 ulp inside the oracle, which enters weighted
/// below the inner tolerance.
///
/// Instances are single-writer: the memo is not synchronized. Distinct
/// instances are independent.
class CondensedSeries {
public:
    static constexpr std::int64_t kDefaultMaxIndex = std::int64_t(1) << 62;

    /// inner_rel_tol: relative cutoff for truncating the inner sums; keep
    /// it below the tolerance targeted by whatever consumes the condensed
    /// series (the drivers use their target divided by 100).
    CondensedSeries(TermOracle oracle, double inner_rel_tol,
                    std::int64_t max_index = kDefaultMaxIndex);

    /// A_j, memoized. Negative input terms and inner sums that fail to
    /// decay below tolerance before the index cap are errors.
    double term(std::int64_t j);

    /// Alternating partial sums S_m = sum_{j<=m} (-1)^j A_j for m = 0..n.
    RealSequence partial_sums(std::int64_t n);

    /// Oracle evaluations so far; counts every evaluation exactly once.
    std::int64_t calls() const noexcept { return calls_; }

    /// Optional cap on total oracle evaluations; exceeding it raises
    /// TermBudgetExhausted before the next evaluation would run.
    void set_call_budget(std::int64_t budget) { budget_ = budget; }

    double inner_rel_tol() const noexcept { return inner_rel_tol_; }
    std::int64_t max_index() const noexcept { return max_index_; }

private:
    double compute_term(std::int64_t j) const;

    TermOracle oracle_;
    double inner_rel_tol_;
    std::int64_t max_index_;
    std::vector<std::optional<double>> memo_;
    mutable std::int64_t calls_ = 0;
    std::optional<std::int64_t> budget_;
};

}  // namespace cnct

#endif
