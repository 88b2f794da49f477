// SPDX-License-Identifier: MIT

#include "cnct/condense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cnct/errors.hpp"

namespace cnct {

CondensedSeries::CondensedSeries(TermOracle oracle, double inner_rel_tol, std::int64_t max_index)
    : oracle_(std::move(oracle)), inner_rel_tol_(inner_rel_tol), max_index_(max_index) {
    if (!oracle_) throw std::domain_error("CondensedSeries: null oracle");
    if (!(inner_rel_tol_ > 0.0)) throw std::domain_error("CondensedSeries: inner_rel_tol must be positive");
    if (max_index_ < 1) throw std::domain_error("CondensedSeries: max_index must be positive");
}

double CondensedSeries::term(std::int64_t j) {
    if (j < 0) throw std::domain_error("CondensedSeries: negative outer index");
    if (j < static_cast<std::int64_t>(memo_.size()) && memo_[static_cast<std::size_t>(j)])
        return *memo_[static_cast<std::size_t>(j)];
    const double value = compute_term(j);
    if (j >= static_cast<std::int64_t>(memo_.size())) memo_.resize(static_cast<std::size_t>(j) + 1);
    memo_[static_cast<std::size_t>(j)] = value;
    return value;
}

double CondensedSeries::compute_term(std::int64_t j) const {
    if (j > max_index_) throw std::domain_error("CondensedSeries: outer index beyond max_index");
    double sum = 0.0;
    double previous = 0.0;
    std::int64_t index = j;  // 2^0 (j+1) - 1
    for (int i = 0;; ++i) {
        if (budget_ && calls_ >= *budget_) throw TermBudgetExhausted(*budget_);
        const double a = oracle_(index);
        ++calls_;
        if (!std::isfinite(a))
            throw std::domain_error("CondensedSeries: non-finite term at index " + std::to_string(index));
        if (a < 0.0)
            throw std::domain_error("CondensedSeries: negative term at index " + std::to_string(index) +
                                    "; condensation requires nonnegative input");
        const double weighted = std::ldexp(a, i);
        sum += weighted;
        if (weighted == 0.0 && sum > 0.0) break;  // inner tail underflowed
        if (weighted > 0.0 && weighted < inner_rel_tol_ * sum) break;
        if (index > (max_index_ - 1) / 2) {  // next index 2*index + 1 would pass the cap
            if (sum == 0.0) break;           // every probed term was zero
            // Estimate the dropped tail by extrapolating the last ratio.
            // A tail at roundoff level is indistinguishable from the
            // representation error of the sum itself and is accepted even
            // when the nominal tolerance is tighter.
            double tail = weighted;
            if (previous > 0.0 && weighted < previous)
                tail = weighted / (previous / weighted - 1.0);
            const double allowed =
                std::max(inner_rel_tol_, 4.0 * std::numeric_limits<double>::epsilon()) * sum;
            if (weighted < previous && tail <= allowed) break;
            throw NonConvergenceError("condensed term A_" + std::to_string(j) +
                                      ": inner sum failed to decay below tolerance within the index cap");
        }
        previous = weighted;
        index = 2 * index + 1;
    }
    return sum;
}

RealSequence CondensedSeries::partial_sums(std::int64_t n) {
    if (n < 0) throw std::domain_error("CondensedSeries: negative partial-sum order");
    RealSequence sums;
    sums.reserve(static_cast<std::size_t>(n) + 1);
    double s = 0.0;
    for (std::int64_t j = 0; j <= n; ++j) {
        const double a = term(j);
        s += (j % 2 == 0) ? a : -a;
        sums.push_back(s);
    }
    return sums;
}

}  // namespace cnct
