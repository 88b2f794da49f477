// SPDX-License-Identifier: MIT

#ifndef CNCT_KERNEL_HPP
#define CNCT_KERNEL_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnct/errors.hpp"
#include "cnct/real.hpp"

namespace cnct {

/// Partial sums of a series, s_0 .. s_N (all entries finite).
using RealSequence = std::vector<double>;

/// A transformation denominator whose magnitude falls below this floor is
/// treated as a breakdown: far below any legitimate denominator on the
/// test battery, yet above the subnormal range.
inline constexpr double kBreakdownFloor = 1e-280;

namespace detail {

// Coefficient of the moving-boundary recursion
//   X_{k+1}^(n) = X_k^(n+1) - c(k, n) * X_k^(n)
// for the delta transformation with shift parameter beta. Evaluated as a
// product of two bounded ratios; at k = 0 the ratio is identically 1 (and
// the naive quotient would be 0/0 at beta + n = 1).
template <RealArithmetic R>
R delta_coefficient(R beta, int k, int n) {
    if (k == 0) return R(1);
    const R bnk = beta + R(n + k);
    const R bn2k = beta + R(n + 2 * k);
    return (bnk / bn2k) * ((bnk - R(1)) / (bn2k - R(1)));
}

template <RealArithmetic R>
R levin_step(R upper, R lower, R c) {
    return upper - c * lower;
}

template <RealArithmetic R>
void require_finite_sums(std::span<const R> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!isfinite(s[i]))
            throw std::domain_error("non-finite partial sum at index " + std::to_string(i));
    }
}

}  // namespace detail

/// Accumulates s_n = sum_{k=0}^{n} a(k) for n = 0..n_max by running addition.
/// The oracle must yield finite terms; a non-finite term aborts with the
/// offending index.
template <RealArithmetic R = double, typename Oracle>
std::vector<R> partial_sums(Oracle&& a, std::int64_t n_max) {
    if (n_max < 0) throw std::domain_error("partial_sums: n_max must be nonnegative");
    std::vector<R> sums;
    sums.reserve(static_cast<std::size_t>(n_max) + 1);
    R s(0);
    for (std::int64_t k = 0; k <= n_max; ++k) {
        const R term = a(k);
        if (!isfinite(term))
            throw std::domain_error("non-finite series term at index " + std::to_string(k));
        s = s + term;
        sums.push_back(s);
    }
    return sums;
}

/// Online form of the delta transformation: partial sums are pushed one at
/// a time and the running numerator/denominator table is updated along the
/// counter-diagonal, so the current diagonal estimate delta_m^(0)(beta, s)
/// is available after each push. Remainder estimates are the forward
/// differences omega_n = s_{n+1} - s_n, so the first push yields no
/// estimate yet.
///
/// A denominator below kBreakdownFloor puts the accumulator into a sticky
/// breakdown state that freezes the last healthy estimate. A zero forward
/// difference marks a terminated (finite) series; the estimate becomes the
/// exact sum.
template <RealArithmetic R = double>
class DeltaAccelerator {
public:
    explicit DeltaAccelerator(R beta = R(1)) : beta_(beta) {
        if (!(beta > R(0))) throw std::domain_error("DeltaAccelerator: beta must be positive");
    }

    void push(R s_new) {
        if (!isfinite(s_new)) throw std::domain_error("DeltaAccelerator: non-finite partial sum");
        if (breakdown_) {
            ++count_;
            return;  // frozen
        }
        if (count_ == 0) {
            first_ = prev_ = s_new;
            ++count_;
            return;
        }
        const R omega = s_new - prev_;
        if (terminated_) {
            if (omega != R(0))
                throw std::domain_error("DeltaAccelerator: nonzero difference after terminated series");
            ++count_;
            return;
        }
        if (omega == R(0)) {
            // trailing run of zero differences: the series is finite and
            // s_new is already the exact sum
            terminated_ = true;
            prev_est_ = est_;
            est_ = s_new;
            ++count_;
            return;
        }
        const int m = static_cast<int>(num_.size());
        num_.push_back(prev_ / omega);
        den_.push_back(R(1) / omega);
        for (int r = m - 1; r >= 0; --r) {
            const R c = detail::delta_coefficient(beta_, m - r - 1, r);
            num_[r] = detail::levin_step(num_[r + 1], num_[r], c);
            den_[r] = detail::levin_step(den_[r + 1], den_[r], c);
        }
        if (abs(den_[0]) < R(kBreakdownFloor)) {
            breakdown_ = true;
            ++count_;
            return;  // est_ keeps the last healthy value
        }
        prev_est_ = est_;
        // delta_0^(0) is identically s_0; returning it directly keeps the
        // order-0 row bit-equal to the first input sum
        est_ = (num_.size() == 1) ? first_ : num_[0] / den_[0];
        prev_ = s_new;
        ++count_;
    }

    /// Current diagonal estimate; empty until two sums have been consumed.
    std::optional<R> estimate() const { return est_; }
    std::optional<R> previous_estimate() const { return prev_est_; }

    /// Transformation order of the current estimate, -1 if none yet.
    int order() const { return static_cast<int>(num_.size()) - 1; }

    std::size_t consumed() const { return count_; }
    bool broke_down() const { return breakdown_; }
    bool terminated() const { return terminated_; }
    R beta() const { return beta_; }

private:
    R beta_;
    std::vector<R> num_;
    std::vector<R> den_;
    R first_{};
    R prev_{};
    std::size_t count_ = 0;
    std::optional<R> est_;
    std::optional<R> prev_est_;
    bool breakdown_ = false;
    bool terminated_ = false;
};

/// Offline (table) form of the delta transformation
///
///   delta_k^(0)(beta, s) =
///     [sum_j (-1)^j C(k,j) ((beta+j)_{k-1}/(beta+k)_{k-1}) s_j/omega_j] /
///     [sum_j (-1)^j C(k,j) ((beta+j)_{k-1}/(beta+k)_{k-1})  1 /omega_j],
///
/// with omega_j = s_{j+1} - s_j, evaluated by the numerator/denominator
/// recursion rather than the explicit binomial sum (O(N^2) work, no
/// overflowing binomials). Given sums s_0..s_{N+1} returns the diagonal
/// estimate of order N.
///
/// A zero omega_j is accepted only as a trailing run (terminated series,
/// the exact sum s_j is returned). A diagonal denominator below
/// kBreakdownFloor raises BreakdownError carrying the last healthy
/// estimate.
template <RealArithmetic R = double>
R delta_estimate(std::span<const R> s, R beta = R(1)) {
    if (s.size() < 2) throw std::domain_error("delta_estimate: need at least 2 partial sums");
    if (!(beta > R(0))) throw std::domain_error("delta_estimate: beta must be positive");
    detail::require_finite_sums(s);

    const std::size_t pairs = s.size() - 1;  // omega_0 .. omega_{pairs-1}
    std::vector<R> omega(pairs);
    for (std::size_t j = 0; j < pairs; ++j) {
        omega[j] = s[j + 1] - s[j];
        if (omega[j] == R(0)) {
            for (std::size_t i = j + 1; i < pairs; ++i) {
                if (s[i + 1] - s[i] != R(0))
                    throw std::domain_error("delta_estimate: zero difference at index " + std::to_string(j) +
                                            " not followed by a zero tail");
            }
            return s[j];  // terminated series, exact
        }
    }

    const std::size_t order = pairs - 1;
    std::vector<R> num(pairs);
    std::vector<R> den(pairs);
    for (std::size_t n = 0; n < pairs; ++n) {
        num[n] = s[n] / omega[n];
        den[n] = R(1) / omega[n];
    }

    R last_healthy = s[0];  // delta_0^(0) = s_0
    int last_healthy_order = 0;
    for (std::size_t k = 0; k < order; ++k) {
        for (std::size_t n = 0; n < order - k; ++n) {
            const R c = detail::delta_coefficient(beta, static_cast<int>(k), static_cast<int>(n));
            num[n] = detail::levin_step(num[n + 1], num[n], c);
            den[n] = detail::levin_step(den[n + 1], den[n], c);
        }
        if (abs(den[0]) >= R(kBreakdownFloor)) {
            last_healthy = num[0] / den[0];
            last_healthy_order = static_cast<int>(k) + 1;
        }
    }
    if (order > 0 && abs(den[0]) < R(kBreakdownFloor))
        throw BreakdownError("delta_estimate: denominator underflow at order " + std::to_string(order),
                             static_cast<double>(last_healthy), last_healthy_order);
    return (order == 0) ? s[0] : num[0] / den[0];
}

template <RealArithmetic R = double>
R delta_estimate(const std::vector<R>& s, R beta = R(1)) {
    return delta_estimate(std::span<const R>(s), beta);
}

/// Wynn's recursive form of the Shanks transformation,
///   eps_{k+1}^(n) = eps_{k-1}^(n+1) + 1/(eps_k^(n+1) - eps_k^(n)),
/// eps_{-1} = 0, eps_0^(n) = s_n. Odd columns are auxiliary quantities;
/// only even columns are estimates.
///
/// Column growth stops once a difference in the reciprocal vanishes,
/// either exactly or below the noise of its operands (entries that agree
/// to ~100 ulp have converged; deeper columns would only amplify rounding
/// noise). The estimate is the last entry of the deepest completed even
/// column.
template <RealArithmetic R = double>
class EpsilonTable {
public:
    explicit EpsilonTable(std::span<const R> sums) {
        if (sums.empty()) throw std::domain_error("EpsilonTable: empty sequence");
        detail::require_finite_sums(sums);
        columns_.emplace_back(sums.begin(), sums.end());
        const R noise = R(100) * std::numeric_limits<R>::epsilon();
        while (columns_.back().size() >= 2) {
            const int k = static_cast<int>(columns_.size()) - 1;
            const auto& cur = columns_.back();
            std::vector<R> next;
            next.reserve(cur.size() - 1);
            bool degenerate = false;
            for (std::size_t n = 0; n + 1 < cur.size(); ++n) {
                const R diff = cur[n + 1] - cur[n];
                const R scale = abs(cur[n + 1]) > abs(cur[n]) ? abs(cur[n + 1]) : abs(cur[n]);
                if (abs(diff) <= noise * scale) {
                    degenerate = true;
                    break;
                }
                const R base = (k >= 1) ? columns_[static_cast<std::size_t>(k) - 1][n + 1] : R(0);
                next.push_back(base + R(1) / diff);
            }
            if (degenerate) {
                degenerate_ = true;
                break;
            }
            columns_.push_back(std::move(next));
        }
        max_even_column_ = static_cast<int>(columns_.size()) - 1;
        if (max_even_column_ % 2 == 1) --max_even_column_;
    }

    int max_even_column() const { return max_even_column_; }
    bool degenerate_difference_seen() const { return degenerate_; }

    /// Entries of even column k; odd columns are auxiliary intermediates
    /// and are not exposed.
    std::span<const R> column(int k) const {
        if (k % 2 != 0) throw std::domain_error("EpsilonTable: odd columns are not estimates");
        if (k < 0 || k >= static_cast<int>(columns_.size()))
            throw std::out_of_range("EpsilonTable: no such column");
        return columns_[static_cast<std::size_t>(k)];
    }

    /// Last entry of the deepest completed even column.
    R estimate() const { return columns_[static_cast<std::size_t>(max_even_column_)].back(); }

private:
    std::vector<std::vector<R>> columns_;
    int max_even_column_ = 0;
    bool degenerate_ = false;
};

/// Highest-even-column epsilon estimate reachable from the given sums.
template <RealArithmetic R = double>
R epsilon_estimate(std::span<const R> s) {
    if (s.size() < 3) throw std::domain_error("epsilon_estimate: need at least 3 partial sums");
    return EpsilonTable<R>(s).estimate();
}

template <RealArithmetic R = double>
R epsilon_estimate(const std::vector<R>& s) {
    return epsilon_estimate(std::span<const R>(s));
}

}  // namespace cnct

#endif
