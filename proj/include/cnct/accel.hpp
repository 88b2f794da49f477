// SPDX-License-Identifier: MIT

#ifndef CNCT_ACCEL_HPP
#define CNCT_ACCEL_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "cnct/oracle.hpp"

namespace cnct {

/// Stopping control shared by the summation drivers.
struct ToleranceSpec {
    double rel_tol = 1e-14;
    double abs_floor = 1e-300;
    int max_order = 50;
    std::int64_t max_terms = 10'000'000;

    void validate() const;
};

enum class Method { cnct, delta_direct, direct };

std::string_view to_string(Method m) noexcept;

/// Outcome of a driver run. `converged` guarantees
/// error_estimate <= rel_tol * max(|value|, abs_floor) and terms_used
/// never exceeds max_terms. `order` is the transformation order reached
/// (-1 for plain summation); `terms_used` counts oracle evaluations
/// exactly.
struct AccelResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int order = -1;
    std::int64_t terms_used = 0;
    bool converged = false;
    Method method = Method::direct;
};

/// Combined nonlinear-condensation transformation: Van Wijngaarden
/// condensation of a nonnegative-term series followed by delta
/// acceleration (beta = 1) of the condensed alternating sums.
/// Convergence is declared when two consecutive diagonal estimates agree
/// within rel_tol relatively; the error estimate is the larger of the two
/// last consecutive differences. Exhausting max_order or max_terms, or a
/// kernel breakdown, yields converged = false with the best estimate so
/// far.
AccelResult cnct_sum(const TermOracle& oracle, const ToleranceSpec& tol = {});

/// One row per transformation order of a CNCT run (row 0 is the first
/// condensed term A_0).
struct CnctTableRow {
    int order;
    double delta;
    std::int64_t terms_used;
};

std::vector<CnctTableRow> cnct_table(const TermOracle& oracle, int n_max, double rel_tol = 1e-14);

/// Delta transformation applied directly to the partial sums of the input
/// series (the route of choice for alternating input).
AccelResult delta_sum(const TermOracle& oracle, const ToleranceSpec& tol = {});

/// Baseline term-by-term summation. Stops once the estimated tail --
/// the current term scaled by a ratio-extrapolation factor and a tenfold
/// safety margin -- is at or below rel_tol * max(|s_n|, abs_floor) for
/// three consecutive terms; that same tail estimate is reported, so
/// converged results respect the error contract even on slowly decaying
/// monotone series, whose tails dwarf their last term. A heuristic
/// baseline, not an accelerator.
AccelResult direct_sum(const TermOracle& oracle, const ToleranceSpec& tol = {});

}  // namespace cnct

#endif
