// SPDX-License-Identifier: MIT

#include "cnct/accel.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "cnct/condense.hpp"
#include "cnct/errors.hpp"
#include "cnct/kernel.hpp"

namespace cnct {

void ToleranceSpec::validate() const {
    if (!(rel_tol > 0.0)) throw std::domain_error("ToleranceSpec: rel_tol must be positive");
    if (!(abs_floor >= 0.0)) throw std::domain_error("ToleranceSpec: abs_floor must be nonnegative");
    if (max_order < 2) throw std::domain_error("ToleranceSpec: max_order must be at least 2");
    if (max_terms < 1) throw std::domain_error("ToleranceSpec: max_terms must be at least 1");
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::cnct: return "cnct";
        case Method::delta_direct: return "delta_direct";
        case Method::direct: return "direct";
    }
    return "?";
}

namespace {

// Convergence bookkeeping shared by the two accelerated drivers: watches
// the diagonal estimates and declares convergence once two consecutive
// differences are both within tolerance of the current value.
class DiagonalWatch {
public:
    DiagonalWatch(double rel_tol, double abs_floor) : rel_tol_(rel_tol), abs_floor_(abs_floor) {}

    void observe(double estimate) {
        if (seen_ >= 1) {
            prev_diff_ = diff_;
            diff_ = std::abs(estimate - last_);
        }
        last_ = estimate;
        ++seen_;
    }

    bool converged() const {
        if (seen_ < 3) return false;
        const double scale = rel_tol_ * std::max(std::abs(last_), abs_floor_);
        return diff_ <= scale && prev_diff_ <= scale;
    }

    double error_estimate(double fallback) const {
        if (seen_ >= 3) return std::max(diff_, prev_diff_);
        if (seen_ == 2) return diff_;
        return fallback;
    }

private:
    double rel_tol_;
    double abs_floor_;
    int seen_ = 0;
    double last_ = 0.0;
    double diff_ = 0.0;
    double prev_diff_ = 0.0;
};

struct AcceleratedRun {
    double value = 0.0;
    double error = 0.0;
    int order = -1;
    bool converged = false;
};

// Feeds partial sums produced by `next_sum` into a fresh delta accelerator
// until convergence, breakdown, termination, order exhaustion, or the sum
// source runs dry (by returning false).
template <typename NextSum>
AcceleratedRun run_delta(NextSum&& next_sum, const ToleranceSpec& tol) {
    DeltaAccelerator<double> acc(1.0);
    DiagonalWatch watch(tol.rel_tol, tol.abs_floor);
    AcceleratedRun run;
    double s = 0.0;
    while (next_sum(s)) {
        acc.push(s);
        if (acc.broke_down()) break;
        const auto est = acc.estimate();
        if (!est) {
            run.value = s;  // nothing transformed yet: the raw sum is all we have
            continue;
        }
        run.value = *est;
        run.order = acc.order();
        if (acc.terminated()) {
            run.error = 0.0;
            run.converged = true;
            return run;
        }
        watch.observe(*est);
        if (watch.converged()) {
            run.error = watch.error_estimate(std::abs(run.value));
            run.converged = true;
            return run;
        }
        if (acc.order() >= tol.max_order) break;
    }
    run.error = watch.error_estimate(std::abs(run.value));
    return run;
}

}  // namespace

AccelResult cnct_sum(const TermOracle& oracle, const ToleranceSpec& tol) {
    tol.validate();
    CondensedSeries cs(oracle, tol.rel_tol * 1e-2);
    cs.set_call_budget(tol.max_terms);

    std::int64_t j = 0;
    double s = 0.0;
    auto next_sum = [&](double& out) {
        double a;
        try {
            a = cs.term(j);
        } catch (const TermBudgetExhausted&) {
            return false;
        }
        s += (j % 2 == 0) ? a : -a;
        ++j;
        out = s;
        return true;
    };

    const AcceleratedRun run = run_delta(next_sum, tol);
    AccelResult result;
    result.value = run.value;
    result.error_estimate = run.error;
    result.order = run.order;
    result.terms_used = cs.calls();
    result.converged = run.converged;
    result.method = Method::cnct;
    return result;
}

std::vector<CnctTableRow> cnct_table(const TermOracle& oracle, int n_max, double rel_tol) {
    if (n_max < 0) throw std::domain_error("cnct_table: n_max must be nonnegative");
    if (!(rel_tol > 0.0)) throw std::domain_error("cnct_table: rel_tol must be positive");
    CondensedSeries cs(oracle, rel_tol * 1e-2);
    DeltaAccelerator<double> acc(1.0);

    std::vector<CnctTableRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    double s = 0.0;
    // the order-n diagonal needs condensed sums S_0..S_{n+1}
    for (std::int64_t j = 0; j <= static_cast<std::int64_t>(n_max) + 1; ++j) {
        const double a = cs.term(j);
        s += (j % 2 == 0) ? a : -a;
        acc.push(s);
        if (acc.broke_down())
            throw BreakdownError("cnct_table: breakdown at order " + std::to_string(acc.order() + 1),
                                 acc.estimate().value_or(s), acc.order());
        if (acc.terminated()) break;
        if (const auto est = acc.estimate())
            rows.push_back({acc.order(), *est, cs.calls()});
    }
    // a terminated (finite) condensed series pins all remaining orders to
    // the exact sum
    while (acc.terminated() && static_cast<int>(rows.size()) <= n_max) {
        rows.push_back({static_cast<int>(rows.size()), *acc.estimate(), cs.calls()});
    }
    return rows;
}

AccelResult delta_sum(const TermOracle& oracle, const ToleranceSpec& tol) {
    tol.validate();
    std::int64_t n = 0;
    double s = 0.0;
    auto next_sum = [&](double& out) {
        if (n >= tol.max_terms) return false;
        const double a = oracle(n);
        if (!std::isfinite(a))
            throw std::domain_error("delta_sum: non-finite term at index " + std::to_string(n));
        s += a;
        ++n;
        out = s;
        return true;
    };

    const AcceleratedRun run = run_delta(next_sum, tol);
    AccelResult result;
    result.value = run.value;
    result.error_estimate = run.error;
    result.order = run.order;
    result.terms_used = n;
    result.converged = run.converged;
    result.method = Method::delta_direct;
    return result;
}

namespace {

// Tail surrogate for term-by-term summation, with a tenfold safety
// factor. Same-sign terms shrinking by a ratio rho < 1 have a tail near
// |a| rho / (1 - rho) (exact for geometric decay, within 2x for power
// laws); an alternating tail is bounded by the next term. Without a
// usable ratio the bare term stands in.
double direct_tail_estimate(double a, double a_prev) {
    const double mag = std::abs(a);
    if (mag == 0.0) return 0.0;
    if (a * a_prev > 0.0) {
        const double rho = mag / std::abs(a_prev);
        if (rho < 1.0) return 10.0 * mag * std::max(rho / (1.0 - rho), 1.0);
    }
    return 10.0 * mag;
}

}  // namespace

AccelResult direct_sum(const TermOracle& oracle, const ToleranceSpec& tol) {
    tol.validate();
    AccelResult result;
    result.method = Method::direct;
    result.order = -1;

    double s = 0.0;
    double a = 0.0;
    double a_prev = 0.0;
    double tail = 0.0;
    int negligible_run = 0;
    std::int64_t n = 0;
    while (n < tol.max_terms) {
        a = oracle(n);
        if (!std::isfinite(a))
            throw std::domain_error("direct_sum: non-finite term at index " + std::to_string(n));
        s += a;
        ++n;
        if (!std::isfinite(s)) break;  // runaway input; report what we have
        tail = direct_tail_estimate(a, a_prev);
        a_prev = a;
        if (tail <= tol.rel_tol * std::max(std::abs(s), tol.abs_floor)) {
            if (++negligible_run >= 3) {
                result.converged = true;
                break;
            }
        } else {
            negligible_run = 0;
        }
    }
    result.value = s;
    result.error_estimate = tail;
    result.terms_used = n;
    return result;
}

}  // namespace cnct
