// SPDX-License-Identifier: MIT

#ifndef CNCT_DISTRIBUTIONS_HPP
#define CNCT_DISTRIBUTIONS_HPP

#include <cstdint>

#include "cnct/accel.hpp"
#include "cnct/functions.hpp"

namespace cnct {

/// Discrete Lerch family on k = 0, 1, 2, ...:
///
///   P(X = k) = z^k (k+v)^-s / Phi(z, s, v)
///
/// Zipf is (z=1, v=1), Zipf-Mandelbrot (z=1, general v), geometric (s=0).
/// Zipf with support {1, 2, ...} is this family at v = 1 read with a
/// one-based presentation shift. Requires 0 <= z <= 1 (z = 0 is the point
/// mass at the origin) and s > 1 when z = 1.
///
/// Immutable after construction; all queries are pure and safe to run
/// concurrently.
class LerchDistribution {
public:
    static constexpr std::int64_t kQuantileScanCap = 1'000'000'000;

    /// Computes the normalization Phi(z, s, v) at the given tolerance and
    /// keeps its error estimate.
    explicit LerchDistribution(LerchParams params, const ToleranceSpec& tol = {});

    double pmf(std::int64_t k) const;

    /// sum_{j<=k} pmf(j), accumulated in increasing j, clamped to [0, 1].
    double cdf(std::int64_t k) const;

    /// Smallest k with cdf(k) >= p for p in [0, 1). Sequential scan with a
    /// running sum (the cdf is itself a running sum, so scanning is
    /// optimal); gives up past kQuantileScanCap on heavy tails.
    std::int64_t quantile(double p) const;

    /// E[X^r] = sum_k k^r pmf(k) for integer r >= 1, via CNCT when
    /// z > 1/2 and plain summation otherwise. Requires s > r + 1 when
    /// z = 1 (existence).
    AccelResult moment(int r, const ToleranceSpec& tol = {}) const;

    const LerchParams& params() const noexcept { return params_; }
    double norm() const noexcept { return norm_.value; }
    double norm_error() const noexcept { return norm_.error_estimate; }
    const AccelResult& norm_result() const noexcept { return norm_; }

private:
    double weight(std::int64_t k) const;  // z^k (k+v)^-s

    LerchParams params_;
    ToleranceSpec tol_;
    AccelResult norm_;
};

}  // namespace cnct

#endif
