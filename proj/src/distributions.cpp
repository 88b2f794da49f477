// SPDX-License-Identifier: MIT

#include "cnct/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cnct/errors.hpp"

namespace cnct {

LerchDistribution::LerchDistribution(LerchParams params, const ToleranceSpec& tol)
    : params_(params), tol_(tol) {
    tol_.validate();
    if (!(params_.z >= 0.0)) throw std::domain_error("LerchDistribution: requires z >= 0");
    params_.validate();
    norm_ = lerch_phi(params_, tol_);
    if (!norm_.converged)
        throw NonConvergenceError("LerchDistribution: normalization did not converge");
    if (!(norm_.value > 0.0) || !std::isfinite(norm_.value))
        throw std::domain_error("LerchDistribution: normalization is not positive and finite");
}

double LerchDistribution::weight(std::int64_t k) const {
    const double x = static_cast<double>(k);
    return std::pow(params_.z, x) * std::pow(x + params_.v, -params_.s);
}

double LerchDistribution::pmf(std::int64_t k) const {
    if (k < 0) throw std::domain_error("LerchDistribution::pmf: requires k >= 0");
    return weight(k) / norm_.value;
}

double LerchDistribution::cdf(std::int64_t k) const {
    if (k < 0) throw std::domain_error("LerchDistribution::cdf: requires k >= 0");
    double acc = 0.0;
    for (std::int64_t j = 0; j <= k; ++j) acc += pmf(j);
    return std::clamp(acc, 0.0, 1.0);
}

std::int64_t LerchDistribution::quantile(double p) const {
    if (!(p >= 0.0) || !(p < 1.0))
        throw std::domain_error("LerchDistribution::quantile: requires 0 <= p < 1");
    double acc = 0.0;
    for (std::int64_t k = 0; k <= kQuantileScanCap; ++k) {
        acc += pmf(k);
        if (acc >= p) return k;
    }
    throw NonConvergenceError("LerchDistribution::quantile: scan cap exceeded at p = " + std::to_string(p) +
                              "; tail too heavy");
}

AccelResult LerchDistribution::moment(int r, const ToleranceSpec& tol) const {
    if (r < 1) throw std::domain_error("LerchDistribution::moment: requires r >= 1");
    tol.validate();
    if (params_.z == 1.0 && !(params_.s > static_cast<double>(r) + 1.0))
        throw std::domain_error("LerchDistribution::moment: moment of order " + std::to_string(r) +
                                " requires s > r + 1 when z = 1");

    const double z = params_.z, s = params_.s, v = params_.v;
    const TermOracle numerator = [z, s, v, r](std::int64_t k) {
        const double x = static_cast<double>(k);
        return std::pow(x, static_cast<double>(r)) * std::pow(z, x) * std::pow(x + v, -s);
    };

    // tighter target for the numerator so the combined estimate, with the
    // normalization uncertainty folded in, still meets the caller's bound
    ToleranceSpec sub = tol;
    sub.rel_tol = tol.rel_tol / 4.0;
    AccelResult res = (z > kLerchDispatchThreshold) ? cnct_sum(numerator, sub) : direct_sum(numerator, sub);

    const double norm_rel = norm_.error_estimate / norm_.value;
    res.value /= norm_.value;
    res.error_estimate = res.error_estimate / norm_.value + std::abs(res.value) * norm_rel;
    res.converged = res.converged && norm_.converged &&
                    res.error_estimate <= tol.rel_tol * std::max(std::abs(res.value), tol.abs_floor);
    return res;
}

}  // namespace cnct
