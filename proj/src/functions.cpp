// SPDX-License-Identifier: MIT

#include "cnct/functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cnct {

void LerchParams::validate() const {
    if (!(v > 0.0)) throw std::domain_error("LerchParams: v must be positive");
    if (!(z > -1.0) || !(z <= 1.0)) throw std::domain_error("LerchParams: z must satisfy -1 < z <= 1");
    if (z == 1.0 && !(s > 1.0)) throw std::domain_error("LerchParams: z = 1 requires s > 1");
    if (!std::isfinite(s)) throw std::domain_error("LerchParams: s must be finite");
}

TermOracle lerch_term(const LerchParams& p) {
    const double z = p.z, s = p.s, v = p.v;
    return [z, s, v](std::int64_t n) {
        const double x = static_cast<double>(n);
        return std::pow(z, x) * std::pow(x + v, -s);
    };
}

TermOracle zeta_term(double s) {
    return [s](std::int64_t k) { return std::pow(static_cast<double>(k) + 1.0, -s); };
}

TermOracle hurwitz_term(double s, double v) {
    return [s, v](std::int64_t k) { return std::pow(static_cast<double>(k) + v, -s); };
}

TermOracle polylog_term(double s, double z) {
    return [s, z](std::int64_t k) {
        const double n = static_cast<double>(k) + 1.0;
        return std::pow(z, n) * std::pow(n, -s);
    };
}

TermOracle euler_harmonic_term() {
    return [](std::int64_t k) {
        const double h = harmonic_number(k + 1);
        const double n = static_cast<double>(k) + 1.0;
        return (h * h) / (n * n);
    };
}

AccelResult lerch_phi(const LerchParams& p, const ToleranceSpec& tol, double dispatch_threshold) {
    p.validate();
    if (!(dispatch_threshold > 0.0))
        throw std::domain_error("lerch_phi: dispatch threshold must be positive");
    const TermOracle a = lerch_term(p);
    if (p.z > dispatch_threshold) return cnct_sum(a, tol);
    if (p.z < -dispatch_threshold) return delta_sum(a, tol);
    return direct_sum(a, tol);
}

AccelResult riemann_zeta(double s, const ToleranceSpec& tol) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta: requires s > 1");
    return cnct_sum(zeta_term(s), tol);
}

AccelResult hurwitz_zeta(double s, double v, const ToleranceSpec& tol) {
    if (!(s > 1.0)) throw std::domain_error("hurwitz_zeta: requires s > 1");
    if (!(v > 0.0)) throw std::domain_error("hurwitz_zeta: requires v > 0");
    return lerch_phi({1.0, s, v}, tol);
}

AccelResult polylog(double s, double z, const ToleranceSpec& tol) {
    AccelResult r = lerch_phi({z, s, 1.0}, tol);
    r.value *= z;
    r.error_estimate *= std::abs(z);
    return r;
}

namespace {

constexpr std::int64_t kHarmonicCrossover = 10'000;

const std::vector<double>& harmonic_cache() {
    // magic-static: built exactly once, read-only afterwards
    static const std::vector<double> cache = [] {
        std::vector<double> h(kHarmonicCrossover + 1);
        h[0] = 0.0;
        for (std::int64_t k = 1; k <= kHarmonicCrossover; ++k)
            h[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(k) - 1] + 1.0 / static_cast<double>(k);
        return h;
    }();
    return cache;
}

}  // namespace

double harmonic_number(std::int64_t k) {
    if (k < 1) throw std::domain_error("harmonic_number: requires k >= 1");
    if (k <= kHarmonicCrossover) return harmonic_cache()[static_cast<std::size_t>(k)];
    const double x = static_cast<double>(k);
    const double x2 = x * x;
    return std::log(x) + kEulerGamma + 1.0 / (2.0 * x) - 1.0 / (12.0 * x2) + 1.0 / (120.0 * x2 * x2);
}

AccelResult euler_harmonic_sum(const ToleranceSpec& tol) {
    return cnct_sum(euler_harmonic_term(), tol);
}

}  // namespace cnct
