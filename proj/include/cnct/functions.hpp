// SPDX-License-Identifier: MIT

#ifndef CNCT_FUNCTIONS_HPP
#define CNCT_FUNCTIONS_HPP

#include <cstdint>

#include "cnct/accel.hpp"
#include "cnct/oracle.hpp"

namespace cnct {

/// Euler-Mascheroni constant, 30 significant digits.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

/// Arguments of the Lerch transcendent Phi(z, s, v) = sum_{n>=0} z^n / (n+v)^s.
/// Requires v > 0 and -1 < z <= 1, with s > 1 when z = 1.
struct LerchParams {
    double z;
    double s;
    double v;

    void validate() const;
};

/// |z| threshold separating the evaluation regimes of lerch_phi: above it
/// the series converges too slowly for plain summation and an accelerated
/// route is used. Overridable per call.
inline constexpr double kLerchDispatchThreshold = 0.5;

/// Term oracles for the built-in series (shared by the evaluators, the
/// CLI's convergence tables, and method comparisons).
TermOracle lerch_term(const LerchParams& p);              // z^n / (n+v)^s, n >= 0
TermOracle zeta_term(double s);                           // (k+1)^-s
TermOracle hurwitz_term(double s, double v);              // (k+v)^-s
TermOracle polylog_term(double s, double z);              // z^(k+1) / (k+1)^s
TermOracle euler_harmonic_term();                         // H_{k+1}^2 / (k+1)^2

/// Lerch transcendent. Route selection: condensation + delta (CNCT) for
/// z above the threshold (nonnegative, slowly convergent terms), the delta
/// transformation on the raw sums for z below its negative (alternating
/// regime), plain summation in between where geometric decay needs no
/// help.
AccelResult lerch_phi(const LerchParams& p, const ToleranceSpec& tol = {},
                      double dispatch_threshold = kLerchDispatchThreshold);

/// Riemann zeta via CNCT over (k+1)^-s; requires s > 1.
AccelResult riemann_zeta(double s, const ToleranceSpec& tol = {});

/// Hurwitz (generalized) zeta: lerch_phi at z = 1; requires s > 1, v > 0.
AccelResult hurwitz_zeta(double s, double v, const ToleranceSpec& tol = {});

/// Polylogarithm Li_s(z) = z * Phi(z, s, 1); requires -1 < z <= 1, and
/// s > 1 when z = 1.
AccelResult polylog(double s, double z, const ToleranceSpec& tol = {});

/// Harmonic number H_k. Exact cached running sums up to k = 10^4, then the
/// asymptotic expansion ln k + gamma + 1/(2k) - 1/(12 k^2) + 1/(120 k^4),
/// whose error at the crossover (~k^-6) sits far below double precision.
/// Total on k >= 1; the cache is built once and read-only afterwards.
double harmonic_number(std::int64_t k);

/// sum_{k>=1} H_k^2 / k^2 via CNCT (= 17 pi^4 / 360). Condensation probes
/// indices near 2^60, where the asymptotic harmonic branch is essential.
AccelResult euler_harmonic_sum(const ToleranceSpec& tol = {});

}  // namespace cnct

#endif
