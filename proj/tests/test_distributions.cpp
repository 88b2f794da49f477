// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cnct/distributions.hpp"
#include "testutil.hpp"

using namespace cnct;
using testutil::rel_error;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kPhi09_2_1 = 1.444127470005509694635;  // Phi(0.9, 2, 1), offline oracle

}  // namespace

TEST_CASE("normalization constants of the classic family members") {
    CHECK(rel_error(LerchDistribution({1.0, 2.0, 1.0}).norm(), kPi * kPi / 6.0) <= 1e-14);
    CHECK(rel_error(LerchDistribution({0.5, 0.0, 1.0}).norm(), 2.0) <= 1e-14);
    CHECK(rel_error(LerchDistribution({1.0, 3.0, 2.0}).norm(), kZeta3 - 1.0) <= 1e-13);
}

TEST_CASE("construction rejects out-of-family parameters") {
    CHECK_THROWS_AS(LerchDistribution({-0.5, 2.0, 1.0}), std::domain_error);  // negative z
    CHECK_THROWS_AS(LerchDistribution({1.5, 2.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(LerchDistribution({0.5, 2.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(LerchDistribution({1.0, 1.0, 1.0}), std::domain_error);  // Zipf needs s > 1
}

TEST_CASE("pmf values") {
    const LerchDistribution zipf({1.0, 2.0, 1.0});
    CHECK(rel_error(zipf.pmf(0), 0.6079271018540267) <= 1e-14);

    const LerchDistribution geometric({0.5, 0.0, 1.0});
    CHECK(rel_error(geometric.pmf(2), 0.125) <= 1e-14);

    const LerchDistribution lerch({0.9, 2.0, 1.0});
    CHECK(rel_error(lerch.pmf(1), 0.9 * 0.25 / kPhi09_2_1) <= 1e-13);

    CHECK_THROWS_AS(zipf.pmf(-1), std::domain_error);
}

TEST_CASE("cdf values, saturation, and clamping") {
    const LerchDistribution geometric({0.5, 0.0, 1.0});
    CHECK(rel_error(geometric.cdf(1), 0.75) <= 1e-14);
    CHECK(geometric.cdf(200) == 1.0);  // saturated and clamped

    const LerchDistribution zipf({1.0, 2.0, 1.0});
    CHECK(rel_error(zipf.cdf(1), 7.5 / (kPi * kPi)) <= 1e-14);

    const LerchDistribution soft({0.9, 2.0, 1.0});
    CHECK(soft.cdf(500) >= 1.0 - (soft.norm_error() + 1e-12));
    CHECK(soft.cdf(500) <= 1.0);
}

TEST_CASE("quantile values") {
    const LerchDistribution geometric({0.5, 0.0, 1.0});
    CHECK(geometric.quantile(0.5) == 0);
    CHECK(geometric.quantile(0.75) == 1);
    CHECK(geometric.quantile(0.0) == 0);

    const LerchDistribution zipf({1.0, 2.0, 1.0});
    CHECK(zipf.quantile(0.6) == 0);

    CHECK_THROWS_AS(geometric.quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(geometric.quantile(-0.1), std::domain_error);
}

TEST_CASE("moments") {
    const LerchDistribution geometric({0.5, 0.0, 1.0});
    const AccelResult mean = geometric.moment(1);
    CHECK(mean.converged);
    CHECK(rel_error(mean.value, 1.0) <= 1e-12);  // z/(1-z)
    const AccelResult second = geometric.moment(2);
    CHECK(rel_error(second.value, 3.0) <= 1e-12);  // z(1+z)/(1-z)^2

    const LerchDistribution zipf3({1.0, 3.0, 1.0});
    const AccelResult zipf_mean = zipf3.moment(1);
    CHECK(zipf_mean.converged);
    CHECK(rel_error(zipf_mean.value, kZeta2 / kZeta3 - 1.0) <= 1e-12);

    const LerchDistribution point({0.0, 2.0, 1.0});
    CHECK(point.moment(1).value == 0.0);

    CHECK_THROWS_AS(LerchDistribution({1.0, 2.0, 1.0}).moment(1), std::domain_error);  // s <= r+1
    CHECK_THROWS_AS(geometric.moment(0), std::domain_error);
}

TEST_CASE("moment against a brute-force partial sum") {
    const LerchDistribution d({0.9, 2.0, 1.0});
    double brute = 0.0;
    for (std::int64_t k = 2000; k >= 0; --k) brute += static_cast<double>(k) * d.pmf(k);
    const AccelResult m = d.moment(1, {1e-12, 1e-300, 50, 10'000'000});
    CHECK(m.converged);
    CHECK(rel_error(m.value, brute) <= 1e-11);
}

TEST_CASE("z = 0 is the point mass at the origin") {
    const LerchDistribution point({0.0, 2.0, 1.0});
    CHECK(point.pmf(0) == 1.0);
    CHECK(point.pmf(3) == 0.0);
    CHECK(point.cdf(0) == 1.0);
    CHECK(point.quantile(0.99) == 0);
}

TEST_CASE("special-case collapse to the classic closed forms") {
    // Zipf: pmf proportional to (k+1)^-s
    const LerchDistribution zipf({1.0, 2.0, 1.0});
    for (std::int64_t k = 0; k <= 20; ++k) {
        const double expected = std::pow(k + 1.0, -2.0) / kZeta2;
        CHECK(rel_error(zipf.pmf(k), expected) <= 1e-14);
    }
    // geometric: pmf = z^k (1 - z)
    const LerchDistribution geometric({0.5, 0.0, 1.0});
    for (std::int64_t k = 0; k <= 20; ++k) {
        const double expected = std::pow(0.5, static_cast<double>(k)) * 0.5;
        CHECK(rel_error(geometric.pmf(k), expected) <= 1e-14);
    }
}

TEST_CASE("property: normalization, monotone cdf, quantile Galois connection") {
    const std::vector<LerchParams> grid = {
        {0.5, 0.0, 1.0}, {0.9, 2.0, 1.0}, {1.0, 2.0, 1.0}, {1.0, 3.0, 2.0}, {0.7, -1.0, 0.5}};
    std::mt19937_64 rng(0x5eed0007);
    std::uniform_real_distribution<double> pdist(0.0, 0.999);

    for (const auto& params : grid) {
        const LerchDistribution d(params);

        // cdf is monotone and saturates to total probability 1
        double prev = 0.0;
        for (std::int64_t k = 0; k <= 64; ++k) {
            const double c = d.cdf(k);
            CHECK(c >= prev);
            CHECK(c <= 1.0);
            prev = c;
        }
        if (params.z < 1.0) {
            const std::int64_t far = 2000;
            CHECK(d.cdf(far) >= 1.0 - (d.norm_error() + 1e-12));
        }

        // Galois connection of quantile and cdf
        for (int trial = 0; trial < 200; ++trial) {
            const double p = pdist(rng);
            const std::int64_t q = d.quantile(p);
            CHECK(d.cdf(q) >= p);
            if (q > 0) CHECK(d.cdf(q - 1) < p);
        }
    }
}
