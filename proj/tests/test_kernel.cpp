// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cnct/kernel.hpp"
#include "testutil.hpp"

using namespace cnct;
using testutil::bounded_walk;
using testutil::geometric_sums;
using testutil::rel_error;
using testutil::ulp_distance;

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

TEST_CASE("partial_sums accumulates running sums") {
    auto geo = partial_sums([](std::int64_t k) { return std::pow(0.5, static_cast<double>(k)); }, 2);
    CHECK(geo == std::vector<double>{1.0, 1.5, 1.75});

    auto zeta2 = partial_sums([](std::int64_t k) { return 1.0 / ((k + 1.0) * (k + 1.0)); }, 1);
    CHECK(zeta2 == std::vector<double>{1.0, 1.25});

    auto alt = partial_sums([](std::int64_t k) { return (k % 2 == 0 ? 1.0 : -1.0) / (k + 1.0); }, 2);
    CHECK(alt[0] == 1.0);
    CHECK(alt[1] == 0.5);
    CHECK(alt[2] == doctest::Approx(0.8333333333333333).epsilon(1e-15));
}

TEST_CASE("partial_sums rejects non-finite terms with the offending index") {
    auto bad = [](std::int64_t k) { return k == 3 ? std::numeric_limits<double>::infinity() : 1.0; };
    CHECK_THROWS_WITH_AS(partial_sums(bad, 5), "non-finite series term at index 3", std::domain_error);
    CHECK_THROWS_AS(partial_sums([](std::int64_t) { return 1.0; }, -1), std::domain_error);
}

TEST_CASE("delta_estimate: geometric series is summed exactly at order 1") {
    CHECK(delta_estimate(geometric_sums(0.5, 3)) == 2.0);
}

TEST_CASE("delta_estimate: alternating harmonic order 1 equals 7/10") {
    std::vector<double> s{1.0, 0.5, 0.8333333333333333};
    CHECK(delta_estimate(s) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("delta_estimate: alternating harmonic order 10 hits ln 2") {
    auto s = partial_sums([](std::int64_t k) { return (k % 2 == 0 ? 1.0 : -1.0) / (k + 1.0); }, 11);
    CHECK(std::abs(delta_estimate(s) - kLn2) <= 1e-10);
}

TEST_CASE("delta_estimate: terminated series returns the exact finite sum") {
    std::vector<double> s{1.0, 1.25, 1.3125, 1.3125, 1.3125};
    CHECK(delta_estimate(s) == 1.3125);
    // a zero difference not followed by a zero tail violates the contract
    std::vector<double> bad{1.0, 1.25, 1.25, 1.5};
    CHECK_THROWS_AS(delta_estimate(bad), std::domain_error);
}

TEST_CASE("delta_estimate: input validation") {
    std::vector<double> one{1.0};
    CHECK_THROWS_AS(delta_estimate(one), std::domain_error);
    std::vector<double> nan{1.0, std::nan(""), 2.0};
    CHECK_THROWS_AS(delta_estimate(nan), std::domain_error);
    std::vector<double> ok{1.0, 1.5, 1.75};
    CHECK_THROWS_AS(delta_estimate(ok, 0.0), std::domain_error);
    CHECK_THROWS_AS(delta_estimate(ok, -1.0), std::domain_error);
}

TEST_CASE("delta_estimate: breakdown carries the last healthy estimate") {
    // constant-difference input: omega_n = 1 for all n makes every
    // denominator column cancel exactly from order 2 on
    std::vector<double> s{0.0, 1.0, 2.0, 3.0, 4.0};
    try {
        (void)delta_estimate(s);
        FAIL("expected BreakdownError");
    } catch (const BreakdownError& e) {
        CHECK(std::isfinite(e.last_estimate()));
        CHECK(e.order() >= 0);
    }
}

TEST_CASE("DeltaAccelerator: no estimate until the second sum") {
    DeltaAccelerator<double> acc;
    acc.push(1.0);
    CHECK(!acc.estimate().has_value());
    CHECK(acc.consumed() == 1);
    CHECK(acc.order() == -1);
    acc.push(1.5);
    REQUIRE(acc.estimate().has_value());
    CHECK(*acc.estimate() == 1.0);  // order 0 is s_0 itself
    acc.push(1.75);
    CHECK(*acc.estimate() == 2.0);
    CHECK(acc.order() == 1);
}

TEST_CASE("DeltaAccelerator: beta must be positive, sums finite") {
    CHECK_THROWS_AS(DeltaAccelerator<double>(0.0), std::domain_error);
    DeltaAccelerator<double> acc;
    CHECK_THROWS_AS(acc.push(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("DeltaAccelerator: zero difference terminates with the exact sum") {
    DeltaAccelerator<double> acc;
    acc.push(2.5);
    acc.push(2.5);
    CHECK(acc.terminated());
    CHECK(*acc.estimate() == 2.5);
    acc.push(2.5);  // still fine
    CHECK(*acc.estimate() == 2.5);
    CHECK_THROWS_AS(acc.push(3.0), std::domain_error);
}

TEST_CASE("DeltaAccelerator: breakdown freezes the estimate") {
    DeltaAccelerator<double> acc;
    for (double v : {0.0, 1.0, 2.0, 3.0, 4.0, 5.0}) acc.push(v);
    CHECK(acc.broke_down());
    REQUIRE(acc.estimate().has_value());
    const double frozen = *acc.estimate();
    acc.push(123.0);  // sticky: accepted, ignored
    CHECK(*acc.estimate() == frozen);
}

TEST_CASE("property: online and offline delta agree to <= 4 ulp") {
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_int_distribution<int> len(4, 16);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = bounded_walk(rng, len(rng));
        const double offline = delta_estimate(s);
        DeltaAccelerator<double> acc;
        for (double v : s) acc.push(v);
        REQUIRE(acc.estimate().has_value());
        CHECK(ulp_distance(*acc.estimate(), offline) <= 4);
    }
}

TEST_CASE("property: delta scaling covariance is exact for representable scale factors") {
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_int_distribution<int> len(4, 16);
    std::uniform_int_distribution<int> expo(-20, 20);
    std::bernoulli_distribution neg(0.5);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = bounded_walk(rng, len(rng));
        const double d0 = delta_estimate(s);
        const double c = std::ldexp(neg(rng) ? -1.0 : 1.0, expo(rng));
        std::vector<double> sc(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) sc[i] = c * s[i];
        CHECK(ulp_distance(delta_estimate(sc), c * d0) <= 4);
    }
}

TEST_CASE("property: delta translation covariance") {
    // Translating the inputs perturbs each difference by the rounding of
    // s_j + d, which the transformation then amplifies; 1e-10 holds with a
    // wide margin for O(1) walks (measured worst ~8e-12).
    std::mt19937_64 rng(0x5eed0003);
    std::uniform_int_distribution<int> len(4, 12);
    std::uniform_real_distribution<double> shift(-2.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = bounded_walk(rng, len(rng));
        const double d0 = delta_estimate(s);
        const double d = shift(rng);
        std::vector<double> st(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) st[i] = s[i] + d;
        const double d1 = delta_estimate(st);
        if (std::abs(d0 + d) > 1e-2) CHECK(rel_error(d1, d0 + d) <= 1e-10);
    }
}

TEST_CASE("property: geometric exactness of the delta diagonal") {
    std::mt19937_64 rng(0x5eed0004);
    std::bernoulli_distribution neg(0.5);

    SUBCASE("strict: |z| <= 0.5, orders 1..2, within 8 ulp") {
        std::uniform_real_distribution<double> zdist(0.05, 0.5);
        std::uniform_int_distribution<int> order(1, 2);
        for (int trial = 0; trial < 1000; ++trial) {
            const double z = (neg(rng) ? -1 : 1) * zdist(rng);
            const int n = order(rng);
            const double est = delta_estimate(geometric_sums(z, n + 2));
            CHECK(ulp_distance(est, 1.0 / (1.0 - z)) <= 8);
        }
    }
    SUBCASE("wide: |z| <= 0.9, orders 1..10, conditioning-limited tolerance") {
        std::uniform_real_distribution<double> zdist(0.05, 0.9);
        std::uniform_int_distribution<int> order(1, 10);
        for (int trial = 0; trial < 1000; ++trial) {
            const double z = (neg(rng) ? -1 : 1) * zdist(rng);
            const int n = order(rng);
            const double est = delta_estimate(geometric_sums(z, n + 2));
            CHECK(rel_error(est, 1.0 / (1.0 - z)) <= 2e-10);
        }
    }
}

TEST_CASE("epsilon_estimate: geometric 3-sum case is the Shanks transform") {
    CHECK(epsilon_estimate(geometric_sums(0.5, 3)) == 2.0);
}

TEST_CASE("epsilon_estimate: constant sequence trips the degenerate guard") {
    std::vector<double> s{3.14, 3.14, 3.14};
    CHECK(epsilon_estimate(s) == 3.14);
    EpsilonTable<double> table{std::span<const double>(s)};
    CHECK(table.max_even_column() == 0);
    CHECK(table.degenerate_difference_seen());
}

TEST_CASE("epsilon_estimate: alternating harmonic, 12 sums") {
    auto s = partial_sums([](std::int64_t k) { return (k % 2 == 0 ? 1.0 : -1.0) / (k + 1.0); }, 11);
    CHECK(std::abs(epsilon_estimate(s) - kLn2) <= 1e-8);
    EpsilonTable<double> table{std::span<const double>(s)};
    CHECK(table.max_even_column() == 10);
}

TEST_CASE("epsilon_estimate: needs at least 3 sums; only even columns exposed") {
    std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(epsilon_estimate(two), std::domain_error);
    EpsilonTable<double> table{std::span<const double>(geometric_sums(0.5, 5))};
    CHECK(table.max_even_column() % 2 == 0);
}

TEST_CASE("property: geometric exactness of epsilon estimates") {
    std::mt19937_64 rng(0x5eed0005);
    std::bernoulli_distribution neg(0.5);

    SUBCASE("strict: column 2 at |z| <= 0.5, within 8 ulp") {
        std::uniform_real_distribution<double> zdist(0.05, 0.5);
        for (int trial = 0; trial < 1000; ++trial) {
            const double z = (neg(rng) ? -1 : 1) * zdist(rng);
            const double est = epsilon_estimate(geometric_sums(z, 3));
            CHECK(ulp_distance(est, 1.0 / (1.0 - z)) <= 8);
        }
    }
    SUBCASE("wide: |z| <= 0.9, any length, returned estimate") {
        std::uniform_real_distribution<double> zdist(0.05, 0.9);
        std::uniform_int_distribution<int> len(3, 18);
        for (int trial = 0; trial < 1000; ++trial) {
            const double z = (neg(rng) ? -1 : 1) * zdist(rng);
            const double est = epsilon_estimate(geometric_sums(z, len(rng)));
            CHECK(rel_error(est, 1.0 / (1.0 - z)) <= 1e-13);
        }
    }
}

TEST_CASE("property: epsilon scaling invariance for representable factors") {
    std::mt19937_64 rng(0x5eed0006);
    std::uniform_int_distribution<int> len(3, 14);
    std::uniform_int_distribution<int> expo(-20, 20);
    std::bernoulli_distribution neg(0.5);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = bounded_walk(rng, len(rng));
        const double e0 = epsilon_estimate(s);
        const double c = std::ldexp(neg(rng) ? -1.0 : 1.0, expo(rng));
        std::vector<double> sc(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) sc[i] = c * s[i];
        CHECK(ulp_distance(epsilon_estimate(sc), c * e0) <= 4);
    }
}
