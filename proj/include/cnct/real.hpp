// SPDX-License-Identifier: MIT

#ifndef CNCT_REAL_HPP
#define CNCT_REAL_HPP

#include <cmath>
#include <concepts>
#include <limits>

namespace cnct {

// Bring the standard math entry points into this namespace so that
// unqualified calls below resolve for the builtin floating types and,
// via ADL, for user-supplied arithmetic types.
using std::abs;
using std::isfinite;
using std::log;
using std::pow;

/// Arithmetic contract the sequence kernel is written against: field
/// operations, total order, absolute value, ln, power, and finiteness
/// classification. binary64 (`double`) is the conformance type; an
/// extended-precision type satisfying the same contract can be dropped in.
template <typename R>
concept RealArithmetic =
    std::totally_ordered<R> &&
    std::constructible_from<R, int> &&
    std::constructible_from<R, double> &&
    requires(R a, R b) {
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { a / b } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        { abs(a) } -> std::convertible_to<R>;
        { log(a) } -> std::convertible_to<R>;
        { pow(a, b) } -> std::convertible_to<R>;
        { isfinite(a) } -> std::convertible_to<bool>;
    };

static_assert(RealArithmetic<double>);

}  // namespace cnct

#endif
