// SPDX-License-Identifier: MIT

#ifndef CNCT_ORACLE_HPP
#define CNCT_ORACLE_HPP

#include <cstdint>
#include <functional>

namespace cnct {

/// A series is represented by a pure, deterministic map from a 0-based
/// term index to the term's value. Oracles must be reentrant: drivers and
/// the condensation layer may probe indices in any order.
using TermOracle = std::function<double(std::int64_t)>;

}  // namespace cnct

#endif
