#pragma once

#include "zetaforge/rational.hpp"

namespace zetaforge {

/// Generalized harmonic number H_j^(a) = sum_{i=1..j} 1/i^a, exact.
/// Memoized process-wide behind a mutex; safe to call from any thread.
BigRational harmonic(unsigned j, unsigned a);

/// lcm(1, 2, ..., n). lcm(1^k, ..., n^k) is this value to the k-th power.
BigInt lcm_upto(unsigned n);

}  // namespace zetaforge
