#pragma once

#include "hopfmzv/rational.hpp"

namespace hopfmzv {

/// Bernoulli number B_n from t e^t / (e^t - 1) = sum B_m t^m / m!, so B_1 = +1/2.
///
/// Values are memoized in a process-wide table guarded by a mutex.
Rational bernoulli(unsigned n);

} // namespace hopfmzv
