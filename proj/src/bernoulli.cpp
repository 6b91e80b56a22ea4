#include "hopfmzv/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace hopfmzv {

namespace {

std::mutex cache_mutex;
std::vector<Rational> cache{Rational(1)};

} // namespace

Rational bernoulli(unsigned n)
{
    std::lock_guard lock(cache_mutex);
    // Comparing t^{m+1} coefficients of t e^t = (e^t - 1) sum B_k t^k/k! gives
    // sum_{k=0}^{m} binom(m+1, k) B_k = m + 1.
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        Rational acc(static_cast<long>(m) + 1);
        for (unsigned k = 0; k < m; ++k)
            acc -= binomial(m + 1, k) * cache[k];
        cache.push_back(acc / Rational(static_cast<long>(m) + 1));
    }
    return cache[n];
}

} // namespace hopfmzv
