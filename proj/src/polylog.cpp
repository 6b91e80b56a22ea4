#include "hopfmzv/polylog.hpp"

#include <stdexcept>

namespace hopfmzv {

namespace {

PowerSeriesT apply_J_power(PowerSeriesT s, int k)
{
    for (int i = 0; i < k; ++i)
        s = op_J(s);
    for (int i = 0; i < -k; ++i)
        s = op_delta(s);
    return s;
}

// m^{-k} for any sign of k.
Rational inverse_power(long m, int k)
{
    Rational base(m);
    return k >= 0 ? Rational(1) / base.pow(static_cast<unsigned>(k)) : base.pow(static_cast<unsigned>(-k));
}

} // namespace

PowerSeriesT li_J(const std::vector<int>& k, int T)
{
    if (k.empty())
        throw std::invalid_argument("li_J needs at least one index");
    const PowerSeriesT y = PowerSeriesT::geometric_tail(T);
    PowerSeriesT s = apply_J_power(y, k.back());
    for (std::size_t j = k.size() - 1; j-- > 0;)
        s = apply_J_power(y * s, k[j]);
    return s;
}

PowerSeriesT li_nested(const std::vector<int>& k, int T)
{
    if (k.empty())
        throw std::invalid_argument("li_nested needs at least one index");
    // level[m] = sum over chains m = m_j > m_{j+1} > ... > m_n > 0 of prod_{i>=j} m_i^{-k_i}.
    std::vector<Rational> level(T + 1, Rational(0));
    for (int m = 1; m <= T; ++m)
        level[m] = inverse_power(m, k.back());
    for (std::size_t j = k.size() - 1; j-- > 0;) {
        std::vector<Rational> next(T + 1, Rational(0));
        Rational below(0);
        for (int m = 1; m <= T; ++m) {
            next[m] = inverse_power(m, k[j]) * below;
            below += level[m];
        }
        level = std::move(next);
    }
    return PowerSeriesT(std::move(level));
}

} // namespace hopfmzv
