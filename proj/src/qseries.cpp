#include "hopfmzv/qseries.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace hopfmzv {

namespace {

// (1 - q^m)^{e} to q^Q for any integer e.
PowerSeriesT one_minus_q_power(int m, int e, int Q)
{
    PowerSeriesT r(Q);
    if (e >= 0) {
        for (int i = 0; i <= e && i * m <= Q; ++i)
            r[i * m] = binomial(static_cast<unsigned>(e), static_cast<unsigned>(i)) * Rational(i % 2 == 0 ? 1 : -1);
    } else {
        const unsigned p = static_cast<unsigned>(-e);
        for (int i = 0; i * m <= Q; ++i)
            r[i * m] = binomial(static_cast<unsigned>(i) + p - 1, static_cast<unsigned>(i));
    }
    return r;
}

PowerSeriesT nested_q_sum(const std::vector<int>& e, int Q)
{
    if (e.empty())
        throw std::invalid_argument("q-series need at least one index");
    // level[m] = sum over chains m = m_j > ... > m_n > 0 of prod_{i>=j} (1 - q^{m_i})^{k_i}.
    std::vector<PowerSeriesT> level;
    for (int m = 0; m <= Q; ++m)
        level.push_back(m == 0 ? PowerSeriesT(Q) : one_minus_q_power(m, e.back(), Q));
    for (std::size_t j = e.size() - 1; j-- > 0;) {
        std::vector<PowerSeriesT> next(Q + 1, PowerSeriesT(Q));
        PowerSeriesT below(Q);
        for (int m = 1; m <= Q; ++m) {
            next[m] = one_minus_q_power(m, e[j], Q) * below;
            below = below + level[m];
        }
        level = std::move(next);
    }
    PowerSeriesT total(Q);
    for (int m = 1; m <= Q; ++m)
        for (int b = 0; b + m <= Q; ++b)
            total[b + m] += level[m][b];
    return total;
}

BivariateSeries apply_q_power(BivariateSeries s, int e)
{
    for (int i = 0; i < e; ++i)
        s = op_Pq(s);
    for (int i = 0; i < -e; ++i)
        s = op_Dq(s);
    return s;
}

} // namespace

PowerSeriesT qz_series(const IndexVector& k, int Q)
{
    std::vector<int> e(k.k.begin(), k.k.end());
    return nested_q_sum(e, Q);
}

PowerSeriesT qz_series_signed(const std::vector<int>& e, int Q)
{
    std::vector<int> flipped;
    for (int x : e)
        flipped.push_back(-x);
    return nested_q_sum(flipped, Q);
}

QzRational qz_rational(const IndexVector& k)
{
    QzRational r;
    const std::size_t n = k.k.size();
    std::vector<unsigned> levels;
    std::function<void(std::size_t, unsigned, Rational)> walk = [&](std::size_t j, unsigned base, Rational c) {
        if (j == n) {
            r.terms.push_back({c, levels});
            return;
        }
        for (unsigned l = 0; l <= k.k[j]; ++l) {
            levels.push_back(base + l + 1);
            // (-1)^{l_j + 1} per factor gives the overall (-1)^{|l| + n}.
            walk(j + 1, base + l, c * binomial(k.k[j], l) * Rational(l % 2 == 0 ? -1 : 1));
            levels.pop_back();
        }
    };
    walk(0, 0, Rational(1));
    return r;
}

PowerSeriesT QzRational::expand(int Q) const
{
    PowerSeriesT total(Q);
    for (const auto& term : terms) {
        PowerSeriesT prod(Q);
        prod[0] = term.coeff;
        for (unsigned L : term.levels) {
            PowerSeriesT f(Q);
            for (int r = 1; static_cast<long>(r) * L <= Q; ++r)
                f[r * static_cast<int>(L)] = Rational(-1);
            prod = prod * f;
        }
        total = total + prod;
    }
    return total;
}

std::string QzRational::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms) {
        if (term.coeff.is_zero())
            continue;
        Rational c = term.coeff;
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        if (a != Rational(1))
            os << a << "*";
        for (std::size_t i = 0; i < term.levels.size(); ++i) {
            if (i)
                os << "*";
            os << "q^" << term.levels[i] << "/(q^" << term.levels[i] << "-1)";
        }
    }
    if (first)
        os << "0";
    return os.str();
}

BivariateSeries q_operator_iteration(const std::vector<int>& e, int t_truncation, int q_truncation)
{
    if (e.empty())
        throw std::invalid_argument("q_operator_iteration needs at least one index");
    const BivariateSeries y = BivariateSeries::geometric_tail(t_truncation, q_truncation);
    BivariateSeries s = apply_q_power(y, e.back());
    for (std::size_t j = e.size() - 1; j-- > 0;)
        s = apply_q_power(y * s, e[j]);
    return s;
}

} // namespace hopfmzv
