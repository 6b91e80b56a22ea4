#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "hopfmzv/bernoulli.hpp"
#include "hopfmzv/errors.hpp"
#include "hopfmzv/json_io.hpp"
#include "hopfmzv/polylog.hpp"
#include "hopfmzv/qseries.hpp"
#include "hopfmzv/realizations.hpp"

using namespace hopfmzv;

namespace {

Word w(const char* s)
{
    return Word::parse(s);
}

// z^N coefficient of psi(w) straight from the l-sum of products of f(L z).
Rational psi_coefficient_oracle(const std::vector<unsigned>& k, int N)
{
    const std::size_t n = k.size();
    Rational total(0);
    // Distribute exponents e_j = m_j - 1 >= -1 with sum N.
    std::function<void(std::size_t, int, std::vector<unsigned>&)> over_m = [&](std::size_t i, int left,
                                                                                 std::vector<unsigned>& m) {
        if (i == n) {
            if (left != 0)
                return;
            // Sum over l with L_j = l_1 + ... + l_j + 1.
            std::function<void(std::size_t, long, Rational)> over_l = [&](std::size_t j, long base, Rational acc) {
                if (j == n) {
                    total += acc;
                    return;
                }
                for (unsigned l = 0; l <= k[j]; ++l) {
                    Rational L(base + l + 1);
                    Rational p = m[j] == 0 ? Rational(1) / L : L.pow(m[j] - 1);
                    Rational sign(l % 2 == 1 ? 1 : -1);
                    over_l(j + 1, base + l, acc * sign * binomial(k[j], l) * p * bernoulli(m[j]) / factorial(m[j]));
                }
            };
            over_l(0, 0, Rational(1));
            return;
        }
        int budget = left + static_cast<int>(n - i - 1);
        for (int e = -1; e <= budget; ++e) {
            m[i] = static_cast<unsigned>(e + 1);
            over_m(i + 1, left - e, m);
        }
    };
    std::vector<unsigned> m(n);
    over_m(0, N, m);
    return total;
}

// sum over m_1 > ... > m_n > 0 with m_1 <= T, enumerated chain by chain.
template <class Term>
PowerSeriesT chains(std::size_t n, int T, Term term)
{
    PowerSeriesT out(T);
    std::vector<int> m(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int above) {
        if (i == n) {
            out[m[0]] += term(m);
            return;
        }
        for (int v = 1; v < above; ++v) {
            m[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, T + 1);
    return out;
}

} // namespace

TEST(Phi, FixtureSeries)
{
    for (const auto& f : load_fixtures(default_fixture_path()).series) {
        if (f.character != "phi")
            continue;
        LaurentSeries s = phi(f.word, f.series.valid_through());
        EXPECT_TRUE(agree_through(s, f.series, f.series.valid_through())) << f.word << ": " << s;
        EXPECT_EQ(s.valid_through(), f.series.valid_through());
    }
}

TEST(Psi, FixtureSeries)
{
    for (const auto& f : load_fixtures(default_fixture_path()).series) {
        if (f.character != "psi")
            continue;
        LaurentSeries s = psi(f.word, f.series.valid_through());
        EXPECT_TRUE(agree_through(s, f.series, f.series.valid_through())) << f.word << ": " << s;
    }
}

TEST(Phi, EmptyWordAndErrors)
{
    EXPECT_EQ(phi(Word(), 3), LaurentSeries::one());
    EXPECT_EQ(psi(Word(), 3), LaurentSeries::one());
    EXPECT_THROW(phi(w("yd"), 2), NotAdmissible);
    EXPECT_THROW(psi(w("d"), 2), NotAdmissible);
}

TEST(Phi, StarvedPlanRaises)
{
    PrecisionPlan starved{-100};
    EXPECT_THROW(phi(w("dydy"), 2, starved), PrecisionExceeded);
}

TEST(Phi, DepthOneClosedForm)
{
    // D^k x: the pole gives -(-1)^k k! z^{-1-k}; z^n gives -B_{n+1}/(n+1)! n!/(n-k)! z^{n-k}.
    const int through = 6;
    for (unsigned k = 0; k <= 6; ++k) {
        LaurentSeries s = phi(indices_to_word(IndexVector{{k}}), through);
        for (int e = -static_cast<int>(k) - 1; e <= through; ++e) {
            Rational expected(0);
            if (e == -static_cast<int>(k) - 1)
                expected = Rational(k % 2 == 0 ? -1 : 1) * factorial(k);
            else if (e >= 0) {
                unsigned n = static_cast<unsigned>(e) + k;
                expected = -bernoulli(n + 1) / factorial(n + 1) * factorial(n) / factorial(n - k);
            }
            EXPECT_EQ(s.coefficient(e), expected) << "k=" << k << " z^" << e;
        }
    }
}

TEST(Psi, CoefficientExamples)
{
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned m = 1; m <= k; ++m)
            EXPECT_EQ(psi_C(IndexVector{{k}}, {m}), Rational(0)) << k << "," << m;
        Rational sign(k % 2 == 0 ? -1 : 1);
        EXPECT_EQ(psi_C(IndexVector{{k}}, {k + 1}), sign * factorial(k));
    }
    EXPECT_EQ(psi_C(IndexVector{{0}}, {1}), Rational(-1));
    EXPECT_THROW(psi_C(IndexVector{{1, 1}}, {1}), std::invalid_argument);
}

TEST(Psi, MatchesDirectLSum)
{
    const int through = 3;
    for (const Word& word : admissible_words(5)) {
        if (word.depth() > 3)
            continue;
        std::vector<unsigned> k = word_to_indices(word).k;
        LaurentSeries s = psi(word, through);
        for (int N = -static_cast<int>(k.size()); N <= through; ++N)
            EXPECT_EQ(s.coefficient(N), psi_coefficient_oracle(k, N)) << word << " z^" << N;
    }
}

TEST(Psi, DepthOneRegularPartStartsAtWeight)
{
    for (unsigned k = 1; k <= 5; ++k) {
        LaurentSeries s = psi(indices_to_word(IndexVector{{k}}), static_cast<int>(k) + 1);
        EXPECT_EQ(s.coefficient(-1), Rational(-1, static_cast<long>(k) + 1));
        for (int e = 0; e < static_cast<int>(k); ++e)
            EXPECT_EQ(s.coefficient(e), Rational(0)) << "k=" << k << " z^" << e;
    }
}

TEST(Polylog, Examples)
{
    PowerSeriesT a = li_J({-1}, 6);
    for (int m = 1; m <= 6; ++m)
        EXPECT_EQ(a[m], Rational(m));
    PowerSeriesT b = li_J({1}, 6);
    for (int m = 1; m <= 6; ++m)
        EXPECT_EQ(b[m], Rational(1, m));
    EXPECT_EQ(li_J({0}, 4), PowerSeriesT::geometric_tail(4));
}

TEST(Polylog, IteratedOperatorsMatchNestedSums)
{
    const int T = 9;
    std::vector<std::vector<int>> cases{{2}, {-2}, {1, 1}, {-1, -1}, {2, -1}, {-3, 1}, {0, 0, 0}, {1, -2, 0}};
    for (const auto& k : cases) {
        PowerSeriesT oracle = chains(k.size(), T, [&](const std::vector<int>& m) {
            Rational t(1);
            for (std::size_t i = 0; i < k.size(); ++i)
                t *= k[i] <= 0 ? Rational(m[i]).pow(static_cast<unsigned>(-k[i]))
                              : Rational(1) / Rational(m[i]).pow(static_cast<unsigned>(k[i]));
            return t;
        });
        EXPECT_EQ(li_nested(k, T), oracle);
        EXPECT_EQ(li_J(k, T), oracle);
    }
}

TEST(QSeries, Examples)
{
    EXPECT_EQ(qz_series(IndexVector{{0}}, 5), PowerSeriesT::geometric_tail(5));
    // sum_m q^m (1 - q^m) = q/(1-q) - q^2/(1-q^2).
    PowerSeriesT s = qz_series(IndexVector{{1}}, 6);
    std::vector<long> expected{0, 1, 0, 1, 0, 1, 0};
    for (int m = 0; m <= 6; ++m)
        EXPECT_EQ(s[m], Rational(expected[m]));
}

TEST(QSeries, MatchesChains)
{
    const int Q = 10;
    for (const Word& word : admissible_words(5)) {
        IndexVector k = word_to_indices(word);
        PowerSeriesT oracle(Q);
        PowerSeriesT chain_sum = chains(k.k.size(), Q, [](const std::vector<int>&) { return Rational(1); });
        // Brute force with the full polynomial in q for each chain.
        std::vector<int> m(k.k.size());
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int above) {
            if (i == k.k.size()) {
                std::vector<Rational> poly(Q + 1, Rational(0));
                if (m[0] > Q)
                    return;
                poly[m[0]] = Rational(1);
                PowerSeriesT p(poly);
                for (std::size_t j = 0; j < k.k.size(); ++j)
                    for (unsigned r = 0; r < k.k[j]; ++r) {
                        PowerSeriesT f(Q);
                        f[0] = Rational(1);
                        if (m[j] <= Q)
                            f[m[j]] = Rational(-1);
                        p = p * f;
                    }
                oracle = oracle + p;
                return;
            }
            for (int v = 1; v < above; ++v) {
                m[i] = v;
                rec(i + 1, v);
            }
        };
        rec(0, Q + 1);
        EXPECT_EQ(qz_series(k, Q), oracle) << word;
        EXPECT_EQ(qz_rational(k).expand(Q), oracle) << word;
        if (std::all_of(k.k.begin(), k.k.end(), [](unsigned x) { return x == 0; }))
            EXPECT_EQ(oracle, chain_sum);
    }
}

TEST(QSeries, SignedAndOperatorForms)
{
    const int Q = 8;
    EXPECT_EQ(qz_series_signed({-2, -1}, Q), qz_series(IndexVector{{2, 1}}, Q));
    for (const auto& e : std::vector<std::vector<int>>{{1}, {-1}, {2, -1}, {-1, 1}, {1, 1}, {0, -2}}) {
        BivariateSeries it = q_operator_iteration(e, Q, Q);
        EXPECT_EQ(eval_t_eq_q(it), qz_series_signed(e, Q));
    }
    // 1/(1-q^m) at depth one: sum_m q^m/(1-q^m) counts divisors.
    PowerSeriesT d = qz_series_signed({1}, Q);
    std::vector<long> divisors{0, 1, 2, 2, 3, 2, 4, 2, 4};
    for (int m = 0; m <= Q; ++m)
        EXPECT_EQ(d[m], Rational(divisors[m]));
}

TEST(Mero, Examples)
{
    EXPECT_EQ(mero_depth1(0), Rational(-1, 2));
    EXPECT_EQ(mero_depth1(1), Rational(-1, 12));
    EXPECT_EQ(mero_depth1(2), Rational(0));
    EXPECT_EQ(mero_depth1(3), Rational(1, 120));
    EXPECT_EQ(mero_depth2(1, 0), Rational(1, 12));
    EXPECT_EQ(mero_depth2(0, 1), Rational(1, 24));
    EXPECT_EQ(mero_depth2(2, 1), Rational(-1, 240));
    EXPECT_THROW(mero_depth2(1, 1), EvenWeight);
    EXPECT_THROW(mero_depth2(0, 0), EvenWeight);
}
