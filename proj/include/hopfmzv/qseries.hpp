#pragma once

#include <string>
#include <vector>

#include "hopfmzv/power_series.hpp"
#include "hopfmzv/word.hpp"

namespace hopfmzv {

/// Modified q-MZV at non-positive arguments,
///   sum_{m_1 > ... > m_n > 0} q^{m_1} prod_i (1 - q^{m_i})^{k_i},
/// truncated at q^Q.
PowerSeriesT qz_series(const IndexVector& k, int Q);

/// Same nested sum with integer exponents of either sign: factor (1 - q^m)^{-e}
/// for e > 0 is expanded as a geometric-type series. qz_series_signed(-k) is
/// qz_series(k) for non-negative k.
PowerSeriesT qz_series_signed(const std::vector<int>& e, int Q);

/// One summand  coeff * prod_j q^{L_j} / (q^{L_j} - 1)  of the rational form.
struct QzRationalTerm {
    Rational coeff;
    std::vector<unsigned> levels;
};

/// Finite sum of products of q^L/(q^L - 1) equal to qz_series(k):
///   sum_l (-1)^{|l| + n} prod_j binom(k_j, l_j) q^{L_j}/(q^{L_j} - 1),
/// L_j = l_1 + ... + l_j + 1.
struct QzRational {
    std::vector<QzRationalTerm> terms;

    /// Expansion to q^Q via q^L/(q^L - 1) = -sum_{r>=1} q^{rL}.
    PowerSeriesT expand(int Q) const;
    std::string str() const;
};

QzRational qz_rational(const IndexVector& k);

/// E^{e_1}[y E^{e_2}[y ... E^{e_n}[y]]] on y(t) = sum_{a>=1} t^a, where E^e is
/// P_q^e for e >= 0 and D_q^{-e} for e < 0. Evaluated at t = q this is
/// qz_series_signed(e).
BivariateSeries q_operator_iteration(const std::vector<int>& e, int t_truncation, int q_truncation);

} // namespace hopfmzv
