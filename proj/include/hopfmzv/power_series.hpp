#pragma once

#include <vector>

#include "hopfmzv/laurent_series.hpp"
#include "hopfmzv/rational.hpp"

namespace hopfmzv {

/// Power series sum_{m=0}^{T} c_m t^m, everything above t^T unknown.
class PowerSeriesT {
public:
    explicit PowerSeriesT(int truncation = 0) : coeffs_(truncation + 1, Rational(0)) {}
    explicit PowerSeriesT(std::vector<Rational> coeffs);

    /// sum_{m>=1} t^m, i.e. t/(1-t).
    static PowerSeriesT geometric_tail(int truncation);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int m) const { return coeffs_.at(m); }
    Rational& operator[](int m) { return coeffs_.at(m); }

    friend PowerSeriesT operator+(const PowerSeriesT& a, const PowerSeriesT& b);
    friend PowerSeriesT operator-(const PowerSeriesT& a, const PowerSeriesT& b);
    friend PowerSeriesT operator*(const PowerSeriesT& a, const PowerSeriesT& b);
    friend PowerSeriesT operator*(const Rational& c, const PowerSeriesT& a);
    friend bool operator==(const PowerSeriesT& a, const PowerSeriesT& b) = default;

    /// Viewed as a Laurent series valid through the truncation.
    LaurentSeries to_laurent() const;

private:
    std::vector<Rational> coeffs_;
};

/// J[f](t) = int_0^t f(u) du/u: divides the t^m coefficient by m.
/// Throws NonzeroConstantTerm unless f(0) = 0.
PowerSeriesT op_J(const PowerSeriesT& f);
/// Euler derivation t d/dt: multiplies the t^m coefficient by m.
PowerSeriesT op_delta(const PowerSeriesT& f);

/// Element of t Q[[t, q]]: for each t-degree a = 1..A a power series in q
/// truncated at q^Q.
class BivariateSeries {
public:
    BivariateSeries(int t_truncation, int q_truncation);

    /// sum_{a>=1} t^a with q-independent coefficients.
    static BivariateSeries geometric_tail(int t_truncation, int q_truncation);

    int t_truncation() const { return static_cast<int>(rows_.size()); }
    int q_truncation() const { return q_trunc_; }

    /// Coefficient series of t^a, a >= 1.
    const PowerSeriesT& row(int a) const { return rows_.at(a - 1); }
    PowerSeriesT& row(int a) { return rows_.at(a - 1); }
    Rational coefficient(int a, int b) const { return row(a)[b]; }

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) = default;

private:
    int q_trunc_;
    std::vector<PowerSeriesT> rows_;
};

/// q-dilation f(t) -> f(qt).
BivariateSeries op_Eq(const BivariateSeries& f);
/// q-difference Id - E_q.
BivariateSeries op_Dq(const BivariateSeries& f);
/// P_q = sum_{n>=0} E_q^n, i.e. each t^a row divided by (1 - q^a).
BivariateSeries op_Pq(const BivariateSeries& f);

/// Substitutes t = q. Requires t_truncation >= q_truncation (TruncationMismatch
/// otherwise); the result is exact through q^{q_truncation}.
PowerSeriesT eval_t_eq_q(const BivariateSeries& f);

} // namespace hopfmzv
