#include "hopfmzv/power_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopfmzv/errors.hpp"

namespace hopfmzv {

PowerSeriesT::PowerSeriesT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        coeffs_.emplace_back(0);
}

PowerSeriesT PowerSeriesT::geometric_tail(int truncation)
{
    PowerSeriesT s(truncation);
    for (int m = 1; m <= truncation; ++m)
        s[m] = Rational(1);
    return s;
}

namespace {

void require_same_truncation(int a, int b)
{
    if (a != b)
        throw TruncationMismatch("series truncations differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

PowerSeriesT operator+(const PowerSeriesT& a, const PowerSeriesT& b)
{
    require_same_truncation(a.truncation(), b.truncation());
    PowerSeriesT r = a;
    for (int m = 0; m <= r.truncation(); ++m)
        r[m] += b[m];
    return r;
}

PowerSeriesT operator-(const PowerSeriesT& a, const PowerSeriesT& b)
{
    require_same_truncation(a.truncation(), b.truncation());
    PowerSeriesT r = a;
    for (int m = 0; m <= r.truncation(); ++m)
        r[m] -= b[m];
    return r;
}

PowerSeriesT operator*(const PowerSeriesT& a, const PowerSeriesT& b)
{
    require_same_truncation(a.truncation(), b.truncation());
    int T = a.truncation();
    std::vector<mpq_class> acc(T + 1);
    for (int i = 0; i <= T; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= T; ++j)
            if (!b[j].is_zero())
                acc[i + j] += a[i].raw() * b[j].raw();
    }
    std::vector<Rational> c;
    c.reserve(T + 1);
    for (auto& v : acc)
        c.emplace_back(std::move(v));
    return PowerSeriesT(std::move(c));
}

PowerSeriesT operator*(const Rational& s, const PowerSeriesT& a)
{
    PowerSeriesT r = a;
    for (int m = 0; m <= r.truncation(); ++m)
        r[m] *= s;
    return r;
}

LaurentSeries PowerSeriesT::to_laurent() const
{
    return LaurentSeries::with_validity(0, coeffs_, truncation());
}

PowerSeriesT op_J(const PowerSeriesT& f)
{
    if (!f[0].is_zero())
        throw NonzeroConstantTerm("J needs a series without constant term");
    PowerSeriesT r = f;
    for (int m = 1; m <= r.truncation(); ++m)
        r[m] /= Rational(m);
    return r;
}

PowerSeriesT op_delta(const PowerSeriesT& f)
{
    if (!f[0].is_zero())
        throw NonzeroConstantTerm("delta is taken on series without constant term");
    PowerSeriesT r = f;
    for (int m = 1; m <= r.truncation(); ++m)
        r[m] *= Rational(m);
    return r;
}

BivariateSeries::BivariateSeries(int t_truncation, int q_truncation)
    : q_trunc_(q_truncation), rows_(t_truncation, PowerSeriesT(q_truncation))
{
}

BivariateSeries BivariateSeries::geometric_tail(int t_truncation, int q_truncation)
{
    BivariateSeries s(t_truncation, q_truncation);
    for (int a = 1; a <= t_truncation; ++a)
        s.row(a)[0] = Rational(1);
    return s;
}

namespace {

void require_same_shape(const BivariateSeries& a, const BivariateSeries& b)
{
    require_same_truncation(a.t_truncation(), b.t_truncation());
    require_same_truncation(a.q_truncation(), b.q_truncation());
}

} // namespace

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b)
{
    require_same_shape(a, b);
    BivariateSeries r = a;
    for (int i = 1; i <= r.t_truncation(); ++i)
        r.row(i) = a.row(i) + b.row(i);
    return r;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b)
{
    require_same_shape(a, b);
    BivariateSeries r = a;
    for (int i = 1; i <= r.t_truncation(); ++i)
        r.row(i) = a.row(i) - b.row(i);
    return r;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b)
{
    require_same_shape(a, b);
    int A = a.t_truncation();
    BivariateSeries r(A, a.q_truncation());
    for (int i = 1; i < A; ++i)
        for (int j = 1; i + j <= A; ++j)
            r.row(i + j) = r.row(i + j) + a.row(i) * b.row(j);
    return r;
}

BivariateSeries op_Eq(const BivariateSeries& f)
{
    int Q = f.q_truncation();
    BivariateSeries r(f.t_truncation(), Q);
    for (int a = 1; a <= f.t_truncation(); ++a)
        for (int b = 0; a + b <= Q; ++b)
            r.row(a)[a + b] = f.row(a)[b];
    return r;
}

BivariateSeries op_Dq(const BivariateSeries& f)
{
    return f - op_Eq(f);
}

BivariateSeries op_Pq(const BivariateSeries& f)
{
    int Q = f.q_truncation();
    BivariateSeries r(f.t_truncation(), Q);
    for (int a = 1; a <= f.t_truncation(); ++a) {
        // c(q) / (1 - q^a) = c(q) + q^a c(q) + q^{2a} c(q) + ...
        PowerSeriesT& out = r.row(a);
        const PowerSeriesT& in = f.row(a);
        for (int b = 0; b <= Q; ++b) {
            out[b] = in[b];
            if (b >= a)
                out[b] += out[b - a];
        }
    }
    return r;
}

PowerSeriesT eval_t_eq_q(const BivariateSeries& f)
{
    int Q = f.q_truncation();
    if (f.t_truncation() < Q)
        throw TruncationMismatch("t-truncation " + std::to_string(f.t_truncation())
                                 + " is below the q-truncation " + std::to_string(Q));
    PowerSeriesT r(Q);
    for (int a = 1; a <= Q; ++a)
        for (int b = 0; a + b <= Q; ++b)
            r[a + b] += f.row(a)[b];
    return r;
}

} // namespace hopfmzv
