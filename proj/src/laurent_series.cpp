#include "hopfmzv/laurent_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hopfmzv/errors.hpp"

namespace hopfmzv {

LaurentSeries::LaurentSeries(int ord, std::vector<Rational> coeffs, bool exact)
    : ord_(ord), coeffs_(std::move(coeffs)), exact_(exact)
{
    normalize();
}

void LaurentSeries::normalize()
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    ord_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (exact_) {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
        if (coeffs_.empty())
            ord_ = 0;
    }
}

LaurentSeries LaurentSeries::truncated(int ord, std::vector<Rational> coeffs)
{
    return LaurentSeries(ord, std::move(coeffs), false);
}

LaurentSeries LaurentSeries::with_validity(int ord, std::vector<Rational> coeffs, int valid_through)
{
    int len = valid_through - ord + 1;
    if (len <= 0)
        return LaurentSeries(valid_through + 1, {}, false);
    if (static_cast<int>(coeffs.size()) > len)
        coeffs.resize(len);
    coeffs.resize(len, Rational(0));
    return LaurentSeries(ord, std::move(coeffs), false);
}

LaurentSeries LaurentSeries::exact(int ord, std::vector<Rational> coeffs)
{
    return LaurentSeries(ord, std::move(coeffs), true);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent)
{
    return LaurentSeries(exponent, {c}, true);
}

Rational LaurentSeries::coefficient(int n) const
{
    if (n > valid_through())
        throw PrecisionExceeded("coefficient of z^" + std::to_string(n) + " requested, series valid through z^"
                                + std::to_string(valid_through()));
    if (n < ord_ || n > stored_through())
        return Rational(0);
    return coeffs_[n - ord_];
}

LaurentSeries LaurentSeries::truncate_to(int n) const
{
    if (!exact_ && n >= valid_through())
        return *this;
    std::vector<Rational> c;
    for (int e = ord_; e <= std::min(n, stored_through()); ++e)
        c.push_back(coeffs_[e - ord_]);
    return with_validity(ord_, std::move(c), n);
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

namespace {

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract)
{
    bool exact = a.is_exact() && b.is_exact();
    int lo = std::min(a.ord(), b.ord());
    int hi = exact ? std::max(a.stored_through(), b.stored_through()) : std::min(a.valid_through(), b.valid_through());
    std::vector<Rational> c;
    if (hi >= lo)
        c.reserve(hi - lo + 1);
    for (int e = lo; e <= hi; ++e) {
        Rational x = (e >= a.ord() && e <= a.stored_through()) ? a.coeffs()[e - a.ord()] : Rational(0);
        const Rational zero(0);
        const Rational& y = (e >= b.ord() && e <= b.stored_through()) ? b.coeffs()[e - b.ord()] : zero;
        if (subtract)
            x -= y;
        else
            x += y;
        c.push_back(std::move(x));
    }
    if (exact)
        return LaurentSeries::exact(lo, std::move(c));
    return LaurentSeries::with_validity(lo, std::move(c), hi);
}

} // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
{
    return combine(a, b, false);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b)
{
    return combine(a, b, true);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    if (a.is_exact() && a.is_zero())
        return a;
    if (b.is_exact() && b.is_zero())
        return b;

    int ord = a.ord() + b.ord();
    bool exact = a.is_exact() && b.is_exact();
    int hi;
    if (exact)
        hi = a.stored_through() + b.stored_through();
    else if (a.is_exact())
        hi = b.valid_through() + a.ord();
    else if (b.is_exact())
        hi = a.valid_through() + b.ord();
    else
        hi = std::min(a.valid_through() + b.ord(), b.valid_through() + a.ord());

    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    int len = hi - ord + 1;
    std::vector<mpq_class> acc(std::max(len, 0));
    for (int i = 0; i < static_cast<int>(ca.size()) && i < len; ++i) {
        if (ca[i].is_zero())
            continue;
        int jmax = std::min(static_cast<int>(cb.size()), len - i);
        for (int j = 0; j < jmax; ++j)
            acc[i + j] += ca[i].raw() * cb[j].raw();
    }
    std::vector<Rational> c;
    c.reserve(acc.size());
    for (auto& v : acc)
        c.emplace_back(std::move(v));
    if (exact)
        return LaurentSeries::exact(ord, std::move(c));
    return LaurentSeries::with_validity(ord, std::move(c), hi);
}

LaurentSeries operator*(const Rational& s, const LaurentSeries& a)
{
    if (s.is_zero() && a.is_exact())
        return LaurentSeries();
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c)
        x *= s;
    if (a.is_exact())
        return LaurentSeries::exact(a.ord(), std::move(c));
    return LaurentSeries::with_validity(a.ord(), std::move(c), a.valid_through());
}

std::string LaurentSeries::str(char var) const
{
    std::ostringstream os;
    bool first = true;
    for (int e = ord_; e <= stored_through(); ++e) {
        const Rational& c = coeffs_[e - ord_];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == Rational(1);
        if (e == 0)
            os << mag;
        else {
            if (!unit)
                os << mag << "*";
            os << var;
            if (e != 1)
                os << "^" << e;
        }
    }
    if (!exact_) {
        os << (first ? "" : " + ") << "O(" << var << "^" << valid_through() + 1 << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s)
{
    return os << s.str();
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b)
{
    return a * b;
}

LaurentSeries series_diff(const LaurentSeries& a)
{
    std::vector<Rational> c;
    c.reserve(a.coeffs().size());
    for (int e = a.ord(); e <= a.stored_through(); ++e)
        c.push_back(Rational(e) * a.coeffs()[e - a.ord()]);
    if (a.is_exact())
        return LaurentSeries::exact(a.ord() - 1, std::move(c));
    return LaurentSeries::with_validity(a.ord() - 1, std::move(c), a.valid_through() - 1);
}

LaurentSeries pole_part(const LaurentSeries& a)
{
    std::vector<Rational> c;
    for (int e = a.ord(); e <= std::min(a.stored_through(), -1); ++e)
        c.push_back(a.coeffs()[e - a.ord()]);
    // Once every negative exponent is known the pole part is a Laurent polynomial.
    if (a.valid_through() >= -1)
        return LaurentSeries::exact(a.ord(), std::move(c));
    return LaurentSeries::with_validity(a.ord(), std::move(c), a.valid_through());
}

LaurentSeries regular_part(const LaurentSeries& a)
{
    std::vector<Rational> c;
    int lo = std::max(a.ord(), 0);
    for (int e = lo; e <= a.stored_through(); ++e)
        c.push_back(a.coeffs()[e - a.ord()]);
    if (a.is_exact())
        return LaurentSeries::exact(lo, std::move(c));
    return LaurentSeries::with_validity(lo, std::move(c), a.valid_through());
}

Rational coefficient(const LaurentSeries& a, int n)
{
    return a.coefficient(n);
}

LaurentSeries dilate(const LaurentSeries& a, const Rational& s)
{
    std::vector<Rational> c;
    c.reserve(a.coeffs().size());
    for (int e = a.ord(); e <= a.stored_through(); ++e) {
        Rational p = e >= 0 ? s.pow(e) : Rational(1) / s.pow(-e);
        c.push_back(p * a.coeffs()[e - a.ord()]);
    }
    if (a.is_exact())
        return LaurentSeries::exact(a.ord(), std::move(c));
    return LaurentSeries::with_validity(a.ord(), std::move(c), a.valid_through());
}

bool agree_on_window(const LaurentSeries& a, const LaurentSeries& b, int min_overlap)
{
    int lo = std::min(a.ord(), b.ord());
    int hi;
    if (a.is_exact() && b.is_exact())
        hi = std::max(a.stored_through(), b.stored_through());
    else
        hi = std::min(a.valid_through(), b.valid_through());
    if (hi - lo + 1 < min_overlap)
        throw PrecisionExceeded("common validity window covers " + std::to_string(hi - lo + 1)
                                + " exponents, need " + std::to_string(min_overlap));
    for (int e = lo; e <= hi; ++e)
        if (a.coefficient(e) != b.coefficient(e))
            return false;
    return true;
}

bool agree_through(const LaurentSeries& a, const LaurentSeries& b, int through)
{
    int lo = std::min(a.ord(), b.ord());
    for (int e = lo; e <= through; ++e)
        if (a.coefficient(e) != b.coefficient(e))
            return false;
    return true;
}

} // namespace hopfmzv
