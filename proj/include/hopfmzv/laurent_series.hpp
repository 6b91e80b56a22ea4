#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hopfmzv/rational.hpp"

namespace hopfmzv {

/// Truncated Laurent series in z with exact rational coefficients.
///
/// A series stores the coefficients of z^ord, z^{ord+1}, ..., z^{valid_through}
/// and knows nothing beyond valid_through; reading past it raises
/// PrecisionExceeded. An exact series is a Laurent polynomial: every
/// coefficient past the stored range is known to be zero and valid_through()
/// reports kUnbounded.
///
/// Results of every operation are normalized so that the lowest stored
/// coefficient is nonzero. A truncated series that is zero on its whole window
/// has no stored coefficients and ord == valid_through + 1.
class LaurentSeries {
public:
    static constexpr int kUnbounded = 1 << 28;

    /// The exact zero series.
    LaurentSeries() = default;

    /// Coefficients of z^ord ... z^{ord + coeffs.size() - 1}, nothing known beyond.
    static LaurentSeries truncated(int ord, std::vector<Rational> coeffs);
    /// As truncated(), padding with zeros up to (and including) z^valid_through.
    static LaurentSeries with_validity(int ord, std::vector<Rational> coeffs, int valid_through);
    /// A Laurent polynomial.
    static LaurentSeries exact(int ord, std::vector<Rational> coeffs);
    static LaurentSeries monomial(const Rational& c, int exponent);
    static LaurentSeries one() { return monomial(Rational(1), 0); }

    int ord() const { return ord_; }
    int valid_through() const { return exact_ ? kUnbounded : ord_ + static_cast<int>(coeffs_.size()) - 1; }
    /// Highest exponent with a stored coefficient (ord - 1 when nothing is stored).
    int stored_through() const { return ord_ + static_cast<int>(coeffs_.size()) - 1; }
    bool is_exact() const { return exact_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of z^n; zero below ord. Throws PrecisionExceeded past valid_through.
    Rational coefficient(int n) const;

    /// True when every known coefficient is zero.
    bool is_zero() const { return coeffs_.empty(); }

    /// Restricts the window to exponents <= n (no-op if already shorter).
    LaurentSeries truncate_to(int n) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const Rational& c, const LaurentSeries& a);
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }

    /// Structural equality: same exactness, window and coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

    std::string str(char var = 'z') const;

private:
    LaurentSeries(int ord, std::vector<Rational> coeffs, bool exact);
    void normalize();

    int ord_ = 0;
    std::vector<Rational> coeffs_;
    bool exact_ = true;
};

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

/// Exact Cauchy product; valid through min(a.vt + b.ord, b.vt + a.ord).
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
/// Termwise d/dz; validity drops by one.
LaurentSeries series_diff(const LaurentSeries& a);
/// Strictly negative exponents only (the minimal subtraction projector pi).
LaurentSeries pole_part(const LaurentSeries& a);
/// a - pole_part(a).
LaurentSeries regular_part(const LaurentSeries& a);
Rational coefficient(const LaurentSeries& a, int n);
/// f(c z) for a rational c.
LaurentSeries dilate(const LaurentSeries& a, const Rational& c);

/// Compares coefficients on the intersection of the two validity windows.
/// The window runs from min(a.ord, b.ord) to min(a.vt, b.vt); when it covers
/// fewer than min_overlap exponents PrecisionExceeded is thrown.
bool agree_on_window(const LaurentSeries& a, const LaurentSeries& b, int min_overlap);
/// Compares every coefficient with exponent <= through.
bool agree_through(const LaurentSeries& a, const LaurentSeries& b, int through);

} // namespace hopfmzv
