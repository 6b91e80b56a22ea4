#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfmzv {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Text form is "p/q", or "p" when
/// the denominator is one; the sign sits on the numerator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(int n) : value_(n) {}
    Rational(long n, long d);
    explicit Rational(const mpz_class& n) : value_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p", "-p", "p/q" or "-p/q". Throws SyntaxError on anything else,
    /// including a zero denominator.
    static Rational parse(std::string_view text);

    std::string str() const;

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// this^e for a non-negative exponent.
    Rational pow(unsigned e) const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

} // namespace hopfmzv
