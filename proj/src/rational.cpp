#include "hopfmzv/rational.hpp"

#include <cctype>
#include <ostream>

#include "hopfmzv/errors.hpp"

namespace hopfmzv {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    std::string buf(s);
    if (!buf.empty() && buf.front() == '+')
        buf.erase(0, 1);
    return mpz_class(buf, 10);
}

} // namespace

Rational::Rational(long n, long d)
{
    if (d == 0)
        throw std::domain_error("zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d)
{
    if (d == 0)
        throw std::domain_error("zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw SyntaxError("not a rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw SyntaxError("not a rational: '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string Rational::str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(unsigned e) const
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace hopfmzv
