#pragma once

#include <string>

#include "hopfmzv/rational.hpp"
#include "hopfmzv/word.hpp"

namespace hopfmzv {

/// Deformation parameter of the shuffle product and the coproduct.
class LambdaParam {
public:
    explicit LambdaParam(Rational value) : value_(std::move(value)) {}
    LambdaParam(long value) : value_(value) {}

    /// Accepts "p/q", "p" or "0".
    static LambdaParam parse(std::string_view text) { return LambdaParam(Rational::parse(text)); }

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

private:
    Rational value_;
};

/// The lambda-deformed shuffle on Q<d, y> for lambda != 0:
///   e * w = w * e = w,
///   yu * v = u * yv = y(u * v),
///   du * dv = (1/lambda) [d(u * v) - du * v - u * dv].
/// The result is the raw product in Q<L>; apply project_T for the class in
/// H_lambda. Throws LambdaZero for lambda = 0 (use shuffle_zero).
WordSum shuffle_lambda(const Word& u, const Word& v, const LambdaParam& lambda);
WordSum shuffle_lambda(const WordSum& u, const WordSum& v, const LambdaParam& lambda);

/// The lambda = 0 product on representatives. Both operands starting with d
/// are reduced through the iterated form of
///   du * dv = d(u * dv) - u * d^2 v,
/// namely, for a left operand d^k y w,
///   d^k y w * dv = d( sum_{i<k} (-1)^i d^{k-1-i} y w * d^{i+1} v ) + (-1)^k y (w * d^{k+1} v),
/// and a pure power of d against a word starting with d gives 0.
///
/// The output is one representative; two operand orders may differ by an
/// element of the derivation ideal L_-. Equality of classes is only
/// observable through the character phi.
WordSum shuffle_zero(const Word& u, const Word& v);
WordSum shuffle_zero(const WordSum& u, const WordSum& v);

/// Routes to shuffle_zero or shuffle_lambda according to lambda.
WordSum shuffle(const Word& u, const Word& v, const LambdaParam& lambda);
WordSum shuffle(const WordSum& u, const WordSum& v, const LambdaParam& lambda);

/// Componentwise product (a (x) b) * (c (x) d) = (a * c) (x) (b * d).
TensorSum shuffle(const TensorSum& a, const TensorSum& b, const LambdaParam& lambda);

// Positive sector. Words there are plain strings: letters '0'/'1' stand for
// x0/x1, letters 'j'/'y' for the {j, y} alphabet.
using LetterSum = FormalSum<std::string>;

/// Textbook shuffle au * bv = a(u * bv) + b(au * v) over any alphabet.
LetterSum ordinary_shuffle(const std::string& u, const std::string& v);
/// Rules yu * v = u * yv = y(u * v) and ju * jv = j(u * jv) + j(ju * v) on {j, y} words.
LetterSum sho_positive(const std::string& u, const std::string& v);
/// x0^{k_1 - 1} x1 ... x0^{k_n - 1} x1 -> j^{k_1} y ... j^{k_n} y, i.e. x0 -> j, x1 -> jy.
std::string phi_iso(const std::string& binary_word);
LetterSum phi_iso(const LetterSum& s);

} // namespace hopfmzv
