#include "hopfmzv/shuffle.hpp"

#include <tuple>

#include "hopfmzv/errors.hpp"
#include "hopfmzv/memo.hpp"

namespace hopfmzv {

namespace {

Memo<std::tuple<Rational, Word, Word>, WordSum> lambda_memo;
Memo<std::pair<Word, Word>, WordSum> zero_memo;

WordSum shuffle_lambda_rec(const Word& u, const Word& v, const Rational& lambda)
{
    if (u.empty())
        return WordSum(v);
    if (v.empty())
        return WordSum(u);

    auto key = std::make_tuple(lambda, u, v);
    if (auto hit = lambda_memo.find(key))
        return *hit;

    WordSum r;
    if (u.front() == Letter::y) {
        r = prepend(Letter::y, shuffle_lambda_rec(u.tail(), v, lambda));
    } else if (v.front() == Letter::y) {
        r = prepend(Letter::y, shuffle_lambda_rec(u, v.tail(), lambda));
    } else {
        const Word ut = u.tail();
        const Word vt = v.tail();
        r = prepend(Letter::d, shuffle_lambda_rec(ut, vt, lambda));
        r -= shuffle_lambda_rec(u, vt, lambda);
        r -= shuffle_lambda_rec(ut, v, lambda);
        r = (Rational(1) / lambda) * r;
    }
    return lambda_memo.insert(key, std::move(r));
}

WordSum shuffle_zero_rec(const Word& u, const Word& v)
{
    if (u.empty())
        return WordSum(v);
    if (v.empty())
        return WordSum(u);

    auto key = std::make_pair(u, v);
    if (auto hit = zero_memo.find(key))
        return *hit;

    WordSum r;
    if (u.front() == Letter::y) {
        r = prepend(Letter::y, shuffle_zero_rec(u.tail(), v));
    } else if (v.front() == Letter::y) {
        r = prepend(Letter::y, shuffle_zero_rec(u, v.tail()));
    } else {
        const std::string& s = u.str();
        auto ypos = s.find('y');
        if (ypos != std::string::npos) {
            // u = d^k y w with k >= 1, v = d v'.
            const std::size_t k = ypos;
            const Word w = Word::parse(std::string_view(s).substr(k + 1));
            const Word vt = v.tail();
            const Word yw = Word::parse(std::string_view(s).substr(k));
            WordSum inner;
            for (std::size_t i = 0; i < k; ++i) {
                Word left = Word::repeat(Letter::d, k - 1 - i) + yw;
                Word right = Word::repeat(Letter::d, i + 1) + vt;
                inner.add(shuffle_zero_rec(left, right), Rational(i % 2 == 0 ? 1 : -1));
            }
            r = prepend(Letter::d, inner);
            WordSum last = prepend(Letter::y, shuffle_zero_rec(w, Word::repeat(Letter::d, k + 1) + vt));
            r.add(last, Rational(k % 2 == 0 ? 1 : -1));
        }
        // A pure power of d against a word starting with d vanishes.
    }
    return zero_memo.insert(key, std::move(r));
}

template <class F>
WordSum bilinear(const WordSum& u, const WordSum& v, F&& product)
{
    WordSum r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v)
            r.add(product(a, b), ca * cb);
    return r;
}

} // namespace

WordSum shuffle_lambda(const Word& u, const Word& v, const LambdaParam& lambda)
{
    if (lambda.is_zero())
        throw LambdaZero("the lambda-shuffle recursion needs lambda != 0; use shuffle_zero");
    return shuffle_lambda_rec(u, v, lambda.value());
}

WordSum shuffle_lambda(const WordSum& u, const WordSum& v, const LambdaParam& lambda)
{
    return bilinear(u, v, [&](const Word& a, const Word& b) { return shuffle_lambda(a, b, lambda); });
}

WordSum shuffle_zero(const Word& u, const Word& v)
{
    return shuffle_zero_rec(u, v);
}

WordSum shuffle_zero(const WordSum& u, const WordSum& v)
{
    return bilinear(u, v, [](const Word& a, const Word& b) { return shuffle_zero_rec(a, b); });
}

WordSum shuffle(const Word& u, const Word& v, const LambdaParam& lambda)
{
    return lambda.is_zero() ? shuffle_zero(u, v) : shuffle_lambda(u, v, lambda);
}

WordSum shuffle(const WordSum& u, const WordSum& v, const LambdaParam& lambda)
{
    return lambda.is_zero() ? shuffle_zero(u, v) : shuffle_lambda(u, v, lambda);
}

TensorSum shuffle(const TensorSum& a, const TensorSum& b, const LambdaParam& lambda)
{
    TensorSum r;
    for (const auto& [p, cp] : a) {
        for (const auto& [q, cq] : b) {
            WordSum left = shuffle(p.first, q.first, lambda);
            WordSum right = shuffle(p.second, q.second, lambda);
            Rational c = cp * cq;
            for (const auto& [l, cl] : left)
                for (const auto& [rw, cr] : right)
                    r.add(WordPair{l, rw}, c * cl * cr);
        }
    }
    return r;
}

LetterSum ordinary_shuffle(const std::string& u, const std::string& v)
{
    if (u.empty())
        return LetterSum(v);
    if (v.empty())
        return LetterSum(u);
    LetterSum r;
    for (const auto& [w, c] : ordinary_shuffle(u.substr(1), v))
        r.add(u.front() + w, c);
    for (const auto& [w, c] : ordinary_shuffle(u, v.substr(1)))
        r.add(v.front() + w, c);
    return r;
}

LetterSum sho_positive(const std::string& u, const std::string& v)
{
    if (u.empty())
        return LetterSum(v);
    if (v.empty())
        return LetterSum(u);
    auto prefixed = [](char letter, const LetterSum& s) {
        return s.map_keys([letter](const std::string& w) { return letter + w; });
    };
    if (u.front() == 'y')
        return prefixed('y', sho_positive(u.substr(1), v));
    if (v.front() == 'y')
        return prefixed('y', sho_positive(u, v.substr(1)));
    if (u.front() != 'j' || v.front() != 'j')
        throw SyntaxError("sho_positive works on words over {j, y}");
    LetterSum r = prefixed('j', sho_positive(u.substr(1), v));
    r += prefixed('j', sho_positive(u, v.substr(1)));
    return r;
}

std::string phi_iso(const std::string& binary_word)
{
    std::string out;
    for (char c : binary_word) {
        if (c == '0')
            out += "j";
        else if (c == '1')
            out += "jy";
        else
            throw SyntaxError("phi_iso expects letters 0 (x0) and 1 (x1)");
    }
    return out;
}

LetterSum phi_iso(const LetterSum& s)
{
    return s.map_keys([](const std::string& w) { return phi_iso(w); });
}

} // namespace hopfmzv
