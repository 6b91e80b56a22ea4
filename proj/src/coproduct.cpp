#include "hopfmzv/coproduct.hpp"

#include <bit>
#include <tuple>

#include "hopfmzv/errors.hpp"
#include "hopfmzv/memo.hpp"

namespace hopfmzv {

namespace {

Memo<std::pair<Rational, Word>, TensorSum> unprojected_memo;
Memo<std::pair<Rational, Word>, TensorSum> projected_memo;

void require_admissible(const Word& w)
{
    if (!w.admissible())
        throw NotAdmissible("coproduct needs an admissible word, got '" + w.str() + "'");
}

TensorSum letter_coproduct(Letter l, const Rational& lambda)
{
    Word e;
    Word single = e.prepend(l);
    TensorSum r;
    r.add(WordPair{e, single}, Rational(1));
    r.add(WordPair{single, e}, Rational(1));
    if (l == Letter::d)
        r.add(WordPair{single, single}, lambda);
    return r;
}

} // namespace

TensorSum coproduct_unprojected(const Word& w, const LambdaParam& lambda)
{
    const Rational& lam = lambda.value();
    if (w.empty())
        return TensorSum(WordPair{Word(), Word()});

    auto key = std::make_pair(lam, w);
    if (auto hit = unprojected_memo.find(key))
        return *hit;

    // Delta(l w') = Delta(l) Delta(w') with legwise concatenation.
    TensorSum head = letter_coproduct(w.front(), lam);
    TensorSum rest = coproduct_unprojected(w.tail(), lambda);
    TensorSum r;
    for (const auto& [a, ca] : head)
        for (const auto& [b, cb] : rest)
            r.add(WordPair{a.first + b.first, a.second + b.second}, ca * cb);
    return unprojected_memo.insert(key, std::move(r));
}

CoproductResult coproduct_recursive(const Word& w, const LambdaParam& lambda)
{
    require_admissible(w);
    auto key = std::make_pair(lambda.value(), w);
    TensorSum t = projected_memo.get_or_compute(key, [&] { return project_T(coproduct_unprojected(w, lambda)); });
    return {std::move(t), false};
}

CoproductResult coproduct_combinatorial(const Word& w, const LambdaParam& lambda)
{
    require_admissible(w);
    const std::string& s = w.str();
    const std::size_t n = s.size();

    auto select = [&](unsigned mask) {
        std::string out;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                out.push_back(s[i]);
        return Word::parse(out);
    };

    unsigned y_mask = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (s[i] == 'y')
            y_mask |= 1u << i;

    // 0-based position of the second to last y; the shared d's lie before it.
    int cutoff = -1;
    {
        int seen = 0;
        for (int i = static_cast<int>(n) - 1; i >= 0; --i)
            if (s[i] == 'y' && ++seen == 2) {
                cutoff = i;
                break;
            }
    }

    const unsigned full = n == 0 ? 0u : ((1u << n) - 1);
    TensorSum r;
    for (unsigned S = 0;; ++S) {
        const unsigned Sbar = full & ~S;
        Word left = select(S);
        Word right = select(Sbar);
        if (left.admissible() && right.admissible()) {
            r.add(WordPair{left, right}, Rational(1));

            // Nonempty subsets J of the d-positions of S before the cutoff.
            unsigned candidates = 0;
            for (int i = 0; i < cutoff; ++i)
                if ((S & (1u << i)) && !(y_mask & (1u << i)))
                    candidates |= 1u << i;
            if (!lambda.is_zero()) {
                for (unsigned J = candidates; J != 0; J = (J - 1) & candidates) {
                    Word shared_right = select(Sbar | J);
                    if (!shared_right.admissible())
                        continue;
                    r.add(WordPair{left, shared_right}, lambda.value().pow(std::popcount(J)));
                }
            }
        }
        if (S == full)
            break;
    }
    return {std::move(r), false};
}

CoproductResult coproduct(const Word& w, const LambdaParam& lambda, CoproductMethod method)
{
    return method == CoproductMethod::recursive ? coproduct_recursive(w, lambda)
                                                : coproduct_combinatorial(w, lambda);
}

CoproductResult reduced_coproduct(const Word& w, const LambdaParam& lambda, CoproductMethod method)
{
    if (w.empty())
        throw NotAdmissible("the reduced coproduct is taken on nonempty words");
    CoproductResult full = coproduct(w, lambda, method);
    TensorSum t = full.terms.filter([](const WordPair& p) { return !p.first.empty() && !p.second.empty(); });
    return {std::move(t), true};
}

TensorSum coproduct(const WordSum& s, const LambdaParam& lambda)
{
    TensorSum r;
    for (const auto& [w, c] : s)
        r.add(coproduct_recursive(w, lambda).terms, c);
    return r;
}

LaurentSeries star(const SeriesMap& f, const SeriesMap& g, const Word& w, const LambdaParam& lambda)
{
    LaurentSeries acc;
    for (const auto& [p, c] : coproduct_recursive(w, lambda).terms)
        acc += c * (f(p.first) * g(p.second));
    return acc;
}

LaurentSeries counit_unit(const Word& w)
{
    return w.empty() ? LaurentSeries::one() : LaurentSeries();
}

} // namespace hopfmzv
