#pragma once

#include <functional>

#include "hopfmzv/laurent_series.hpp"
#include "hopfmzv/shuffle.hpp"
#include "hopfmzv/word.hpp"

namespace hopfmzv {

enum class CoproductMethod { recursive, combinatorial };

struct CoproductResult {
    TensorSum terms;
    /// True when the primitive part e (x) w + w (x) e has been stripped.
    bool reduced = false;
};

/// Unprojected coproduct on Q<L>: the concatenation-multiplicative extension of
///   y -> e (x) y + y (x) e,   d -> e (x) d + d (x) e + lambda d (x) d.
TensorSum coproduct_unprojected(const Word& w, const LambdaParam& lambda);

/// Delta_lambda(w): the unprojected coproduct with every term dropped that has
/// a leg ending in d. Throws NotAdmissible unless w is admissible.
CoproductResult coproduct_recursive(const Word& w, const LambdaParam& lambda);

/// Delta_lambda(w) from admissible subsets S of letter positions, plus the
/// lambda^{|J|} terms where the d-positions J of S are shared with the right
/// leg. Right legs that fail to be admissible are filtered explicitly.
CoproductResult coproduct_combinatorial(const Word& w, const LambdaParam& lambda);

CoproductResult coproduct(const Word& w, const LambdaParam& lambda,
                          CoproductMethod method = CoproductMethod::recursive);

/// Delta_lambda(w) - e (x) w - w (x) e for a nonempty admissible word. Every
/// leg of the result is nonempty and admissible, so has depth between 1 and
/// depth(w) - 1.
CoproductResult reduced_coproduct(const Word& w, const LambdaParam& lambda,
                                  CoproductMethod method = CoproductMethod::recursive);

/// Coproduct extended linearly to word sums (after projection).
TensorSum coproduct(const WordSum& s, const LambdaParam& lambda);

using SeriesMap = std::function<LaurentSeries(const Word&)>;

/// Convolution (f * g)(w) = sum f(w_1) g(w_2) over the full coproduct.
LaurentSeries star(const SeriesMap& f, const SeriesMap& g, const Word& w, const LambdaParam& lambda);

/// Convolution unit: 1 on the empty word, 0 elsewhere.
LaurentSeries counit_unit(const Word& w);

} // namespace hopfmzv
