#include <gtest/gtest.h>

#include "hopfmzv/coproduct.hpp"
#include "hopfmzv/errors.hpp"
#include "hopfmzv/realizations.hpp"

using namespace hopfmzv;

namespace {

Word w(const char* s)
{
    return Word::parse(s);
}

WordPair pair(const char* a, const char* b)
{
    return {Word::parse(a), Word::parse(b)};
}

// Each y goes left or right; each d goes left, right, or to both legs with
// weight lambda. Terms with a leg ending in d are dropped afterwards.
TensorSum brute_force(const Word& word, const Rational& lambda)
{
    const std::string& s = word.str();
    TensorSum out;
    std::size_t combos = 1;
    for (char c : s)
        combos *= c == 'd' ? 3 : 2;
    for (std::size_t code = 0; code < combos; ++code) {
        std::size_t rest = code;
        std::string left, right;
        Rational weight(1);
        for (char c : s) {
            std::size_t choice = rest % (c == 'd' ? 3 : 2);
            rest /= c == 'd' ? 3 : 2;
            if (choice == 0 || choice == 2)
                left.push_back(c);
            if (choice == 1 || choice == 2)
                right.push_back(c);
            if (choice == 2)
                weight *= lambda;
        }
        if ((left.empty() || left.back() == 'y') && (right.empty() || right.back() == 'y'))
            out.add(WordPair{Word::parse(left), Word::parse(right)}, weight);
    }
    return out;
}

} // namespace

TEST(Coproduct, PrimitiveWords)
{
    for (unsigned n = 0; n <= 5; ++n) {
        Word dn = indices_to_word(IndexVector{{n}});
        TensorSum expected;
        expected.add(WordPair{Word(), dn}, Rational(1));
        expected.add(WordPair{dn, Word()}, Rational(1));
        for (long lam : {0L, -1L, 4L})
            EXPECT_EQ(coproduct_recursive(dn, LambdaParam(lam)).terms, expected) << dn;
        EXPECT_TRUE(reduced_coproduct(dn, LambdaParam(-1L)).terms.empty());
    }
}

TEST(Coproduct, DyDy)
{
    for (long lam : {0L, -1L, 5L}) {
        TensorSum expected;
        expected.add(pair("", "dydy"), Rational(1));
        expected.add(pair("dydy", ""), Rational(1));
        expected.add(pair("y", "ddy"), Rational(1));
        expected.add(pair("ddy", "y"), Rational(1));
        expected.add(pair("dy", "dy"), Rational(2));
        expected.add(pair("dy", "ddy"), Rational(lam));
        expected.add(pair("ddy", "dy"), Rational(lam));
        EXPECT_EQ(coproduct_recursive(w("dydy"), LambdaParam(lam)).terms, expected) << "lambda " << lam;
    }
}

TEST(Coproduct, PowersOfY)
{
    TensorSum expected;
    expected.add(pair("", "yy"), Rational(1));
    expected.add(pair("y", "y"), Rational(2));
    expected.add(pair("yy", ""), Rational(1));
    EXPECT_EQ(coproduct_recursive(w("yy"), LambdaParam(Rational(-1, 2))).terms, expected);

    // y^4: binomial coefficients.
    TensorSum y4 = coproduct_recursive(w("yyyy"), LambdaParam(3L)).terms;
    EXPECT_EQ(y4.coefficient(pair("yy", "yy")), Rational(6));
    EXPECT_EQ(y4.coefficient(pair("y", "yyy")), Rational(4));
}

TEST(Coproduct, DdyDyCombinatorial)
{
    const Rational lam(3);
    TensorSum expected;
    expected.add(pair("", "ddydy"), Rational(1));
    expected.add(pair("ddydy", ""), Rational(1));
    expected.add(pair("dy", "ddy"), Rational(3));
    expected.add(pair("ddy", "dy"), Rational(3));
    expected.add(pair("dddy", "y"), Rational(1));
    expected.add(pair("y", "dddy"), Rational(1));
    expected.add(pair("dy", "dddy"), Rational(2) * lam);
    expected.add(pair("ddy", "ddy"), Rational(4) * lam);
    expected.add(pair("dddy", "dy"), Rational(2) * lam);
    expected.add(pair("ddy", "dddy"), lam * lam);
    expected.add(pair("dddy", "ddy"), lam * lam);
    EXPECT_EQ(coproduct_combinatorial(w("ddydy"), LambdaParam(lam)).terms, expected);

    TensorSum at_zero = coproduct_combinatorial(w("ddydy"), LambdaParam(0L)).terms;
    EXPECT_EQ(at_zero.size(), 6u);
    EXPECT_EQ(at_zero.coefficient(pair("dy", "ddy")), Rational(3));
}

TEST(Coproduct, ShortWordCombinatorial)
{
    TensorSum expected;
    expected.add(pair("", "dy"), Rational(1));
    expected.add(pair("dy", ""), Rational(1));
    EXPECT_EQ(coproduct_combinatorial(w("dy"), LambdaParam(-7L)).terms, expected);
}

TEST(Coproduct, ReducedExamples)
{
    TensorSum a;
    a.add(pair("y", "ddy"), Rational(1));
    a.add(pair("ddy", "y"), Rational(1));
    EXPECT_EQ(reduced_coproduct(w("yddy"), LambdaParam(0L)).terms, a);
    EXPECT_TRUE(reduced_coproduct(w("yddy"), LambdaParam(0L)).reduced);

    TensorSum b;
    b.add(pair("y", "ddy"), Rational(1));
    b.add(pair("ddy", "y"), Rational(1));
    b.add(pair("dy", "dy"), Rational(2));
    b.add(pair("dy", "ddy"), Rational(-1));
    b.add(pair("ddy", "dy"), Rational(-1));
    EXPECT_EQ(reduced_coproduct(w("dydy"), LambdaParam(-1L)).terms, b);
}

TEST(Coproduct, Errors)
{
    EXPECT_THROW(coproduct_recursive(w("yd"), LambdaParam(0L)), NotAdmissible);
    EXPECT_THROW(coproduct_combinatorial(w("d"), LambdaParam(1L)), NotAdmissible);
    EXPECT_THROW(reduced_coproduct(Word(), LambdaParam(0L)), NotAdmissible);
}

TEST(Coproduct, BothMethodsMatchBruteForce)
{
    for (const Rational& lam : {Rational(0), Rational(-1), Rational(3), Rational(-1, 2)})
        for (const Word& word : admissible_words(7)) {
            TensorSum oracle = brute_force(word, lam);
            EXPECT_EQ(coproduct_recursive(word, LambdaParam(lam)).terms, oracle) << word << " lambda " << lam;
            EXPECT_EQ(coproduct_combinatorial(word, LambdaParam(lam)).terms, oracle) << word << " lambda " << lam;
        }
}

TEST(Coproduct, LinearExtension)
{
    WordSum s;
    s.add(w("dydy"), Rational(2));
    s.add(w("y"), Rational(-1));
    TensorSum expected;
    expected.add(coproduct_recursive(w("dydy"), LambdaParam(-1L)).terms, Rational(2));
    expected.add(coproduct_recursive(w("y"), LambdaParam(-1L)).terms, Rational(-1));
    EXPECT_EQ(coproduct(s, LambdaParam(-1L)), expected);
}

TEST(Star, CounitIsUnit)
{
    for (const Word& word : admissible_words(5))
        EXPECT_EQ(star(counit_unit, counit_unit, word, LambdaParam(0L)), counit_unit(word));
    EXPECT_EQ(star(counit_unit, counit_unit, Word(), LambdaParam(0L)), LaurentSeries::one());
}

TEST(Star, ReducedConvolutionThroughPhi)
{
    // K = phi - counit vanishes on e, so K * K runs over the reduced coproduct.
    const int through = 4;
    SeriesMap K = [&](const Word& v) { return v.empty() ? LaurentSeries() : phi(v, through + 8); };
    for (const Word& word : admissible_words(6)) {
        LaurentSeries lhs = star(K, K, word, LambdaParam(0L));
        Rational factor = Rational(2).pow(static_cast<unsigned>(word.depth())) - Rational(2);
        EXPECT_TRUE(agree_through(lhs, factor * phi(word, through), through)) << word;
    }
}
