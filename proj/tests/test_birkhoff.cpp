#include <gtest/gtest.h>

#include <thread>

#include "hopfmzv/birkhoff.hpp"
#include "hopfmzv/errors.hpp"
#include "hopfmzv/json_io.hpp"

using namespace hopfmzv;

namespace {

Word w(const char* s)
{
    return Word::parse(s);
}

// Reduced lambda = 0 coproduct by per-letter choice: every letter goes left or right.
std::vector<std::pair<std::string, std::string>> reduced_splits(const std::string& s)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
        std::string l, r;
        for (std::size_t i = 0; i < s.size(); ++i)
            (mask & (1u << i) ? l : r).push_back(s[i]);
        if (l.empty() || r.empty() || l.back() != 'y' || r.back() != 'y')
            continue;
        out.emplace_back(l, r);
    }
    return out;
}

// Depth two: zeta_+(-a, -b) = [z^0] (phi(w) - sum pi(phi(w')) phi(w'')).
// Both legs have depth one there, so phi_-(w') = -pi(phi(w')).
Rational depth_two_oracle(unsigned a, unsigned b)
{
    const Word word = indices_to_word(IndexVector{{a, b}});
    const int pole = static_cast<int>(a + b) + 2;
    Rational value = phi(word, 0).coefficient(0);
    for (const auto& [l, r] : reduced_splits(word.str())) {
        LaurentSeries left = phi(Word::parse(l), 0);
        LaurentSeries right = phi(Word::parse(r), pole);
        for (int j = left.ord(); j < 0; ++j)
            value -= left.coefficient(j) * right.coefficient(-j);
    }
    return value;
}

} // namespace

TEST(Birkhoff, DepthOneMinusPart)
{
    CharacterTable table(CharacterKind::phi);
    for (unsigned k = 0; k <= 6; ++k) {
        Word word = indices_to_word(IndexVector{{k}});
        int e = -static_cast<int>(k) - 1;
        // pi(phi(d^k y)) = (-1)^{k+1} k! z^{-(k+1)}, and phi_- is its negative.
        Rational pole = Rational(k % 2 == 0 ? -1 : 1) * factorial(k);
        EXPECT_EQ(pole_part(phi(word, 0)), LaurentSeries::monomial(pole, e));
        EXPECT_EQ(table.birkhoff_minus(word), LaurentSeries::monomial(-pole, e)) << word;
    }
    EXPECT_EQ(table.birkhoff_minus(Word()), LaurentSeries::one());
    EXPECT_EQ(table.birkhoff_plus(Word(), 3), LaurentSeries::one());
}

TEST(Birkhoff, PhiPlusDyDy)
{
    CharacterTable table(CharacterKind::phi);
    LaurentSeries plus = table.birkhoff_plus(w("dydy"), 2);
    EXPECT_GE(plus.ord(), 0);
    EXPECT_EQ(plus.coefficient(0), Rational(1, 144));
    EXPECT_TRUE(table.birkhoff_minus(w("dydy")).is_exact());
}

TEST(Birkhoff, PsiPlusDyDy)
{
    CharacterTable table(CharacterKind::psi);
    EXPECT_EQ(table.lambda().value(), Rational(-1));
    LaurentSeries plus = table.birkhoff_plus(w("dydy"), 3);
    EXPECT_EQ(plus.coefficient(0), Rational(0));
    EXPECT_EQ(plus.coefficient(1), Rational(0));
    EXPECT_EQ(plus.coefficient(2), Rational(1, 144));
}

TEST(Birkhoff, CorrectionForYDdY)
{
    // The displayed corrections pair pole parts pi(phi(w')) with phi(w''); phi_- = -pi(phi) on depth one.
    CharacterTable table(CharacterKind::phi);
    LaurentSeries poles = pole_part(phi(w("y"), 0)) * phi(w("ddy"), 4) + pole_part(phi(w("ddy"), 0)) * phi(w("y"), 4);
    EXPECT_EQ(regular_part(poles).coefficient(0), Rational(-1, 90));
    LaurentSeries corr = table.birkhoff_minus(w("y")) * phi(w("ddy"), 4) +
                         table.birkhoff_minus(w("ddy")) * phi(w("y"), 4);
    EXPECT_EQ(corr, -poles);
    EXPECT_EQ(table.bogoliubov_bar(w("yddy"), 1), phi(w("yddy"), 1) + corr.truncate_to(1));
    EXPECT_EQ(table.birkhoff_plus(w("yddy"), 1).coefficient(0), Rational(0));

    LaurentSeries dydy = poles + Rational(2) * pole_part(phi(w("dy"), 0)) * phi(w("dy"), 4);
    EXPECT_EQ(regular_part(dydy).coefficient(0), Rational(-1, 360));
}

TEST(Birkhoff, BarRejectsEmptyWord)
{
    CharacterTable table(CharacterKind::phi);
    EXPECT_THROW(table.bogoliubov_bar(Word(), 0), NotAdmissible);
    EXPECT_THROW(table.birkhoff_minus(w("yd")), NotAdmissible);
}

TEST(Birkhoff, MinusIsPolarPlusIsRegular)
{
    for (CharacterKind kind : {CharacterKind::phi, CharacterKind::psi}) {
        CharacterTable table(kind);
        for (const Word& word : admissible_words(5)) {
            LaurentSeries minus = table.birkhoff_minus(word);
            EXPECT_TRUE(minus.is_exact());
            EXPECT_TRUE(regular_part(minus).is_zero()) << word;
            EXPECT_GE(table.birkhoff_plus(word, 2).ord(), 0) << word;
        }
    }
}

TEST(ZetaPlus, TableAgainstDepthTwoOracle)
{
    CharacterTable table(CharacterKind::phi);
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = 0; b <= 4; ++b) {
            RenormValue v = zeta_plus(table, IndexVector{{a, b}});
            EXPECT_EQ(v.value, depth_two_oracle(a, b)) << a << "," << b;
            EXPECT_EQ(v.provenance, RenormValue::Provenance::phi_constant_term);
        }
}

TEST(ZetaPlus, TableAgainstFixture)
{
    CharacterTable table(CharacterKind::phi);
    Fixtures f = load_fixtures(default_fixture_path());
    ASSERT_EQ(f.table.size(), 16u);
    for (const auto& e : f.table)
        EXPECT_EQ(zeta_plus(table, e.k).value, e.value) << indices_to_word(e.k);
}

TEST(ZetaPlus, DepthOneAndOddWeightAgreeWithMeromorphicValues)
{
    CharacterTable table(CharacterKind::phi);
    for (unsigned k = 0; k <= 12; ++k)
        EXPECT_EQ(zeta_plus(table, IndexVector{{k}}).value, mero_depth1(k));
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; b <= 5; ++b)
            if ((a + b) % 2 == 1)
                EXPECT_EQ(zeta_plus(table, IndexVector{{a, b}}).value, mero_depth2(a, b)) << a << "," << b;
}

TEST(ZetaPlus, NegativeControl)
{
    CharacterTable table(CharacterKind::phi);
    Rational v = zeta_plus(table, IndexVector{{0, 0}}).value;
    EXPECT_EQ(v, Rational(1, 4));
    EXPECT_NE(v, Rational(3, 8));
}

TEST(ZetaPlus, RenormalizedShuffle)
{
    CharacterTable table(CharacterKind::phi);
    auto value = [&](const WordSum& s) {
        Rational total(0);
        for (const auto& [word, c] : s)
            total += c * zeta_plus(table, word_to_indices(word)).value;
        return total;
    };
    for (const char* u : {"y", "dy", "ddy", "ydy"})
        for (const char* v : {"y", "dy", "dydy"}) {
            Rational lhs = value(project_T(shuffle_zero(w(u), w(v))));
            Rational rhs = zeta_plus(table, word_to_indices(w(u))).value * zeta_plus(table, word_to_indices(w(v))).value;
            EXPECT_EQ(lhs, rhs) << u << " * " << v;
        }
}

TEST(QZetaPlus, MatchesZetaPlus)
{
    CharacterTable phi_table(CharacterKind::phi);
    CharacterTable psi_table(CharacterKind::psi);
    for (const Word& word : admissible_words(5)) {
        IndexVector k = word_to_indices(word);
        RenormValue q = qzeta_plus(psi_table, k);
        EXPECT_EQ(q.value, zeta_plus(phi_table, k).value) << word;
        EXPECT_EQ(q.provenance, RenormValue::Provenance::psi_rescaled_limit);
    }
    EXPECT_EQ(qzeta_plus(psi_table, IndexVector{{1, 1}}).value, Rational(1, 144));
}

TEST(Primitives, Values)
{
    EXPECT_EQ(zeta_plus_via_primitives(IndexVector{{1, 1}}), Rational(1, 144));
    EXPECT_EQ(zeta_plus_via_primitives(IndexVector{{0, 0}}), Rational(1, 4));
    EXPECT_THROW(zeta_plus_via_primitives(IndexVector{{3}}), DepthOne);
    CharacterTable table(CharacterKind::phi);
    for (const Word& word : admissible_words(6))
        if (word.depth() >= 2)
            EXPECT_EQ(zeta_plus_via_primitives(word_to_indices(word)), zeta_plus(table, word_to_indices(word)).value)
                << word;
}

TEST(SharedTable, ConcurrentUse)
{
    std::vector<Rational> results(8);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i)
        threads.emplace_back([&, i] {
            CharacterTable& table = shared_table(CharacterKind::phi);
            results[i] = zeta_plus(table, IndexVector{{static_cast<unsigned>(i % 4), 3}}).value;
        });
    for (auto& t : threads)
        t.join();
    CharacterTable fresh(CharacterKind::phi);
    for (std::size_t i = 0; i < results.size(); ++i)
        EXPECT_EQ(results[i], zeta_plus(fresh, IndexVector{{static_cast<unsigned>(i % 4), 3}}).value);
    EXPECT_EQ(&shared_table(CharacterKind::psi), &shared_table(CharacterKind::psi));
    EXPECT_NE(&shared_table(CharacterKind::psi, 4), &shared_table(CharacterKind::psi, 6));
}

TEST(SharedTable, GuardDoesNotChangeValues)
{
    EXPECT_EQ(zeta_plus(shared_table(CharacterKind::phi, 1), IndexVector{{2, 1, 1}}).value,
              zeta_plus(shared_table(CharacterKind::phi, 9), IndexVector{{2, 1, 1}}).value);
}
