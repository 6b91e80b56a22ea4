#include "hopfmzv/realizations.hpp"

#include <functional>

#include "hopfmzv/bernoulli.hpp"
#include "hopfmzv/errors.hpp"
#include "hopfmzv/memo.hpp"

namespace hopfmzv {

namespace {

Memo<int, LaurentSeries> x_memo;
Memo<std::pair<unsigned, int>, LaurentSeries> factor_memo;

IndexVector indices_of(const Word& w)
{
    if (!w.admissible())
        throw NotAdmissible("characters are defined on admissible words, got '" + w.str() + "'");
    return word_to_indices(w);
}

int atom_validity(const Word& w, const IndexVector& k, int target, int guard)
{
    return target + static_cast<int>(w.weight()) + static_cast<int>(k.sum()) + guard;
}

LaurentSeries phi_with_validity(const IndexVector& k, int atom_vt)
{
    const LaurentSeries x = x_series(atom_vt);
    LaurentSeries s = x;
    for (std::size_t j = k.k.size(); j-- > 0;) {
        if (j + 1 < k.k.size())
            s = x * s;
        for (unsigned i = 0; i < k.k[j]; ++i)
            s = series_diff(s);
    }
    return s;
}

LaurentSeries psi_with_validity(const IndexVector& k, int atom_vt)
{
    const std::size_t n = k.k.size();
    LaurentSeries total;
    // Depth-first over (l_1, ..., l_n), carrying the partial product and level.
    std::function<void(std::size_t, unsigned, LaurentSeries)> walk = [&](std::size_t j, unsigned level_base,
                                                                         LaurentSeries partial) {
        if (j == n) {
            total += partial;
            return;
        }
        for (unsigned l = 0; l <= k.k[j]; ++l) {
            unsigned level = level_base + l + 1;
            Rational c = binomial(k.k[j], l) * Rational((l + 1) % 2 == 0 ? 1 : -1);
            LaurentSeries f = c * psi_factor(level, atom_vt);
            walk(j + 1, level_base + l, j == 0 ? f : partial * f);
        }
    };
    walk(0, 0, LaurentSeries::one());
    return total;
}

template <class Compute>
LaurentSeries planned(const Word& w, int target, const PrecisionPlan& plan, Compute&& compute)
{
    if (w.empty())
        return LaurentSeries::one();
    const IndexVector k = indices_of(w);
    int guard = plan.guard;
    for (int attempt = 0; attempt < 2; ++attempt, guard *= 2) {
        LaurentSeries s = compute(k, atom_validity(w, k, target, guard));
        if (s.valid_through() >= target)
            return s.truncate_to(target);
    }
    throw PrecisionExceeded("precision plan for '" + w.str() + "' cannot reach z^" + std::to_string(target));
}

} // namespace

LaurentSeries x_series(int valid_through)
{
    return x_memo.get_or_compute(valid_through, [&] {
        std::vector<Rational> c;
        for (int e = -1; e <= valid_through; ++e)
            c.push_back(-bernoulli(static_cast<unsigned>(e + 1)) / factorial(static_cast<unsigned>(e + 1)));
        return LaurentSeries::with_validity(-1, std::move(c), valid_through);
    });
}

LaurentSeries psi_factor(unsigned level, int valid_through)
{
    return factor_memo.get_or_compute({level, valid_through}, [&] {
        std::vector<Rational> c;
        const Rational lam(static_cast<long>(level));
        for (int e = -1; e <= valid_through; ++e) {
            unsigned m = static_cast<unsigned>(e + 1);
            Rational scale = e >= 0 ? lam.pow(static_cast<unsigned>(e)) : Rational(1) / lam;
            c.push_back(bernoulli(m) / factorial(m) * scale);
        }
        return LaurentSeries::with_validity(-1, std::move(c), valid_through);
    });
}

LaurentSeries phi(const Word& w, int target, const PrecisionPlan& plan)
{
    return planned(w, target, plan, phi_with_validity);
}

LaurentSeries psi(const Word& w, int target, const PrecisionPlan& plan)
{
    return planned(w, target, plan, psi_with_validity);
}

Rational psi_C(const IndexVector& k, const std::vector<unsigned>& m)
{
    if (m.size() != k.k.size())
        throw std::invalid_argument("psi_C: index vectors k and m differ in length");
    const std::size_t n = k.k.size();
    Rational total(0);
    std::function<void(std::size_t, unsigned, Rational)> walk = [&](std::size_t i, unsigned level_base,
                                                                     Rational partial) {
        if (i == n) {
            total += partial;
            return;
        }
        for (unsigned l = 0; l <= k.k[i]; ++l) {
            Rational level(static_cast<long>(level_base + l + 1));
            Rational power = m[i] >= 1 ? level.pow(m[i] - 1) : Rational(1) / level;
            Rational term = binomial(k.k[i], l) * Rational(l % 2 == 0 ? -1 : 1) * power;
            walk(i + 1, level_base + l, partial * term);
        }
    };
    walk(0, 0, Rational(1));
    return total;
}

Rational mero_depth1(unsigned k)
{
    return -bernoulli(k + 1) / Rational(static_cast<long>(k) + 1);
}

Rational mero_depth2(unsigned a, unsigned b)
{
    if ((a + b) % 2 == 0)
        throw EvenWeight("zeta_2(-" + std::to_string(a) + ", -" + std::to_string(b)
                         + ") lies in the singular set (a + b even)");
    Rational factor = b == 0 ? Rational(1) : Rational(1, 2);
    return factor * bernoulli(a + b + 1) / Rational(static_cast<long>(a + b) + 1);
}

} // namespace hopfmzv
