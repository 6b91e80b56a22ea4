#include "hopfmzv/verify.hpp"

#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hopfmzv/bernoulli.hpp"
#include "hopfmzv/birkhoff.hpp"
#include "hopfmzv/coproduct.hpp"
#include "hopfmzv/errors.hpp"
#include "hopfmzv/polylog.hpp"
#include "hopfmzv/power_series.hpp"
#include "hopfmzv/qseries.hpp"
#include "hopfmzv/realizations.hpp"
#include "hopfmzv/shuffle.hpp"

namespace hopfmzv {

namespace {

// Records the first failure; later cases are still counted but not reported.
class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& input)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = input;
        }
    }

    template <class F>
    void guarded(const std::string& input, F&& body)
    {
        try {
            check(body(), input);
        } catch (const std::exception& e) {
            check(false, input + " threw: " + e.what());
        }
    }

    PropertyResult done() { return std::move(result_); }

private:
    PropertyResult result_;
};

using Triple = std::tuple<Word, Word, Word>;
using TripleSum = FormalSum<Triple>;

const std::vector<Rational>& coproduct_lambdas()
{
    static const std::vector<Rational> v{Rational(0), Rational(-1), Rational(3), Rational(-1, 2)};
    return v;
}

const std::vector<Rational>& product_lambdas()
{
    static const std::vector<Rational> v{Rational(-1), Rational(2), Rational(-1, 3)};
    return v;
}

std::string show(const Word& w)
{
    return w.empty() ? "e" : w.str();
}

std::string show(const Word& w, const Rational& lambda)
{
    return show(w) + " (lambda=" + lambda.str() + ")";
}

std::string show(const Word& u, const Word& v, const Rational& lambda)
{
    return show(u) + ", " + show(v) + " (lambda=" + lambda.str() + ")";
}

// Pairs of nonempty admissible words with total weight <= max_total.
std::vector<std::pair<Word, Word>> word_pairs(std::size_t max_total)
{
    std::vector<std::pair<Word, Word>> out;
    for (const Word& u : admissible_words(max_total))
        for (const Word& v : admissible_words(max_total))
            if (u.weight() + v.weight() <= max_total)
                out.emplace_back(u, v);
    return out;
}

TripleSum left_iterated(const TensorSum& t, const LambdaParam& lambda)
{
    TripleSum r;
    for (const auto& [p, c] : t)
        for (const auto& [q, cq] : coproduct_recursive(p.first, lambda).terms)
            r.add(Triple{q.first, q.second, p.second}, c * cq);
    return r;
}

TripleSum right_iterated(const TensorSum& t, const LambdaParam& lambda)
{
    TripleSum r;
    for (const auto& [p, c] : t)
        for (const auto& [q, cq] : coproduct_recursive(p.second, lambda).terms)
            r.add(Triple{p.first, q.first, q.second}, c * cq);
    return r;
}

// The lambda = -1 product from the q-side rule du * dv = u * dv + du * v - d(u * v),
// written out independently of the general recursion.
WordSum shm(const Word& u, const Word& v)
{
    if (u.empty())
        return WordSum(v);
    if (v.empty())
        return WordSum(u);
    if (u.front() == Letter::y)
        return prepend(Letter::y, shm(u.tail(), v));
    if (v.front() == Letter::y)
        return prepend(Letter::y, shm(u, v.tail()));
    WordSum r = shm(u.tail(), v) + shm(u, v.tail());
    r -= prepend(Letter::d, shm(u.tail(), v.tail()));
    return r;
}

LaurentSeries phi_of_sum(const WordSum& s, int through, const PrecisionPlan& plan)
{
    LaurentSeries acc;
    for (const auto& [w, c] : s)
        acc += c * phi(w, through, plan);
    return acc.truncate_to(through);
}

LaurentSeries psi_of_sum(const WordSum& s, int through, const PrecisionPlan& plan)
{
    LaurentSeries acc;
    for (const auto& [w, c] : s)
        acc += c * psi(w, through, plan);
    return acc.truncate_to(through);
}

Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Rational(num(rng), den(rng));
}

PowerSeriesT random_power_series(std::mt19937& rng, int T)
{
    PowerSeriesT s(T);
    for (int m = 1; m <= T; ++m)
        s[m] = random_rational(rng);
    return s;
}

BivariateSeries random_bivariate(std::mt19937& rng, int A, int Q)
{
    BivariateSeries s(A, Q);
    for (int a = 1; a <= A; ++a)
        for (int b = 0; b <= Q; ++b)
            s.row(a)[b] = random_rational(rng);
    return s;
}

LaurentSeries random_laurent(std::mt19937& rng, int ord, int vt)
{
    std::vector<Rational> c;
    for (int e = ord; e <= vt; ++e)
        c.push_back(random_rational(rng));
    return LaurentSeries::with_validity(ord, std::move(c), vt);
}

std::string show_ints(const std::vector<int>& k)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i)
        os << (i ? "," : "") << k[i];
    os << ")";
    return os.str();
}

std::string show_indices(const IndexVector& k)
{
    return show_ints(std::vector<int>(k.k.begin(), k.k.end()));
}

// Every IndexVector with 1 <= n <= max_depth and entries 0..max_entry.
std::vector<IndexVector> index_vectors(unsigned max_entry, std::size_t max_depth)
{
    std::vector<IndexVector> out;
    std::vector<IndexVector> frontier{IndexVector{}};
    for (std::size_t n = 1; n <= max_depth; ++n) {
        std::vector<IndexVector> next;
        for (const auto& base : frontier)
            for (unsigned x = 0; x <= max_entry; ++x) {
                IndexVector k = base;
                k.k.push_back(x);
                next.push_back(k);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::vector<std::vector<int>> signed_vectors(int lo, int hi, std::size_t max_depth)
{
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> frontier{{}};
    for (std::size_t n = 1; n <= max_depth; ++n) {
        std::vector<std::vector<int>> next;
        for (const auto& base : frontier)
            for (int x = lo; x <= hi; ++x) {
                auto k = base;
                k.push_back(x);
                next.push_back(k);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

// Binary words over {0, 1} (x0, x1) ending in 1 with length 1..max_len.
std::vector<std::string> binary_admissible(std::size_t max_len)
{
    std::vector<std::string> out;
    for (std::size_t len = 1; len <= max_len; ++len)
        for (unsigned bits = 0; bits < (1u << (len - 1)); ++bits) {
            std::string w;
            for (std::size_t i = 0; i + 1 < len; ++i)
                w.push_back(bits & (1u << (len - 2 - i)) ? '1' : '0');
            out.push_back(w + "1");
        }
    return out;
}

// ---- hopf --------------------------------------------------------------

PropertyResult coproduct_methods_agree(const VerifyOptions&)
{
    Checker c("coproduct_recursive_equals_combinatorial");
    for (const auto& lam : coproduct_lambdas())
        for (const Word& w : admissible_words(7))
            c.guarded(show(w, lam), [&] {
                return coproduct_recursive(w, LambdaParam(lam)).terms
                       == coproduct_combinatorial(w, LambdaParam(lam)).terms;
            });
    return c.done();
}

PropertyResult coproduct_coassociative(const VerifyOptions&)
{
    Checker c("coproduct_coassociative");
    for (const auto& lam : coproduct_lambdas())
        for (const Word& w : admissible_words(6))
            c.guarded(show(w, lam), [&] {
                const LambdaParam l(lam);
                TensorSum t = coproduct_recursive(w, l).terms;
                return left_iterated(t, l) == right_iterated(t, l);
            });
    return c.done();
}

PropertyResult coproduct_cocommutative(const VerifyOptions&)
{
    Checker c("coproduct_cocommutative");
    for (const auto& lam : coproduct_lambdas())
        for (const Word& w : admissible_words(7))
            c.guarded(show(w, lam), [&] {
                TensorSum t = coproduct_recursive(w, LambdaParam(lam)).terms;
                return flip(t) == t;
            });
    return c.done();
}

PropertyResult coproduct_connected(const VerifyOptions&)
{
    Checker c("coproduct_primitive_terms_have_coefficient_one");
    for (const auto& lam : coproduct_lambdas())
        for (const Word& w : admissible_words(7))
            c.guarded(show(w, lam), [&] {
                TensorSum t = coproduct_recursive(w, LambdaParam(lam)).terms;
                return t.coefficient({Word(), w}) == Rational(1) && t.coefficient({w, Word()}) == Rational(1);
            });
    return c.done();
}

PropertyResult coproduct_grading(const VerifyOptions&)
{
    Checker c("reduced_coproduct_grading");
    for (const auto& lam : coproduct_lambdas())
        for (const Word& w : admissible_words(7))
            c.guarded(show(w, lam), [&] {
                for (const auto& [p, coeff] : reduced_coproduct(w, LambdaParam(lam)).terms) {
                    if (p.first.depth() + p.second.depth() != w.depth())
                        return false;
                    if (p.first.depth() == 0 || p.second.depth() == 0)
                        return false;
                    std::size_t wt = p.first.weight() + p.second.weight();
                    if (lam.is_zero() ? wt != w.weight() : wt < w.weight())
                        return false;
                }
                return true;
            });
    return c.done();
}

PropertyResult shuffle_commutative(const VerifyOptions&)
{
    Checker c("shuffle_lambda_commutative");
    for (const auto& lam : product_lambdas())
        for (const auto& [u, v] : word_pairs(6))
            c.guarded(show(u, v, lam), [&] {
                const LambdaParam l(lam);
                return project_T(shuffle_lambda(u, v, l)) == project_T(shuffle_lambda(v, u, l));
            });
    return c.done();
}

PropertyResult shuffle_associative(const VerifyOptions&)
{
    Checker c("shuffle_lambda_associative");
    const auto words = admissible_words(4);
    for (const auto& lam : product_lambdas()) {
        const LambdaParam l(lam);
        for (const Word& u : words)
            for (const Word& v : words)
                for (const Word& w : words) {
                    if (u.weight() + v.weight() + w.weight() > 6)
                        continue;
                    c.guarded(show(u) + ", " + show(v) + ", " + show(w) + " (lambda=" + lam.str() + ")", [&] {
                        WordSum left = project_T(shuffle_lambda(project_T(shuffle_lambda(u, v, l)), WordSum(w), l));
                        WordSum right = project_T(shuffle_lambda(WordSum(u), project_T(shuffle_lambda(v, w, l)), l));
                        return left == right;
                    });
                }
    }
    return c.done();
}

PropertyResult shuffle_matches_shm(const VerifyOptions&)
{
    Checker c("shuffle_lambda_minus_one_matches_shm_rule");
    for (const auto& [u, v] : word_pairs(6))
        c.guarded(show(u, v, Rational(-1)), [&] { return shuffle_lambda(u, v, LambdaParam(-1L)) == shm(u, v); });
    return c.done();
}

PropertyResult bialgebra(const VerifyOptions&)
{
    Checker c("bialgebra_compatibility");
    for (const auto& lam : product_lambdas())
        for (const auto& [u, v] : word_pairs(6))
            c.guarded(show(u, v, lam), [&] {
                const LambdaParam l(lam);
                TensorSum left = coproduct(project_T(shuffle_lambda(u, v, l)), l);
                TensorSum right =
                    project_T(shuffle(coproduct_recursive(u, l).terms, coproduct_recursive(v, l).terms, l));
                return left == right;
            });
    return c.done();
}

PropertyResult shuffle_of_coproduct(const VerifyOptions&)
{
    Checker c("shuffle_of_coproduct_is_two_to_depth");
    for (const auto& lam : product_lambdas())
        for (const Word& w : admissible_words(6))
            c.guarded(show(w, lam), [&] {
                const LambdaParam l(lam);
                WordSum acc;
                for (const auto& [p, coeff] : coproduct_recursive(w, l).terms)
                    acc.add(project_T(shuffle_lambda(p.first, p.second, l)), coeff);
                return acc == WordSum(w, Rational(2).pow(static_cast<unsigned>(w.depth())));
            });
    return c.done();
}

PropertyResult phi_shuffle_of_coproduct(const VerifyOptions& o)
{
    Checker c("phi_shuffle_of_coproduct_is_two_to_depth");
    const PrecisionPlan plan{o.guard};
    const int through = 6;
    for (const Word& w : admissible_words(6))
        c.guarded(show(w), [&] {
            LaurentSeries full, reduced;
            for (const auto& [p, coeff] : coproduct_recursive(w, LambdaParam(0L)).terms) {
                LaurentSeries term = coeff * (phi(p.first, through + 6, plan) * phi(p.second, through + 6, plan));
                full += term;
                if (!p.first.empty() && !p.second.empty())
                    reduced += term;
            }
            const LaurentSeries value = phi(w, through, plan);
            const Rational two_dpt = Rational(2).pow(static_cast<unsigned>(w.depth()));
            // Exponents -wt(w) .. 6 cover at least 8 coefficients.
            return agree_through(full, two_dpt * value, through)
                   && agree_through(reduced, (two_dpt - Rational(2)) * value, through);
        });
    return c.done();
}

PropertyResult phi_character(const VerifyOptions& o)
{
    Checker c("phi_is_character");
    const PrecisionPlan plan{o.guard};
    const int through = 6;
    for (const auto& [u, v] : word_pairs(6))
        c.guarded(show(u, v, Rational(0)), [&] {
            LaurentSeries expected = phi(u, through + 6, plan) * phi(v, through + 6, plan);
            return agree_on_window(phi_of_sum(project_T(shuffle_zero(u, v)), through, plan), expected, 8)
                   && agree_on_window(phi_of_sum(project_T(shuffle_zero(v, u)), through, plan), expected, 8);
        });
    return c.done();
}

PropertyResult psi_character(const VerifyOptions& o)
{
    Checker c("psi_is_character");
    const PrecisionPlan plan{o.guard};
    const int through = 6;
    const LambdaParam l(-1L);
    for (const auto& [u, v] : word_pairs(6))
        c.guarded(show(u, v, Rational(-1)), [&] {
            LaurentSeries expected = psi(u, through + 6, plan) * psi(v, through + 6, plan);
            return agree_on_window(psi_of_sum(project_T(shuffle_lambda(u, v, l)), through, plan), expected, 8);
        });
    return c.done();
}

PropertyResult shuffle_zero_unit(const VerifyOptions&)
{
    Checker c("shuffle_zero_unit_and_y_pull");
    for (const Word& w : admissible_words(6)) {
        c.check(shuffle_zero(Word(), w) == WordSum(w) && shuffle_zero(w, Word()) == WordSum(w), show(w));
        for (const Word& v : admissible_words(6 - std::min<std::size_t>(w.weight(), 5))) {
            Word yw = w.prepend(Letter::y);
            c.check(shuffle_zero(yw, v) == prepend(Letter::y, shuffle_zero(w, v))
                        && shuffle_zero(v, yw) == prepend(Letter::y, shuffle_zero(v, w)),
                    show(yw) + ", " + show(v));
        }
    }
    return c.done();
}

PropertyResult positive_sector(const VerifyOptions&)
{
    Checker c("positive_sector_isomorphism");
    const auto words = binary_admissible(6);
    for (const auto& u : words)
        for (const auto& v : words) {
            c.guarded(u + ", " + v, [&] {
                return phi_iso(ordinary_shuffle(u, v)) == sho_positive(phi_iso(u), phi_iso(v));
            });
        }
    return c.done();
}

// ---- birkhoff ----------------------------------------------------------

PropertyResult support_split(const VerifyOptions& o)
{
    Checker c("minus_strictly_polar_plus_pole_free");
    for (CharacterKind kind : {CharacterKind::phi, CharacterKind::psi}) {
        CharacterTable& t = shared_table(kind, o.guard);
        for (const Word& w : admissible_words(6))
            c.guarded(to_string(kind) + " " + show(w), [&] {
                LaurentSeries minus = t.birkhoff_minus(w);
                LaurentSeries plus = t.birkhoff_plus(w, 4);
                return minus.is_exact() && (minus.is_zero() || minus.stored_through() < 0) && plus.ord() >= 0;
            });
    }
    return c.done();
}

PropertyResult minus_star_equals_plus(CharacterKind kind, const char* name, const VerifyOptions& o)
{
    Checker c(name);
    CharacterTable& t = shared_table(kind, o.guard);
    const int through = 4;
    for (const Word& w : admissible_words(6))
        c.guarded(show(w), [&] {
            // chi(w'') is needed through `through` plus the pole order of chi_-(w').
            const int need = through + static_cast<int>(w.weight());
            LaurentSeries lhs = star([&](const Word& a) { return t.birkhoff_minus(a); },
                                     [&](const Word& b) { return t.character(b, need); }, w, t.lambda());
            return agree_through(lhs, t.birkhoff_plus(w, through), through);
        });
    return c.done();
}

PropertyResult phi_star(const VerifyOptions& o)
{
    return minus_star_equals_plus(CharacterKind::phi, "phi_minus_star_phi_equals_phi_plus", o);
}

PropertyResult psi_star(const VerifyOptions& o)
{
    return minus_star_equals_plus(CharacterKind::psi, "psi_minus_star_psi_equals_psi_plus", o);
}

PropertyResult renormalized_shuffle_phi(const VerifyOptions& o)
{
    Checker c("renormalized_shuffle_relations_phi");
    CharacterTable& t = shared_table(CharacterKind::phi, o.guard);
    auto zeta = [&](const Word& w) { return w.empty() ? Rational(1) : zeta_plus(t, word_to_indices(w)).value; };
    for (const auto& [u, v] : word_pairs(6))
        c.guarded(show(u, v, Rational(0)), [&] {
            Rational acc(0);
            for (const auto& [w, coeff] : project_T(shuffle_zero(u, v)))
                acc += coeff * zeta(w);
            return acc == zeta(u) * zeta(v);
        });
    return c.done();
}

PropertyResult renormalized_shuffle_psi(const VerifyOptions& o)
{
    Checker c("renormalized_shuffle_relations_psi");
    CharacterTable& t = shared_table(CharacterKind::psi, o.guard);
    const LambdaParam l(-1L);
    for (const auto& [u, v] : word_pairs(6))
        c.guarded(show(u, v, Rational(-1)), [&] {
            const int K = static_cast<int>(word_to_indices(u).sum() + word_to_indices(v).sum());
            const int through = K + 2;
            LaurentSeries acc;
            for (const auto& [w, coeff] : project_T(shuffle_lambda(u, v, l)))
                acc += coeff * t.birkhoff_plus(w, through);
            LaurentSeries expected = t.birkhoff_plus(u, through) * t.birkhoff_plus(v, through);
            if (!agree_through(acc, expected, through))
                return false;
            // Rescaled level: (-1)^K coefficient of z^K is the product of the values.
            Rational lead = acc.coefficient(K);
            if (K % 2)
                lead = -lead;
            return lead == qzeta_plus(t, word_to_indices(u)).value * qzeta_plus(t, word_to_indices(v)).value;
        });
    return c.done();
}

PropertyResult primitive_decomposition(const VerifyOptions& o)
{
    Checker c("primitive_decomposition_agrees");
    CharacterTable& t = shared_table(CharacterKind::phi, o.guard);
    for (const Word& w : admissible_words(6)) {
        if (w.depth() < 2)
            continue;
        c.guarded(show(w), [&] {
            const IndexVector k = word_to_indices(w);
            return zeta_plus_via_primitives(k, PrecisionPlan{o.guard}) == zeta_plus(t, k).value;
        });
    }
    return c.done();
}

PropertyResult negative_control(const VerifyOptions& o)
{
    Checker c("negative_control_zeta_plus_00");
    Rational v = zeta_plus(shared_table(CharacterKind::phi, o.guard), IndexVector{{0, 0}}).value;
    c.check(v == Rational(1, 4) && v != Rational(3, 8), "(0,0) gave " + v.str());
    return c.done();
}

PropertyResult mero_depth1_compat(const VerifyOptions& o)
{
    Checker c("meromorphic_compatibility_depth1");
    CharacterTable& t = shared_table(CharacterKind::phi, o.guard);
    for (unsigned k = 0; k <= 20; ++k)
        c.guarded("k=" + std::to_string(k), [&] { return zeta_plus(t, IndexVector{{k}}).value == mero_depth1(k); });
    return c.done();
}

PropertyResult mero_depth2_compat(const VerifyOptions& o)
{
    Checker c("meromorphic_compatibility_depth2");
    CharacterTable& t = shared_table(CharacterKind::phi, o.guard);
    for (unsigned a = 0; a <= 7; ++a)
        for (unsigned b = 0; b <= 7; ++b) {
            if ((a + b) % 2 == 0)
                continue;
            c.guarded(show_indices(IndexVector{{a, b}}),
                      [&] { return zeta_plus(t, IndexVector{{a, b}}).value == mero_depth2(a, b); });
        }
    return c.done();
}

PropertyResult qzeta_equals_zeta(const VerifyOptions& o)
{
    Checker c("qzeta_plus_equals_zeta_plus");
    CharacterTable& phi_t = shared_table(CharacterKind::phi, o.guard);
    CharacterTable& psi_t = shared_table(CharacterKind::psi, o.guard);
    for (const auto& k : index_vectors(3, 3))
        c.guarded(show_indices(k), [&] { return qzeta_plus(psi_t, k).value == zeta_plus(phi_t, k).value; });
    return c.done();
}

// ---- rota-baxter -------------------------------------------------------

PropertyResult j_delta_inverse(const VerifyOptions&)
{
    Checker c("J_delta_inverse");
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        PowerSeriesT f = random_power_series(rng, 30);
        c.check(op_delta(op_J(f)) == f && op_J(op_delta(f)) == f, "random series #" + std::to_string(trial));
    }
    return c.done();
}

PropertyResult j_weight_zero(const VerifyOptions&)
{
    Checker c("J_rota_baxter_weight_zero");
    std::mt19937 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        PowerSeriesT f = random_power_series(rng, 30), g = random_power_series(rng, 30);
        c.check(op_J(f) * op_J(g) == op_J(f * op_J(g)) + op_J(op_J(f) * g), "random pair #" + std::to_string(trial));
    }
    return c.done();
}

PropertyResult pq_weight_minus_one(const VerifyOptions&)
{
    Checker c("Pq_rota_baxter_weight_minus_one");
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        BivariateSeries f = random_bivariate(rng, 10, 10), g = random_bivariate(rng, 10, 10);
        BivariateSeries lhs = op_Pq(f) * op_Pq(g);
        BivariateSeries rhs = op_Pq(f * op_Pq(g)) + op_Pq(op_Pq(f) * g) - op_Pq(f * g);
        c.check(lhs == rhs, "random pair #" + std::to_string(trial));
    }
    return c.done();
}

PropertyResult dq_leibniz(const VerifyOptions&)
{
    Checker c("Dq_generalized_leibniz");
    std::mt19937 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        BivariateSeries f = random_bivariate(rng, 10, 10), g = random_bivariate(rng, 10, 10);
        BivariateSeries lhs = op_Dq(f * g);
        BivariateSeries rhs = op_Dq(f) * g + f * op_Dq(g) - op_Dq(f) * op_Dq(g);
        c.check(lhs == rhs, "random pair #" + std::to_string(trial));
    }
    return c.done();
}

PropertyResult dq_pq_inverse(const VerifyOptions&)
{
    Checker c("Dq_Pq_inverse");
    std::mt19937 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        BivariateSeries f = random_bivariate(rng, 10, 10);
        c.check(op_Dq(op_Pq(f)) == f && op_Pq(op_Dq(f)) == f && op_Dq(f) == f - op_Eq(f),
                "random series #" + std::to_string(trial));
    }
    return c.done();
}

PropertyResult pole_projector(const VerifyOptions&)
{
    Checker c("pole_projector_rota_baxter_weight_minus_one");
    std::mt19937 rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentSeries a = random_laurent(rng, -4, 6), b = random_laurent(rng, -4, 6);
        LaurentSeries lhs = pole_part(a) * pole_part(b);
        LaurentSeries rhs = pole_part(a * pole_part(b)) + pole_part(pole_part(a) * b) - pole_part(a * b);
        bool idempotent = pole_part(pole_part(a)) == pole_part(a);
        bool complementary = agree_on_window(pole_part(a) + regular_part(a), a, 1);
        c.check(lhs == rhs && idempotent && complementary, "random pair #" + std::to_string(trial));
    }
    return c.done();
}

PropertyResult li_iteration(const VerifyOptions&)
{
    Checker c("li_J_equals_li_nested");
    for (const auto& k : signed_vectors(-2, 2, 3))
        c.guarded(show_ints(k), [&] { return li_J(k, 30) == li_nested(k, 30); });
    return c.done();
}

// ---- qseries -----------------------------------------------------------

PropertyResult qz_rational_expansion(const VerifyOptions&)
{
    Checker c("qz_series_equals_qz_rational");
    for (const auto& k : index_vectors(3, 3))
        c.guarded(show_indices(k), [&] { return qz_series(k, 30) == qz_rational(k).expand(30); });
    return c.done();
}

PropertyResult q_operator_evaluation(const VerifyOptions&)
{
    Checker c("q_operator_iteration_at_t_equals_q");
    for (const auto& k : index_vectors(3, 3))
        c.guarded(show_indices(k), [&] {
            std::vector<int> e;
            for (unsigned x : k.k)
                e.push_back(-static_cast<int>(x));
            return eval_t_eq_q(q_operator_iteration(e, 20, 20)) == qz_series(k, 20);
        });
    for (const auto& e : signed_vectors(-2, 2, 2))
        c.guarded(show_ints(e), [&] {
            return eval_t_eq_q(q_operator_iteration(e, 20, 20)) == qz_series_signed(e, 20);
        });
    return c.done();
}

// Coefficient of z^e in psi(w) from the C-sum: compositions m of e + n into n parts.
Rational psi_from_C(const IndexVector& k, int e)
{
    const int n = static_cast<int>(k.depth());
    const int total = e + n;
    Rational acc(0);
    if (total < 0)
        return acc;
    std::vector<unsigned> m(n, 0);
    std::function<void(int, int)> walk = [&](int i, int left) {
        if (i == n - 1) {
            m[i] = static_cast<unsigned>(left);
            Rational prod(1);
            for (int j = 0; j < n; ++j)
                prod *= bernoulli(m[j]) / factorial(m[j]);
            if (!prod.is_zero())
                acc += prod * psi_C(k, m);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            m[i] = static_cast<unsigned>(x);
            walk(i + 1, left - x);
        }
    };
    walk(0, total);
    return acc;
}

PropertyResult psi_c_oracle(const VerifyOptions& o)
{
    Checker c("psi_matches_C_sum");
    for (const Word& w : admissible_words(5))
        c.guarded(show(w), [&] {
            const IndexVector k = word_to_indices(w);
            const LaurentSeries s = psi(w, 4, PrecisionPlan{o.guard});
            for (int e = -static_cast<int>(k.depth()) - 1; e <= 4; ++e)
                if (s.coefficient(e) != psi_from_C(k, e))
                    return false;
            return true;
        });
    return c.done();
}

} // namespace

std::vector<std::string> suite_names()
{
    return {"hopf", "birkhoff", "rota-baxter", "qseries"};
}

std::vector<NamedProperty> suite_properties(const std::string& suite)
{
    std::vector<Property> props;
    if (suite == "hopf")
        props = {coproduct_methods_agree, coproduct_coassociative, coproduct_cocommutative, coproduct_connected,
                 coproduct_grading,       shuffle_commutative,     shuffle_associative,     shuffle_matches_shm,
                 bialgebra,               shuffle_of_coproduct,    phi_shuffle_of_coproduct, phi_character,
                 psi_character,           shuffle_zero_unit,       positive_sector};
    else if (suite == "birkhoff")
        props = {support_split,        phi_star,           psi_star,           renormalized_shuffle_phi,
                 renormalized_shuffle_psi, primitive_decomposition, negative_control, mero_depth1_compat,
                 mero_depth2_compat,   qzeta_equals_zeta};
    else if (suite == "rota-baxter")
        props = {j_delta_inverse, j_weight_zero, pq_weight_minus_one, dq_leibniz, dq_pq_inverse, pole_projector,
                 li_iteration};
    else if (suite == "qseries")
        props = {qz_rational_expansion, q_operator_evaluation, psi_c_oracle};
    else
        throw std::invalid_argument("unknown suite '" + suite + "'");
    std::vector<NamedProperty> out;
    for (auto& p : props)
        out.push_back({suite, std::move(p)});
    return out;
}

std::vector<PropertyResult> run_suite(const std::string& suite, const VerifyOptions& options)
{
    std::vector<PropertyResult> results;
    if (suite == "all") {
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, options);
            results.insert(results.end(), part.begin(), part.end());
        }
        return results;
    }
    for (const auto& p : suite_properties(suite))
        results.push_back(p.run(options));
    return results;
}

void print_report(const std::vector<PropertyResult>& results, std::ostream& out)
{
    for (const auto& r : results) {
        out << r.name << ": " << (r.passed ? "PASS" : "FAIL");
        if (!r.passed)
            out << " (counterexample: " << r.counterexample << ")";
        out << "\n";
    }
}

bool all_passed(const std::vector<PropertyResult>& results)
{
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

} // namespace hopfmzv
