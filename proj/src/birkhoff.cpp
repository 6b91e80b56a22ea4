#include "hopfmzv/birkhoff.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hopfmzv/errors.hpp"

namespace hopfmzv {

namespace {

LambdaParam default_lambda(CharacterKind kind)
{
    return kind == CharacterKind::phi ? LambdaParam(0L) : LambdaParam(-1L);
}

Rational depth_one_regular_constant(const Word& w, const PrecisionPlan& plan)
{
    return regular_part(phi(w, 0, plan)).coefficient(0);
}

Rational primitive_recursion(const Word& w, const PrecisionPlan& plan)
{
    if (w.depth() == 1)
        return depth_one_regular_constant(w, plan);
    Rational sum(0);
    for (const auto& [legs, c] : reduced_coproduct(w, LambdaParam(0L)).terms)
        sum += c * primitive_recursion(legs.first, plan) * primitive_recursion(legs.second, plan);
    Rational denom = Rational(2).pow(static_cast<unsigned>(w.depth())) - Rational(2);
    return sum / denom;
}

} // namespace

std::string to_string(CharacterKind kind)
{
    return kind == CharacterKind::phi ? "phi" : "psi";
}

std::string to_string(RenormValue::Provenance p)
{
    switch (p) {
    case RenormValue::Provenance::phi_constant_term:
        return "phi-constant-term";
    case RenormValue::Provenance::psi_rescaled_limit:
        return "psi-rescaled-limit";
    case RenormValue::Provenance::primitive_decomposition:
        return "primitive-decomposition";
    }
    return "unknown";
}

CharacterTable::CharacterTable(CharacterKind kind, PrecisionPlan plan)
    : CharacterTable(kind, default_lambda(kind), plan)
{
}

CharacterTable::CharacterTable(CharacterKind kind, LambdaParam lambda, PrecisionPlan plan)
    : kind_(kind), lambda_(std::move(lambda)), plan_(plan)
{
}

LaurentSeries CharacterTable::character(const Word& w, int through)
{
    if (w.empty())
        return LaurentSeries::one();
    if (auto hit = chi_.find(w); hit && hit->valid_through() >= through)
        return hit->truncate_to(through);
    LaurentSeries s = kind_ == CharacterKind::phi ? phi(w, through, plan_) : psi(w, through, plan_);
    auto stored = chi_.find(w);
    if (!stored || stored->valid_through() < s.valid_through())
        chi_.insert_or_assign(w, s);
    return s;
}

LaurentSeries CharacterTable::bogoliubov_bar(const Word& w, int through)
{
    if (w.empty())
        throw NotAdmissible("the Bogoliubov preparation is taken on nonempty words");
    LaurentSeries bar = character(w, through);
    for (const auto& [legs, c] : reduced_coproduct(w, lambda_).terms) {
        LaurentSeries minus = birkhoff_minus(legs.first);
        if (minus.is_zero())
            continue;
        LaurentSeries rest = character(legs.second, through - minus.ord());
        bar += c * (minus * rest);
    }
    return bar.truncate_to(through);
}

LaurentSeries CharacterTable::birkhoff_minus(const Word& w)
{
    if (w.empty())
        return LaurentSeries::one();
    if (auto hit = minus_.find(w))
        return *hit;
    return minus_.insert(w, -pole_part(bogoliubov_bar(w, -1)));
}

LaurentSeries CharacterTable::birkhoff_plus(const Word& w, int through)
{
    if (w.empty())
        return LaurentSeries::one();
    return regular_part(bogoliubov_bar(w, through));
}

RenormValue zeta_plus(CharacterTable& phi_table, const IndexVector& k)
{
    const Word w = indices_to_word(k);
    LaurentSeries plus = phi_table.birkhoff_plus(w, 1);
    return {k, plus.coefficient(0), RenormValue::Provenance::phi_constant_term};
}

RenormValue qzeta_plus(CharacterTable& psi_table, const IndexVector& k)
{
    const Word w = indices_to_word(k);
    const int K = static_cast<int>(k.sum());
    LaurentSeries plus = psi_table.birkhoff_plus(w, K + 2);
    for (int e = 0; e < K; ++e)
        if (!plus.coefficient(e).is_zero())
            throw NonvanishingLowerTerm("psi_+(" + w.str() + ") has coefficient " + plus.coefficient(e).str()
                                        + " at z^" + std::to_string(e));
    Rational v = plus.coefficient(K);
    if (K % 2 == 1)
        v = -v;
    return {k, v, RenormValue::Provenance::psi_rescaled_limit};
}

Rational zeta_plus_via_primitives(const IndexVector& k, const PrecisionPlan& plan)
{
    const Word w = indices_to_word(k);
    if (w.depth() == 1)
        throw DepthOne("the primitive decomposition divides by 2^dpt - 2, which vanishes at depth one");
    return primitive_recursion(w, plan);
}

CharacterTable& shared_table(CharacterKind kind, int guard)
{
    static std::mutex mutex;
    static std::map<std::pair<CharacterKind, int>, std::unique_ptr<CharacterTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[{kind, guard}];
    if (!slot)
        slot = std::make_unique<CharacterTable>(kind, PrecisionPlan{guard});
    return *slot;
}

} // namespace hopfmzv
