#pragma once

#include <string>

#include "hopfmzv/coproduct.hpp"
#include "hopfmzv/laurent_series.hpp"
#include "hopfmzv/memo.hpp"
#include "hopfmzv/realizations.hpp"
#include "hopfmzv/shuffle.hpp"
#include "hopfmzv/word.hpp"

namespace hopfmzv {

enum class CharacterKind { phi, psi };

std::string to_string(CharacterKind kind);

/// Memoized Birkhoff decomposition chi = chi_-^{*(-1)} * chi_+ of one character.
///
/// The coproduct parameter is stored, not implied by the kind: the default
/// constructor pairs phi with lambda = 0 and psi with lambda = -1. Safe to
/// share between threads.
class CharacterTable {
public:
    explicit CharacterTable(CharacterKind kind, PrecisionPlan plan = {});
    CharacterTable(CharacterKind kind, LambdaParam lambda, PrecisionPlan plan);

    CharacterKind kind() const { return kind_; }
    const LambdaParam& lambda() const { return lambda_; }
    const PrecisionPlan& plan() const { return plan_; }

    /// chi(w) valid through at least z^through.
    LaurentSeries character(const Word& w, int through);

    /// chi_bar(w) = chi(w) + sum over the reduced coproduct of chi_-(w') chi(w''),
    /// valid through at least z^through. Requires w nonempty and admissible.
    LaurentSeries bogoliubov_bar(const Word& w, int through);

    /// chi_-(w) = -pi(chi_bar(w)), a Laurent polynomial; chi_-(e) = 1.
    LaurentSeries birkhoff_minus(const Word& w);

    /// chi_+(w) = (Id - pi)(chi_bar(w)) valid through z^through; chi_+(e) = 1.
    LaurentSeries birkhoff_plus(const Word& w, int through);

private:
    CharacterKind kind_;
    LambdaParam lambda_;
    PrecisionPlan plan_;
    Memo<Word, LaurentSeries> chi_;
    Memo<Word, LaurentSeries> minus_;
};

struct RenormValue {
    enum class Provenance { phi_constant_term, psi_rescaled_limit, primitive_decomposition };

    IndexVector k;
    Rational value;
    Provenance provenance;
};

std::string to_string(RenormValue::Provenance p);

/// zeta_+(-k_1, ..., -k_n): the constant term of phi_+ on d^{k_1}y...d^{k_n}y.
RenormValue zeta_plus(CharacterTable& phi_table, const IndexVector& k);

/// (-1)^{sum k} times the z^{sum k} coefficient of psi_+. Throws
/// NonvanishingLowerTerm if any lower coefficient of psi_+ is nonzero.
RenormValue qzeta_plus(CharacterTable& psi_table, const IndexVector& k);

/// zeta_+ through phi_+(w) = 1/(2^dpt - 2) sum over the reduced lambda = 0
/// coproduct of phi_+(w') phi_+(w''), recursing down to depth-one words, whose
/// values are read off phi directly. Throws DepthOne for depth-one input.
Rational zeta_plus_via_primitives(const IndexVector& k, const PrecisionPlan& plan = {});

/// Process-wide tables with the default coproducts and the given guard. Tables
/// for different guards are distinct.
CharacterTable& shared_table(CharacterKind kind, int guard = PrecisionPlan{}.guard);

} // namespace hopfmzv
