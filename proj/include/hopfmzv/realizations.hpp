#pragma once

#include <vector>

#include "hopfmzv/laurent_series.hpp"
#include "hopfmzv/word.hpp"

namespace hopfmzv {

/// Validity slack added on top of the pole-order and derivative budget when
/// atoms are generated. The CLI honours HOPFMZV_GUARD.
struct PrecisionPlan {
    int guard = 4;
};

/// x(z) = e^z / (1 - e^z) = -(1/z + sum_{n>=0} B_{n+1}/(n+1)! z^n), valid through z^valid_through.
LaurentSeries x_series(int valid_through);

/// f(level * z) with f(u) = sum_{m>=0} B_m/m! u^{m-1} = e^u / (e^u - 1),
/// valid through z^valid_through. Its z^{-1} coefficient is 1/level.
LaurentSeries psi_factor(unsigned level, int valid_through);

/// phi(d^{k_1} y ... d^{k_n} y) = D^{k_1}[x D^{k_2}[x ... D^{k_n}[x]]] with D = d/dz,
/// phi(e) = 1. The result is valid exactly through z^target.
///
/// Atoms are generated valid through target + wt(w) + sum k_i + guard; if that
/// falls short the computation is repeated once with the guard doubled before
/// PrecisionExceeded is raised. Throws NotAdmissible for words ending in d.
LaurentSeries phi(const Word& w, int target, const PrecisionPlan& plan = {});

/// psi(d^{k_1} y ... d^{k_n} y) = sum over 0 <= l_j <= k_j of
///   prod_j (-1)^{l_j + 1} binom(k_j, l_j) f((l_1 + ... + l_j + 1) z),
/// psi(e) = 1; the modified q-MZV at q = e^z. Precision handling as for phi.
LaurentSeries psi(const Word& w, int target, const PrecisionPlan& plan = {});

/// C^{k}_{m} = sum_{l} prod_i binom(k_i, l_i) (-1)^{l_i + 1} (l_1 + ... + l_i + 1)^{m_i - 1}.
/// Requires m.size() == k.size().
Rational psi_C(const IndexVector& k, const std::vector<unsigned>& m);

/// zeta_1(-k) = -B_{k+1}/(k+1).
Rational mero_depth1(unsigned k);
/// zeta_2(-a, -b) = 1/2 (1 + delta_0(b)) B_{a+b+1}/(a+b+1) for a + b odd.
/// Throws EvenWeight when a + b is even: those points are singular.
Rational mero_depth2(unsigned a, unsigned b);

} // namespace hopfmzv
