#pragma once

#include <vector>

#include "hopfmzv/power_series.hpp"

namespace hopfmzv {

/// Li_{k_1,...,k_n}(t) = J^{k_1}[y J^{k_2}[y ... J^{k_n}[y]]] with y = sum_{m>=1} t^m,
/// where J^{-k} means delta^k. Any signs are allowed; truncated at t^T.
PowerSeriesT li_J(const std::vector<int>& k, int T);

/// The nested sum sum_{m_1 > ... > m_n > 0} t^{m_1} / prod m_i^{k_i}, computed
/// directly to t^T.
PowerSeriesT li_nested(const std::vector<int>& k, int T);

} // namespace hopfmzv
