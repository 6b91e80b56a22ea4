#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hopfmzv/laurent_series.hpp"
#include "hopfmzv/power_series.hpp"
#include "hopfmzv/word.hpp"

namespace hopfmzv {

using json = nlohmann::ordered_json;

/// {"ord": int, "valid_through": int, "coeffs": ["p/q", ...]}; Laurent
/// polynomials additionally carry "exact": true.
json to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const json& j);

/// Power series as a Laurent series starting at t^0.
json to_json(const PowerSeriesT& s);

/// {"terms": [{"word": "dydy", "coeff": "1"}, ...]} in word order.
json to_json(const WordSum& s);
WordSum word_sum_from_json(const json& j);

/// {"terms": [{"left": "dy", "right": "ddy", "coeff": "3"}, ...]}.
json to_json(const TensorSum& s);
TensorSum tensor_sum_from_json(const json& j);

struct TableEntry {
    IndexVector k;
    Rational value;
};

struct SeriesFixture {
    std::string character;
    Word word;
    LaurentSeries series;
};

struct Fixtures {
    std::vector<TableEntry> table;
    std::vector<SeriesFixture> series;
};

json to_json(const TableEntry& e);

/// Reads a fixture list whose entries are either {"k", "value"} table cells
/// or {"character", "word", "series"} example expansions.
Fixtures load_fixtures(const std::string& path);
Fixtures parse_fixtures(const json& j);

/// Path of fixtures/table1.json in the source tree.
std::string default_fixture_path();

/// Aligned two-column text: coefficient, then word (or left (x) right).
std::string to_aligned_text(const WordSum& s);
std::string to_aligned_text(const TensorSum& s);

} // namespace hopfmzv
