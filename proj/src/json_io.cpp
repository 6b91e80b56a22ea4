#include "hopfmzv/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hopfmzv/errors.hpp"

namespace hopfmzv {

namespace {

Rational rational_field(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw SyntaxError(std::string("expected string field '") + key + "'");
    return Rational::parse(j.at(key).get<std::string>());
}

std::string word_field(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw SyntaxError(std::string("expected string field '") + key + "'");
    return j.at(key).get<std::string>();
}

} // namespace

json to_json(const LaurentSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(c.str());
    json j;
    j["ord"] = s.ord();
    j["valid_through"] = s.is_exact() ? s.stored_through() : s.valid_through();
    j["coeffs"] = std::move(coeffs);
    if (s.is_exact())
        j["exact"] = true;
    return j;
}

LaurentSeries series_from_json(const json& j)
{
    try {
        const int ord = j.at("ord").get<int>();
        const int vt = j.at("valid_through").get<int>();
        std::vector<Rational> c;
        for (const auto& x : j.at("coeffs"))
            c.push_back(Rational::parse(x.get<std::string>()));
        if (static_cast<int>(c.size()) != vt - ord + 1)
            throw SyntaxError("series JSON: valid_through does not match the number of coefficients");
        if (j.value("exact", false))
            return LaurentSeries::exact(ord, std::move(c));
        return LaurentSeries::with_validity(ord, std::move(c), vt);
    } catch (const json::exception& e) {
        throw SyntaxError(std::string("series JSON: ") + e.what());
    }
}

json to_json(const PowerSeriesT& s)
{
    std::vector<Rational> c = s.coeffs();
    json coeffs = json::array();
    for (const auto& x : c)
        coeffs.push_back(x.str());
    json j;
    j["ord"] = 0;
    j["valid_through"] = s.truncation();
    j["coeffs"] = std::move(coeffs);
    return j;
}

json to_json(const WordSum& s)
{
    json terms = json::array();
    for (const auto& [w, c] : s)
        terms.push_back(json{{"word", w.str()}, {"coeff", c.str()}});
    return json{{"terms", std::move(terms)}};
}

WordSum word_sum_from_json(const json& j)
{
    WordSum s;
    for (const auto& t : j.at("terms"))
        s.add(Word::parse(word_field(t, "word")), rational_field(t, "coeff"));
    return s;
}

json to_json(const TensorSum& s)
{
    json terms = json::array();
    for (const auto& [p, c] : s)
        terms.push_back(json{{"left", p.first.str()}, {"right", p.second.str()}, {"coeff", c.str()}});
    return json{{"terms", std::move(terms)}};
}

TensorSum tensor_sum_from_json(const json& j)
{
    TensorSum s;
    for (const auto& t : j.at("terms"))
        s.add(WordPair{Word::parse(word_field(t, "left")), Word::parse(word_field(t, "right"))},
              rational_field(t, "coeff"));
    return s;
}

json to_json(const TableEntry& e)
{
    json k = json::array();
    for (unsigned x : e.k.k)
        k.push_back(x);
    return json{{"k", std::move(k)}, {"value", e.value.str()}};
}

Fixtures parse_fixtures(const json& j)
{
    if (!j.is_array())
        throw SyntaxError("fixture file must hold a JSON list");
    Fixtures f;
    for (const auto& entry : j) {
        if (entry.contains("k")) {
            IndexVector k;
            for (const auto& x : entry.at("k"))
                k.k.push_back(x.get<unsigned>());
            f.table.push_back({std::move(k), rational_field(entry, "value")});
        } else if (entry.contains("series")) {
            f.series.push_back({word_field(entry, "character"), Word::parse(word_field(entry, "word")),
                                series_from_json(entry.at("series"))});
        } else {
            throw SyntaxError("unrecognised fixture entry: " + entry.dump());
        }
    }
    return f;
}

Fixtures load_fixtures(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open fixture file " + path);
    try {
        return parse_fixtures(json::parse(in));
    } catch (const json::exception& e) {
        throw SyntaxError("fixture file " + path + ": " + e.what());
    }
}

std::string default_fixture_path()
{
    return std::string(HOPFMZV_SOURCE_DIR) + "/fixtures/table1.json";
}

std::string to_aligned_text(const WordSum& s)
{
    std::size_t width = 0;
    for (const auto& [w, c] : s)
        width = std::max(width, c.str().size());
    std::ostringstream os;
    for (const auto& [w, c] : s) {
        std::string cs = c.str();
        os << std::string(width - cs.size(), ' ') << cs << "  " << (w.empty() ? "e" : w.str()) << "\n";
    }
    if (s.empty())
        os << "0\n";
    return os.str();
}

std::string to_aligned_text(const TensorSum& s)
{
    std::size_t width = 0, left_width = 0;
    for (const auto& [p, c] : s) {
        width = std::max(width, c.str().size());
        left_width = std::max(left_width, std::max<std::size_t>(p.first.weight(), 1));
    }
    std::ostringstream os;
    for (const auto& [p, c] : s) {
        std::string cs = c.str();
        std::string l = p.first.empty() ? "e" : p.first.str();
        std::string r = p.second.empty() ? "e" : p.second.str();
        os << std::string(width - cs.size(), ' ') << cs << "  " << l << std::string(left_width - l.size(), ' ')
           << " (x) " << r << "\n";
    }
    if (s.empty())
        os << "0\n";
    return os.str();
}

} // namespace hopfmzv
