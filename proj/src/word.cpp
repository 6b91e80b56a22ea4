#include "hopfmzv/word.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hopfmzv/errors.hpp"

namespace hopfmzv {

Word Word::parse(std::string_view text)
{
    for (char c : text)
        if (c != 'd' && c != 'y')
            throw SyntaxError("word '" + std::string(text) + "' contains a letter outside {d, y}");
    return Word(std::string(text));
}

std::size_t Word::depth() const
{
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'y'));
}

std::ostream& operator<<(std::ostream& os, const Word& w)
{
    return os << (w.empty() ? "e" : w.str());
}

unsigned IndexVector::sum() const
{
    unsigned s = 0;
    for (unsigned x : k)
        s += x;
    return s;
}

Word indices_to_word(const IndexVector& k)
{
    std::string s;
    for (unsigned ki : k.k) {
        s.append(ki, 'd');
        s.push_back('y');
    }
    return Word::parse(s);
}

IndexVector word_to_indices(const Word& w)
{
    if (w.empty() || !w.admissible())
        throw NotAdmissible("word '" + w.str() + "' is not a nonempty admissible word");
    IndexVector r;
    unsigned run = 0;
    for (char c : w.str()) {
        if (c == 'd') {
            ++run;
        } else {
            r.k.push_back(run);
            run = 0;
        }
    }
    return r;
}

IndexVector parse_nonpositive_arguments(const std::vector<std::string>& args)
{
    if (args.empty())
        throw SyntaxError("at least one argument is required");
    IndexVector r;
    for (const auto& a : args) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(a, &pos);
        } catch (const std::exception&) {
            throw SyntaxError("not an integer: '" + a + "'");
        }
        if (pos != a.size())
            throw SyntaxError("not an integer: '" + a + "'");
        if (v > 0)
            throw SyntaxError("argument " + a + " is positive; only non-positive arguments are supported");
        r.k.push_back(static_cast<unsigned>(-v));
    }
    return r;
}

std::vector<Word> words_of_weight(std::size_t weight)
{
    std::vector<Word> out;
    std::size_t count = std::size_t{1} << weight;
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::string s(weight, 'd');
        for (std::size_t i = 0; i < weight; ++i)
            if (mask & (std::size_t{1} << (weight - 1 - i)))
                s[i] = 'y';
        out.push_back(Word::parse(s));
    }
    return out;
}

std::vector<Word> admissible_words(std::size_t max_weight)
{
    std::vector<Word> out;
    for (std::size_t w = 1; w <= max_weight; ++w)
        for (auto& word : words_of_weight(w))
            if (word.admissible())
                out.push_back(std::move(word));
    return out;
}

WordSum project_T(const WordSum& s)
{
    return s.filter([](const Word& w) { return w.admissible(); });
}

TensorSum project_T(const TensorSum& s)
{
    return s.filter([](const WordPair& p) { return p.first.admissible() && p.second.admissible(); });
}

WordSum prepend(Letter l, const WordSum& s)
{
    return s.map_keys([l](const Word& w) { return w.prepend(l); });
}

TensorSum flip(const TensorSum& s)
{
    return s.map_keys([](const WordPair& p) { return WordPair{p.second, p.first}; });
}

namespace {

void write_coeff(std::ostream& os, const Rational& c, bool first)
{
    if (first)
        os << (c.sign() < 0 ? "-" : "");
    else
        os << (c.sign() < 0 ? " - " : " + ");
    Rational mag = c.sign() < 0 ? -c : c;
    if (mag != Rational(1))
        os << mag << "*";
}

} // namespace

std::string to_text(const WordSum& s)
{
    if (s.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : s) {
        write_coeff(os, c, first);
        os << w;
        first = false;
    }
    return os.str();
}

std::string to_text(const TensorSum& s)
{
    if (s.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : s) {
        write_coeff(os, c, first);
        os << p.first << "(x)" << p.second;
        first = false;
    }
    return os.str();
}

} // namespace hopfmzv
