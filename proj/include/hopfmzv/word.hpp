#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfmzv/rational.hpp"

namespace hopfmzv {

enum class Letter : char { d = 'd', y = 'y' };

/// Word over the alphabet {d, y}.
///
/// Words are ordered graded-lexicographically: by weight first, then letter by
/// letter with d < y. All printing and JSON output follows this order.
class Word {
public:
    Word() = default;

    /// Throws SyntaxError on any character other than 'd' or 'y'.
    static Word parse(std::string_view text);
    static Word repeat(Letter l, std::size_t n) { return Word(std::string(n, static_cast<char>(l))); }

    const std::string& str() const { return letters_; }
    std::size_t weight() const { return letters_.size(); }
    std::size_t depth() const;
    bool empty() const { return letters_.empty(); }
    /// Empty or ending in y.
    bool admissible() const { return letters_.empty() || letters_.back() == 'y'; }

    Letter front() const { return static_cast<Letter>(letters_.front()); }
    Letter back() const { return static_cast<Letter>(letters_.back()); }
    /// The word without its first letter.
    Word tail() const { return Word(letters_.substr(1)); }
    Word prepend(Letter l) const { return Word(static_cast<char>(l) + letters_); }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }

    friend bool operator==(const Word& a, const Word& b) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
            return c;
        return a.letters_ <=> b.letters_;
    }

private:
    explicit Word(std::string letters) : letters_(std::move(letters)) {}

    std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// (k_1, ..., k_n), n >= 1, k_i >= 0: the argument tuple (-k_1, ..., -k_n).
struct IndexVector {
    std::vector<unsigned> k;

    std::size_t depth() const { return k.size(); }
    unsigned sum() const;
    friend bool operator==(const IndexVector&, const IndexVector&) = default;
    friend auto operator<=>(const IndexVector&, const IndexVector&) = default;
};

/// d^{k_1} y ... d^{k_n} y.
Word indices_to_word(const IndexVector& k);
/// Inverse of indices_to_word. Throws NotAdmissible on the empty word or a word ending in d.
IndexVector word_to_indices(const Word& w);

/// Parses CLI arguments "0 -1 -3" (each <= 0) into the IndexVector (0, 1, 3).
/// Throws SyntaxError on malformed or positive entries.
IndexVector parse_nonpositive_arguments(const std::vector<std::string>& args);

/// Every word of the given weight, in canonical order.
std::vector<Word> words_of_weight(std::size_t weight);
/// Admissible words with 1 <= weight <= max_weight, in canonical order.
std::vector<Word> admissible_words(std::size_t max_weight);

/// Finitely supported map Key -> Rational without stored zeros.
template <class Key>
class FormalSum {
public:
    using Terms = std::map<Key, Rational>;

    FormalSum() = default;
    FormalSum(const Key& k, const Rational& c = Rational(1)) { add(k, c); }

    void add(const Key& k, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add(const FormalSum& other, const Rational& scale = Rational(1))
    {
        for (const auto& [k, c] : other.terms_)
            add(k, c * scale);
    }

    Rational coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    FormalSum& operator+=(const FormalSum& o) { add(o); return *this; }
    FormalSum& operator-=(const FormalSum& o) { add(o, Rational(-1)); return *this; }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const Rational& s, const FormalSum& a)
    {
        FormalSum r;
        r.add(a, s);
        return r;
    }
    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    /// Applies f to every key, summing coefficients of colliding images.
    template <class F>
    auto map_keys(F&& f) const
    {
        FormalSum<std::invoke_result_t<F, const Key&>> r;
        for (const auto& [k, c] : terms_)
            r.add(f(k), c);
        return r;
    }

    template <class Pred>
    FormalSum filter(Pred&& keep) const
    {
        FormalSum r;
        for (const auto& [k, c] : terms_)
            if (keep(k))
                r.terms_.emplace(k, c);
        return r;
    }

private:
    Terms terms_;
};

using WordPair = std::pair<Word, Word>;
using WordSum = FormalSum<Word>;
using TensorSum = FormalSum<WordPair>;

/// Drops every word ending in d (projection modulo the ideal T_-).
WordSum project_T(const WordSum& s);
/// Drops every tensor term with a leg ending in d.
TensorSum project_T(const TensorSum& s);
/// sum c_w w -> sum c_w (l w).
WordSum prepend(Letter l, const WordSum& s);
/// Tensor legs swapped.
TensorSum flip(const TensorSum& s);

std::string to_text(const WordSum& s);
std::string to_text(const TensorSum& s);

} // namespace hopfmzv
