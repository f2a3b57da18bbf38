#pragma once

// Test-side helpers. These deliberately avoid the library's generators so
// they can serve as oracles.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ucycle/word.hpp"

namespace testing {

using ucycle::Symbol;
using ucycle::Word;
using ucycle::WordSet;

// Digit string to Word, one symbol per character.
inline Word w(std::string_view digits, unsigned k = 2) {
    Word::Storage s;
    for (char c : digits) s.push_back(static_cast<Symbol>(c - '0'));
    return Word(std::move(s), k);
}

inline std::string str(const Word& x) {
    std::string out;
    for (Symbol s : x) out += static_cast<char>('0' + s);
    return out;
}

inline std::vector<std::string> strs(const std::vector<Word>& v) {
    std::vector<std::string> out;
    for (const Word& x : v) out.push_back(str(x));
    return out;
}

inline std::set<std::string> strs(const WordSet& v) {
    std::set<std::string> out;
    for (const Word& x : v) out.insert(str(x));
    return out;
}

inline std::vector<Word> words(std::initializer_list<std::string_view> list, unsigned k = 2) {
    std::vector<Word> out;
    for (auto d : list) out.push_back(w(d, k));
    return out;
}

// Every word of length n over k symbols, as raw symbol vectors (odometer order).
template <typename F>
void each_word(unsigned k, std::size_t n, F&& f) {
    std::vector<Symbol> a(n, 0);
    while (true) {
        f(Word(std::span<const Symbol>(a), k));
        std::size_t i = n;
        while (i > 0 && a[i - 1] == k - 1) a[--i] = 0;
        if (i == 0) return;
        ++a[i - 1];
    }
}

// All rotations written out by index arithmetic.
inline Word rotation(const Word& x, std::size_t i) {
    Word::Storage s;
    for (std::size_t t = 0; t < x.size(); ++t) s.push_back(x[(i + t) % x.size()]);
    return Word(std::move(s), x.alphabet_size());
}

inline Word min_rotation(const Word& x) {
    Word best = x;
    for (std::size_t i = 1; i < x.size(); ++i) best = std::min(best, rotation(x, i));
    return best;
}

// Length-n windows read by brute force (one traversal of |x| start positions).
inline std::multiset<Word> window_multiset(const Word& x, std::size_t n) {
    std::multiset<Word> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Word::Storage s;
        for (std::size_t t = 0; t < n; ++t) s.push_back(x[(i + t) % x.size()]);
        out.insert(Word(std::move(s), x.alphabet_size()));
    }
    return out;
}

// Straight transcriptions of the predicate definitions, 1-based as written.
inline bool suffix_related_oracle(const Word& a, const Word& b, ucycle::Symbol x, std::size_t n) {
    std::optional<std::size_t> j;
    for (std::size_t i = 1; i <= b.size(); ++i) {
        if (b[i - 1] != x) {
            j = i;
            break;
        }
    }
    if (!j || *j > n) return false;
    const std::size_t len = n - *j;
    return std::equal(a.end() - static_cast<std::ptrdiff_t>(len), a.end(), b.end() - static_cast<std::ptrdiff_t>(len));
}

inline std::optional<std::size_t> prefix_scan(const Word& a, ucycle::Symbol x) {
    const std::size_t s = a.size();
    for (std::size_t j = 1; j < s; ++j) {
        if (a[s - j - 1] != x) return j;  // a_{s-j}, 1-based
    }
    return std::nullopt;
}

inline bool prefix_related_oracle(const Word& a, const Word& b, ucycle::Symbol x, std::size_t n) {
    const auto j = prefix_scan(a, x);
    if (!j || *j > n) return false;
    if (*j == n) return true;  // length -1 prefixes are empty
    const std::size_t len = n - *j - 1;
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(len), b.begin());
}

inline Word random_word(std::mt19937_64& rng, unsigned k, std::size_t len) {
    std::uniform_int_distribution<unsigned> d(0, k - 1);
    Word::Storage s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<Symbol>(d(rng)));
    return Word(std::move(s), k);
}

inline std::uint64_t ipow(std::uint64_t k, std::size_t n) {
    std::uint64_t r = 1;
    while (n-- > 0) r *= k;
    return r;
}

}  // namespace testing
