#pragma once

/**
 * @file word.hpp
 * @brief Words over the alphabet {0, ..., k-1} and the basic operations on them.
 *
 * A Word is an immutable value: symbols plus the alphabet size they are drawn
 * from. Every operation here is a pure function. Indices are 0-based; where the
 * comments mention a_1 ... a_n they mean symbols()[0] ... symbols()[n-1].
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ucycle {

using Symbol = std::uint16_t;

class Word {
public:
    /// Inline capacity covers the window and family lengths used at desk scale.
    using Storage = boost::container::small_vector<Symbol, 32>;
    using const_iterator = Storage::const_iterator;

    Word() = default;

    /// Throws std::invalid_argument if k < 2 or some symbol is >= k.
    Word(Storage symbols, unsigned alphabet_size);
    Word(std::span<const Symbol> symbols, unsigned alphabet_size)
        : Word(Storage(symbols.begin(), symbols.end()), alphabet_size) {}
    Word(std::initializer_list<Symbol> symbols, unsigned alphabet_size)
        : Word(Storage(symbols.begin(), symbols.end()), alphabet_size) {}

    /// The word s^count.
    static Word repeated(Symbol s, std::size_t count, unsigned alphabet_size);

    std::span<const Symbol> symbols() const noexcept { return {symbols_.data(), symbols_.size()}; }
    unsigned alphabet_size() const noexcept { return k_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    Symbol front() const { return symbols_.front(); }
    Symbol back() const { return symbols_.back(); }
    const_iterator begin() const noexcept { return symbols_.begin(); }
    const_iterator end() const noexcept { return symbols_.end(); }

    // Ordered by symbols (lexicographically, proper prefix first), then by k.
    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.k_ == b.k_ && std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
        const auto c = std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
        return c != 0 ? c : a.k_ <=> b.k_;
    }

private:
    Storage symbols_;
    unsigned k_ = 2;
};

using WordSet = std::set<Word>;

/// Concatenation. Both operands must share an alphabet.
Word operator+(const Word& lhs, const Word& rhs);

/// Shortest prefix p of a (non-empty) word w such that w = p^(|w|/|p|).
Word periodic_reduction(const Word& w);

/// w repeated the smallest number of times t with t*|w| >= n.
Word extend(const Word& w, std::size_t n);

/// Set of length-n windows of w read cyclically (windows may wrap several times).
WordSet cyclic_substrings(const Word& w, std::size_t n);

/// First / last n symbols. A negative n yields the empty word; n > |w| throws
/// std::out_of_range.
Word prefix(const Word& w, std::ptrdiff_t n);
Word suffix(const Word& w, std::ptrdiff_t n);

/// a_{i+1} ... a_|w| a_1 ... a_i, for 0 <= i <= |w|.
Word rotate(const Word& w, std::size_t i);

Word reverse(const Word& w);

/// Bitwise complement; binary words only (std::invalid_argument otherwise).
Word complement(const Word& w);

/// Length of the maximal run of `x` at the start / end of w.
std::size_t leading_run(const Word& w, Symbol x);
std::size_t trailing_run(const Word& w, Symbol x);

/// Holds a word read circularly; the output type of the constructions.
class CyclicSequence {
public:
    CyclicSequence() = default;
    explicit CyclicSequence(Word word) : word_(std::move(word)) {}

    const Word& word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    unsigned alphabet_size() const noexcept { return word_.alphabet_size(); }

    /// The n symbols starting at `start`, wrapping modulo size().
    Word window(std::size_t start, std::size_t n) const;

    friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;

private:
    Word word_;
};

}  // namespace ucycle
