#include "ucycle/word.hpp"

#include <algorithm>
#include <string>

namespace ucycle {

Word::Word(Storage symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), k_(alphabet_size) {
    if (k_ < 2) {
        throw std::invalid_argument("alphabet size must be at least 2");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= k_) {
            throw std::invalid_argument("symbol " + std::to_string(symbols_[i]) + " at position " +
                                        std::to_string(i) + " is outside the alphabet of size " +
                                        std::to_string(k_));
        }
    }
}

Word Word::repeated(Symbol s, std::size_t count, unsigned alphabet_size) {
    return Word(Storage(count, s), alphabet_size);
}

Word operator+(const Word& lhs, const Word& rhs) {
    if (lhs.alphabet_size() != rhs.alphabet_size()) {
        throw std::invalid_argument("cannot concatenate words over different alphabets");
    }
    Word::Storage out;
    out.reserve(lhs.size() + rhs.size());
    out.insert(out.end(), lhs.begin(), lhs.end());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return Word(std::move(out), lhs.alphabet_size());
}

Word periodic_reduction(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) {
        throw std::invalid_argument("periodic reduction of the empty word");
    }
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) {
            periodic = w[i] == w[i - p];
        }
        if (periodic) return prefix(w, static_cast<std::ptrdiff_t>(p));
    }
    return w;
}

Word extend(const Word& w, std::size_t n) {
    if (w.empty()) {
        throw std::invalid_argument("cannot extend the empty word");
    }
    const std::size_t t = (n + w.size() - 1) / w.size();
    Word::Storage out;
    out.reserve(t * w.size());
    for (std::size_t r = 0; r < std::max<std::size_t>(t, 1); ++r) {
        out.insert(out.end(), w.begin(), w.end());
    }
    return Word(std::move(out), w.alphabet_size());
}

WordSet cyclic_substrings(const Word& w, std::size_t n) {
    if (w.empty()) {
        throw std::invalid_argument("cyclic substrings of the empty word");
    }
    const CyclicSequence cyc(w);
    WordSet out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.insert(cyc.window(i, n));
    }
    return out;
}

Word prefix(const Word& w, std::ptrdiff_t n) {
    if (n <= 0) return Word(Word::Storage{}, w.alphabet_size());
    if (static_cast<std::size_t>(n) > w.size()) {
        throw std::out_of_range("prefix length exceeds word length");
    }
    return Word(Word::Storage(w.begin(), w.begin() + n), w.alphabet_size());
}

Word suffix(const Word& w, std::ptrdiff_t n) {
    if (n <= 0) return Word(Word::Storage{}, w.alphabet_size());
    if (static_cast<std::size_t>(n) > w.size()) {
        throw std::out_of_range("suffix length exceeds word length");
    }
    return Word(Word::Storage(w.end() - n, w.end()), w.alphabet_size());
}

Word rotate(const Word& w, std::size_t i) {
    if (i > w.size()) {
        throw std::out_of_range("rotation offset exceeds word length");
    }
    Word::Storage out(w.begin(), w.end());
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i), out.end());
    return Word(std::move(out), w.alphabet_size());
}

Word reverse(const Word& w) {
    return Word(Word::Storage(w.symbols().rbegin(), w.symbols().rend()), w.alphabet_size());
}

Word complement(const Word& w) {
    if (w.alphabet_size() != 2) {
        throw std::invalid_argument("complement is only defined on binary words");
    }
    Word::Storage out(w.begin(), w.end());
    for (auto& s : out) s = static_cast<Symbol>(1 - s);
    return Word(std::move(out), 2);
}

std::size_t leading_run(const Word& w, Symbol x) {
    const auto it = std::find_if(w.begin(), w.end(), [x](Symbol s) { return s != x; });
    return static_cast<std::size_t>(it - w.begin());
}

std::size_t trailing_run(const Word& w, Symbol x) {
    const auto syms = w.symbols();
    const auto it = std::find_if(syms.rbegin(), syms.rend(), [x](Symbol s) { return s != x; });
    return static_cast<std::size_t>(it - syms.rbegin());
}

Word CyclicSequence::window(std::size_t start, std::size_t n) const {
    if (word_.empty()) {
        throw std::invalid_argument("window of an empty cyclic sequence");
    }
    Word::Storage out(n);
    const std::size_t len = word_.size();
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = word_[(start + j) % len];
    }
    return Word(std::move(out), word_.alphabet_size());
}

}  // namespace ucycle
