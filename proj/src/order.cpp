#include "ucycle/order.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ucycle {

std::string_view to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::RevLex: return "revlex";
        case OrderKind::Colex: return "colex";
        case OrderKind::RevColex: return "revcolex";
    }
    return "?";
}

OrderKind parse_order(std::string_view name) {
    if (name == "lex") return OrderKind::Lex;
    if (name == "revlex") return OrderKind::RevLex;
    if (name == "colex") return OrderKind::Colex;
    if (name == "revcolex") return OrderKind::RevColex;
    throw std::invalid_argument("unknown order '" + std::string(name) + "'");
}

namespace {

std::strong_ordering lex_compare(const Word& a, const Word& b) {
    const auto sa = a.symbols();
    const auto sb = b.symbols();
    return std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::strong_ordering colex_compare(const Word& a, const Word& b) {
    const auto sa = a.symbols();
    const auto sb = b.symbols();
    return std::lexicographical_compare_three_way(sa.rbegin(), sa.rend(), sb.rbegin(), sb.rend());
}

std::strong_ordering invert(std::strong_ordering o) {
    if (o < 0) return std::strong_ordering::greater;
    if (o > 0) return std::strong_ordering::less;
    return o;
}

}  // namespace

std::strong_ordering compare(const Word& a, const Word& b, OrderKind kind) {
    switch (kind) {
        case OrderKind::Lex: return lex_compare(a, b);
        case OrderKind::RevLex: return invert(lex_compare(a, b));
        case OrderKind::Colex: return colex_compare(a, b);
        case OrderKind::RevColex: return invert(colex_compare(a, b));
    }
    return std::strong_ordering::equal;
}

std::vector<Word> sort(std::vector<Word> words, OrderKind kind) {
    std::stable_sort(words.begin(), words.end(),
                     [kind](const Word& a, const Word& b) { return compare(a, b, kind) < 0; });
    return words;
}

std::vector<Word> sort(const WordSet& words, OrderKind kind) {
    return sort(std::vector<Word>(words.begin(), words.end()), kind);
}

bool suffix_related(const Word& a, const Word& b, Symbol x, std::size_t n) {
    // 0-based position of b_j.
    std::size_t pos = 0;
    while (pos < b.size() && b[pos] == x) ++pos;
    if (pos == b.size()) return false;
    const std::size_t j = pos + 1;
    if (j > n) return false;
    const auto len = static_cast<std::ptrdiff_t>(n - j);
    return suffix(a, len) == suffix(b, len);
}

bool prefix_related(const Word& a, const Word& b, Symbol x, std::size_t n) {
    const std::size_t s = a.size();
    // a_{s-j} is a[s-j-1]; j runs over 1 .. s-1.
    std::size_t j = 1;
    while (j < s && a[s - j - 1] == x) ++j;
    if (j >= s) return false;
    if (j > n) return false;
    const auto len = static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(j) - 1;
    return prefix(a, len) == prefix(b, len);
}

}  // namespace ucycle
