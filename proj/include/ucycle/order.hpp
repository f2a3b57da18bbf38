#pragma once

/**
 * @file order.hpp
 * @brief Lex / colex orders on words of unequal length, and the suffix-related
 * and prefix-related predicates used by the concatenation conditions.
 */

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "ucycle/word.hpp"

namespace ucycle {

enum class OrderKind { Lex, RevLex, Colex, RevColex };

std::string_view to_string(OrderKind kind);
/// Accepts "lex", "revlex", "colex", "revcolex"; throws std::invalid_argument.
OrderKind parse_order(std::string_view name);

/**
 * Lex: the first difference from the left decides, and a proper prefix comes
 * first. Colex: the first difference from the right decides, and a proper
 * suffix comes first. The Rev kinds invert the result.
 */
std::strong_ordering compare(const Word& a, const Word& b, OrderKind kind);

/// Listing of `words` in the given order. Equal words keep their input order.
std::vector<Word> sort(std::vector<Word> words, OrderKind kind);
std::vector<Word> sort(const WordSet& words, OrderKind kind);

/**
 * (a, b) is suffix-related with respect to (x, n) when, with j the smallest
 * 1-based index of b such that b_j != x, j <= n and the length n-j suffixes of
 * a and b agree. If b consists only of x's the pair is not related.
 * Requires |a|, |b| >= n.
 */
bool suffix_related(const Word& a, const Word& b, Symbol x, std::size_t n);

/**
 * (a, b) is prefix-related with respect to (x, n) when, with s = |a| and j the
 * smallest index j >= 1 such that a_{s-j} != x, j <= n and the length n-j-1
 * prefixes of a and b agree (length -1 meaning the empty word). The scan starts
 * at the second-to-last symbol of a. Requires |a|, |b| >= n.
 */
bool prefix_related(const Word& a, const Word& b, Symbol x, std::size_t n);

}  // namespace ucycle
