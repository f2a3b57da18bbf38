#pragma once

/**
 * @file families.hpp
 * @brief Necklaces, rotated necklaces, extended co-necklaces and their
 * rotations: membership tests and full-set generation.
 *
 * Each family F has the property that {cyclic_substrings(a, n) : a in F}
 * partitions the length-n words (binary words for the co-necklace families).
 */

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "ucycle/limits.hpp"
#include "ucycle/word.hpp"

namespace ucycle {

enum class FamilyKind {
    Necklace,                   // Neck_k(n)
    RotatedNecklace,            // R_k(n)
    ExtendedCoNecklace,         // coN(n), binary, words of length 2n
    RotatedExtendedCoNecklace,  // C(n), binary, words of length 2n
};

std::string_view to_string(FamilyKind kind);
/// Accepts "neck", "r", "con", "c".
FamilyKind parse_family(std::string_view name);
bool is_binary_only(FamilyKind kind);

/// True iff w is lexicographically no larger than any of its rotations.
bool is_necklace(const Word& w);

/// Rotation taking a word to its associated necklace: the offset just past the
/// last nonzero symbol (|w| for the all-zero word, i.e. the identity).
std::size_t defining_rotation(const Word& w);

/// w is the all-zero word, or starts with a nonzero symbol and
/// rotate(w, defining_rotation(w)) is a necklace.
bool is_rotated_necklace(const Word& w);

/// Binary w with w + complement(w) a necklace.
bool is_co_necklace(const Word& w);

/// Binary w of even length 2n that starts with 1 and whose defining rotation is
/// an extended co-necklace.
bool is_rotated_extended_co_necklace(const Word& w);

/// Visits Neck_k(n) in lex order, one necklace at a time, without materializing
/// the set.
void for_each_necklace(unsigned k, std::size_t n, const std::function<void(const Word&)>& visit,
                       const Limits& limits = {});

WordSet necklaces(unsigned k, std::size_t n, const Limits& limits = {});
/// Same set, by filtering every word of length n through is_necklace.
WordSet necklaces_by_enumeration(unsigned k, std::size_t n, const Limits& limits = {});

WordSet rotated_necklaces(unsigned k, std::size_t n, const Limits& limits = {});
WordSet extended_co_necklaces(std::size_t n, const Limits& limits = {});
WordSet rotated_extended_co_necklaces(std::size_t n, const Limits& limits = {});

/// Dispatch on kind. For the binary-only families k must be 2.
WordSet family(FamilyKind kind, unsigned k, std::size_t n, const Limits& limits = {});

/// Calls visit on every word of length n over k symbols, in lex order.
void for_each_word(unsigned k, std::size_t n, const std::function<void(const Word&)>& visit,
                   const Limits& limits = {});

}  // namespace ucycle
