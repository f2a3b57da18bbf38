#pragma once

/**
 * @file verify.hpp
 * @brief Independent checks: universal cycle and de Bruijn verification, the
 * concatenation conditions (first-symbol / suffix-related form and its
 * last-symbol / prefix-related mirror), the co-necklace lemmas, and the
 * prefer-smallest greedy oracle.
 *
 * Window checks read the sequence directly and share nothing with concat.
 */

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ucycle/concat.hpp"
#include "ucycle/limits.hpp"
#include "ucycle/word.hpp"

namespace ucycle {

enum class Condition {
    Partition,       ///< sets overlap, or a cycle is not a universal cycle of its set
    SequenceLength,  ///< de Bruijn check: length differs from k^n
    EndLength,       ///< condition 1: the anchoring cycle is shorter than n
    LongestRun,      ///< condition 2: the anchoring cycle lacks the longest run of x
    Related,         ///< condition 3: an adjacent pair is not suffix/prefix-related
    Lemma1,
    Lemma2,
};

std::string_view to_string(Condition c);

struct ConditionFailure {
    Condition condition;
    std::size_t index;  ///< 0-based position of the offending cycle or pair
    std::string witness;

    friend bool operator==(const ConditionFailure&, const ConditionFailure&) = default;
};

struct VerificationReport {
    WordSet missing;     ///< expected windows that never occur
    WordSet duplicated;  ///< windows that occur more than once
    WordSet unexpected;  ///< windows that occur but are not expected
    std::vector<ConditionFailure> condition_failures;

    bool passed() const {
        return missing.empty() && duplicated.empty() && unexpected.empty() && condition_failures.empty();
    }
    bool failed(Condition c) const;
};

/// Passes iff the |seq| cyclic windows of length n are exactly `expected`, each once.
VerificationReport is_universal_cycle(const CyclicSequence& seq, const WordSet& expected, std::size_t n);

/// is_universal_cycle against all k^n words; a length mismatch short-circuits.
VerificationReport is_de_bruijn(const CyclicSequence& seq, unsigned k, std::size_t n,
                                const Limits& limits = {});

/// Universal cycles for pairwise disjoint sets of length-n words.
struct UCPartition {
    std::vector<Word> cycles;
    std::vector<WordSet> sets;
    std::size_t n = 0;

    friend bool operator==(const UCPartition&, const UCPartition&) = default;
};

/// Non-owning view of cycles[i] covering sets[i], for i < cycles.size().
struct UCPartitionView {
    std::span<const Word> cycles;
    std::span<const WordSet> sets;
    std::size_t n = 0;

    UCPartitionView(std::span<const Word> c, std::span<const WordSet> s, std::size_t order)
        : cycles(c), sets(s), n(order) {}
    UCPartitionView(const UCPartition& p) : cycles(p.cycles), sets(p.sets), n(p.n) {}  // NOLINT

    /// Cycles [first, first + count).
    UCPartitionView slice(std::size_t first, std::size_t count) const {
        return {cycles.subspan(first, count), sets.subspan(first, count), n};
    }
};

/// Disjointness of the sets and each cycle being a universal cycle of its set.
VerificationReport check_partition(UCPartitionView p);

/**
 * Sufficient conditions for cycles[0] ... cycles[m-1] to concatenate into a
 * universal cycle, with x the first symbol of cycles[0]:
 *  1. |cycles[0]| >= n;
 *  2. no cycle starts with a longer run of x than cycles[0];
 *  3. each (ext_n(cycles[i]), ext_n(cycles[i+1])) is suffix-related w.r.t. (x, n).
 * Reports partition problems plus the first failure of each condition.
 * Throws std::invalid_argument if cycles and sets are misaligned or empty.
 */
VerificationReport check_theorem1(UCPartitionView p);

/// Mirror image: x is the last symbol of cycles[m-1], condition 1 and 2 concern
/// cycles[m-1] and trailing runs, and condition 3 uses prefix_related.
VerificationReport check_corollary1(UCPartitionView p);

/// The concatenation is a universal cycle for the union of the sets, and its
/// length-n suffix equals that of ext_n(cycles[m-1]).
bool theorem1_conclusion_holds(UCPartitionView p);
/// As above with the length-n prefix of ext_n(cycles[0]).
bool corollary1_conclusion_holds(UCPartitionView p);

enum class ConditionRule { Theorem1, Corollary1 };

/// The UC-partition a construction is proven correct with, and which rule applies.
struct Decomposition {
    UCPartition partition;
    ConditionRule rule = ConditionRule::Theorem1;
};

/**
 * Cycles are the periodic reductions of the selected strings, each covering
 * its own cyclic windows, except that the two strings at the anchoring end of
 * LexNecklace, ColexNecklace and RevlexRotatedNecklace selections are merged
 * into one cycle. The construction parameters must be valid.
 */
Decomposition proof_decomposition(const ConstructionSpec& spec, const Limits& limits = {});
Decomposition proof_decomposition(const ConstructionSpec& spec, const std::vector<Word>& selection);

VerificationReport check_decomposition(const Decomposition& d);
bool conclusion_holds(const Decomposition& d);
VerificationReport check_decomposition(UCPartitionView p, ConditionRule rule);
bool conclusion_holds(UCPartitionView p, ConditionRule rule);

/**
 * Starting after a virtual prefix of (k-1)^(n-1), repeatedly appends the
 * smallest symbol whose new length-n window has not occurred yet. The k^n
 * appended symbols form the lexicographically smallest de Bruijn sequence.
 */
CyclicSequence greedy_prefer_smallest(unsigned k, std::size_t n, const Limits& limits = {});

/**
 * Lemma 1: consecutive strings of revcolex(coN(n)) have colex-ordered
 * length-n prefixes. Lemma 2: for a, b in C(n) and x in {0, 1}, if
 * (pre_n(a), pre_n(b)) is prefix-related w.r.t. (x, n) then (a, b) is
 * prefix-related w.r.t. (1-x, n).
 */
VerificationReport lemma_properties(std::size_t n, const Limits& limits = {});

}  // namespace ucycle
