#pragma once

/**
 * @file concat.hpp
 * @brief The UC operator (concatenate periodic reductions of a listing) and the
 * five family/order constructions built on it.
 *
 * | scheme                | family   | order    | partial selection |
 * |-----------------------|----------|----------|-------------------|
 * | LexNecklace           | Neck_k(n)| lex      | last m,  m >= 2   |
 * | ColexNecklace         | Neck_k(n)| colex    | first m, m >= 2   |
 * | RevlexRotatedNecklace | R_k(n)   | revlex   | last m,  m >= 2   |
 * | RevcolexCoNecklace    | coN(n)   | revcolex | first m, m >= 1   |
 * | LexRotatedCoNecklace  | C(n)     | lex      | last m,  m >= 1   |
 *
 * The full listing gives a de Bruijn sequence; a partial selection gives a
 * universal cycle for the union of the selected words' cyclic windows.
 */

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ucycle/families.hpp"
#include "ucycle/limits.hpp"
#include "ucycle/order.hpp"
#include "ucycle/word.hpp"

namespace ucycle {

enum class Scheme {
    LexNecklace,
    ColexNecklace,
    RevlexRotatedNecklace,
    RevcolexCoNecklace,
    LexRotatedCoNecklace,
};

inline constexpr Scheme kAllSchemes[] = {
    Scheme::LexNecklace,        Scheme::ColexNecklace,        Scheme::RevlexRotatedNecklace,
    Scheme::RevcolexCoNecklace, Scheme::LexRotatedCoNecklace,
};

/// CLI names: lex-neck, colex-neck, revlex-rneck, revcolex-con, lex-con.
std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view name);

FamilyKind scheme_family(Scheme scheme);
OrderKind scheme_order(Scheme scheme);
/// Whether a partial construction keeps the first m strings (otherwise the last m).
bool takes_first(Scheme scheme);
std::size_t min_partial(Scheme scheme);
bool is_binary_only(Scheme scheme);

struct ConstructionSpec {
    Scheme scheme = Scheme::LexNecklace;
    unsigned k = 2;
    std::size_t n = 2;
    std::optional<std::size_t> m;  ///< unset: the whole family
};

/// Throws std::invalid_argument unless n >= 2, k >= 2, k == 2 for co-necklace
/// schemes, and m (when set) is in [min_partial, family size]. The family size
/// bound is only checked when `family_size` is given.
void validate(const ConstructionSpec& spec, std::optional<std::size_t> family_size = std::nullopt);

struct ConstructionResult {
    CyclicSequence sequence;
    std::vector<Word> selection;  ///< the listed strings before reduction
    std::vector<Word> segments;   ///< periodic reductions, in concatenation order
    std::size_t target_set_size = 0;
};

/// UC(L): segments are the periodic reductions of `listing` in order, and the
/// sequence is their concatenation. target_set_size is left at the sequence length.
ConstructionResult uc_concat(const std::vector<Word>& listing);

/// The scheme's family listed in the scheme's order.
std::vector<Word> scheme_listing(Scheme scheme, unsigned k, std::size_t n, const Limits& limits = {});

/// The first or last m strings of a full listing, per the scheme.
std::vector<Word> select_partial(const ConstructionSpec& spec, const std::vector<Word>& full_listing);

ConstructionResult construct(const ConstructionSpec& spec, const Limits& limits = {});

/// Union of cyclic_substrings(a, n) over the selected strings.
WordSet target_set(const ConstructionSpec& spec, const Limits& limits = {});
WordSet target_set_of(const std::vector<Word>& selection, std::size_t n);

/// Emits the periodic reductions of a construction one segment at a time.
class SegmentStream {
public:
    explicit SegmentStream(const ConstructionSpec& spec, const Limits& limits = {});

    /// Next segment, or nullopt when the listing is exhausted.
    std::optional<Word> next();

private:
    std::vector<Word> selection_;
    std::size_t pos_ = 0;
};

}  // namespace ucycle
