#include "ucycle/concat.hpp"

#include <string>

namespace ucycle {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::LexNecklace: return "lex-neck";
        case Scheme::ColexNecklace: return "colex-neck";
        case Scheme::RevlexRotatedNecklace: return "revlex-rneck";
        case Scheme::RevcolexCoNecklace: return "revcolex-con";
        case Scheme::LexRotatedCoNecklace: return "lex-con";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name) {
    for (Scheme s : kAllSchemes) {
        if (to_string(s) == name) return s;
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

FamilyKind scheme_family(Scheme scheme) {
    switch (scheme) {
        case Scheme::LexNecklace:
        case Scheme::ColexNecklace: return FamilyKind::Necklace;
        case Scheme::RevlexRotatedNecklace: return FamilyKind::RotatedNecklace;
        case Scheme::RevcolexCoNecklace: return FamilyKind::ExtendedCoNecklace;
        case Scheme::LexRotatedCoNecklace: return FamilyKind::RotatedExtendedCoNecklace;
    }
    return FamilyKind::Necklace;
}

OrderKind scheme_order(Scheme scheme) {
    switch (scheme) {
        case Scheme::LexNecklace: return OrderKind::Lex;
        case Scheme::ColexNecklace: return OrderKind::Colex;
        case Scheme::RevlexRotatedNecklace: return OrderKind::RevLex;
        case Scheme::RevcolexCoNecklace: return OrderKind::RevColex;
        case Scheme::LexRotatedCoNecklace: return OrderKind::Lex;
    }
    return OrderKind::Lex;
}

bool takes_first(Scheme scheme) {
    return scheme == Scheme::ColexNecklace || scheme == Scheme::RevcolexCoNecklace;
}

std::size_t min_partial(Scheme scheme) {
    return is_binary_only(scheme) ? 1 : 2;
}

bool is_binary_only(Scheme scheme) { return is_binary_only(scheme_family(scheme)); }

void validate(const ConstructionSpec& spec, std::optional<std::size_t> family_size) {
    const std::string name(to_string(spec.scheme));
    if (spec.k < 2) {
        throw std::invalid_argument("k must be at least 2");
    }
    if (spec.n < 2) {
        throw std::invalid_argument("n must be at least 2");
    }
    if (is_binary_only(spec.scheme) && spec.k != 2) {
        throw std::invalid_argument("scheme " + name + " is binary only (k = 2)");
    }
    if (!spec.m) return;
    if (*spec.m < min_partial(spec.scheme)) {
        throw std::invalid_argument("scheme " + name + " needs m >= " +
                                    std::to_string(min_partial(spec.scheme)));
    }
    if (family_size && *spec.m > *family_size) {
        throw std::invalid_argument("m = " + std::to_string(*spec.m) + " exceeds the family size " +
                                    std::to_string(*family_size));
    }
}

ConstructionResult uc_concat(const std::vector<Word>& listing) {
    if (listing.empty()) {
        throw std::invalid_argument("UC of an empty listing");
    }
    ConstructionResult out;
    out.selection = listing;
    out.segments.reserve(listing.size());
    std::vector<Symbol> symbols;
    const unsigned k = listing.front().alphabet_size();
    for (const Word& w : listing) {
        if (w.alphabet_size() != k) {
            throw std::invalid_argument("listing mixes alphabets");
        }
        out.segments.push_back(periodic_reduction(w));
        const Word& seg = out.segments.back();
        symbols.insert(symbols.end(), seg.begin(), seg.end());
    }
    out.sequence = CyclicSequence(Word(std::move(symbols), k));
    out.target_set_size = out.sequence.size();
    return out;
}

std::vector<Word> scheme_listing(Scheme scheme, unsigned k, std::size_t n, const Limits& limits) {
    return sort(family(scheme_family(scheme), k, n, limits), scheme_order(scheme));
}

std::vector<Word> select_partial(const ConstructionSpec& spec, const std::vector<Word>& full_listing) {
    validate(spec, full_listing.size());
    if (!spec.m) return full_listing;
    const auto m = static_cast<std::ptrdiff_t>(*spec.m);
    if (takes_first(spec.scheme)) {
        return {full_listing.begin(), full_listing.begin() + m};
    }
    return {full_listing.end() - m, full_listing.end()};
}

ConstructionResult construct(const ConstructionSpec& spec, const Limits& limits) {
    validate(spec);
    const auto selection = select_partial(spec, scheme_listing(spec.scheme, spec.k, spec.n, limits));
    ConstructionResult out = uc_concat(selection);
    out.target_set_size = target_set_of(selection, spec.n).size();
    return out;
}

WordSet target_set_of(const std::vector<Word>& selection, std::size_t n) {
    WordSet out;
    for (const Word& w : selection) {
        out.merge(cyclic_substrings(w, n));
    }
    return out;
}

WordSet target_set(const ConstructionSpec& spec, const Limits& limits) {
    validate(spec);
    return target_set_of(select_partial(spec, scheme_listing(spec.scheme, spec.k, spec.n, limits)), spec.n);
}

SegmentStream::SegmentStream(const ConstructionSpec& spec, const Limits& limits) {
    validate(spec);
    selection_ = select_partial(spec, scheme_listing(spec.scheme, spec.k, spec.n, limits));
}

std::optional<Word> SegmentStream::next() {
    if (pos_ >= selection_.size()) return std::nullopt;
    return periodic_reduction(selection_[pos_++]);
}

}  // namespace ucycle
