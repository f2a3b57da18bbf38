#include "ucycle/families.hpp"

#include <string>

namespace ucycle {

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Necklace: return "neck";
        case FamilyKind::RotatedNecklace: return "r";
        case FamilyKind::ExtendedCoNecklace: return "con";
        case FamilyKind::RotatedExtendedCoNecklace: return "c";
    }
    return "?";
}

FamilyKind parse_family(std::string_view name) {
    if (name == "neck") return FamilyKind::Necklace;
    if (name == "r") return FamilyKind::RotatedNecklace;
    if (name == "con") return FamilyKind::ExtendedCoNecklace;
    if (name == "c") return FamilyKind::RotatedExtendedCoNecklace;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

bool is_binary_only(FamilyKind kind) {
    return kind == FamilyKind::ExtendedCoNecklace || kind == FamilyKind::RotatedExtendedCoNecklace;
}

bool is_necklace(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("necklace test on the empty word");
    }
    // w is a prenecklace iff no symbol drops below its value one period back;
    // a prenecklace is a necklace iff its longest Lyndon prefix length divides |w|.
    std::size_t p = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] < w[i - p]) return false;
        if (w[i] > w[i - p]) p = i + 1;
    }
    return w.size() % p == 0;
}

std::size_t defining_rotation(const Word& w) {
    for (std::size_t i = w.size(); i > 0; --i) {
        if (w[i - 1] != 0) return i;
    }
    return w.size();
}

bool is_rotated_necklace(const Word& w) {
    if (w.empty()) return false;
    const std::size_t i = defining_rotation(w);
    if (w.front() == 0) return leading_run(w, 0) == w.size();
    return is_necklace(rotate(w, i));
}

bool is_co_necklace(const Word& w) {
    if (w.alphabet_size() != 2) {
        throw std::invalid_argument("co-necklaces are only defined on binary words");
    }
    if (w.empty()) return false;
    return is_necklace(w + complement(w));
}

bool is_rotated_extended_co_necklace(const Word& w) {
    if (w.alphabet_size() != 2) {
        throw std::invalid_argument("co-necklaces are only defined on binary words");
    }
    if (w.empty() || w.size() % 2 != 0 || w.front() == 0) return false;
    const Word v = rotate(w, defining_rotation(w));
    const auto half = static_cast<std::ptrdiff_t>(w.size() / 2);
    const Word head = prefix(v, half);
    return suffix(v, half) == complement(head) && is_co_necklace(head);
}

void for_each_word(unsigned k, std::size_t n, const std::function<void(const Word&)>& visit,
                   const Limits& limits) {
    require_within(limits, k, n);
    std::vector<Symbol> a(n, 0);
    while (true) {
        visit(Word(Word::Storage(a.begin(), a.end()), k));
        std::size_t i = n;
        while (i > 0 && a[i - 1] == k - 1) {
            a[i - 1] = 0;
            --i;
        }
        if (i == 0) return;
        ++a[i - 1];
    }
}

void for_each_necklace(unsigned k, std::size_t n, const std::function<void(const Word&)>& visit,
                       const Limits& limits) {
    if (k < 2 || n < 1) {
        throw std::invalid_argument("necklaces need k >= 2 and n >= 1");
    }
    require_within(limits, k, n);
    // Iterative lex-order prenecklace generation; a[1..n] with a[0] unused.
    std::vector<Symbol> a(n + 1, 0);
    auto emit = [&] { visit(Word(Word::Storage(a.begin() + 1, a.end()), k)); };
    emit();
    while (true) {
        std::size_t i = n;
        while (i > 0 && a[i] == k - 1) --i;
        if (i == 0) return;
        ++a[i];
        for (std::size_t j = i + 1; j <= n; ++j) a[j] = a[j - i];
        if (n % i == 0) emit();
    }
}

WordSet necklaces(unsigned k, std::size_t n, const Limits& limits) {
    WordSet out;
    for_each_necklace(k, n, [&](const Word& w) { out.insert(out.end(), w); }, limits);
    return out;
}

WordSet necklaces_by_enumeration(unsigned k, std::size_t n, const Limits& limits) {
    if (k < 2 || n < 1) {
        throw std::invalid_argument("necklaces need k >= 2 and n >= 1");
    }
    WordSet out;
    for_each_word(k, n, [&](const Word& w) {
        if (is_necklace(w)) out.insert(out.end(), w);
    }, limits);
    return out;
}

WordSet rotated_necklaces(unsigned k, std::size_t n, const Limits& limits) {
    WordSet out;
    for_each_necklace(k, n, [&](const Word& neck) {
        // Moving the leading zeros of a necklace to the back inverts the
        // defining rotation; the all-zero word maps to itself.
        const std::size_t zeros = leading_run(neck, 0);
        out.insert(zeros == n ? neck : rotate(neck, zeros));
    }, limits);
    return out;
}

WordSet extended_co_necklaces(std::size_t n, const Limits& limits) {
    if (n < 1) {
        throw std::invalid_argument("co-necklaces need n >= 1");
    }
    WordSet out;
    for_each_word(2, n, [&](const Word& w) {
        if (is_co_necklace(w)) out.insert(out.end(), w + complement(w));
    }, limits);
    return out;
}

WordSet rotated_extended_co_necklaces(std::size_t n, const Limits& limits) {
    WordSet out;
    for (const Word& ext : extended_co_necklaces(n, limits)) {
        out.insert(rotate(ext, leading_run(ext, 0)));
    }
    return out;
}

WordSet family(FamilyKind kind, unsigned k, std::size_t n, const Limits& limits) {
    if (is_binary_only(kind) && k != 2) {
        throw std::invalid_argument("family '" + std::string(to_string(kind)) +
                                    "' is binary only (k = 2), got k = " + std::to_string(k));
    }
    switch (kind) {
        case FamilyKind::Necklace: return necklaces(k, n, limits);
        case FamilyKind::RotatedNecklace: return rotated_necklaces(k, n, limits);
        case FamilyKind::ExtendedCoNecklace: return extended_co_necklaces(n, limits);
        case FamilyKind::RotatedExtendedCoNecklace: return rotated_extended_co_necklaces(n, limits);
    }
    return {};
}

}  // namespace ucycle
