#include "ucycle/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>

#include <boost/container/small_vector.hpp>

#include "ucycle/families.hpp"
#include "ucycle/order.hpp"
#include "ucycle/text.hpp"

namespace ucycle {

std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::Partition: return "partition";
        case Condition::SequenceLength: return "sequence-length";
        case Condition::EndLength: return "condition-1-length";
        case Condition::LongestRun: return "condition-2-longest-run";
        case Condition::Related: return "condition-3-related";
        case Condition::Lemma1: return "lemma-1";
        case Condition::Lemma2: return "lemma-2";
    }
    return "?";
}

bool VerificationReport::failed(Condition c) const {
    return std::any_of(condition_failures.begin(), condition_failures.end(),
                       [c](const ConditionFailure& f) { return f.condition == c; });
}

namespace {

using Code = std::uint64_t;
using CodeBuffer = boost::container::small_vector<Code, 64>;

// Largest code space for which a dense lookup table is used.
constexpr Code kDenseLimit = Code{1} << 24;

// Window codes are base-`base` numbers with n digits, first symbol most significant.
std::optional<Code> code_capacity(unsigned base, std::size_t n) {
    const std::uint64_t total = power(base, n);
    if (total == UINT64_MAX) return std::nullopt;
    return total;
}

// Codes of the |w| cyclic windows of length n, computed by rolling.
template <typename Buffer>
void window_codes(const Word& w, std::size_t n, unsigned base, Buffer& out) {
    const std::size_t len = w.size();
    out.resize(len);
    if (len == 0) return;
    Code c = 0;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
        c = c * base + w[pos];
        if (++pos == len) pos = 0;
    }
    const Code top = power(base, n - 1);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = c;
        c = (c - w[i] * top) * base + w[pos];
        if (++pos == len) pos = 0;
    }
}

Code word_code(const Word& w, unsigned base) {
    Code c = 0;
    for (Symbol s : w) c = c * base + s;
    return c;
}

Word decode(Code c, std::size_t n, unsigned base) {
    Word::Storage out(n);
    for (std::size_t j = n; j > 0; --j) {
        out[j - 1] = static_cast<Symbol>(c % base);
        c /= base;
    }
    return Word(std::move(out), base);
}

Word window_word(const Word& w, std::size_t start, std::size_t n) {
    return CyclicSequence(w).window(start, n);
}

// Fallback for windows whose codes would overflow 64 bits.
VerificationReport compare_by_words(const Word& seq, const WordSet& expected, std::size_t n) {
    std::map<Word, std::size_t> counts;
    for (std::size_t i = 0; i < seq.size(); ++i) ++counts[window_word(seq, i, n)];
    VerificationReport r;
    for (const auto& [w, c] : counts) {
        if (c > 1) r.duplicated.insert(w);
        if (!expected.contains(w)) r.unexpected.insert(w);
    }
    for (const Word& w : expected) {
        if (!counts.contains(w)) r.missing.insert(w);
    }
    return r;
}

std::string describe(const WordSet& words, std::size_t limit = 4) {
    std::ostringstream os;
    std::size_t shown = 0;
    for (const Word& w : words) {
        if (shown == limit) {
            os << ", ...";
            break;
        }
        if (shown++) os << ", ";
        os << to_string(w);
    }
    return os.str();
}

}  // namespace

namespace {

// Alphabet used to encode windows of `seq` against the words in `sets`;
// validates that every expected word has length n.
unsigned encoding_base(const Word& seq, std::span<const WordSet> sets, std::size_t n) {
    unsigned base = seq.alphabet_size();
    for (const WordSet& set : sets) {
        for (const Word& e : set) {
            if (e.size() != n) {
                throw std::invalid_argument("expected word " + to_string(e) + " does not have length " +
                                            std::to_string(n));
            }
            base = std::max(base, e.alphabet_size());
        }
    }
    return base;
}

VerificationReport compare_windows(const Word& seq, std::span<const WordSet> sets, std::size_t n) {
    if (seq.empty()) {
        throw std::invalid_argument("universal cycle check on an empty sequence");
    }
    const unsigned base = encoding_base(seq, sets, n);
    if (!code_capacity(base, n)) {
        WordSet expected;
        for (const WordSet& set : sets) expected.insert(set.begin(), set.end());
        return compare_by_words(seq, expected, n);
    }

    std::size_t expected_count = 0;
    for (const WordSet& set : sets) expected_count += set.size();
    const Code capacity = *code_capacity(base, n);

    VerificationReport r;
    if (capacity <= kDenseLimit && capacity <= 16 * (seq.size() + expected_count)) {
        // Dense table: bit 7 marks expected codes, the low bits count windows (saturating at 2).
        std::vector<std::uint8_t> table(capacity, 0);
        for (const WordSet& set : sets) {
            for (const Word& e : set) table[word_code(e, base)] |= 0x80;
        }
        std::vector<Code> windows;
        window_codes(seq, n, base, windows);
        for (const Code c : windows) {
            auto& cell = table[c];
            if ((cell & 0x7F) < 2) ++cell;
        }
        for (const Code c : windows) {
            const auto cell = table[c];
            if ((cell & 0x7F) >= 2) r.duplicated.insert(decode(c, n, base));
            if ((cell & 0x80) == 0) r.unexpected.insert(decode(c, n, base));
        }
        for (const WordSet& set : sets) {
            for (const Word& e : set) {
                if ((table[word_code(e, base)] & 0x7F) == 0) r.missing.insert(e);
            }
        }
        return r;
    }

    CodeBuffer windows;
    window_codes(seq, n, base, windows);
    std::sort(windows.begin(), windows.end());

    CodeBuffer want;
    want.reserve(expected_count);
    for (const WordSet& set : sets) {
        for (const Word& e : set) want.push_back(word_code(e, base));
    }
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());

    std::size_t i = 0;
    std::size_t j = 0;
    while (i < windows.size() || j < want.size()) {
        if (j == want.size() || (i < windows.size() && windows[i] < want[j])) {
            const Code c = windows[i];
            r.unexpected.insert(decode(c, n, base));
            std::size_t run = 0;
            while (i < windows.size() && windows[i] == c) ++i, ++run;
            if (run > 1) r.duplicated.insert(decode(c, n, base));
        } else if (i == windows.size() || want[j] < windows[i]) {
            r.missing.insert(decode(want[j], n, base));
            ++j;
        } else {
            const Code c = windows[i];
            std::size_t run = 0;
            while (i < windows.size() && windows[i] == c) ++i, ++run;
            if (run > 1) r.duplicated.insert(decode(c, n, base));
            ++j;
        }
    }
    return r;
}

}  // namespace

VerificationReport is_universal_cycle(const CyclicSequence& seq, const WordSet& expected, std::size_t n) {
    return compare_windows(seq.word(), std::span<const WordSet>(&expected, 1), n);
}

VerificationReport is_de_bruijn(const CyclicSequence& seq, unsigned k, std::size_t n, const Limits& limits) {
    if (k < 2 || n < 1) {
        throw std::invalid_argument("de Bruijn check needs k >= 2 and n >= 1");
    }
    require_within(limits, k, n);
    VerificationReport r;
    const std::uint64_t total = power(k, n);
    if (seq.size() != total) {
        r.condition_failures.push_back({Condition::SequenceLength, 0,
                                        "length " + std::to_string(seq.size()) + ", expected " +
                                            std::to_string(total)});
        return r;
    }
    const Word& w = seq.word();
    std::vector<std::uint32_t> counts(total, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool in_alphabet = true;
        Code c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Symbol s = w[(i + j) % w.size()];
            in_alphabet = in_alphabet && s < k;
            c = c * k + s;
        }
        if (!in_alphabet) {
            r.unexpected.insert(window_word(w, i, n));
            continue;
        }
        if (++counts[c] == 2) r.duplicated.insert(decode(c, n, k));
    }
    for (Code c = 0; c < total; ++c) {
        if (counts[c] == 0) r.missing.insert(decode(c, n, k));
    }
    return r;
}

VerificationReport check_partition(UCPartitionView p) {
    if (p.cycles.size() != p.sets.size()) {
        throw std::invalid_argument("UC-partition has " + std::to_string(p.cycles.size()) + " cycles but " +
                                    std::to_string(p.sets.size()) + " sets");
    }
    if (p.cycles.empty()) {
        throw std::invalid_argument("UC-partition is empty");
    }
    if (p.n == 0) {
        throw std::invalid_argument("UC-partition order n must be positive");
    }
    VerificationReport r;
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        if (p.cycles[i].empty()) {
            throw std::invalid_argument("UC-partition cycle " + std::to_string(i) + " is empty");
        }
    }
    const unsigned base = encoding_base(p.cycles.front(), p.sets, p.n);
    std::size_t total = 0;
    for (const WordSet& set : p.sets) total += set.size();
    const auto capacity = code_capacity(base, p.n);
    auto overlap = [&](Code c, std::size_t first, std::size_t second) {
        r.condition_failures.push_back({Condition::Partition, second,
                                        to_string(decode(c, p.n, base)) + " lies in sets " +
                                            std::to_string(first) + " and " + std::to_string(second)});
    };
    if (capacity && *capacity <= kDenseLimit && *capacity <= 16 * total) {
        std::vector<std::uint32_t> owner(*capacity, UINT32_MAX);
        for (std::size_t i = 0; i < p.sets.size(); ++i) {
            for (const Word& w : p.sets[i]) {
                const Code c = word_code(w, base);
                if (owner[c] != UINT32_MAX) {
                    overlap(c, owner[c], i);
                } else {
                    owner[c] = static_cast<std::uint32_t>(i);
                }
            }
        }
    } else if (capacity) {
        std::vector<std::pair<Code, std::size_t>> owned;
        owned.reserve(total);
        for (std::size_t i = 0; i < p.sets.size(); ++i) {
            for (const Word& w : p.sets[i]) owned.emplace_back(word_code(w, base), i);
        }
        std::sort(owned.begin(), owned.end());
        for (std::size_t t = 1; t < owned.size(); ++t) {
            if (owned[t].first == owned[t - 1].first) overlap(owned[t].first, owned[t - 1].second, owned[t].second);
        }
    } else {
        std::map<Word, std::size_t> owner;
        for (std::size_t i = 0; i < p.sets.size(); ++i) {
            for (const Word& w : p.sets[i]) {
                auto [it, inserted] = owner.emplace(w, i);
                if (!inserted) {
                    r.condition_failures.push_back({Condition::Partition, i,
                                                    to_string(w) + " lies in sets " +
                                                        std::to_string(it->second) + " and " + std::to_string(i)});
                }
            }
        }
    }
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        const auto cover = is_universal_cycle(CyclicSequence(p.cycles[i]), p.sets[i], p.n);
        if (!cover.passed()) {
            std::string why = "cycle " + to_string(p.cycles[i]) + " is not a universal cycle of its set";
            if (!cover.missing.empty()) why += "; missing " + describe(cover.missing);
            if (!cover.unexpected.empty()) why += "; extra " + describe(cover.unexpected);
            if (!cover.duplicated.empty()) why += "; repeated " + describe(cover.duplicated);
            r.condition_failures.push_back({Condition::Partition, i, why});
        }
    }
    return r;
}

VerificationReport check_theorem1(UCPartitionView p) {
    VerificationReport r = check_partition(p);
    const auto& c = p.cycles;
    const std::size_t n = p.n;
    const Symbol x = c.front().front();

    if (c.front().size() < n) {
        r.condition_failures.push_back({Condition::EndLength, 0,
                                        "|" + to_string(c.front()) + "| < " + std::to_string(n)});
    }
    const std::size_t run = leading_run(c.front(), x);
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (leading_run(c[i], x) > run) {
            r.condition_failures.push_back({Condition::LongestRun, i,
                                            to_string(c[i]) + " starts with a longer run of " +
                                                std::to_string(x) + " than " + to_string(c.front())});
            break;
        }
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const Word a = extend(c[i], n);
        const Word b = extend(c[i + 1], n);
        if (!suffix_related(a, b, x, n)) {
            r.condition_failures.push_back({Condition::Related, i,
                                            "(" + to_string(a) + ", " + to_string(b) +
                                                ") not suffix-related w.r.t. (" + std::to_string(x) + ", " +
                                                std::to_string(n) + ")"});
            break;
        }
    }
    return r;
}

VerificationReport check_corollary1(UCPartitionView p) {
    VerificationReport r = check_partition(p);
    const auto& c = p.cycles;
    const std::size_t n = p.n;
    const std::size_t last = c.size() - 1;
    const Symbol x = c.back().back();

    if (c.back().size() < n) {
        r.condition_failures.push_back({Condition::EndLength, last,
                                        "|" + to_string(c.back()) + "| < " + std::to_string(n)});
    }
    const std::size_t run = trailing_run(c.back(), x);
    for (std::size_t i = 0; i < last; ++i) {
        if (trailing_run(c[i], x) > run) {
            r.condition_failures.push_back({Condition::LongestRun, i,
                                            to_string(c[i]) + " ends with a longer run of " + std::to_string(x) +
                                                " than " + to_string(c.back())});
            break;
        }
    }
    for (std::size_t i = 0; i < last; ++i) {
        const Word a = extend(c[i], n);
        const Word b = extend(c[i + 1], n);
        if (!prefix_related(a, b, x, n)) {
            r.condition_failures.push_back({Condition::Related, i,
                                            "(" + to_string(a) + ", " + to_string(b) +
                                                ") not prefix-related w.r.t. (" + std::to_string(x) + ", " +
                                                std::to_string(n) + ")"});
            break;
        }
    }
    return r;
}

namespace {

Word concatenate(UCPartitionView p) {
    if (p.cycles.empty() || p.cycles.size() != p.sets.size()) {
        throw std::invalid_argument("misaligned UC-partition");
    }
    Word::Storage symbols;
    for (const Word& c : p.cycles) symbols.insert(symbols.end(), c.begin(), c.end());
    return Word(std::move(symbols), p.cycles.front().alphabet_size());
}

}  // namespace

bool theorem1_conclusion_holds(UCPartitionView p) {
    const Word u = concatenate(p);
    if (u.size() < p.n) return false;
    if (!compare_windows(u, p.sets, p.n).passed()) return false;
    const auto len = static_cast<std::ptrdiff_t>(p.n);
    return suffix(u, len) == suffix(extend(p.cycles.back(), p.n), len);
}

bool corollary1_conclusion_holds(UCPartitionView p) {
    const Word u = concatenate(p);
    if (u.size() < p.n) return false;
    if (!compare_windows(u, p.sets, p.n).passed()) return false;
    const auto len = static_cast<std::ptrdiff_t>(p.n);
    return prefix(u, len) == prefix(extend(p.cycles.front(), p.n), len);
}

Decomposition proof_decomposition(const ConstructionSpec& spec, const std::vector<Word>& selection) {
    if (selection.empty()) {
        throw std::invalid_argument("empty selection");
    }
    Decomposition d;
    d.partition.n = spec.n;
    const bool merge_front = spec.scheme == Scheme::ColexNecklace;
    const bool merge_back = spec.scheme == Scheme::LexNecklace || spec.scheme == Scheme::RevlexRotatedNecklace;
    d.rule = (spec.scheme == Scheme::ColexNecklace || spec.scheme == Scheme::RevcolexCoNecklace)
                 ? ConditionRule::Theorem1
                 : ConditionRule::Corollary1;
    if ((merge_front || merge_back) && selection.size() < 2) {
        throw std::invalid_argument("necklace schemes need at least two selected strings");
    }

    auto& cycles = d.partition.cycles;
    auto& sets = d.partition.sets;
    for (const Word& w : selection) {
        cycles.push_back(periodic_reduction(w));
        sets.push_back(cyclic_substrings(w, spec.n));
    }
    auto merge_at = [&](std::size_t i) {
        cycles[i] = cycles[i] + cycles[i + 1];
        sets[i].merge(sets[i + 1]);
        cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    };
    if (merge_front) merge_at(0);
    if (merge_back) merge_at(cycles.size() - 2);
    return d;
}

Decomposition proof_decomposition(const ConstructionSpec& spec, const Limits& limits) {
    validate(spec);
    return proof_decomposition(spec, select_partial(spec, scheme_listing(spec.scheme, spec.k, spec.n, limits)));
}

VerificationReport check_decomposition(UCPartitionView p, ConditionRule rule) {
    return rule == ConditionRule::Theorem1 ? check_theorem1(p) : check_corollary1(p);
}

bool conclusion_holds(UCPartitionView p, ConditionRule rule) {
    return rule == ConditionRule::Theorem1 ? theorem1_conclusion_holds(p) : corollary1_conclusion_holds(p);
}

VerificationReport check_decomposition(const Decomposition& d) { return check_decomposition(d.partition, d.rule); }

bool conclusion_holds(const Decomposition& d) { return conclusion_holds(d.partition, d.rule); }

CyclicSequence greedy_prefer_smallest(unsigned k, std::size_t n, const Limits& limits) {
    if (k < 2 || n < 1) {
        throw std::invalid_argument("greedy construction needs k >= 2 and n >= 1");
    }
    require_within(limits, k, n);
    const std::uint64_t total = power(k, n);
    const std::uint64_t context_size = total / k;  // k^(n-1)
    std::vector<bool> seen(total, false);

    // Code of the last n-1 symbols; the virtual prefix is (k-1)^(n-1).
    Code context = context_size - 1;
    std::vector<Symbol> out;
    out.reserve(total);
    while (out.size() < total) {
        bool extended = false;
        for (Symbol s = 0; s < k; ++s) {
            const Code window = context * k + s;
            if (!seen[window]) {
                seen[window] = true;
                out.push_back(s);
                context = window % context_size;
                extended = true;
                break;
            }
        }
        if (!extended) {
            throw std::logic_error("prefer-smallest greedy construction got stuck after " +
                                   std::to_string(out.size()) + " symbols");
        }
    }
    return CyclicSequence(Word(std::move(out), k));
}

VerificationReport lemma_properties(std::size_t n, const Limits& limits) {
    if (n < 1) {
        throw std::invalid_argument("lemma check needs n >= 1");
    }
    VerificationReport r;
    const auto len = static_cast<std::ptrdiff_t>(n);

    const auto listing = sort(extended_co_necklaces(n, limits), OrderKind::RevColex);
    for (std::size_t i = 0; i + 1 < listing.size(); ++i) {
        const Word a = prefix(listing[i], len);
        const Word b = prefix(listing[i + 1], len);
        if (compare(a, b, OrderKind::Colex) >= 0) {
            r.condition_failures.push_back({Condition::Lemma1, i,
                                            to_string(a) + " does not precede " + to_string(b) + " in colex"});
        }
    }

    const WordSet rotated = rotated_extended_co_necklaces(n, limits);
    for (const Word& a : rotated) {
        const Word pa = prefix(a, len);
        for (const Word& b : rotated) {
            const Word pb = prefix(b, len);
            for (Symbol x = 0; x < 2; ++x) {
                if (prefix_related(pa, pb, x, n) && !prefix_related(a, b, static_cast<Symbol>(1 - x), n)) {
                    r.condition_failures.push_back({Condition::Lemma2, 0,
                                                    "(" + to_string(a) + ", " + to_string(b) + ") with x = " +
                                                        std::to_string(x)});
                }
            }
        }
    }
    return r;
}

}  // namespace ucycle
