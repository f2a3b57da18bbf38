// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "ucycle/concat.hpp"
#include "ucycle/text.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;

namespace {

struct Config {
    Scheme scheme;
    unsigned k;
    std::size_t n;
};

// Every scheme at k <= 4 (k = 2 for the binary schemes), n >= 2, k^n <= 20000.
std::vector<Config> grid() {
    std::vector<Config> out;
    for (Scheme s : kAllSchemes) {
        for (unsigned k = 2; k <= 4; ++k) {
            if (is_binary_only(s) && k != 2) continue;
            for (std::size_t n = 2; power(k, n) <= 20000; ++n) out.push_back({s, k, n});
        }
    }
    return out;
}

std::string label(const Config& c) {
    std::ostringstream s;
    s << to_string(c.scheme) << " k=" << c.k << " n=" << c.n;
    return s.str();
}

class Criterion {
public:
    Criterion() = default;

    // Records a failure; the first few are echoed for diagnosis.
    void fail(const std::string& what) {
        if (failures_++ < 5) notes_ << "\n    " << what;
    }
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) fail(what);
    }
    bool passed() const { return failures_ == 0; }
    std::size_t checks() const { return checks_; }
    std::string notes() const { return notes_.str(); }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::ostringstream notes_;
};

int failed_criteria = 0;

void report(int id, const std::string& title, double budget_seconds, const std::function<void(Criterion&)>& body) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
        std::ostringstream s;
        s << "took " << elapsed << " s, budget " << budget_seconds << " s";
        c.fail(s.str());
    }
    const bool ok = c.passed();
    if (!ok) ++failed_criteria;
    std::printf("%s criterion %d: %s [%zu checks, %.2f s]%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), c.checks(),
                elapsed, c.notes().c_str());
    std::fflush(stdout);
}

WordSet all_words(unsigned k, std::size_t n) {
    WordSet out;
    testing::each_word(k, n, [&](const Word& x) { out.insert(x); });
    return out;
}

bool same_partition(UCPartitionView a, const UCPartition& b) {
    return a.n == b.n && std::equal(a.cycles.begin(), a.cycles.end(), b.cycles.begin(), b.cycles.end()) &&
           std::equal(a.sets.begin(), a.sets.end(), b.sets.begin(), b.sets.end());
}

// Cross-checks against per-m recomputation stay affordable up to this size.
constexpr std::uint64_t kRecomputeLimit = 1000;

}  // namespace

int main() {
    report(1, "golden n=6, k=2 sequences for all five constructions", 1.0, [](Criterion& c) {
        const std::pair<Scheme, const char*> golden[] = {
            {Scheme::LexNecklace, "0000001000011000101000111001001011001101001111010101110110111111"},
            {Scheme::ColexNecklace, "0000001001000101010011010000110010110110001110101110011110111111"},
            {Scheme::RevlexRotatedNecklace, "1111110111100111000110110100110000101110101100101010001001000000"},
            {Scheme::RevcolexCoNecklace, "0000001111110001001110110011000010111101001010110101000110111001"},
            {Scheme::LexRotatedCoNecklace, "1001110110001010110101001011110100001100110111001000111111000000"},
        };
        for (const auto& [scheme, expected] : golden) {
            const std::string got = to_string(construct({scheme, 2, 6, {}}).sequence);
            c.expect(got == expected, std::string(to_string(scheme)) + " produced " + got);
        }
    });

    report(2, "small worked examples", 0, [](Criterion& c) {
        c.expect(to_string(construct({Scheme::LexNecklace, 2, 4, {}}).sequence) == "0000100110101111", "lex n=4");
        c.expect(to_string(construct({Scheme::ColexNecklace, 2, 4, {}}).sequence) == "0000101001101111",
                 "colex n=4");
        const Word u = testing::w("0000011111") + testing::w("0010011011") + testing::w("0001011101") +
                       testing::w("01");
        c.expect(is_universal_cycle(CyclicSequence(u), all_words(2, 5), 5).passed(), "four-cycle concatenation");
    });

    report(3, "negative controls fail with the documented missing windows", 0, [](Criterion& c) {
        const auto missing = [](const Word& seq, unsigned k, std::size_t n) {
            return is_universal_cycle(CyclicSequence(seq), all_words(k, n), n);
        };
        const auto colex = missing(testing::w("0101000100110111"), 2, 4);
        c.expect(!colex.passed() && colex.missing.count(testing::w("1111")), "colex of reductions");

        const ConstructionResult revlex = uc_concat(sort(necklaces(2, 5), OrderKind::RevLex));
        c.expect(to_string(revlex.sequence) == "10111101011001110010100011000010", "revlex necklace sequence");
        const auto r = missing(revlex.sequence.word(), 2, 5);
        c.expect(!r.passed() && r.missing.count(testing::w("00000")), "revlex necklaces miss 00000");

        for (OrderKind order : {OrderKind::Lex, OrderKind::Colex}) {
            const auto co = missing(uc_concat(sort(extended_co_necklaces(5), order)).sequence.word(), 2, 5);
            c.expect(!co.passed() && co.missing.count(testing::w("10101")),
                     std::string(to_string(order)) + " co-necklaces miss 10101");
        }
    });

    report(4, "full constructions over the grid are de Bruijn sequences", 60.0, [](Criterion& c) {
        for (const Config& g : grid()) {
            const ConstructionResult r = construct({g.scheme, g.k, g.n, {}});
            c.expect(is_de_bruijn(r.sequence, g.k, g.n).passed(), label(g));
        }
    });

    report(5, "every legal partial construction is a universal cycle for its target set", 0, [](Criterion& c) {
        for (const Config& g : grid()) {
            const auto listing = scheme_listing(g.scheme, g.k, g.n);
            const bool small = power(g.k, g.n) <= kRecomputeLimit;
            WordSet target;
            const bool first = takes_first(g.scheme);
            for (std::size_t m = 1; m <= listing.size(); ++m) {
                const Word& added = first ? listing[m - 1] : listing[listing.size() - m];
                const WordSet subs = cyclic_substrings(added, g.n);
                target.insert(subs.begin(), subs.end());
                if (m < min_partial(g.scheme)) continue;

                const ConstructionSpec spec{g.scheme, g.k, g.n, m};
                const std::string where = label(g) + " m=" + std::to_string(m);
                ConstructionResult r;
                if (small) {
                    r = construct(spec);
                    c.expect(target_set(spec) == target, where + ": incremental target set");
                } else {
                    r = uc_concat(select_partial(spec, listing));
                }
                c.expect(is_universal_cycle(r.sequence, target, g.n).passed(), where);
            }
        }
    });

    report(6, "proof decompositions satisfy their conditions and conclusions", 0, [](Criterion& c) {
        for (const Config& g : grid()) {
            const std::size_t size = scheme_listing(g.scheme, g.k, g.n).size();
            const Decomposition full = proof_decomposition({g.scheme, g.k, g.n, {}});
            const UCPartitionView whole(full.partition);
            const std::size_t cycles = full.partition.cycles.size();
            const std::size_t merged = size - cycles;
            for (std::size_t m = min_partial(g.scheme); m <= size; ++m) {
                const std::size_t count = m - merged;
                const UCPartitionView view =
                    takes_first(g.scheme) ? whole.slice(0, count) : whole.slice(cycles - count, count);
                const std::string where = label(g) + " m=" + std::to_string(m);
                if (power(g.k, g.n) <= kRecomputeLimit) {
                    const Decomposition d = proof_decomposition({g.scheme, g.k, g.n, m});
                    c.expect(d.rule == full.rule && same_partition(view, d.partition), where + ": slice");
                }
                const VerificationReport r = check_decomposition(view, full.rule);
                c.expect(r.passed(), where + (r.condition_failures.empty()
                                                  ? std::string()
                                                  : ": " + r.condition_failures.front().witness));
                c.expect(conclusion_holds(view, full.rule), where + ": conclusion");
            }
        }
    });

    report(7, "prefer-smallest greedy equals the lex necklace construction", 0, [](Criterion& c) {
        for (const Config& g : grid()) {
            if (g.scheme != Scheme::LexNecklace) continue;
            c.expect(greedy_prefer_smallest(g.k, g.n) == construct({g.scheme, g.k, g.n, {}}).sequence, label(g));
        }
    });

    report(8, "co-necklace lemmas for n <= 9", 0, [](Criterion& c) {
        for (std::size_t n = 2; n <= 9; ++n) {
            const VerificationReport r = lemma_properties(n);
            c.expect(r.passed(), "n=" + std::to_string(n) +
                                     (r.condition_failures.empty() ? "" : ": " + r.condition_failures.front().witness));
        }
    });

    report(9, "necklace counts and reduction lengths", 0, [](Criterion& c) {
        for (unsigned k = 2; k <= 4; ++k) {
            for (std::size_t n = 2; power(k, n) <= 20000; ++n) {
                WordSet canonical;
                testing::each_word(k, n, [&](const Word& x) { canonical.insert(testing::min_rotation(x)); });
                const WordSet generated = necklaces(k, n);
                const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n);
                c.expect(generated.size() == canonical.size(), where + ": count");
                std::uint64_t total = 0;
                for (const Word& a : generated) total += periodic_reduction(a).size();
                c.expect(total == power(k, n), where + ": reduction lengths");
            }
        }
    });

    std::printf("%d of 9 criteria failed\n", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
