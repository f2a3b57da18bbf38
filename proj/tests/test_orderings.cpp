#include <doctest.h>

#include <algorithm>
#include <optional>

#include "support.hpp"
#include "ucycle/families.hpp"
#include "ucycle/order.hpp"

using namespace ucycle;
using testing::strs;
using testing::prefix_related_oracle;
using testing::prefix_scan;
using testing::suffix_related_oracle;
using testing::w;

namespace {

const std::vector<Word> kExampleSet = testing::words({"0101", "21201", "12020", "000", "220", "02102"}, 3);

std::vector<Word> words_up_to(unsigned k, std::size_t max_len, std::size_t min_len) {
    std::vector<Word> out;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        testing::each_word(k, len, [&](const Word& x) { out.push_back(x); });
    }
    return out;
}

}  // namespace

TEST_CASE("the four orders of the example set") {
    CHECK(strs(sort(kExampleSet, OrderKind::Lex)) ==
          std::vector<std::string>{"000", "0101", "02102", "12020", "21201", "220"});
    CHECK(strs(sort(kExampleSet, OrderKind::Colex)) ==
          std::vector<std::string>{"000", "12020", "220", "0101", "21201", "02102"});
    CHECK(strs(sort(kExampleSet, OrderKind::RevColex)) ==
          std::vector<std::string>{"02102", "21201", "0101", "220", "12020", "000"});
    CHECK(strs(sort(kExampleSet, OrderKind::RevLex)) ==
          std::vector<std::string>{"220", "21201", "12020", "02102", "0101", "000"});
}

TEST_CASE("order names round trip") {
    for (OrderKind k : {OrderKind::Lex, OrderKind::RevLex, OrderKind::Colex, OrderKind::RevColex}) {
        CHECK(parse_order(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_order("gray"), std::invalid_argument);
}

TEST_CASE("compare is a total order and the Rev kinds reverse listings") {
    CHECK(compare(w("0110"), w("0110"), OrderKind::Colex) == std::strong_ordering::equal);
    CHECK(compare(w("01"), w("011"), OrderKind::Lex) == std::strong_ordering::less);
    CHECK(compare(w("11"), w("011"), OrderKind::Colex) == std::strong_ordering::less);
    CHECK(strs(sort(std::vector<Word>{w("101")}, OrderKind::RevColex)) == std::vector<std::string>{"101"});

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        WordSet set;
        const std::size_t size = 1 + rng() % 12;
        while (set.size() < size) set.insert(testing::random_word(rng, 3, 1 + rng() % 5));
        const std::vector<Word> v(set.begin(), set.end());
        for (OrderKind kind : {OrderKind::Lex, OrderKind::Colex, OrderKind::RevLex, OrderKind::RevColex}) {
            for (const Word& a : v) {
                for (const Word& b : v) {
                    const auto ab = compare(a, b, kind);
                    const auto ba = compare(b, a, kind);
                    CHECK((ab == 0) == (a == b));
                    CHECK((ab < 0) == (ba > 0));
                    for (const Word& c : v) {
                        if (ab < 0 && compare(b, c, kind) < 0) CHECK(compare(a, c, kind) < 0);
                    }
                }
            }
        }
        auto lex = sort(set, OrderKind::Lex);
        std::reverse(lex.begin(), lex.end());
        CHECK(lex == sort(set, OrderKind::RevLex));
        auto colex = sort(set, OrderKind::Colex);
        std::reverse(colex.begin(), colex.end());
        CHECK(colex == sort(set, OrderKind::RevColex));
        // colex is lex of the reversed words
        std::vector<Word> rev;
        for (const Word& x : set) rev.push_back(reverse(x));
        std::vector<Word> back;
        for (const Word& x : sort(rev, OrderKind::Lex)) back.push_back(reverse(x));
        CHECK(back == sort(set, OrderKind::Colex));
    }
}

TEST_CASE("suffix-related examples") {
    CHECK(suffix_related(w("00001200", 3), w("02000200", 3), 0, 5));
    CHECK(suffix_related(w("00111"), w("01111"), 0, 5));
    CHECK_FALSE(suffix_related(w("01011"), w("00000"), 0, 5));
    CHECK_FALSE(suffix_related(w("0101"), w("1111"), 1, 4));
    // j = 2 leaves a suffix of length 3 to compare
    CHECK_FALSE(suffix_related(w("00101"), w("01111"), 0, 5));
}

TEST_CASE("prefix-related examples") {
    CHECK_FALSE(prefix_related(w("00001200", 3), w("02000200", 3), 0, 5));
    // (111110, 111100): the scan from the second-to-last symbol never leaves x = 1,
    // so j is infinite; with x = 0 the pair is related.
    CHECK_FALSE(prefix_related(w("111110"), w("111100"), 1, 6));
    CHECK(prefix_related(w("111110"), w("111100"), 0, 6));
    CHECK(prefix_related_oracle(w("111110"), w("111100"), 0, 6));
    CHECK_FALSE(prefix_related_oracle(w("111110"), w("111100"), 1, 6));
    // j = n compares empty prefixes
    CHECK(prefix_related(w("1000"), w("1111"), 0, 3));
}

TEST_CASE("predicates agree with the definition oracles exhaustively") {
    const auto all = words_up_to(2, 6, 2);
    for (std::size_t n = 2; n <= 6; ++n) {
        std::size_t mismatches = 0;
        for (const Word& a : all) {
            if (a.size() < n) continue;
            for (const Word& b : all) {
                if (b.size() < n) continue;
                for (Symbol x = 0; x < 2; ++x) {
                    if (suffix_related(a, b, x, n) != suffix_related_oracle(a, b, x, n)) ++mismatches;
                    if (prefix_related(a, b, x, n) != prefix_related_oracle(a, b, x, n)) ++mismatches;
                }
            }
        }
        INFO("n=" << n);
        CHECK(mismatches == 0);
    }
    const auto ternary = words_up_to(3, 4, 3);
    for (const Word& a : ternary) {
        for (const Word& b : ternary) {
            for (Symbol x = 0; x < 3; ++x) {
                CHECK(suffix_related(a, b, x, 3) == suffix_related_oracle(a, b, x, 3));
                CHECK(prefix_related(a, b, x, 3) == prefix_related_oracle(a, b, x, 3));
            }
        }
    }
}

TEST_CASE("prefix/suffix duality under reversal") {
    // The unrestricted equivalence fails: the prefix scan skips a's last symbol
    // while the suffix scan of reverse(a) starts on it.
    CHECK_FALSE(prefix_related(w("01"), w("00"), 0, 2));
    CHECK(suffix_related(reverse(w("00")), reverse(w("01")), 0, 2));

    // It holds exactly when a ends in x and the prefix scan stops before n.
    const auto all = words_up_to(2, 8, 1);
    std::size_t checked = 0;
    std::size_t general_mismatches = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Word& a : all) {
            if (a.size() < n) continue;
            for (const Word& b : all) {
                if (b.size() < n) continue;
                for (Symbol x = 0; x < 2; ++x) {
                    const bool lhs = prefix_related(a, b, x, n);
                    const bool rhs = suffix_related(reverse(b), reverse(a), x, n);
                    if (lhs != rhs) ++general_mismatches;
                    const auto j = prefix_scan(a, x);
                    if (a.back() == x && (!j || *j < n)) {
                        ++checked;
                        if (lhs != rhs) FAIL("duality broken for " << testing::str(a) << ", " << testing::str(b));
                    }
                }
            }
        }
    }
    CHECK(checked > 100000);
    CHECK(general_mismatches > 0);
}

TEST_CASE("lex order commutes with periodic reduction on necklaces") {
    for (unsigned k = 2; k <= 3; ++k) {
        for (std::size_t n = 1; n <= 7; ++n) {
            const auto listing = sort(necklaces(k, n), OrderKind::Lex);
            std::vector<Word> mapped;
            for (const Word& a : listing) mapped.push_back(periodic_reduction(a));
            std::vector<Word> reduced = mapped;
            CHECK(sort(std::move(reduced), OrderKind::Lex) == mapped);
        }
    }
}

TEST_CASE("colex order does not commute with periodic reduction") {
    std::vector<Word> reduced;
    for (const Word& a : necklaces(2, 4)) reduced.push_back(periodic_reduction(a));
    CHECK(strs(sort(reduced, OrderKind::Colex)) ==
          std::vector<std::string>{"0", "1", "01", "0001", "0011", "0111"});
    std::vector<Word> mapped;
    for (const Word& a : sort(necklaces(2, 4), OrderKind::Colex)) mapped.push_back(periodic_reduction(a));
    CHECK(strs(mapped) == std::vector<std::string>{"0", "0001", "01", "0011", "0111", "1"});
}
