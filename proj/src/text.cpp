#include "ucycle/text.hpp"

#include <cctype>

namespace ucycle {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_separator_at(std::string_view text, std::size_t i) {
    return text.substr(i, kSegmentSeparator.size()) == kSegmentSeparator;
}

}  // namespace

std::string to_string(const Word& w) {
    std::string out;
    if (w.alphabet_size() <= 10) {
        out.reserve(w.size());
        for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += std::to_string(w[i]);
    }
    return out;
}

std::string to_string(const CyclicSequence& s) { return to_string(s.word()); }

std::string join_segments(const std::vector<Word>& segments) {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) {
            const bool wide = segments[i].alphabet_size() > 10;
            if (wide) out.push_back(' ');
            out += kSegmentSeparator;
            if (wide) out.push_back(' ');
        }
        out += to_string(segments[i]);
    }
    return out;
}

Word parse_word(std::string_view text, unsigned alphabet_size) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin == end) {
        throw ParseError("empty sequence", begin);
    }

    bool tokens = false;
    for (std::size_t i = begin; i < end; ++i) {
        if (is_space(text[i])) {
            tokens = true;
            break;
        }
    }

    auto check = [&](unsigned long value, std::size_t at) {
        if (value >= alphabet_size) {
            throw ParseError("symbol " + std::to_string(value) + " is outside the alphabet of size " +
                                 std::to_string(alphabet_size),
                             at);
        }
        return static_cast<Symbol>(value);
    };

    std::vector<Symbol> symbols;
    std::size_t i = begin;
    while (i < end) {
        const char c = text[i];
        if (is_separator_at(text, i)) {
            i += kSegmentSeparator.size();
            continue;
        }
        if (tokens && is_space(c)) {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("unexpected byte '") + c + "'", i);
        }
        if (!tokens) {
            symbols.push_back(check(static_cast<unsigned long>(c - '0'), i));
            ++i;
            continue;
        }
        const std::size_t start = i;
        unsigned long value = 0;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + static_cast<unsigned long>(text[i] - '0');
            if (value > 0xFFFF) throw ParseError("symbol value too large", start);
            ++i;
        }
        symbols.push_back(check(value, start));
        if (i < end && !is_space(text[i]) && !is_separator_at(text, i)) {
            throw ParseError(std::string("unexpected byte '") + text[i] + "'", i);
        }
    }
    if (symbols.empty()) {
        throw ParseError("empty sequence", begin);
    }
    return Word(std::move(symbols), alphabet_size);
}

}  // namespace ucycle
