#pragma once

// Text rendering of words. For k <= 10 symbols are contiguous decimal digits;
// for larger alphabets they are whitespace-separated decimal integers.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ucycle/word.hpp"

namespace ucycle {

/// Segment separator used by segmented output (U+00B7 MIDDLE DOT, UTF-8).
inline constexpr std::string_view kSegmentSeparator = "\xC2\xB7";

std::string to_string(const Word& w);
std::string to_string(const CyclicSequence& s);

/// Joins rendered words with kSegmentSeparator (or " · " style for k > 10).
std::string join_segments(const std::vector<Word>& segments);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    /// Byte offset of the offending input.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Parses a rendered word. Input containing interior whitespace is read as
/// integer tokens; otherwise each digit is one symbol. Middle-dot separators
/// and surrounding whitespace are ignored. Throws ParseError on empty input,
/// a stray byte, or a symbol >= k.
Word parse_word(std::string_view text, unsigned alphabet_size);

}  // namespace ucycle
