#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ucycle {

/// Raised when a request would touch more than the configured number of words.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    /// Upper bound on k^n, the number of length-n windows a request may cover.
    std::uint64_t max_windows = std::uint64_t{1} << 20;
};

/// k^n, saturating at UINT64_MAX.
inline std::uint64_t power(std::uint64_t k, std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (r > UINT64_MAX / k) return UINT64_MAX;
        r *= k;
    }
    return r;
}

inline void require_within(const Limits& limits, unsigned k, std::size_t n) {
    if (power(k, n) > limits.max_windows) {
        throw ResourceLimitError(std::to_string(k) + "^" + std::to_string(n) +
                                 " exceeds the window cap of " + std::to_string(limits.max_windows));
    }
}

}  // namespace ucycle
