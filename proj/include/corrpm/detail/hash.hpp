#pragma once

#include <cstdint>
#include <string_view>

namespace corrpm::detail {

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n) {
    return fnv1a64(std::string_view(static_cast<const char*>(data), n));
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(a, b), c);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return mix64(mix64(a, b, c), d);
}

} // namespace corrpm::detail
