#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bcbench {

// std::uniform_int_distribution and std::shuffle are implementation
// defined; every stochastic operation in this project goes through these
// helpers so results are reproducible across toolchains.

inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded_draw(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// FNV-1a, used to derive per-configuration fit seeds.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace bcbench
