#pragma once

#include <cstdint>
#include <string_view>

namespace detnet {

// Deterministic, platform-independent random streams.
//
// std::uniform_real_distribution is implementation-defined, so every draw
// here goes through an explicit u64 -> double mapping. Streams are keyed by
// content (seed, string ids, integer tags), never by draw order, so adding
// an edge or a replication does not perturb unrelated draws.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

inline std::uint64_t hash_str(std::uint64_t h, std::string_view s) {
    // FNV-1a folded into the running state.
    std::uint64_t f = 14695981039346656037ULL;
    for (unsigned char c : s) {
        f ^= c;
        f *= 1099511628211ULL;
    }
    return hash_mix(h, f);
}

// Counter-based stream: state is a key, draws advance a counter.
class Stream {
public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() { return splitmix64(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

    // Uniform in [0,1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace detnet
