#pragma once

#include <cstdint>
#include <span>

namespace lwasim {

/// splitmix64 step; the stream is stable across platforms, which keeps
/// payload bytes reproducible between processes sharing a seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic payload filler for packet `uid` under `seed`.
inline void fill_payload(std::uint64_t seed, std::uint64_t uid, std::span<std::uint8_t> out) {
    std::uint64_t state = seed ^ (uid * 0xd1342543de82ef95ull);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i % 8 == 0)
            word = splitmix64(state);
        out[i] = static_cast<std::uint8_t>(word >> ((i % 8) * 8));
    }
}

/// Keyed 32-bit tag carried in the tunnel payload trailer.
inline std::uint32_t auth_tag(std::uint64_t key, std::uint32_t seq) {
    std::uint64_t state = key ^ (0x4c574950ull << 16) ^ seq; // 'LWIP'
    return static_cast<std::uint32_t>(splitmix64(state));
}

} // namespace lwasim
