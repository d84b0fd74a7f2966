#include "paging/rng.hpp"

#include <bit>

namespace paging {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
    return mix64(master_seed + (index + 1) * kGolden);
}

int next_bit_impl(std::uint64_t seed, std::uint64_t pos) {
    std::uint64_t block = mix64(seed + (pos / 64 + 1) * kGolden);
    return static_cast<int>((block >> (pos % 64)) & 1u);
}

int RandomSource::next_bit() { return next_bit_impl(seed_, pos_++); }

std::uint64_t RandomSource::bits(int w) {
    std::uint64_t v = 0;
    for (int i = 0; i < w; ++i) v |= static_cast<std::uint64_t>(next_bit()) << i;
    return v;
}

std::uint64_t RandomSource::uniform(std::uint64_t m) {
    if (m <= 1) return 0;
    int w = std::bit_width(m - 1);
    for (;;) {
        std::uint64_t v = bits(w);
        if (v < m) return v;
    }
}

} // namespace paging
