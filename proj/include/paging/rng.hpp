#pragma once

#include <cstdint>

namespace paging {

/// splitmix64 finalizer; the one mixing function used everywhere seeds or
/// bit blocks are derived.
std::uint64_t mix64(std::uint64_t x);

/// Seed for trial `index` of a Monte Carlo run:
///   trial_seed(m, i) = mix64(m + (i + 1) * 0x9E3779B97F4A7C15)
/// i.e. element i+1 of the splitmix64 stream seeded at m. Trials are
/// reproducible and independent of execution order.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index);

/// A cursor into an unbounded deterministic stream of unbiased bits.
///
/// The stream belonging to `seed` is defined block-wise:
///   block(j) = mix64(seed + (j + 1) * 0x9E3779B97F4A7C15), j = 0, 1, ...
/// and bit i of the stream is bit (i mod 64) of block(i / 64), least
/// significant bit first. Copies share the stream but advance their own
/// cursor, so several readers can consume one stream independently of
/// each other (the shared-bit-sequence construction in the combiner
/// relies on this).
///
/// uniform(m) draws fixed-width blocks of w = bit_width(m-1) bits and
/// rejects values >= m; uniform(1) consumes nothing. Replaying with the
/// same seed therefore reproduces every draw bit for bit.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

    int next_bit();

    /// w stream bits assembled LSB-first (bit consumed first is bit 0).
    std::uint64_t bits(int w);

    /// Uniform integer in [0, m), m >= 1, by rejection sampling.
    std::uint64_t uniform(std::uint64_t m);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return pos_; }

private:
    std::uint64_t seed_;
    std::uint64_t pos_ = 0; // bit cursor
};

} // namespace paging
