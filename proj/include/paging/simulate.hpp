#pragma once

#include "paging/algorithm.hpp"
#include "paging/types.hpp"

#include <cstdint>

namespace paging {

/// Runs a copy of `alg` over `seq` with the bit stream of `seed`.
/// The prototype is not mutated; replaying with the same arguments
/// reproduces the trace exactly.
Trace simulate(const OnlineAlgorithm& alg, const RequestSequence& seq, std::uint64_t seed);

struct EmpiricalCost {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    long long trials = 0;
    std::uint64_t master_seed = 0;
};

/// Mean and standard error of simulate() cost over `trials` independent
/// runs seeded with trial_seed(master_seed, 0..trials-1). Costs are
/// integers, so the aggregation is exact and order-independent.
EmpiricalCost empirical_expected_cost(const OnlineAlgorithm& alg, const RequestSequence& seq, long long trials,
                                      std::uint64_t master_seed);

} // namespace paging
