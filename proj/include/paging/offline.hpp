#pragma once

#include "paging/types.hpp"

#include <cstddef>

namespace paging {

struct OfflineResult {
    Cost cost = 0;
    Trace trace; // full eviction schedule
};

/// Belady's MIN: on a fault evict the cached vertex whose next request is
/// farthest in the future (never requested again beats any finite
/// distance; ties go to the smallest id). Its cost is the off-line
/// optimum.
OfflineResult belady_opt(const RequestSequence& seq, const ProblemType& type, const CacheSet& initial);

Cost belady_cost(const RequestSequence& seq, const ProblemType& type, const CacheSet& initial);

/// Minimum cost over all lazy eviction strategies, by depth-first search
/// with memoization on (position, cache). Verification oracle for
/// belady_opt; throws ResourceError beyond `state_cap` memo entries.
Cost brute_force_opt(const RequestSequence& seq, const ProblemType& type, const CacheSet& initial,
                     std::size_t state_cap = 10000000);

} // namespace paging
