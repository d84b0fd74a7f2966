#pragma once

#include "paging/rational.hpp"
#include "paging/types.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace paging {

/// One phase of the marking decomposition: a maximal run of requests
/// touching exactly k distinct vertices. `begin`/`end` are a half-open
/// 0-based range into the sequence. Clean vertices were requested in this
/// phase but not in the previous one (the initial cache counts as phase
/// zero); l = |clean|.
struct PhaseRecord {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::set<VertexId> clean;
    std::set<VertexId> distinct;
    int l = 0;
    bool complete = false;
};

/// Splits `seq` into marking phases. Requests inside the initial cache
/// before the first outside request belong to no phase. A trailing
/// incomplete phase (fewer than k distinct, or k distinct but the
/// sequence ended before a (k+1)-st appeared) is returned with
/// complete = false.
std::vector<PhaseRecord> partition_phases(const RequestSequence& seq, const ProblemType& type,
                                          const CacheSet& initial);

/// Per-step bookkeeping inside a phase, measured just before the request:
/// c = clean vertices requested so far, s = stale vertices not yet
/// requested this phase. For the marking algorithm the expected cost of a
/// stale request is exactly c/s.
struct PhaseStepInfo {
    std::size_t t = 0;
    int c = 0;
    int s = 0;
    bool clean_request = false;       // first request to a clean vertex
    bool first_stale_request = false; // first request to a stale vertex
};

std::vector<PhaseStepInfo> phase_step_info(const RequestSequence& seq, const PhaseRecord& phase,
                                           const std::set<VertexId>& previous_distinct);

/// d = |reference cache \ marking cache| at the phase boundary. Both
/// caches must be full.
int overlap_deficit(const CacheSet& reference, const CacheSet& marking);

struct PhaseOptBounds {
    long long lower_max = 0;   // max(l - d, d')
    Rational lower_amortized;  // (l - d + d') / 2
};

/// Lower bounds on the cost any lazy algorithm pays for the phase, given
/// its overlap deficits d (phase start) and d' (phase end) against the
/// marking cache.
PhaseOptBounds phase_opt_bounds(const PhaseRecord& phase, int d, int dprime);

/// Deficits of a reference trace against the marking caches at every
/// phase boundary. Marking's cache at a boundary equals the previous
/// phase's distinct set (the marks), so no marking simulation is needed.
struct PhaseDeficits {
    int d = 0;
    int dprime = 0;
};

std::vector<PhaseDeficits> phase_deficits(const std::vector<PhaseRecord>& phases, const Trace& reference,
                                          const CacheSet& initial_cache);

} // namespace paging
