#pragma once

#include "paging/algorithm.hpp"

#include <memory>
#include <optional>

namespace paging {

// Factories for the built-in policies. Every algorithm starts on
// cache {1,...,k} unless an explicit initial cache of size k is given;
// order-sensitive policies (LRU, FIFO, EATR) treat an initial cache as
// loaded in increasing vertex order.

std::unique_ptr<OnlineAlgorithm> make_lru(const ProblemType& type,
                                          const std::optional<CacheSet>& initial = std::nullopt);

std::unique_ptr<OnlineAlgorithm> make_fifo(const ProblemType& type,
                                           const std::optional<CacheSet>& initial = std::nullopt);

/// Flush-when-full: a fault with a full cache empties it (free) and then
/// loads the request (cost 1). Not lazy by design.
std::unique_ptr<OnlineAlgorithm> make_fwf(const ProblemType& type,
                                          const std::optional<CacheSet>& initial = std::nullopt);

/// Uniformly random eviction; baseline only, exposes enumerate.
std::unique_ptr<OnlineAlgorithm> make_random(const ProblemType& type,
                                             const std::optional<CacheSet>& initial = std::nullopt);

/// The randomized marking policy. Every request marks its vertex (the
/// moment k+1 vertices would be marked, all marks except the newest are
/// erased); a fault evicts a uniformly random unmarked cached vertex.
/// Equivalently a randomized LRU over two queues whose refill queue is
/// reshuffled; only this mark-set formulation is implemented.
std::unique_ptr<OnlineAlgorithm> make_marking(const ProblemType& type,
                                              const std::optional<CacheSet>& initial = std::nullopt);

/// EATR ("end after twice requested"), k = 2 only. One server is pinned
/// to the most recent request; the other stays uniformly distributed over
/// the stale vertices. On a clean request with stale-set size s the
/// roaming server moves to the request with probability 1/(s+1) (the old
/// pinned server then takes the roaming role in place), otherwise the
/// pinned server moves; both branches cost 1 and keep the roamer uniform
/// over the grown stale set. A stale request ends the phase with the
/// servers on the two most recently requested vertices.
std::unique_ptr<OnlineAlgorithm> make_eatr(const ProblemType& type,
                                           const std::optional<CacheSet>& initial = std::nullopt);

/// Introspection hooks used by tests and the phase analyses.
class MarkingAlgorithm;
const CacheSet& marking_marks(const OnlineAlgorithm& alg); // throws if not marking

struct EatrStateView {
    VertexId most_recent = 0;
    VertexId roamer = 0;
    std::vector<VertexId> stale; // sorted; empty when between phases
    bool in_phase = false;
    int clean_count = 0; // l so far in the current phase
};
EatrStateView eatr_state(const OnlineAlgorithm& alg); // throws if not EATR

} // namespace paging
