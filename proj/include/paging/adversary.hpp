#pragma once

#include "paging/algorithm.hpp"
#include "paging/exact.hpp"
#include "paging/rational.hpp"
#include "paging/types.hpp"

#include <set>
#include <vector>

namespace paging {

/// One adversary subphase: zero or more requests to marked vertices
/// followed by one request to an unmarked vertex. Its exact expected cost
/// to the tracked algorithm is at least 1/u, where u is the number of
/// unmarked vertices when the subphase began.
struct SubphaseResult {
    std::vector<VertexId> requests;
    Rational expected_cost;
    int u = 0;
};

/// The randomized lower-bound adversary. It sees only the exact hole
/// probabilities p_i of the tracked distribution, never sampled server
/// positions, and it maintains a marked set exactly as the marking
/// algorithm would. Requests are confined to vertices 1..k+1 (for
/// k = n-1 that is every vertex), so the confined hole probabilities
/// always sum to 1.
class Adversary {
public:
    /// The tracker must start from cache {1,...,k}.
    explicit Adversary(ExactTracker& tracker);

    SubphaseResult next_subphase();

    int unmarked_count() const { return sub_n_ - static_cast<int>(marked_.size()); }
    const std::set<VertexId>& marked() const { return marked_; }

private:
    Rational request(VertexId v); // steps the tracker, returns step cost
    void mark(VertexId v);
    std::vector<Rational> confined_holes() const;

    ExactTracker& tracker_;
    int sub_n_; // k + 1
    std::set<VertexId> marked_;
};

struct NemesisResult {
    RequestSequence seq;
    /// Exact expected cost of each complete generated phase; every value
    /// is >= H_k. A phase is one full sweep of subphases with u running
    /// k, k-1, ..., 1.
    std::vector<Rational> phase_costs;
    /// Cost of the initial u = 1 subphase that precedes the first phase.
    Rational prologue_cost;
    Rational total_expected_cost;
};

/// Builds a nemesis sequence of `phases` complete phases against `alg`
/// (which must expose exact branching). The off-line optimum on the
/// result is at most phases + k.
NemesisResult generate_nemesis(const OnlineAlgorithm& alg, int phases,
                               std::size_t state_cap = ExactTracker::kDefaultStateCap);

/// For a deterministic algorithm with n = k+1: a sequence of `length`
/// requests, each to the smallest currently uncovered vertex, forcing a
/// fault at every step (cost = length).
RequestSequence deterministic_nemesis(const OnlineAlgorithm& alg, std::size_t length);

} // namespace paging
