#pragma once

#include "paging/algorithm.hpp"
#include "paging/rational.hpp"
#include "paging/types.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace paging {

/// One branch of the tracked distribution: an algorithm state (which
/// carries its cache) and its exact probability.
struct WeightedState {
    Rational weight;
    std::unique_ptr<OnlineAlgorithm> alg;
};

/// Advances the full probability distribution of a randomized policy one
/// request at a time, merging branches that reach the same state. Weights
/// always sum to 1; the per-vertex hole probabilities p_i (probability
/// that vertex i is NOT covered) sum to n - k while caches are full.
///
/// Intended for small n; step() throws ResourceError when the merged
/// state count exceeds the cap (use Monte Carlo instead at that point).
class ExactTracker {
public:
    explicit ExactTracker(const OnlineAlgorithm& prototype, std::size_t state_cap = kDefaultStateCap);

    /// Feeds one request; returns the exact expected cost of this step.
    Rational step(VertexId request);

    const Rational& total_cost() const { return total_; }
    const std::vector<Rational>& step_costs() const { return step_costs_; }

    /// p_i for i = 1..n at index i-1.
    std::vector<Rational> hole_probabilities() const;

    const std::vector<WeightedState>& states() const { return states_; }
    std::size_t state_count() const { return states_.size(); }
    ProblemType type() const { return type_; }

    static constexpr std::size_t kDefaultStateCap = 100000;

private:
    ProblemType type_;
    std::size_t cap_;
    std::vector<WeightedState> states_;
    Rational total_;
    std::vector<Rational> step_costs_;
};

struct ExactCostReport {
    Rational total;
    std::vector<Rational> per_step;
};

/// Sum over all random branches of probability x cost.
Rational expected_cost_exact(const OnlineAlgorithm& alg, const RequestSequence& seq,
                             std::size_t state_cap = ExactTracker::kDefaultStateCap);

/// Same, keeping the per-step expected-cost breakdown.
ExactCostReport expected_cost_exact_report(const OnlineAlgorithm& alg, const RequestSequence& seq,
                                           std::size_t state_cap = ExactTracker::kDefaultStateCap);

} // namespace paging
