#include "paging/exact.hpp"

#include "paging/errors.hpp"

#include <cassert>
#include <map>
#include <utility>

namespace paging {

ExactTracker::ExactTracker(const OnlineAlgorithm& prototype, std::size_t state_cap)
    : type_(prototype.type()), cap_(state_cap), total_(0) {
    states_.push_back(WeightedState{Rational(1), prototype.clone()});
}

Rational ExactTracker::step(VertexId request) {
    Rational step_cost = 0;
    std::map<std::string, WeightedState> merged;

    for (const WeightedState& ws : states_) {
        for (Branch& br : ws.alg->enumerate(request)) {
            Rational w = ws.weight * br.probability;
            step_cost += w * br.action.cost();
            std::string key = br.next->state_key();
            auto it = merged.find(key);
            if (it == merged.end())
                merged.emplace(std::move(key), WeightedState{std::move(w), std::move(br.next)});
            else
                it->second.weight += w;
        }
    }

    if (merged.size() > cap_)
        throw ResourceError("exact tracker exceeded " + std::to_string(cap_) +
                            " states; use Monte Carlo estimation instead");

    states_.clear();
    states_.reserve(merged.size());
    Rational mass = 0;
    for (auto& [key, ws] : merged) {
        mass += ws.weight;
        states_.push_back(std::move(ws));
    }
    assert(mass == 1);

    total_ += step_cost;
    step_costs_.push_back(step_cost);
    return step_cost;
}

std::vector<Rational> ExactTracker::hole_probabilities() const {
    std::vector<Rational> p(static_cast<std::size_t>(type_.n), Rational(0));
    for (const WeightedState& ws : states_) {
        const CacheSet& cache = ws.alg->cache();
        for (VertexId v = 1; v <= type_.n; ++v)
            if (!cache.contains(v)) p[static_cast<std::size_t>(v - 1)] += ws.weight;
    }
    return p;
}

Rational expected_cost_exact(const OnlineAlgorithm& alg, const RequestSequence& seq, std::size_t state_cap) {
    ExactTracker tracker(alg, state_cap);
    for (VertexId v : seq) tracker.step(v);
    return tracker.total_cost();
}

ExactCostReport expected_cost_exact_report(const OnlineAlgorithm& alg, const RequestSequence& seq,
                                           std::size_t state_cap) {
    ExactTracker tracker(alg, state_cap);
    for (VertexId v : seq) tracker.step(v);
    return ExactCostReport{tracker.total_cost(), tracker.step_costs()};
}

} // namespace paging
