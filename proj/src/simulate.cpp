#include "paging/simulate.hpp"

#include "paging/errors.hpp"

#include <cmath>

namespace paging {

Trace simulate(const OnlineAlgorithm& alg, const RequestSequence& seq, std::uint64_t seed) {
    auto state = alg.clone();
    ProblemType type = state->type();
    RandomSource rng(seed);

    Trace trace;
    trace.steps.reserve(seq.size());
    for (std::size_t t = 0; t < seq.size(); ++t) {
        VertexId request = seq[t];
        if (request < 1 || request > type.n)
            throw InvalidInputError("request " + std::to_string(request) + " at index " + std::to_string(t) +
                                    " outside [1, " + std::to_string(type.n) + "]");
        StepAction action = state->serve(request, rng);
        trace.total_cost += action.cost();
        trace.steps.push_back(TraceStep{t, request, action, state->cache()});
    }
    return trace;
}

EmpiricalCost empirical_expected_cost(const OnlineAlgorithm& alg, const RequestSequence& seq, long long trials,
                                      std::uint64_t master_seed) {
    if (trials < 1) throw InvalidInputError("trials must be >= 1");

    // Integer sums keep the aggregation exact whatever the trial order.
    long long sum = 0;
    long long sum_sq = 0;
    for (long long i = 0; i < trials; ++i) {
        Cost c = simulate(alg, seq, trial_seed(master_seed, static_cast<std::uint64_t>(i))).total_cost;
        sum += c;
        sum_sq += c * c;
    }

    EmpiricalCost out;
    out.trials = trials;
    out.master_seed = master_seed;
    out.mean = static_cast<double>(sum) / static_cast<double>(trials);
    if (trials > 1) {
        double var = (static_cast<double>(sum_sq) - static_cast<double>(sum) * out.mean) /
                     static_cast<double>(trials - 1);
        if (var < 0) var = 0;
        out.stderr_of_mean = std::sqrt(var / static_cast<double>(trials));
    }
    return out;
}

} // namespace paging
