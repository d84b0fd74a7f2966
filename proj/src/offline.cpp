#include "paging/offline.hpp"

#include "paging/errors.hpp"

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

namespace paging {

namespace {

void validate(const RequestSequence& seq, const ProblemType& type) {
    type.validate();
    for (std::size_t t = 0; t < seq.size(); ++t)
        if (seq[t] < 1 || seq[t] > type.n)
            throw InvalidInputError("request " + std::to_string(seq[t]) + " at index " + std::to_string(t) +
                                    " outside [1, " + std::to_string(type.n) + "]");
}

// next_use[t][v-1]: first position >= t requesting v, or npos.
constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<std::size_t>> next_use_table(const RequestSequence& seq, int n) {
    std::vector<std::vector<std::size_t>> table(seq.size() + 1,
                                                std::vector<std::size_t>(static_cast<std::size_t>(n), kNever));
    for (std::size_t t = seq.size(); t-- > 0;) {
        table[t] = table[t + 1];
        table[t][static_cast<std::size_t>(seq[t] - 1)] = t;
    }
    return table;
}

} // namespace

OfflineResult belady_opt(const RequestSequence& seq, const ProblemType& type, const CacheSet& initial) {
    validate(seq, type);
    auto next_use = next_use_table(seq, type.n);

    OfflineResult out;
    CacheSet cache = initial;
    for (std::size_t t = 0; t < seq.size(); ++t) {
        VertexId request = seq[t];
        StepAction action;
        if (cache.contains(request)) {
            action = StepAction::hit();
        } else if (!cache.full()) {
            cache.insert(request);
            action = StepAction::load(request);
        } else {
            // Farthest next use wins; never-again beats any finite
            // distance; ties fall to the smallest id (vertices scan in
            // increasing order, strict > keeps the first maximum).
            VertexId victim = 0;
            std::size_t victim_next = 0;
            bool have = false;
            for (VertexId v : cache) {
                std::size_t nu = next_use[t + 1][static_cast<std::size_t>(v - 1)];
                if (!have || nu > victim_next) {
                    victim = v;
                    victim_next = nu;
                    have = true;
                }
            }
            cache.erase(victim);
            cache.insert(request);
            action = StepAction::move(victim, request);
        }
        out.cost += action.cost();
        out.trace.steps.push_back(TraceStep{t, request, action, cache});
    }
    out.trace.total_cost = out.cost;
    return out;
}

Cost belady_cost(const RequestSequence& seq, const ProblemType& type, const CacheSet& initial) {
    return belady_opt(seq, type, initial).cost;
}

Cost brute_force_opt(const RequestSequence& seq, const ProblemType& type, const CacheSet& initial,
                     std::size_t state_cap) {
    validate(seq, type);
    if (type.n > 62) throw ResourceError("brute_force_opt supports n <= 62");

    auto mask_of = [](const CacheSet& c) {
        std::uint64_t m = 0;
        for (VertexId v : c) m |= 1ull << (v - 1);
        return m;
    };

    // Lazy strategies only: skip hits, branch over evictions on faults.
    // Key = position * 2^n + cache mask.
    std::unordered_map<std::uint64_t, Cost> memo;

    struct Solver {
        const RequestSequence& seq;
        int n;
        std::size_t cap;
        std::unordered_map<std::uint64_t, Cost>& memo;

        Cost best(std::size_t t, std::uint64_t cache, int cache_size, int capacity) {
            while (t < seq.size() && (cache >> (seq[t] - 1)) & 1) ++t;
            if (t == seq.size()) return 0;
            std::uint64_t key = (static_cast<std::uint64_t>(t) << n) | cache;
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            if (memo.size() >= cap)
                throw ResourceError("brute_force_opt exceeded " + std::to_string(cap) + " states");

            std::uint64_t req_bit = 1ull << (seq[t] - 1);
            Cost best_cost;
            if (cache_size < capacity) {
                best_cost = 1 + best(t + 1, cache | req_bit, cache_size + 1, capacity);
            } else {
                best_cost = std::numeric_limits<Cost>::max();
                std::uint64_t rest = cache;
                while (rest) {
                    std::uint64_t victim_bit = rest & (~rest + 1);
                    rest &= rest - 1;
                    Cost c = 1 + best(t + 1, (cache ^ victim_bit) | req_bit, cache_size, capacity);
                    if (c < best_cost) best_cost = c;
                }
            }
            memo.emplace(key, best_cost);
            return best_cost;
        }
    };

    Solver solver{seq, type.n, state_cap, memo};
    return solver.best(0, mask_of(initial), initial.size(), type.k);
}

} // namespace paging
