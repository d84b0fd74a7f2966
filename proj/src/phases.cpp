#include "paging/phases.hpp"

#include "paging/errors.hpp"

#include <cassert>

namespace paging {

std::vector<PhaseRecord> partition_phases(const RequestSequence& seq, const ProblemType& type,
                                          const CacheSet& initial) {
    type.validate();
    for (std::size_t t = 0; t < seq.size(); ++t)
        if (seq[t] < 1 || seq[t] > type.n)
            throw InvalidInputError("request " + std::to_string(seq[t]) + " at index " + std::to_string(t) +
                                    " outside [1, " + std::to_string(type.n) + "]");

    std::vector<PhaseRecord> phases;

    // Requests inside the initial cache before the first outside request
    // belong to no phase.
    std::size_t start = 0;
    while (start < seq.size() && initial.contains(seq[start])) ++start;
    if (start == seq.size()) return phases;

    std::set<VertexId> previous(initial.begin(), initial.end());
    PhaseRecord cur;
    cur.begin = start;

    auto close = [&](std::size_t end, bool complete) {
        cur.end = end;
        cur.complete = complete;
        for (VertexId v : cur.distinct)
            if (!previous.count(v)) cur.clean.insert(v);
        cur.l = static_cast<int>(cur.clean.size());
        previous = cur.distinct;
        phases.push_back(std::move(cur));
        cur = PhaseRecord{};
        cur.begin = end;
    };

    for (std::size_t t = start; t < seq.size(); ++t) {
        if (!cur.distinct.count(seq[t]) && static_cast<int>(cur.distinct.size()) == type.k)
            close(t, true); // seq[t] is the (k+1)-st distinct vertex: new phase
        cur.distinct.insert(seq[t]);
    }
    close(seq.size(), false); // trailing phase; never saw a (k+1)-st vertex

    return phases;
}

std::vector<PhaseStepInfo> phase_step_info(const RequestSequence& seq, const PhaseRecord& phase,
                                           const std::set<VertexId>& previous_distinct) {
    std::vector<PhaseStepInfo> out;
    std::set<VertexId> requested;
    int c = 0;
    int s = static_cast<int>(previous_distinct.size());

    for (std::size_t t = phase.begin; t < phase.end; ++t) {
        VertexId v = seq[t];
        PhaseStepInfo info;
        info.t = t;
        info.c = c;
        info.s = s;
        if (!requested.count(v)) {
            if (previous_distinct.count(v)) {
                info.first_stale_request = true;
                --s;
            } else {
                info.clean_request = true;
                ++c;
            }
            requested.insert(v);
        }
        out.push_back(info);
    }
    return out;
}

int overlap_deficit(const CacheSet& reference, const CacheSet& marking) {
    if (reference.size() != reference.capacity() || marking.size() != marking.capacity() ||
        reference.capacity() != marking.capacity())
        throw InvalidInputError("overlap_deficit requires two full caches of equal capacity");
    return reference.difference_size(marking);
}

PhaseOptBounds phase_opt_bounds(const PhaseRecord& phase, int d, int dprime) {
    PhaseOptBounds b;
    long long l = phase.l;
    b.lower_max = std::max<long long>(l - d, dprime);
    b.lower_amortized = Rational(l - d + dprime, 2);
    return b;
}

std::vector<PhaseDeficits> phase_deficits(const std::vector<PhaseRecord>& phases, const Trace& reference,
                                          const CacheSet& initial_cache) {
    // The marking cache at a phase boundary is deterministic: marks equal
    // the cache there, and the marks are exactly the previous phase's
    // distinct vertices (the initial cache before the first phase).
    auto reference_cache_before = [&](std::size_t t) -> const CacheSet& {
        assert(t <= reference.steps.size());
        return t == 0 ? initial_cache : reference.steps[t - 1].cache_after;
    };

    std::vector<PhaseDeficits> out;
    std::set<VertexId> marking_start(initial_cache.begin(), initial_cache.end());
    for (const PhaseRecord& ph : phases) {
        auto deficit = [](const CacheSet& cache, const std::set<VertexId>& marks) {
            int d = 0;
            for (VertexId v : cache)
                if (!marks.count(v)) ++d;
            return d;
        };
        PhaseDeficits pd;
        pd.d = deficit(reference_cache_before(ph.begin), marking_start);
        pd.dprime = deficit(reference_cache_before(ph.end), ph.distinct);
        out.push_back(pd);
        marking_start = ph.distinct;
    }
    return out;
}

} // namespace paging
