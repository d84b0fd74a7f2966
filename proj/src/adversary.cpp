#include "paging/adversary.hpp"

#include "paging/errors.hpp"
#include "paging/simulate.hpp"

#include <cassert>

namespace paging {

namespace {

// argmax of p over `candidates`, smallest id on ties.
template <typename Filter>
VertexId max_prob_vertex(const std::vector<Rational>& p, int sub_n, Filter&& keep) {
    VertexId best = 0;
    for (VertexId v = 1; v <= sub_n; ++v) {
        if (!keep(v)) continue;
        if (best == 0 || p[static_cast<std::size_t>(v - 1)] > p[static_cast<std::size_t>(best - 1)]) best = v;
    }
    return best;
}

} // namespace

Adversary::Adversary(ExactTracker& tracker) : tracker_(tracker), sub_n_(tracker.type().k + 1) {
    ProblemType type = tracker_.type();
    if (tracker_.states().size() != 1)
        throw UnsupportedConfigError("adversary must start from a deterministic initial configuration");
    const CacheSet& initial = tracker_.states().front().alg->cache();
    if (initial != CacheSet::initial(type))
        throw UnsupportedConfigError("adversary requires the initial cache {1,...,k}");
    // Marks start as the covered vertices, exactly like the marking
    // algorithm; within the k+1 vertex view that leaves one unmarked.
    for (VertexId v = 1; v <= type.k; ++v) marked_.insert(v);
}

std::vector<Rational> Adversary::confined_holes() const {
    std::vector<Rational> p = tracker_.hole_probabilities();
    p.resize(static_cast<std::size_t>(sub_n_));
    Rational mass = 0;
    for (const Rational& pi : p) mass += pi;
    // Servers never leave the k+1 vertex view, so exactly one of its
    // vertices is uncovered on every branch.
    if (mass != 1)
        throw UnsupportedConfigError("confined hole probabilities do not sum to 1; "
                                     "the tracked algorithm left the adversary's vertex view");
    return p;
}

Rational Adversary::request(VertexId v) { return tracker_.step(v); }

void Adversary::mark(VertexId v) {
    marked_.insert(v);
    if (static_cast<int>(marked_.size()) == sub_n_) {
        marked_.clear();
        marked_.insert(v); // all marks but the newest are erased
    }
}

SubphaseResult Adversary::next_subphase() {
    SubphaseResult out;
    out.u = unmarked_count();
    assert(out.u >= 1);
    Rational inv_u(1, out.u);

    auto is_marked = [&](VertexId v) { return marked_.count(v) > 0; };
    auto is_unmarked = [&](VertexId v) { return !is_marked(v); };

    std::vector<Rational> p = confined_holes();
    Rational marked_mass = 0;
    for (VertexId v : marked_) marked_mass += p[static_cast<std::size_t>(v - 1)];

    if (marked_mass == 0) {
        // All probability sits on unmarked vertices; the best of them
        // already costs at least 1/u in expectation.
        VertexId v = max_prob_vertex(p, sub_n_, is_unmarked);
        assert(p[static_cast<std::size_t>(v - 1)] >= inv_u);
        out.expected_cost = request(v);
        out.requests.push_back(v);
        mark(v);
        assert(out.expected_cost >= inv_u);
        return out;
    }

    // Pin epsilon to the heaviest marked vertex and request it.
    VertexId eps_vertex = max_prob_vertex(p, sub_n_, is_marked);
    Rational epsilon = p[static_cast<std::size_t>(eps_vertex - 1)];
    assert(epsilon > 0);
    out.expected_cost = request(eps_vertex);
    out.requests.push_back(eps_vertex);

    // Milk the marked set while it still holds more mass than epsilon
    // and the subphase has not yet earned 1/u.
    for (;;) {
        p = confined_holes();
        marked_mass = 0;
        for (VertexId v : marked_) marked_mass += p[static_cast<std::size_t>(v - 1)];
        if (!(marked_mass > epsilon) || !(out.expected_cost <= inv_u)) break;
        VertexId v = max_prob_vertex(p, sub_n_, is_marked);
        out.expected_cost += request(v);
        out.requests.push_back(v);
    }

    VertexId final_vertex;
    if (out.expected_cost > inv_u) {
        // Already expensive enough; any unmarked vertex closes the
        // subphase. Smallest id, for reproducibility.
        final_vertex = 0;
        for (VertexId v = 1; v <= sub_n_ && final_vertex == 0; ++v)
            if (is_unmarked(v)) final_vertex = v;
    } else {
        // marked_mass <= epsilon: the heaviest unmarked vertex carries at
        // least (1 - P)/u, enough to lift the subphase to 1/u.
        p = confined_holes();
        final_vertex = max_prob_vertex(p, sub_n_, is_unmarked);
        assert(p[static_cast<std::size_t>(final_vertex - 1)] >= (1 - marked_mass) / out.u);
    }
    out.expected_cost += request(final_vertex);
    out.requests.push_back(final_vertex);
    mark(final_vertex);

    assert(out.expected_cost >= inv_u);
    return out;
}

NemesisResult generate_nemesis(const OnlineAlgorithm& alg, int phases, std::size_t state_cap) {
    if (phases < 0) throw InvalidInputError("phase count must be >= 0");
    ExactTracker tracker(alg, state_cap);
    Adversary adversary(tracker);
    int k = alg.type().k;

    NemesisResult out;
    out.prologue_cost = 0;
    out.total_expected_cost = 0;
    if (phases == 0) return out;

    auto run_subphase = [&]() {
        SubphaseResult sub = adversary.next_subphase();
        for (VertexId v : sub.requests) out.seq.push_back(v);
        out.total_expected_cost += sub.expected_cost;
        return sub;
    };

    // The initial configuration has u = 1; this opening subphase requests
    // the one unmarked vertex and belongs to no counted phase.
    SubphaseResult prologue = run_subphase();
    assert(prologue.u == 1);
    out.prologue_cost = prologue.expected_cost;

    Rational h_k = harmonic(k);
    for (int ph = 0; ph < phases; ++ph) {
        Rational phase_cost = 0;
        for (int u = k; u >= 1; --u) {
            SubphaseResult sub = run_subphase();
            assert(sub.u == u);
            assert(sub.expected_cost >= Rational(1, u));
            phase_cost += sub.expected_cost;
        }
        assert(phase_cost >= h_k);
        out.phase_costs.push_back(phase_cost);
    }
    return out;
}

RequestSequence deterministic_nemesis(const OnlineAlgorithm& alg, std::size_t length) {
    ProblemType type = alg.type();
    if (type.n != type.k + 1)
        throw UnsupportedConfigError("deterministic nemesis requires n = k + 1");
    if (alg.randomized())
        throw InvalidInputError("deterministic nemesis requires a deterministic algorithm");

    auto state = alg.clone();
    RandomSource guard(0);
    RequestSequence seq;
    seq.reserve(length);
    for (std::size_t t = 0; t < length; ++t) {
        VertexId hole = 0;
        for (VertexId v = 1; v <= type.n && hole == 0; ++v)
            if (!state->cache().contains(v)) hole = v;
        assert(hole != 0);
        std::uint64_t before = guard.position();
        StepAction action = state->serve(hole, guard);
        if (guard.position() != before)
            throw InvalidInputError(alg.name() + " consumed random bits; deterministic nemesis needs a "
                                                 "deterministic algorithm");
        assert(action.fault());
        (void)action;
        seq.push_back(hole);
    }
    return seq;
}

} // namespace paging
