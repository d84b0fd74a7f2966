#pragma once

#include "paging/rational.hpp"
#include "paging/rng.hpp"
#include "paging/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace paging {

class OnlineAlgorithm;

/// One random branch of a policy's response to a request: the exact
/// probability of taking it, the action, and the successor state.
struct Branch {
    Rational probability;
    StepAction action;
    std::unique_ptr<OnlineAlgorithm> next;
};

/// An on-line policy as a replayable state machine.
///
/// serve() consumes random bits only through the supplied source, so a
/// (state, request, bit stream) triple always produces the same action.
/// enumerate() exposes the full branching of one step with exact
/// probabilities summing to 1; sampling serve() against an unbiased
/// stream realizes exactly that distribution. Deterministic policies get
/// enumerate() for free (a single branch); randomized ones override it.
class OnlineAlgorithm {
public:
    virtual ~OnlineAlgorithm() = default;

    virtual std::string name() const = 0;
    virtual ProblemType type() const = 0;
    virtual const CacheSet& cache() const = 0;

    virtual StepAction serve(VertexId request, RandomSource& rng) = 0;
    virtual std::unique_ptr<OnlineAlgorithm> clone() const = 0;

    /// True iff serve() may read the random source.
    virtual bool randomized() const { return false; }

    virtual std::vector<Branch> enumerate(VertexId request) const;

    /// Canonical encoding of everything that affects future behavior;
    /// equal keys mean mergeable states in the exact tracker.
    virtual std::string state_key() const = 0;

protected:
    void check_request(VertexId request) const;
};

} // namespace paging
