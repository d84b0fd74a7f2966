#include "paging/algorithm.hpp"

#include "paging/errors.hpp"

namespace paging {

void OnlineAlgorithm::check_request(VertexId request) const {
    ProblemType t = type();
    if (request < 1 || request > t.n)
        throw InvalidInputError("request " + std::to_string(request) + " outside [1, " + std::to_string(t.n) +
                                "]");
}

std::vector<Branch> OnlineAlgorithm::enumerate(VertexId request) const {
    // Single branch for deterministic policies; randomized ones override.
    auto next = clone();
    RandomSource guard(0);
    StepAction action = next->serve(request, guard);
    if (guard.position() != 0)
        throw UnsupportedConfigError(name() + " draws random bits but does not provide enumerate()");
    std::vector<Branch> out;
    out.push_back(Branch{Rational(1), action, std::move(next)});
    return out;
}

} // namespace paging
