#pragma once

#include "paging/algorithm.hpp"
#include "paging/rational.hpp"
#include "paging/types.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace paging {

/// Component algorithms B(1..m) and their target factors c(1..m).
/// Feasibility requires sum(1/c(i)) <= 1.
struct CombinerConfig {
    std::vector<std::unique_ptr<OnlineAlgorithm>> algorithms;
    std::vector<Rational> factors;

    bool feasible() const;
};

/// A maximal residency interval of one of the combined algorithm's
/// servers: moved onto v at t1, moved away at t2. Steps are 1-based
/// request numbers; 0 marks residency since the initial placement.
struct VInterval {
    VertexId v = 0;
    std::size_t t1 = 0;
    std::size_t t2 = 0;
};

struct PunishEvent {
    std::size_t t = 0;            // 1-based request number of the combined fault
    int punished = 0;             // 1-based component index
    VertexId evicted = 0;         // vertex u taken from the combined cache
    Cost combined_cost = 0;       // C_A just after this fault
    std::vector<Cost> pun;        // PUN(1..m) just after this fault
    VInterval interval;           // the combined server's residency on u
};

struct PunishLedger {
    std::vector<PunishEvent> events;
    std::vector<Cost> pun;       // final PUN(i)
    std::vector<Cost> sub_costs; // final C_B(i) from the internal runs
    Cost combined_cost = 0;
};

/// The combined on-line algorithm. It replays every component on the
/// request stream; on a fault it punishes the component i minimizing
/// c(i)*(PUN(i)+1) (smallest i on ties) by evicting the smallest vertex
/// in its own cache that the component no longer covers. Lazy and, given
/// the components' realized behavior, deterministic.
class CombinedAlgorithm : public OnlineAlgorithm {
public:
    CombinedAlgorithm(CombinerConfig config, std::uint64_t shared_seed);

    std::string name() const override;
    ProblemType type() const override { return type_; }
    const CacheSet& cache() const override { return cache_; }
    StepAction serve(VertexId request, RandomSource& rng) override;
    std::unique_ptr<OnlineAlgorithm> clone() const override;
    std::string state_key() const override;

    const PunishLedger& ledger() const { return ledger_; }
    const std::vector<Rational>& factors() const { return factors_; }
    int component_count() const { return static_cast<int>(subs_.size()); }
    const OnlineAlgorithm& component(int i) const { return *subs_[static_cast<std::size_t>(i)]; }
    Cost component_cost(int i) const { return ledger_.sub_costs[static_cast<std::size_t>(i)]; }

private:
    CombinedAlgorithm(const CombinedAlgorithm& other);

    ProblemType type_;
    std::vector<std::unique_ptr<OnlineAlgorithm>> subs_;
    std::vector<RandomSource> sub_rngs_; // same stream, one cursor each
    std::vector<Rational> factors_;
    CacheSet cache_;
    std::vector<std::size_t> arrived_at_; // per vertex: step the server landed, for v-intervals
    std::size_t t_ = 0;
    PunishLedger ledger_;
};

/// Theorem-4 combination of deterministic components. Throws
/// InfeasibleConfigError when sum(1/c(i)) > 1 and InvalidInputError if
/// any component is randomized.
std::unique_ptr<CombinedAlgorithm> make_combined(CombinerConfig config);

/// Theorem-5 extension: components may be randomized; they all read the
/// one bit stream derived from master_seed, each through its own cursor
/// starting at position 0. For any fixed seed the deterministic ledger
/// guarantee holds pathwise.
std::unique_ptr<CombinedAlgorithm> make_randomized_combined(CombinerConfig config, std::uint64_t master_seed);

enum class ShuttleInit {
    /// Servers cover everything except i+m (the paper's standing
    /// configuration; default).
    Invariant,
    /// Servers on {1,...,k}; the policy works toward its invariant by
    /// evicting i on off-shuttle faults (bounded extra cost).
    CommonCache,
};

/// The m shuttle policies of type (2m-1, 2m): B(i) keeps every vertex
/// except i and i+m permanently covered and shuttles its last server
/// between i and i+m.
std::vector<std::unique_ptr<OnlineAlgorithm>> shuttle_algorithms(int m,
                                                                 ShuttleInit init = ShuttleInit::Invariant);

struct PunishViolation {
    std::size_t event_index = 0;
    std::size_t t = 0;
    int component = 0; // 1-based
    std::string detail;
};

struct VerifyResult {
    bool ok = true;
    std::optional<PunishViolation> violation;
};

/// Checks the ledger guarantee: at every fault event PUN(i) >=
/// floor(C_A/c(i)) for all i, and each component's simulated cost is at
/// least its punish count.
VerifyResult verify_punish_guarantee(const PunishLedger& ledger, const std::vector<Rational>& factors);

} // namespace paging
