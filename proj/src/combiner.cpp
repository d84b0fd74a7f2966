#include "paging/combiner.hpp"

#include "paging/errors.hpp"

#include <cassert>
#include <sstream>

namespace paging {

bool CombinerConfig::feasible() const {
    Rational sum = 0;
    for (const Rational& c : factors) {
        if (c <= 0) throw InvalidInputError("combiner factors must be positive");
        sum += 1 / c;
    }
    return sum <= 1;
}

namespace {

void validate_config(const CombinerConfig& config) {
    if (config.algorithms.empty()) throw InvalidInputError("combiner needs at least one algorithm");
    if (config.algorithms.size() != config.factors.size())
        throw InvalidInputError("combiner needs one factor per algorithm");
    ProblemType type = config.algorithms.front()->type();
    for (const auto& alg : config.algorithms)
        if (!(alg->type() == type)) throw InvalidInputError("combined algorithms must share one type");
    if (!config.feasible())
        throw InfeasibleConfigError("sum of 1/c(i) exceeds 1; the factor sequence is not realizable");
}

} // namespace

CombinedAlgorithm::CombinedAlgorithm(CombinerConfig config, std::uint64_t shared_seed)
    : type_(config.algorithms.front()->type()),
      subs_(std::move(config.algorithms)),
      factors_(std::move(config.factors)),
      cache_(CacheSet::initial(type_)),
      arrived_at_(static_cast<std::size_t>(type_.n) + 1, 0) {
    for (std::size_t i = 0; i < subs_.size(); ++i) sub_rngs_.emplace_back(shared_seed);
    ledger_.pun.assign(subs_.size(), 0);
    ledger_.sub_costs.assign(subs_.size(), 0);
}

CombinedAlgorithm::CombinedAlgorithm(const CombinedAlgorithm& other)
    : type_(other.type_),
      sub_rngs_(other.sub_rngs_),
      factors_(other.factors_),
      cache_(other.cache_),
      arrived_at_(other.arrived_at_),
      t_(other.t_),
      ledger_(other.ledger_) {
    subs_.reserve(other.subs_.size());
    for (const auto& sub : other.subs_) subs_.push_back(sub->clone());
}

std::string CombinedAlgorithm::name() const {
    std::ostringstream os;
    os << "combined:";
    for (std::size_t i = 0; i < subs_.size(); ++i) {
        if (i) os << '+';
        os << subs_[i]->name();
    }
    return os.str();
}

StepAction CombinedAlgorithm::serve(VertexId request, RandomSource&) {
    check_request(request);
    std::size_t t = ++t_; // 1-based request number, as in sigma(1), sigma(2), ...

    // Every component processes the request first; punishment looks at
    // their caches after this step.
    for (std::size_t i = 0; i < subs_.size(); ++i) {
        StepAction a = subs_[i]->serve(request, sub_rngs_[i]);
        ledger_.sub_costs[i] += a.cost();
    }

    if (cache_.contains(request)) return StepAction::hit();

    // Punish the component with the least c(i) * (PUN(i) + 1), smallest
    // index on ties.
    int target = 0;
    Rational best_score = factors_[0] * (ledger_.pun[0] + 1);
    for (int i = 1; i < static_cast<int>(subs_.size()); ++i) {
        Rational score = factors_[static_cast<std::size_t>(i)] * (ledger_.pun[static_cast<std::size_t>(i)] + 1);
        if (score < best_score) {
            best_score = score;
            target = i;
        }
    }

    // The request sits in the component's cache but not ours, and both
    // caches have k vertices, so some vertex of ours is missing there.
    const CacheSet& target_cache = subs_[static_cast<std::size_t>(target)]->cache();
    VertexId victim = 0;
    for (VertexId v : cache_) {
        if (!target_cache.contains(v)) {
            victim = v;
            break;
        }
    }
    assert(victim != 0 && "punish vertex must exist");

    cache_.erase(victim);
    cache_.insert(request);
    ledger_.pun[static_cast<std::size_t>(target)] += 1;
    ledger_.combined_cost += 1;

    PunishEvent event;
    event.t = t;
    event.punished = target + 1;
    event.evicted = victim;
    event.combined_cost = ledger_.combined_cost;
    event.pun = ledger_.pun;
    event.interval = VInterval{victim, arrived_at_[static_cast<std::size_t>(victim)], t};
    ledger_.events.push_back(std::move(event));

    arrived_at_[static_cast<std::size_t>(request)] = t;
    return StepAction::move(victim, request);
}

std::unique_ptr<OnlineAlgorithm> CombinedAlgorithm::clone() const {
    return std::unique_ptr<OnlineAlgorithm>(new CombinedAlgorithm(*this));
}

std::string CombinedAlgorithm::state_key() const {
    std::ostringstream os;
    os << "combined|" << cache_.to_string();
    for (std::size_t i = 0; i < subs_.size(); ++i)
        os << '|' << subs_[i]->state_key() << '@' << sub_rngs_[i].position() << '#' << ledger_.pun[i];
    return os.str();
}

std::unique_ptr<CombinedAlgorithm> make_combined(CombinerConfig config) {
    validate_config(config);
    for (const auto& alg : config.algorithms)
        if (alg->randomized())
            throw InvalidInputError("make_combined takes deterministic components; use "
                                    "make_randomized_combined for randomized ones");
    return std::unique_ptr<CombinedAlgorithm>(new CombinedAlgorithm(std::move(config), 0));
}

std::unique_ptr<CombinedAlgorithm> make_randomized_combined(CombinerConfig config, std::uint64_t master_seed) {
    validate_config(config);
    return std::unique_ptr<CombinedAlgorithm>(new CombinedAlgorithm(std::move(config), master_seed));
}

// ---------------------------------------------------------------------------

namespace {

// B(i) of the necessity construction: every vertex except i and i+m stays
// covered; one server shuttles between i and i+m.
class ShuttleAlgorithm final : public OnlineAlgorithm {
public:
    ShuttleAlgorithm(int i, int m, ShuttleInit init) : i_(i), m_(m), type_{2 * m - 1, 2 * m} {
        if (init == ShuttleInit::Invariant) {
            // Standing configuration: shuttle server on i, hole at i+m.
            cache_ = CacheSet(type_.k);
            for (VertexId v = 1; v <= type_.n; ++v)
                if (v != i_ + m_) cache_.insert(v);
        } else {
            cache_ = CacheSet::initial(type_);
        }
    }

    std::string name() const override { return "shuttle" + std::to_string(i_); }
    ProblemType type() const override { return type_; }
    const CacheSet& cache() const override { return cache_; }

    StepAction serve(VertexId request, RandomSource&) override {
        check_request(request);
        if (cache_.contains(request)) return StepAction::hit();
        VertexId victim;
        if (request == i_) {
            victim = i_ + m_;
        } else if (request == i_ + m_) {
            victim = i_;
        } else {
            // Warmup fault off the shuttle pair: give up i, reaching the
            // standing configuration.
            victim = i_;
        }
        assert(cache_.contains(victim));
        cache_.erase(victim);
        cache_.insert(request);
        return StepAction::move(victim, request);
    }

    std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<ShuttleAlgorithm>(*this); }

    std::string state_key() const override { return name() + "|" + cache_.to_string(); }

private:
    int i_;
    int m_;
    ProblemType type_;
    CacheSet cache_;
};

} // namespace

std::vector<std::unique_ptr<OnlineAlgorithm>> shuttle_algorithms(int m, ShuttleInit init) {
    if (m < 1) throw InvalidInputError("shuttle suite needs m >= 1");
    std::vector<std::unique_ptr<OnlineAlgorithm>> out;
    for (int i = 1; i <= m; ++i) out.push_back(std::make_unique<ShuttleAlgorithm>(i, m, init));
    return out;
}

VerifyResult verify_punish_guarantee(const PunishLedger& ledger, const std::vector<Rational>& factors) {
    VerifyResult out;
    std::size_t m = factors.size();

    for (std::size_t e = 0; e < ledger.events.size(); ++e) {
        const PunishEvent& ev = ledger.events[e];
        if (ev.pun.size() != m) {
            out.ok = false;
            out.violation = PunishViolation{e, ev.t, 0, "event has wrong component count"};
            return out;
        }
        for (std::size_t i = 0; i < m; ++i) {
            BigInt bound = floor_div(Rational(ev.combined_cost) / factors[i]);
            if (BigInt(ev.pun[i]) < bound) {
                out.ok = false;
                out.violation =
                    PunishViolation{e, ev.t, static_cast<int>(i) + 1,
                                    "PUN(" + std::to_string(i + 1) + ")=" + std::to_string(ev.pun[i]) +
                                        " < floor(" + std::to_string(ev.combined_cost) + "/c)"};
                return out;
            }
        }
    }
    for (std::size_t i = 0; i < m && i < ledger.sub_costs.size(); ++i) {
        if (ledger.sub_costs[i] < ledger.pun[i]) {
            out.ok = false;
            out.violation = PunishViolation{ledger.events.size(), 0, static_cast<int>(i) + 1,
                                            "component cost " + std::to_string(ledger.sub_costs[i]) +
                                                " below punish count " + std::to_string(ledger.pun[i])};
            return out;
        }
    }
    return out;
}

} // namespace paging
