#include "paging/algorithms.hpp"

#include "paging/errors.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace paging {

namespace {

CacheSet resolve_initial(const ProblemType& type, const std::optional<CacheSet>& initial) {
    type.validate();
    if (!initial) return CacheSet::initial(type);
    if (initial->size() != type.k)
        throw InvalidInputError("initial cache must hold exactly k=" + std::to_string(type.k) + " vertices");
    for (VertexId v : *initial)
        if (v < 1 || v > type.n) throw InvalidInputError("initial cache vertex " + std::to_string(v) + " out of range");
    CacheSet c = *initial;
    return CacheSet(type.k, std::vector<VertexId>(c.begin(), c.end()));
}

std::string join_ids(const std::vector<VertexId>& ids) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ',';
        os << ids[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------

class LruAlgorithm final : public OnlineAlgorithm {
public:
    LruAlgorithm(const ProblemType& type, const CacheSet& initial) : type_(type), cache_(initial) {
        // Initial cache counts as touched in increasing vertex order.
        for (VertexId v : cache_) order_.push_back(v);
    }

    std::string name() const override { return "lru"; }
    ProblemType type() const override { return type_; }
    const CacheSet& cache() const override { return cache_; }

    StepAction serve(VertexId request, RandomSource&) override {
        check_request(request);
        if (cache_.contains(request)) {
            touch(request);
            return StepAction::hit();
        }
        VertexId victim = order_.front();
        order_.pop_front();
        cache_.erase(victim);
        cache_.insert(request);
        order_.push_back(request);
        return StepAction::move(victim, request);
    }

    std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<LruAlgorithm>(*this); }

    std::string state_key() const override {
        return "lru|" + join_ids(std::vector<VertexId>(order_.begin(), order_.end()));
    }

private:
    void touch(VertexId v) {
        auto it = std::find(order_.begin(), order_.end(), v);
        order_.erase(it);
        order_.push_back(v);
    }

    ProblemType type_;
    CacheSet cache_;
    std::deque<VertexId> order_; // least recently used first
};

// ---------------------------------------------------------------------------

class FifoAlgorithm final : public OnlineAlgorithm {
public:
    FifoAlgorithm(const ProblemType& type, const CacheSet& initial) : type_(type), cache_(initial) {
        // Initial cache counts as loaded in increasing vertex order.
        for (VertexId v : cache_) queue_.push_back(v);
    }

    std::string name() const override { return "fifo"; }
    ProblemType type() const override { return type_; }
    const CacheSet& cache() const override { return cache_; }

    StepAction serve(VertexId request, RandomSource&) override {
        check_request(request);
        if (cache_.contains(request)) return StepAction::hit();
        VertexId victim = queue_.front();
        queue_.pop_front();
        cache_.erase(victim);
        cache_.insert(request);
        queue_.push_back(request);
        return StepAction::move(victim, request);
    }

    std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<FifoAlgorithm>(*this); }

    std::string state_key() const override {
        return "fifo|" + join_ids(std::vector<VertexId>(queue_.begin(), queue_.end()));
    }

private:
    ProblemType type_;
    CacheSet cache_;
    std::deque<VertexId> queue_; // longest resident first
};

// ---------------------------------------------------------------------------

class FwfAlgorithm final : public OnlineAlgorithm {
public:
    FwfAlgorithm(const ProblemType& type, const CacheSet& initial) : type_(type), cache_(initial) {}

    std::string name() const override { return "fwf"; }
    ProblemType type() const override { return type_; }
    const CacheSet& cache() const override { return cache_; }

    StepAction serve(VertexId request, RandomSource&) override {
        check_request(request);
        if (cache_.contains(request)) return StepAction::hit();
        if (cache_.full()) cache_.clear(); // the flush itself is free
        cache_.insert(request);
        return StepAction::load(request);
    }

    std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<FwfAlgorithm>(*this); }

    std::string state_key() const override { return "fwf|" + cache_.to_string(); }

private:
    ProblemType type_;
    CacheSet cache_;
};

// ---------------------------------------------------------------------------

class RandomEvictAlgorithm final : public OnlineAlgorithm {
public:
    RandomEvictAlgorithm(const ProblemType& type, const CacheSet& initial) : type_(type), cache_(initial) {}

    std::string name() const override { return "random"; }
    ProblemType type() const override { return type_; }
    const CacheSet& cache() const override { return cache_; }
    bool randomized() const override { return true; }

    StepAction serve(VertexId request, RandomSource& rng) override {
        check_request(request);
        if (cache_.contains(request)) return StepAction::hit();
        const auto& vs = cache_.vertices();
        VertexId victim = vs[rng.uniform(vs.size())];
        cache_.erase(victim);
        cache_.insert(request);
        return StepAction::move(victim, request);
    }

    std::vector<Branch> enumerate(VertexId request) const override {
        check_request(request);
        std::vector<Branch> out;
        if (cache_.contains(request)) {
            out.push_back(Branch{Rational(1), StepAction::hit(), clone()});
            return out;
        }
        const auto& vs = cache_.vertices();
        Rational p(1, static_cast<long>(vs.size()));
        for (VertexId victim : vs) {
            auto next = std::make_unique<RandomEvictAlgorithm>(*this);
            next->cache_.erase(victim);
            next->cache_.insert(request);
            out.push_back(Branch{p, StepAction::move(victim, request), std::move(next)});
        }
        return out;
    }

    std::unique_ptr<OnlineAlgorithm> clone() const override {
        return std::make_unique<RandomEvictAlgorithm>(*this);
    }

    std::string state_key() const override { return "random|" + cache_.to_string(); }

private:
    ProblemType type_;
    CacheSet cache_;
};

// ---------------------------------------------------------------------------

class MarkingAlgorithm final : public OnlineAlgorithm {
public:
    MarkingAlgorithm(const ProblemType& type, const CacheSet& initial)
        : type_(type), cache_(initial), marks_(initial) {}

    std::string name() const override { return "marking"; }
    ProblemType type() const override { return type_; }
    const CacheSet& cache() const override { return cache_; }
    const CacheSet& marks() const { return marks_; }
    bool randomized() const override { return true; }

    StepAction serve(VertexId request, RandomSource& rng) override {
        check_request(request);
        mark(request);
        if (cache_.contains(request)) return StepAction::hit();
        std::vector<VertexId> victims = unmarked_cached();
        assert(!victims.empty() && "fault with every cached vertex marked is impossible");
        VertexId victim = victims[rng.uniform(victims.size())];
        cache_.erase(victim);
        cache_.insert(request);
        return StepAction::move(victim, request);
    }

    std::vector<Branch> enumerate(VertexId request) const override {
        check_request(request);
        std::vector<Branch> out;
        MarkingAlgorithm marked(*this);
        marked.mark(request);
        if (cache_.contains(request)) {
            out.push_back(Branch{Rational(1), StepAction::hit(), std::make_unique<MarkingAlgorithm>(marked)});
            return out;
        }
        std::vector<VertexId> victims = marked.unmarked_cached();
        assert(!victims.empty());
        Rational p(1, static_cast<long>(victims.size()));
        for (VertexId victim : victims) {
            auto next = std::make_unique<MarkingAlgorithm>(marked);
            next->cache_.erase(victim);
            next->cache_.insert(request);
            out.push_back(Branch{p, StepAction::move(victim, request), std::move(next)});
        }
        return out;
    }

    std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<MarkingAlgorithm>(*this); }

    std::string state_key() const override { return "marking|" + cache_.to_string() + "|" + marks_.to_string(); }

private:
    void mark(VertexId request) {
        if (marks_.contains(request)) return;
        if (marks_.size() == type_.k) {
            // The (k+1)-st mark: erase everything but the newest.
            marks_ = CacheSet(type_.k);
            marks_.insert(request);
        } else {
            marks_.insert(request);
        }
    }

    std::vector<VertexId> unmarked_cached() const {
        std::vector<VertexId> out;
        for (VertexId v : cache_)
            if (!marks_.contains(v)) out.push_back(v);
        return out;
    }

    ProblemType type_;
    CacheSet cache_;
    CacheSet marks_; // subset of cache plus possibly the in-flight request
};

// ---------------------------------------------------------------------------

// EATR state machine. Covered vertices are always {most_recent, roamer}.
// While a phase is active the stale set partitions the rest of the view:
// a vertex is clean iff it is neither stale nor most_recent. Between
// phases the stale set is empty; it is seeded with the non-recent covered
// vertex when an uncovered request starts the next phase.
class EatrAlgorithm final : public OnlineAlgorithm {
public:
    EatrAlgorithm(const ProblemType& type, const CacheSet& initial) : type_(type), cache_(initial) {
        if (type.k != 2) throw UnsupportedConfigError("eatr requires k = 2");
        // Loaded in increasing order: the higher vertex is most recent.
        most_recent_ = cache_.vertices()[1];
        roamer_ = cache_.vertices()[0];
    }

    std::string name() const override { return "eatr"; }
    ProblemType type() const override { return type_; }
    const CacheSet& cache() const override { return cache_; }
    bool randomized() const override { return true; }

    StepAction serve(VertexId request, RandomSource& rng) override {
        check_request(request);
        if (request == most_recent_) return StepAction::hit();
        if (request == roamer_) {
            // Covered: most-recent changes hands. In a phase this is a
            // stale request (the roamer sits on a stale vertex), so the
            // phase ends with the servers already in place.
            end_phase_or_swap(request);
            return StepAction::hit();
        }
        if (in_phase_ && stale_.contains(request)) {
            // Terminating stale request, roamer elsewhere: cost 1.
            VertexId from = roamer_;
            roamer_ = request;
            end_phase_or_swap(request);
            update_cache(from, request);
            return StepAction::move(from, request);
        }
        // Clean request (starts the phase if none is active).
        if (!in_phase_) start_phase();
        int s = stale_.size();
        bool move_roamer = rng.uniform(static_cast<std::uint64_t>(s) + 1) == 0;
        return apply_clean(request, move_roamer);
    }

    std::vector<Branch> enumerate(VertexId request) const override {
        check_request(request);
        std::vector<Branch> out;
        if (request == most_recent_) {
            out.push_back(Branch{Rational(1), StepAction::hit(), clone()});
            return out;
        }
        if (request == roamer_) {
            auto next = std::make_unique<EatrAlgorithm>(*this);
            next->end_phase_or_swap(request);
            out.push_back(Branch{Rational(1), StepAction::hit(), std::move(next)});
            return out;
        }
        if (in_phase_ && stale_.contains(request)) {
            auto next = std::make_unique<EatrAlgorithm>(*this);
            VertexId from = next->roamer_;
            next->roamer_ = request;
            next->end_phase_or_swap(request);
            next->update_cache(from, request);
            out.push_back(Branch{Rational(1), StepAction::move(from, request), std::move(next)});
            return out;
        }
        EatrAlgorithm base(*this);
        if (!base.in_phase_) base.start_phase();
        long s = base.stale_.size();
        for (bool move_roamer : {true, false}) {
            auto next = std::make_unique<EatrAlgorithm>(base);
            StepAction action = next->apply_clean(request, move_roamer);
            Rational p = move_roamer ? Rational(1, s + 1) : Rational(s, s + 1);
            out.push_back(Branch{p, action, std::move(next)});
        }
        return out;
    }

    std::unique_ptr<OnlineAlgorithm> clone() const override { return std::make_unique<EatrAlgorithm>(*this); }

    std::string state_key() const override {
        return "eatr|" + std::to_string(most_recent_) + "|" + std::to_string(roamer_) + "|" +
               (in_phase_ ? stale_.to_string() : std::string("-"));
    }

    EatrStateView view() const {
        EatrStateView v;
        v.most_recent = most_recent_;
        v.roamer = roamer_;
        v.stale = stale_.vertices();
        v.in_phase = in_phase_;
        v.clean_count = in_phase_ ? stale_.size() - 1 : 0;
        return v;
    }

private:
    void start_phase() {
        stale_ = CacheSet(type_.n);
        stale_.insert(roamer_);
        in_phase_ = true;
    }

    void end_phase_or_swap(VertexId request) {
        roamer_ = most_recent_;
        most_recent_ = request;
        stale_ = CacheSet(type_.n);
        in_phase_ = false;
    }

    StepAction apply_clean(VertexId request, bool move_roamer) {
        stale_.insert(most_recent_); // old pin goes stale
        VertexId from;
        if (move_roamer) {
            from = roamer_;
            roamer_ = most_recent_; // old pin takes the roaming role in place
        } else {
            from = most_recent_;
        }
        most_recent_ = request;
        update_cache(from, request);
        return StepAction::move(from, request);
    }

    void update_cache(VertexId from, VertexId to) {
        cache_.erase(from);
        cache_.insert(to);
    }

    ProblemType type_;
    CacheSet cache_;
    VertexId most_recent_ = 0;
    VertexId roamer_ = 0;
    CacheSet stale_;
    bool in_phase_ = false;
};

} // namespace

// ---------------------------------------------------------------------------

std::unique_ptr<OnlineAlgorithm> make_lru(const ProblemType& type, const std::optional<CacheSet>& initial) {
    return std::make_unique<LruAlgorithm>(type, resolve_initial(type, initial));
}

std::unique_ptr<OnlineAlgorithm> make_fifo(const ProblemType& type, const std::optional<CacheSet>& initial) {
    return std::make_unique<FifoAlgorithm>(type, resolve_initial(type, initial));
}

std::unique_ptr<OnlineAlgorithm> make_fwf(const ProblemType& type, const std::optional<CacheSet>& initial) {
    return std::make_unique<FwfAlgorithm>(type, resolve_initial(type, initial));
}

std::unique_ptr<OnlineAlgorithm> make_random(const ProblemType& type, const std::optional<CacheSet>& initial) {
    return std::make_unique<RandomEvictAlgorithm>(type, resolve_initial(type, initial));
}

std::unique_ptr<OnlineAlgorithm> make_marking(const ProblemType& type, const std::optional<CacheSet>& initial) {
    return std::make_unique<MarkingAlgorithm>(type, resolve_initial(type, initial));
}

std::unique_ptr<OnlineAlgorithm> make_eatr(const ProblemType& type, const std::optional<CacheSet>& initial) {
    return std::make_unique<EatrAlgorithm>(type, resolve_initial(type, initial));
}

const CacheSet& marking_marks(const OnlineAlgorithm& alg) {
    auto* m = dynamic_cast<const MarkingAlgorithm*>(&alg);
    if (!m) throw InvalidInputError("not a marking algorithm instance");
    return m->marks();
}

EatrStateView eatr_state(const OnlineAlgorithm& alg) {
    auto* e = dynamic_cast<const EatrAlgorithm*>(&alg);
    if (!e) throw InvalidInputError("not an eatr algorithm instance");
    return e->view();
}

} // namespace paging
