#pragma once

#include "paging/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace paging {

// Vertices are named 1..n; requests and caches use these ids directly.
using VertexId = int;

// Request sequence sigma(1), sigma(2), ... stored 0-based.
using RequestSequence = std::vector<VertexId>;

using Cost = long long;

/// Problem size (k servers on n vertices). Requires 1 <= k < n.
struct ProblemType {
    int k = 0;
    int n = 0;

    void validate() const {
        if (k < 1 || k >= n)
            throw InvalidInputError("problem type requires 1 <= k < n, got k=" + std::to_string(k) +
                                    " n=" + std::to_string(n));
    }
    bool operator==(const ProblemType&) const = default;
};

/// Set of vertices currently covered by servers. Size is at most the
/// capacity k; server-model policies keep it exactly k after init, FWF
/// may shrink it with a flush.
class CacheSet {
public:
    CacheSet() = default;
    explicit CacheSet(int capacity) : capacity_(capacity) {}
    CacheSet(int capacity, std::vector<VertexId> vertices) : capacity_(capacity), v_(std::move(vertices)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        if (static_cast<int>(v_.size()) > capacity_)
            throw InvalidInputError("cache holds more vertices than its capacity");
    }

    /// The default initial placement: servers on 1..k.
    static CacheSet initial(const ProblemType& type) {
        std::vector<VertexId> v(static_cast<std::size_t>(type.k));
        for (int i = 0; i < type.k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return CacheSet(type.k, std::move(v));
    }

    int capacity() const { return capacity_; }
    int size() const { return static_cast<int>(v_.size()); }
    bool full() const { return size() == capacity_; }
    bool contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    void insert(VertexId v) {
        auto it = std::lower_bound(v_.begin(), v_.end(), v);
        if (it != v_.end() && *it == v) return;
        if (static_cast<int>(v_.size()) >= capacity_)
            throw InvalidInputError("cache insert beyond capacity");
        v_.insert(it, v);
    }
    void erase(VertexId v) {
        auto it = std::lower_bound(v_.begin(), v_.end(), v);
        if (it != v_.end() && *it == v) v_.erase(it);
    }
    void clear() { v_.clear(); }

    // Sorted ascending.
    const std::vector<VertexId>& vertices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    /// |*this \ other|.
    int difference_size(const CacheSet& other) const {
        int d = 0;
        for (VertexId v : v_)
            if (!other.contains(v)) ++d;
        return d;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + "}";
    }

    bool operator==(const CacheSet&) const = default;

private:
    int capacity_ = 0;
    std::vector<VertexId> v_; // sorted, distinct
};

/// What a policy did with one request. Hit is free; Move and Load cost
/// one server move each. Load is only used while the cache is below
/// capacity (initial fill, after an FWF flush).
struct StepAction {
    enum class Kind { Hit, Move, Load };

    Kind kind = Kind::Hit;
    VertexId from = 0; // Move only: vertex the server left
    VertexId to = 0;   // Move/Load: the requested vertex

    static StepAction hit() { return {Kind::Hit, 0, 0}; }
    static StepAction move(VertexId from, VertexId to) { return {Kind::Move, from, to}; }
    static StepAction load(VertexId to) { return {Kind::Load, 0, to}; }

    Cost cost() const { return kind == Kind::Hit ? 0 : 1; }
    bool fault() const { return kind != Kind::Hit; }
    bool operator==(const StepAction&) const = default;
};

struct TraceStep {
    std::size_t t = 0; // 0-based position in sigma
    VertexId request = 0;
    StepAction action;
    CacheSet cache_after;
};

struct Trace {
    std::vector<TraceStep> steps;
    Cost total_cost = 0;
};

} // namespace paging
