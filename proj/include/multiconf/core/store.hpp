#ifndef MULTICONF_CORE_STORE_HPP
#define MULTICONF_CORE_STORE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>
#include <vector>

namespace multiconf {

/// Membership of one element in one set variable's domain.
enum class Membership : std::uint8_t { Excluded, Possible, Required };

/// A set variable over the element universe 1..U: required set ("lower"),
/// possible-but-undecided elements, and an inclusive cardinality interval.
/// Narrowing is monotone within a branch; only Possible -> Required and
/// Possible -> Excluded transitions ever happen.
struct VarDomain {
    std::vector<Membership> state; // indexed 1..universe, slot 0 unused
    int requiredCount = 0;
    int possibleCount = 0;
    int cardMin = 0;
    int cardMax = 0;

    int universe() const { return static_cast<int>(state.size()) - 1; }
    int upperCount() const { return requiredCount + possibleCount; }
    bool decided() const {
        return possibleCount == 0 && requiredCount >= cardMin && requiredCount <= cardMax;
    }
    bool required(int e) const { return state[e] == Membership::Required; }
    bool possible(int e) const { return state[e] == Membership::Possible; }
    bool in_upper(int e) const { return state[e] != Membership::Excluded; }

    std::vector<int> lower() const {
        std::vector<int> out;
        out.reserve(requiredCount);
        for (int e = 1; e <= universe(); ++e)
            if (required(e)) out.push_back(e);
        return out;
    }
    std::vector<int> upper() const {
        std::vector<int> out;
        out.reserve(upperCount());
        for (int e = 1; e <= universe(); ++e)
            if (in_upper(e)) out.push_back(e);
        return out;
    }
};

class Store;

/// One constraint's filtering routine plus its entailment check.
/// propagate() may only shrink domains; returning false signals contradiction.
/// entailed() requires every watched variable to be decided.
class Propagator {
public:
    virtual ~Propagator() = default;
    virtual bool propagate(Store& s) = 0;
    virtual bool entailed(const Store& s) const = 0;
    virtual std::vector<int> watched() const = 0;
};

/// Set-variable constraint store: domains, a chronological trail for
/// backtracking, and a propagator activation queue.
class Store {
public:
    explicit Store(int universe) : universe_(universe) {
        if (universe < 0) throw std::invalid_argument("universe must be non-negative");
    }

    int universe() const { return universe_; }

    /// Registers a fresh set variable. A cardinality propagator for its own
    /// interval is posted automatically.
    int add_set_var(const std::vector<int>& lowerInit, const std::vector<int>& upperInit,
                    int cardMin, int cardMax);

    int var_count() const { return static_cast<int>(vars_.size()); }
    const VarDomain& var(int v) const { return vars_[v]; }

    /// Moves an element Possible -> Required. Returns false on contradiction.
    bool include(int v, int e) {
        VarDomain& d = vars_[v];
        switch (d.state[e]) {
        case Membership::Required: return true;
        case Membership::Excluded: return false;
        case Membership::Possible: break;
        }
        trail_.push_back({v, e, 0, 0});
        d.state[e] = Membership::Required;
        --d.possibleCount;
        ++d.requiredCount;
        touch(v);
        return d.requiredCount <= d.cardMax;
    }

    /// Moves an element Possible -> Excluded. Returns false on contradiction.
    bool exclude(int v, int e) {
        VarDomain& d = vars_[v];
        switch (d.state[e]) {
        case Membership::Excluded: return true;
        case Membership::Required: return false;
        case Membership::Possible: break;
        }
        trail_.push_back({v, e, 0, 0});
        d.state[e] = Membership::Excluded;
        --d.possibleCount;
        touch(v);
        return d.upperCount() >= d.cardMin;
    }

    /// Intersects the variable's cardinality interval with [lo, hi].
    bool tighten_card(int v, int lo, int hi) {
        VarDomain& d = vars_[v];
        const int newMin = std::max(d.cardMin, lo);
        const int newMax = std::min(d.cardMax, hi);
        if (newMin == d.cardMin && newMax == d.cardMax)
            return newMin <= newMax;
        trail_.push_back({v, 0, d.cardMin, d.cardMax});
        d.cardMin = newMin;
        d.cardMax = newMax;
        touch(v);
        return newMin <= newMax && d.upperCount() >= newMin && d.requiredCount <= newMax;
    }

    /// Posts a propagator, wires its watches and schedules its first run.
    int post(std::unique_ptr<Propagator> p) {
        const int id = static_cast<int>(props_.size());
        for (int v : p->watched()) watchers_[v].push_back(id);
        props_.push_back(std::move(p));
        inQueue_.push_back(false);
        enqueue(id);
        return id;
    }

    /// Marks the store failed at the root (e.g. an empty interval on post).
    void fail() { failed_ = true; }
    bool failed() const { return failed_; }

    /// Runs scheduled propagators to fixpoint. Returns false on contradiction;
    /// the queue is drained either way.
    bool propagate_fixpoint() {
        if (failed_) { clear_queue(); return false; }
        while (!queue_.empty()) {
            const int id = queue_.front();
            queue_.pop_front();
            inQueue_[id] = false;
            ++propagations_;
            if (!props_[id]->propagate(*this)) {
                clear_queue();
                return false;
            }
        }
        return true;
    }

    std::size_t checkpoint() const { return trail_.size(); }

    /// Restores every domain exactly to the given checkpoint.
    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const TrailEntry& t = trail_.back();
            VarDomain& d = vars_[t.var];
            if (t.elem != 0) {
                if (d.state[t.elem] == Membership::Required) --d.requiredCount;
                d.state[t.elem] = Membership::Possible;
                ++d.possibleCount;
            } else {
                d.cardMin = t.a;
                d.cardMax = t.b;
            }
            trail_.pop_back();
        }
    }

    const std::vector<std::unique_ptr<Propagator>>& propagators() const { return props_; }
    std::uint64_t propagations() const { return propagations_; }

    /// All watched variables decided; checks every propagator's entailment.
    bool all_entailed() const {
        for (const auto& p : props_)
            if (!p->entailed(*this)) return false;
        return true;
    }

private:
    struct TrailEntry {
        int var;
        int elem; // 0 => cardinality restore, a/b hold the previous interval
        int a;
        int b;
    };

    void touch(int v) {
        for (int id : watchers_[v]) enqueue(id);
    }
    void enqueue(int id) {
        if (!inQueue_[id]) {
            inQueue_[id] = true;
            queue_.push_back(id);
        }
    }
    void clear_queue() {
        for (int id : queue_) inQueue_[id] = false;
        queue_.clear();
    }

    int universe_;
    std::vector<VarDomain> vars_;
    std::vector<std::vector<int>> watchers_;
    std::vector<std::unique_ptr<Propagator>> props_;
    std::vector<bool> inQueue_;
    std::deque<int> queue_;
    std::vector<TrailEntry> trail_;
    std::uint64_t propagations_ = 0;
    bool failed_ = false;
};

/// Enforces a variable's own cardinality interval; one per variable.
class CardinalityPropagator final : public Propagator {
public:
    explicit CardinalityPropagator(int var) : var_(var) {}

    bool propagate(Store& s) override {
        const VarDomain& d = s.var(var_);
        if (d.upperCount() < d.cardMin || d.requiredCount > d.cardMax) return false;
        if (d.requiredCount == d.cardMax && d.possibleCount > 0) {
            for (int e = 1; e <= d.universe(); ++e)
                if (s.var(var_).possible(e) && !s.exclude(var_, e)) return false;
        } else if (d.upperCount() == d.cardMin && d.possibleCount > 0) {
            for (int e = 1; e <= d.universe(); ++e)
                if (s.var(var_).possible(e) && !s.include(var_, e)) return false;
        }
        return true;
    }

    bool entailed(const Store& s) const override {
        const VarDomain& d = s.var(var_);
        return d.requiredCount >= d.cardMin && d.requiredCount <= d.cardMax;
    }

    std::vector<int> watched() const override { return {var_}; }

private:
    int var_;
};

inline int Store::add_set_var(const std::vector<int>& lowerInit,
                              const std::vector<int>& upperInit, int cardMin, int cardMax) {
    if (cardMin < 0 || cardMin > cardMax)
        throw std::invalid_argument("invalid cardinality interval");
    VarDomain d;
    d.state.assign(universe_ + 1, Membership::Excluded);
    for (int e : upperInit) {
        if (e < 1 || e > universe_) throw std::invalid_argument("element outside universe");
        d.state[e] = Membership::Possible;
        ++d.possibleCount;
    }
    for (int e : lowerInit) {
        if (e < 1 || e > universe_ || d.state[e] == Membership::Excluded)
            throw std::invalid_argument("lower bound not contained in upper bound");
        if (d.state[e] == Membership::Possible) {
            d.state[e] = Membership::Required;
            --d.possibleCount;
            ++d.requiredCount;
        }
    }
    d.cardMin = cardMin;
    d.cardMax = cardMax;
    const int id = static_cast<int>(vars_.size());
    vars_.push_back(std::move(d));
    watchers_.emplace_back();
    post(std::make_unique<CardinalityPropagator>(id));
    return id;
}

} // namespace multiconf

#endif
