#ifndef MULTICONF_CORE_SOLVER_HPP
#define MULTICONF_CORE_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "multiconf/core/store.hpp"

namespace multiconf {

struct SearchConfig {
    /// Fail-first variable selection (smallest |upper| - cardMin slack);
    /// default is lowest-indexed undecided variable.
    bool failFirst = false;
    std::uint64_t seed = 0; // accepted for reproducibility bookkeeping
    std::chrono::milliseconds timeout{300000};
    std::uint64_t nodeLimit = 0; // 0 = unlimited
};

struct SolveStats {
    std::int64_t wallMillis = 0;
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    std::uint64_t propagations = 0;
};

/// One decided assignment: per variable the sorted element list.
using Assignment = std::vector<std::vector<int>>;

struct SolveResult {
    enum class Status { Sat, Unsat, Timeout };
    Status status = Status::Unsat;
    Assignment assignment; // populated on Sat
    SolveStats stats;
};

namespace detail {

class Search {
public:
    Search(Store& store, const SearchConfig& cfg,
           const std::function<bool(const Assignment&)>& onSolution)
        : store_(store), cfg_(cfg), onSolution_(onSolution),
          deadline_(std::chrono::steady_clock::now() + cfg.timeout) {}

    enum class Outcome { Exhausted, Stopped, Timeout };

    Outcome run() {
        if (!store_.propagate_fixpoint()) return Outcome::Exhausted;
        return dfs();
    }

    SolveStats stats() const {
        SolveStats s;
        s.nodes = nodes_;
        s.backtracks = backtracks_;
        s.propagations = store_.propagations();
        return s;
    }

private:
    Outcome dfs() {
        ++nodes_;
        if (std::chrono::steady_clock::now() >= deadline_) return Outcome::Timeout;
        if (cfg_.nodeLimit != 0 && nodes_ > cfg_.nodeLimit) return Outcome::Timeout;

        const int var = select_var();
        if (var < 0) {
            if (store_.all_entailed()) {
                Assignment a(store_.var_count());
                for (int v = 0; v < store_.var_count(); ++v) a[v] = store_.var(v).lower();
                if (!onSolution_(a)) return Outcome::Stopped;
            }
            return Outcome::Exhausted;
        }

        int elem = 0;
        const VarDomain& d = store_.var(var);
        for (int e = 1; e <= d.universe(); ++e)
            if (d.possible(e)) { elem = e; break; }

        // include first, exclude on backtrack
        for (const bool include : {true, false}) {
            const std::size_t mark = store_.checkpoint();
            const bool ok = include ? store_.include(var, elem) : store_.exclude(var, elem);
            if (ok && store_.propagate_fixpoint()) {
                const Outcome r = dfs();
                if (r != Outcome::Exhausted) return r;
            }
            store_.undo_to(mark);
            ++backtracks_;
        }
        return Outcome::Exhausted;
    }

    int select_var() const {
        int best = -1;
        int bestSlack = 0;
        for (int v = 0; v < store_.var_count(); ++v) {
            const VarDomain& d = store_.var(v);
            if (d.possibleCount == 0) continue;
            if (!cfg_.failFirst) return v;
            const int slack = d.upperCount() - d.cardMin;
            if (best < 0 || slack < bestSlack) { best = v; bestSlack = slack; }
        }
        return best;
    }

    Store& store_;
    const SearchConfig& cfg_;
    const std::function<bool(const Assignment&)>& onSolution_;
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    std::uint64_t backtracks_ = 0;
};

} // namespace detail

/// Depth-first search to the first solution. Deterministic for a fixed
/// (model, config): lowest-indexed undecided variable, smallest undecided
/// element, include before exclude.
inline SolveResult solve(Store& store, const SearchConfig& cfg = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult result;
    std::function<bool(const Assignment&)> capture = [&](const Assignment& a) {
        result.assignment = a;
        return false; // stop at the first solution
    };
    detail::Search search(store, cfg, capture);
    const auto outcome = search.run();
    result.stats = search.stats();
    result.stats.wallMillis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
    switch (outcome) {
    case detail::Search::Outcome::Stopped: result.status = SolveResult::Status::Sat; break;
    case detail::Search::Outcome::Exhausted: result.status = SolveResult::Status::Unsat; break;
    case detail::Search::Outcome::Timeout: result.status = SolveResult::Status::Timeout; break;
    }
    return result;
}

/// Enumerates solutions in deterministic search order, up to `limit`
/// (0 = unlimited).
inline std::vector<Assignment> solve_all(Store& store, std::size_t limit = 0,
                                         const SearchConfig& cfg = {}) {
    std::vector<Assignment> out;
    std::function<bool(const Assignment&)> collect = [&](const Assignment& a) {
        out.push_back(a);
        return limit == 0 || out.size() < limit;
    };
    detail::Search search(store, cfg, collect);
    search.run();
    return out;
}

} // namespace multiconf

#endif
