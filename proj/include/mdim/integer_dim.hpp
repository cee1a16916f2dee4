#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mdim/errors.hpp"
#include "mdim/frac_dim.hpp"
#include "mdim/graph.hpp"
#include "mdim/linear_program.hpp"
#include "mdim/pair_system.hpp"
#include "mdim/rational.hpp"
#include "mdim/simplex.hpp"

namespace mdim {

struct IntegerDimResult {
    int k = 0;
    int value = 0;
    VertexSet witness; // a minimum k-resolving set
};

inline bool is_k_resolving_set(const PairSystem& ps, const VertexSet& s, int k) {
    for (const auto& r : ps.rsets)
        if (static_cast<int>((r & s).count()) < k) return false;
    return true;
}

namespace detail {

// Depth-first include/exclude search over vertices, pruned by per-pair
// deficiency counts and by the ceiling of the exact LP relaxation restricted
// to the fixed decisions. The branch order favors vertices that appear in
// many minimum-cardinality resolving sets.
class KDimSearch {
public:
    KDimSearch(const PairSystem& ps, int k) : ps_(ps), k_(k), n_(ps.n) {
        const std::size_t m = ps.pair_count();
        pairs_of_.resize(n_);
        have_.assign(m, 0);
        avail_.assign(m, 0);
        for (std::size_t p = 0; p < m; ++p) {
            avail_[p] = static_cast<int>(ps.rsets[p].count());
            for (auto b = ps.rsets[p].find_first(); b != VertexSet::npos;
                 b = ps.rsets[p].find_next(b))
                pairs_of_[b].push_back(p);
        }
        deficient_ = m;

        // branch order: membership count among kappa-sized resolving sets,
        // descending, ties by vertex id
        std::vector<int> weight(n_, 0);
        for (const auto& r : ps.rsets)
            if (r.count() == static_cast<std::size_t>(ps.kappa))
                for (auto b = r.find_first(); b != VertexSet::npos; b = r.find_next(b))
                    ++weight[b];
        order_.resize(n_);
        for (int v = 0; v < n_; ++v) order_[v] = v;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return weight[a] != weight[b] ? weight[a] > weight[b] : a < b;
        });
    }

    IntegerDimResult run() {
        greedy_incumbent();
        current_ = VertexSet(n_);
        dfs(0, 0);
        IntegerDimResult res;
        res.k = k_;
        res.value = best_size_;
        res.witness = best_;
        return res;
    }

private:
    void greedy_incumbent() {
        std::vector<int> have(ps_.pair_count(), 0);
        VertexSet chosen(n_);
        int covered = 0;
        const int total = static_cast<int>(ps_.pair_count());
        auto satisfied = [&](std::size_t p) { return have[p] >= k_; };
        while (covered < total) {
            int best_v = -1, best_gain = -1;
            for (int v = 0; v < n_; ++v) {
                if (chosen.test(v)) continue;
                int gain = 0;
                for (std::size_t p : pairs_of_[v])
                    if (!satisfied(p)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = v;
                }
            }
            if (best_v < 0 || best_gain == 0)
                throw lp_error("internal: greedy cover stalled below k <= kappa");
            chosen.set(best_v);
            for (std::size_t p : pairs_of_[best_v]) {
                ++have[p];
                if (have[p] == k_) ++covered;
            }
        }
        best_ = chosen;
        best_size_ = static_cast<int>(chosen.count());
    }

    int lp_lower_bound(int pos, int chosen_count) {
        // residual LP over undecided vertices: rows for still-deficient pairs
        std::vector<int> var_of(n_, -1);
        LinearProgram lp;
        for (int i = pos; i < n_; ++i) {
            var_of[order_[i]] = lp.num_vars++;
        }
        lp.objective.assign(lp.num_vars, Rational(1));
        lp.upper_bounds.assign(lp.num_vars, Rational(1));
        for (std::size_t p = 0; p < ps_.pair_count(); ++p) {
            if (have_[p] >= k_) continue;
            LinearProgram::Constraint c;
            c.rhs = k_ - have_[p];
            for (auto b = ps_.rsets[p].find_first(); b != VertexSet::npos;
                 b = ps_.rsets[p].find_next(b))
                if (var_of[b] >= 0) c.vars.push_back(var_of[b]);
            lp.constraints.push_back(std::move(c));
        }
        LPSolution sol = solve_min(prune_dominated_constraints(lp));
        if (sol.status != LPSolution::Status::Optimal)
            return best_size_; // infeasible branch prunes itself
        return chosen_count + static_cast<int>(sol.value.ceil());
    }

    void dfs(int pos, int chosen_count) {
        if (deficient_ == 0) {
            if (chosen_count < best_size_) {
                best_size_ = chosen_count;
                best_ = current_;
            }
            return;
        }
        if (pos == n_) return;

        int maxdef = 0;
        for (std::size_t p = 0; p < ps_.pair_count(); ++p) {
            const int def = k_ - have_[p];
            if (def <= 0) continue;
            if (avail_[p] < def) return; // not enough undecided vertices left
            maxdef = std::max(maxdef, def);
        }
        if (chosen_count + maxdef >= best_size_) return;
        if (lp_lower_bound(pos, chosen_count) >= best_size_) return;

        const int v = order_[pos];
        for (std::size_t p : pairs_of_[v]) --avail_[p];

        current_.set(v);
        for (std::size_t p : pairs_of_[v])
            if (++have_[p] == k_) --deficient_;
        dfs(pos + 1, chosen_count + 1);
        current_.reset(v);
        for (std::size_t p : pairs_of_[v])
            if (have_[p]-- == k_) ++deficient_;

        dfs(pos + 1, chosen_count);

        for (std::size_t p : pairs_of_[v]) ++avail_[p];
    }

    const PairSystem& ps_;
    int k_, n_;
    std::vector<std::vector<std::size_t>> pairs_of_;
    std::vector<int> have_, avail_, order_;
    std::size_t deficient_ = 0;
    VertexSet current_, best_;
    int best_size_ = 0;
};

} // namespace detail

inline IntegerDimResult k_metric_dimension(const PairSystem& ps, int k) {
    if (k < 1) throw domain_error("k must be at least 1");
    if (k > ps.kappa) throw domain_error("k exceeds kappa=" + std::to_string(ps.kappa));
    detail::KDimSearch search(ps, k);
    IntegerDimResult res = search.run();
    if (!is_k_resolving_set(ps, res.witness, k))
        throw lp_error("internal: branch-and-bound witness fails re-verification");
    return res;
}

inline IntegerDimResult k_metric_dimension(const Graph& g, int k) {
    return k_metric_dimension(pair_system(g), k);
}

inline IntegerDimResult metric_dimension(const Graph& g) { return k_metric_dimension(g, 1); }

// Exhaustive oracle: subsets in increasing cardinality, lexicographic within
// a cardinality; the first k-resolving subset wins. Refuses graphs larger
// than the guard instead of silently grinding.
inline IntegerDimResult brute_force_k_metric_dimension(const Graph& g, int k, int size_cap = 16) {
    if (g.n > size_cap)
        throw domain_error("n=" + std::to_string(g.n) + " exceeds enumeration guard " +
                           std::to_string(size_cap));
    if (g.n > 63) throw domain_error("enumeration limited to 63 vertices");
    PairSystem ps = pair_system(g);
    if (k < 1) throw domain_error("k must be at least 1");
    if (k > ps.kappa) throw domain_error("k exceeds kappa=" + std::to_string(ps.kappa));

    std::vector<std::uint64_t> rmask(ps.pair_count(), 0);
    for (std::size_t p = 0; p < ps.pair_count(); ++p)
        for (auto b = ps.rsets[p].find_first(); b != VertexSet::npos; b = ps.rsets[p].find_next(b))
            rmask[p] |= std::uint64_t(1) << b;

    auto feasible = [&](std::uint64_t s) {
        for (std::uint64_t m : rmask)
            if (std::popcount(s & m) < k) return false;
        return true;
    };

    std::vector<int> idx;
    for (int c = k; c <= g.n; ++c) {
        idx.resize(c);
        for (int i = 0; i < c; ++i) idx[i] = i;
        for (;;) {
            std::uint64_t s = 0;
            for (int i : idx) s |= std::uint64_t(1) << i;
            if (feasible(s)) {
                IntegerDimResult res;
                res.k = k;
                res.value = c;
                res.witness = VertexSet(g.n);
                for (int i : idx) res.witness.set(i);
                return res;
            }
            // next combination
            int i = c - 1;
            while (i >= 0 && idx[i] == g.n - c + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw lp_error("internal: no k-resolving set found although k <= kappa");
}

} // namespace mdim
