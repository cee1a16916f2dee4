#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <vector>

#include "mdim/errors.hpp"
#include "mdim/rational.hpp"

namespace mdim {

// Minimization LP with >= rows over 0/1 incidence sets and box bounds
// [0, upper] per variable.
struct LinearProgram {
    struct Constraint {
        std::vector<int> vars; // distinct variable indices, coefficient 1 each
        Rational rhs;
    };

    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
    std::vector<Rational> upper_bounds;
};

struct LPSolution {
    enum class Status { Optimal, Infeasible };
    Status status = Status::Infeasible;
    Rational value;                   // meaningful when Optimal
    std::vector<Rational> assignment; // meaningful when Optimal
};

inline void validate(const LinearProgram& lp) {
    if (lp.num_vars < 0) throw lp_error("negative variable count");
    if (lp.objective.size() != static_cast<std::size_t>(lp.num_vars))
        throw lp_error("objective size mismatch");
    if (lp.upper_bounds.size() != static_cast<std::size_t>(lp.num_vars))
        throw lp_error("upper bound size mismatch");
    for (const auto& u : lp.upper_bounds)
        if (u < 0) throw lp_error("negative upper bound");
    for (const auto& c : lp.constraints)
        for (int v : c.vars)
            if (v < 0 || v >= lp.num_vars)
                throw lp_error("constraint variable index out of range: " + std::to_string(v));
}

// Exact feasibility check of a full assignment against bounds and rows.
inline bool check_feasible(const LinearProgram& lp, const std::vector<Rational>& assignment) {
    validate(lp);
    if (assignment.size() != static_cast<std::size_t>(lp.num_vars))
        throw lp_error("assignment length mismatch");
    for (int j = 0; j < lp.num_vars; ++j)
        if (assignment[j] < 0 || assignment[j] > lp.upper_bounds[j]) return false;
    for (const auto& c : lp.constraints) {
        Rational sum = 0;
        for (int v : c.vars) sum += assignment[v];
        if (sum < c.rhs) return false;
    }
    return true;
}

inline Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& assignment) {
    Rational z = 0;
    for (int j = 0; j < lp.num_vars; ++j) z += lp.objective[j] * assignment[j];
    return z;
}

// Drops any row implied by another: with x >= 0, a row over S1 with rhs r1
// implies every row over S2 >= S1 with rhs r2 <= r1. Never changes the optimum.
inline LinearProgram prune_dominated_constraints(const LinearProgram& lp) {
    const std::size_t m = lp.constraints.size();
    std::vector<boost::dynamic_bitset<>> sets(m, boost::dynamic_bitset<>(lp.num_vars));
    for (std::size_t i = 0; i < m; ++i)
        for (int v : lp.constraints[i].vars) sets[i].set(v);

    std::vector<char> dropped(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (dropped[i]) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || dropped[j]) continue;
            const bool implied = sets[i].is_subset_of(sets[j]) &&
                                 lp.constraints[i].rhs >= lp.constraints[j].rhs;
            if (!implied) continue;
            // identical rows: keep the earlier one
            if (sets[i] == sets[j] && lp.constraints[i].rhs == lp.constraints[j].rhs && i > j)
                continue;
            dropped[j] = 1;
        }
    }
    LinearProgram out;
    out.num_vars = lp.num_vars;
    out.objective = lp.objective;
    out.upper_bounds = lp.upper_bounds;
    for (std::size_t i = 0; i < m; ++i)
        if (!dropped[i]) out.constraints.push_back(lp.constraints[i]);
    return out;
}

} // namespace mdim
