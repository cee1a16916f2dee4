#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mdim/errors.hpp"
#include "mdim/graph.hpp"
#include "mdim/linear_program.hpp"
#include "mdim/pair_system.hpp"
#include "mdim/parallel.hpp"
#include "mdim/rational.hpp"
#include "mdim/simplex.hpp"

namespace mdim {

// Vertex weighting g: V -> [0,1]; the LP certificate behind a dimension value.
struct ResolvingFunction {
    std::vector<Rational> values;

    Rational total() const {
        Rational s = 0;
        for (const auto& v : values) s += v;
        return s;
    }
};

struct DimensionResult {
    Rational k;
    Rational value;
    ResolvingFunction certificate;
    int kappa = 0;
};

inline void check_k_in_range(const Rational& k, int kappa) {
    if (k < 1) throw domain_error("k must be at least 1");
    if (k > kappa) throw domain_error("k exceeds kappa=" + std::to_string(kappa));
}

// One [0,1] variable per vertex, objective 1 each; one >= k row per pair,
// over that pair's resolving set.
inline LinearProgram build_kresolving_lp(const PairSystem& ps, const Rational& k) {
    check_k_in_range(k, ps.kappa);
    LinearProgram lp;
    lp.num_vars = ps.n;
    lp.objective.assign(ps.n, Rational(1));
    lp.upper_bounds.assign(ps.n, Rational(1));
    lp.constraints.reserve(ps.pair_count());
    for (const auto& r : ps.rsets) {
        LinearProgram::Constraint c;
        c.vars = to_vertex_list(r);
        c.rhs = k;
        lp.constraints.push_back(std::move(c));
    }
    return lp;
}

inline bool verify_k_resolving(const PairSystem& ps, const ResolvingFunction& f,
                               const Rational& k) {
    if (f.values.size() != static_cast<std::size_t>(ps.n))
        throw lp_error("resolving function size mismatch");
    for (const auto& v : f.values)
        if (v < 0 || v > 1) return false;
    for (const auto& r : ps.rsets) {
        Rational sum = 0;
        for (auto b = r.find_first(); b != VertexSet::npos; b = r.find_next(b))
            sum += f.values[b];
        if (sum < k) return false;
    }
    return true;
}

inline DimensionResult fractional_k_dimension(const PairSystem& ps, const Rational& k) {
    check_k_in_range(k, ps.kappa);
    LinearProgram lp = prune_dominated_constraints(build_kresolving_lp(ps, k));
    LPSolution sol = solve_min(lp);
    // always feasible on [1, kappa]: the constant k/kappa function satisfies every row
    if (sol.status != LPSolution::Status::Optimal)
        throw lp_error("internal: k-resolving LP reported infeasible on its domain");
    DimensionResult res;
    res.k = k;
    res.value = sol.value;
    res.certificate.values = std::move(sol.assignment);
    res.kappa = ps.kappa;
    if (!verify_k_resolving(ps, res.certificate, k) || res.certificate.total() != res.value)
        throw lp_error("internal: certificate fails verification");
    return res;
}

inline DimensionResult fractional_k_dimension(const Graph& g, const Rational& k) {
    return fractional_k_dimension(pair_system(g), k);
}

inline DimensionResult fractional_dimension(const Graph& g) {
    return fractional_k_dimension(g, Rational(1));
}

inline DimensionResult fractional_dimension(const PairSystem& ps) {
    return fractional_k_dimension(ps, Rational(1));
}

// Classification of dim_f^k(G) against the two extremal characterizations:
// value = k exactly for paths with k <= 2, and value = n exactly when
// k = kappa and the kappa-sized resolving sets cover every vertex. Both the
// observed equalities and the structural predicates are returned so callers
// can assert they agree.
struct ExtremeClassification {
    enum class Kind { EqualsK, EqualsN, Interior };
    Kind kind = Kind::Interior;
    DimensionResult result;
    bool equals_k = false;
    bool equals_n = false;
    bool predicted_path_k_le_2 = false; // G is a path and k <= 2
    bool predicted_kappa_cover = false; // k = kappa and r_kappa_union = V
};

inline ExtremeClassification classify_extremes(const Graph& g, const Rational& k) {
    PairSystem ps = pair_system(g);
    ExtremeClassification c;
    c.result = fractional_k_dimension(ps, k);
    c.equals_k = c.result.value == k;
    c.equals_n = c.result.value == Rational(g.n);
    c.kind = c.equals_k ? ExtremeClassification::Kind::EqualsK
             : c.equals_n ? ExtremeClassification::Kind::EqualsN
                          : ExtremeClassification::Kind::Interior;
    c.predicted_path_k_le_2 = is_path_graph(g) && k <= 2;
    c.predicted_kappa_cover = k == ps.kappa && r_kappa_union(ps).count() ==
                                                   static_cast<std::size_t>(g.n);
    return c;
}

// phi(k) sampled at the given points, in input order. Samples may be solved
// concurrently (MDIM_THREADS); results are reassembled in input order.
inline std::vector<std::pair<Rational, Rational>> sweep_phi(const Graph& g,
                                                            const std::vector<Rational>& samples) {
    PairSystem ps = pair_system(g);
    for (const auto& k : samples)
        if (k < 1 || k > ps.kappa)
            throw domain_error("sweep sample " + k.to_string() + " outside [1, " +
                               std::to_string(ps.kappa) + "]");
    return parallel_map<std::pair<Rational, Rational>>(samples.size(), [&](std::size_t i) {
        DimensionResult r = fractional_k_dimension(ps, samples[i]);
        return std::make_pair(samples[i], r.value);
    });
}

// count equally spaced samples spanning [1, kappa], endpoints included.
inline std::vector<Rational> uniform_sweep_samples(int kappa, int count) {
    if (count < 1) throw domain_error("sample count must be positive");
    std::vector<Rational> out;
    out.reserve(count);
    if (count == 1) {
        out.emplace_back(1);
        return out;
    }
    for (int i = 0; i < count; ++i)
        out.push_back(Rational(1) + Rational(kappa - 1) * Rational(i, count - 1));
    return out;
}

// kappa*per_unit equally spaced samples spanning [1, kappa], endpoints included.
inline std::vector<Rational> default_sweep_grid(int kappa, int per_unit) {
    if (kappa < 2 || per_unit < 1) throw domain_error("bad sweep grid parameters");
    return uniform_sweep_samples(kappa, kappa * per_unit);
}

} // namespace mdim
