#pragma once

#include <algorithm>
#include <vector>

#include "mdim/errors.hpp"
#include "mdim/linear_program.hpp"
#include "mdim/rational.hpp"

namespace mdim {

namespace detail {

// Two-phase primal simplex over exact rationals with bounded variables.
// Box bounds are handled implicitly through nonbasic-at-lower/at-upper
// statuses, never as tableau rows. Bland's smallest-index rule everywhere:
// finite by the standard anti-cycling argument, deterministic by fixed scan
// order.
class BoundedSimplex {
public:
    explicit BoundedSimplex(const LinearProgram& lp) : lp_(lp) {
        ns_ = lp.num_vars;
        m_ = static_cast<int>(lp.constraints.size());
        ncols_ = ns_ + 2 * m_; // structural | surplus | artificial
        tab_.assign(m_, std::vector<Rational>(ncols_));
        xb_.assign(m_, Rational(0));
        basis_.assign(m_, -1);
        status_.assign(ncols_, St::Lower);
        has_ub_.assign(ncols_, 0);
        ub_.assign(ncols_, Rational(0));
        row_active_.assign(m_, 1);

        for (int j = 0; j < ns_; ++j) {
            has_ub_[j] = 1;
            ub_[j] = lp.upper_bounds[j];
        }
        for (int i = 0; i < m_; ++i) {
            Rational b = lp.constraints[i].rhs;
            const int flip = b < 0 ? -1 : 1;
            for (int v : lp.constraints[i].vars) tab_[i][v] = Rational(flip);
            tab_[i][ns_ + i] = Rational(-flip); // surplus
            tab_[i][ns_ + m_ + i] = 1;          // artificial
            if (flip < 0) b = -b;
            xb_[i] = b;
            basis_[i] = ns_ + m_ + i;
            status_[ns_ + m_ + i] = St::Basic;
        }
    }

    LPSolution run() {
        // Phase 1: drive the artificial variables to zero.
        d_.assign(ncols_, Rational(0));
        for (int j = 0; j < ncols_; ++j) {
            Rational colsum = 0;
            for (int i = 0; i < m_; ++i) colsum += tab_[i][j];
            d_[j] = (j >= ns_ + m_ ? Rational(1) : Rational(0)) - colsum;
        }
        iterate(/*phase2=*/false);

        Rational artificial_sum = 0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= ns_ + m_) artificial_sum += xb_[i];
        if (artificial_sum > 0) return LPSolution{LPSolution::Status::Infeasible, Rational(0), {}};

        drive_out_artificials();

        // Phase 2: real objective (zero on surplus and artificial columns).
        d_.assign(ncols_, Rational(0));
        for (int j = 0; j < ncols_; ++j) {
            Rational red = j < ns_ ? lp_.objective[j] : Rational(0);
            for (int i = 0; i < m_; ++i) {
                if (!row_active_[i] || basis_[i] >= ns_) continue;
                if (!tab_[i][j].is_zero()) red -= lp_.objective[basis_[i]] * tab_[i][j];
            }
            d_[j] = red;
        }
        iterate(/*phase2=*/true);

        LPSolution sol;
        sol.status = LPSolution::Status::Optimal;
        sol.assignment.assign(ns_, Rational(0));
        for (int j = 0; j < ns_; ++j)
            if (status_[j] == St::Upper) sol.assignment[j] = ub_[j];
        for (int i = 0; i < m_; ++i)
            if (row_active_[i] && basis_[i] < ns_) sol.assignment[basis_[i]] = xb_[i];
        sol.value = objective_value(lp_, sol.assignment);
        if (!check_feasible(lp_, sol.assignment))
            throw lp_error("internal: simplex produced an infeasible optimum");
        return sol;
    }

private:
    enum class St { Basic, Lower, Upper };

    void iterate(bool phase2) {
        for (;;) {
            const int q = pick_entering(phase2);
            if (q < 0) return;
            const int dir = status_[q] == St::Lower ? 1 : -1;

            // Ratio test; the entering variable's own opposite bound competes.
            bool t_finite = false;
            Rational t;
            int leaving_var = -1, leaving_row = -1;
            bool leave_at_upper = false;
            if (has_ub_[q]) {
                t_finite = true;
                t = ub_[q];
                leaving_var = q;
            }
            for (int i = 0; i < m_; ++i) {
                if (!row_active_[i]) continue;
                const Rational& w = tab_[i][q];
                if (w.is_zero()) continue;
                const Rational delta = dir > 0 ? -w : w; // basic change per unit step
                Rational limit;
                bool hits_upper;
                if (delta < 0) {
                    limit = xb_[i] / (-delta);
                    hits_upper = false;
                } else if (has_ub_[basis_[i]]) {
                    limit = (ub_[basis_[i]] - xb_[i]) / delta;
                    hits_upper = true;
                } else {
                    continue;
                }
                if (!t_finite || limit < t ||
                    (limit == t && (leaving_var < 0 || basis_[i] < leaving_var))) {
                    t_finite = true;
                    t = limit;
                    leaving_var = basis_[i];
                    leaving_row = i;
                    leave_at_upper = hits_upper;
                }
            }
            if (!t_finite) throw lp_error("unbounded linear program");

            if (!t.is_zero())
                for (int i = 0; i < m_; ++i) {
                    if (!row_active_[i] || tab_[i][q].is_zero()) continue;
                    xb_[i] -= tab_[i][q] * Rational(dir) * t;
                }

            if (leaving_var == q) { // bound flip, basis unchanged
                status_[q] = status_[q] == St::Lower ? St::Upper : St::Lower;
                continue;
            }
            const int r = leaving_row;
            const Rational entering_value =
                (status_[q] == St::Lower ? Rational(0) : ub_[q]) + Rational(dir) * t;
            status_[leaving_var] = leave_at_upper ? St::Upper : St::Lower;
            status_[q] = St::Basic;
            basis_[r] = q;
            xb_[r] = entering_value;
            pivot(r, q);
        }
    }

    int pick_entering(bool phase2) const {
        for (int j = 0; j < ncols_; ++j) {
            if (status_[j] == St::Basic) continue;
            if (phase2 && j >= ns_ + m_) continue; // artificials stay out
            if (has_ub_[j] && ub_[j].is_zero()) continue; // fixed at zero
            if (status_[j] == St::Lower && d_[j] < 0) return j;
            if (status_[j] == St::Upper && d_[j] > 0) return j;
        }
        return -1;
    }

    void pivot(int r, int q) {
        auto& prow = tab_[r];
        const Rational piv = prow[q];
        if (piv != 1)
            for (auto& x : prow)
                if (!x.is_zero()) x /= piv;
        prow[q] = 1;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            const Rational f = tab_[i][q];
            if (f.is_zero()) continue;
            auto& row = tab_[i];
            for (int j = 0; j < ncols_; ++j)
                if (!prow[j].is_zero()) row[j] -= f * prow[j];
            row[q] = 0;
        }
        const Rational fd = d_[q];
        if (!fd.is_zero()) {
            for (int j = 0; j < ncols_; ++j)
                if (!prow[j].is_zero()) d_[j] -= fd * prow[j];
            d_[q] = 0;
        }
    }

    // Degenerate basic artificials get pivoted out on any available column;
    // rows with no such column are redundant and deactivated.
    void drive_out_artificials() {
        for (int r = 0; r < m_; ++r) {
            if (!row_active_[r] || basis_[r] < ns_ + m_) continue;
            int col = -1;
            for (int j = 0; j < ns_ + m_; ++j)
                if (!tab_[r][j].is_zero() && status_[j] != St::Basic) {
                    col = j;
                    break;
                }
            if (col < 0) {
                row_active_[r] = 0;
                continue;
            }
            const int art = basis_[r];
            // zero-step pivot: both variables keep their current values
            status_[art] = St::Lower;
            xb_[r] = status_[col] == St::Upper ? ub_[col] : Rational(0);
            status_[col] = St::Basic;
            basis_[r] = col;
            pivot(r, col);
        }
    }

    const LinearProgram& lp_;
    int ns_ = 0, m_ = 0, ncols_ = 0;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> xb_;
    std::vector<int> basis_;
    std::vector<St> status_;
    std::vector<char> has_ub_;
    std::vector<Rational> ub_;
    std::vector<char> row_active_;
    std::vector<Rational> d_;
};

} // namespace detail

// Exact optimum of a bounded >=-form minimization LP. Returns a feasible
// assignment attaining the optimal value, or Infeasible status.
inline LPSolution solve_min(const LinearProgram& lp) {
    validate(lp);
    detail::BoundedSimplex solver(lp);
    return solver.run();
}

} // namespace mdim
