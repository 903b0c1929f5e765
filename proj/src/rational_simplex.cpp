#include "uptail/rational_simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace uptail {

namespace {

struct Tableau {
    // column layout: [structural | slack | artificial | rhs]
    int nv = 0, nslack = 0, nart = 0;
    std::vector<std::vector<Rational>> row;
    std::vector<int> basis;  // basic variable (column index) per row

    int cols() const { return nv + nslack + nart + 1; }
    int rhs_col() const { return nv + nslack + nart; }

    void pivot(int r, int c) {
        Rational p = row[r][c];
        assert(p != 0);
        for (auto& x : row[r]) x /= p;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            Rational f = row[i][c];
            if (f == 0) continue;
            for (int j = 0; j < cols(); ++j) row[i][j] -= f * row[r][j];
        }
        basis[r] = c;
    }
};

// Maximizes c over the tableau via Bland's rule: entering column is the
// lowest-index one with positive reduced cost, leaving row breaks ratio ties
// by the lowest basic-variable index. Columns with banned[j] are never
// entered (used to freeze artificials in phase 2).
Rational run_simplex(Tableau& t, const std::vector<Rational>& c,
                     const std::vector<char>& banned) {
    int n = t.cols() - 1;
    std::vector<Rational> reduced(n);
    Rational z = 0;
    auto recompute = [&] {
        for (int j = 0; j < n; ++j) reduced[j] = j < static_cast<int>(c.size()) ? c[j] : 0;
        z = 0;
        for (std::size_t i = 0; i < t.row.size(); ++i) {
            int b = t.basis[i];
            Rational cb = b < static_cast<int>(c.size()) ? c[b] : 0;
            if (cb == 0) continue;
            for (int j = 0; j < n; ++j) reduced[j] -= cb * t.row[i][j];
            z += cb * t.row[i][t.rhs_col()];
        }
    };
    recompute();

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n; ++j) {
            if (banned[j]) continue;
            if (reduced[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return z;

        int leave = -1;
        Rational best_ratio = 0;
        for (std::size_t i = 0; i < t.row.size(); ++i) {
            const Rational& a = t.row[i][enter];
            if (a <= 0) continue;
            Rational ratio = t.row[i][t.rhs_col()] / a;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
                leave = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::runtime_error("simplex: unbounded objective");

        Rational re = reduced[enter];
        t.pivot(leave, enter);
        // cheap incremental update of the reduced-cost row
        for (int j = 0; j < n; ++j) reduced[j] -= re * t.row[leave][j];
        z += re * t.row[leave][t.rhs_col()];
    }
}

}  // namespace

LpSolution solve_lp_max(const LinearProgram& lp) {
    int nv = lp.num_vars;
    int nslack = 0, nart = 0;
    for (const auto& r : lp.rows) {
        if (r.rhs < 0) throw std::invalid_argument("solve_lp_max: negative rhs");
        if (r.equality)
            ++nart;
        else
            ++nslack;
    }

    Tableau t;
    t.nv = nv;
    t.nslack = nslack;
    t.nart = nart;
    t.row.assign(lp.rows.size(), std::vector<Rational>(nv + nslack + nart + 1, 0));
    t.basis.assign(lp.rows.size(), -1);

    int slack_at = nv, art_at = nv + nslack;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& r = lp.rows[i];
        for (int j = 0; j < nv && j < static_cast<int>(r.coeff.size()); ++j)
            t.row[i][j] = r.coeff[j];
        t.row[i][t.rhs_col()] = r.rhs;
        if (r.equality) {
            t.row[i][art_at] = 1;
            t.basis[i] = art_at++;
        } else {
            t.row[i][slack_at] = 1;
            t.basis[i] = slack_at++;
        }
    }

    std::vector<char> banned(t.cols() - 1, 0);

    if (nart > 0) {
        std::vector<Rational> phase1(t.cols() - 1, 0);
        for (int j = nv + nslack; j < nv + nslack + nart; ++j) phase1[j] = -1;
        Rational z1 = run_simplex(t, phase1, banned);
        if (z1 != 0) return {};  // infeasible

        // Pivot leftover zero-valued artificials out of the basis; rows with
        // no structural support are redundant and dropped.
        for (std::size_t i = 0; i < t.row.size();) {
            if (t.basis[i] < nv + nslack) {
                ++i;
                continue;
            }
            int c = -1;
            for (int j = 0; j < nv + nslack; ++j)
                if (t.row[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c >= 0) {
                t.pivot(static_cast<int>(i), c);
                ++i;
            } else {
                t.row.erase(t.row.begin() + static_cast<long>(i));
                t.basis.erase(t.basis.begin() + static_cast<long>(i));
            }
        }
        for (int j = nv + nslack; j < nv + nslack + nart; ++j) banned[j] = 1;
    }

    std::vector<Rational> c(t.cols() - 1, 0);
    for (int j = 0; j < nv && j < static_cast<int>(lp.objective.size()); ++j)
        c[j] = lp.objective[j];

    LpSolution sol;
    sol.value = run_simplex(t, c, banned);
    sol.feasible = true;
    sol.w.assign(nv, 0);
    for (std::size_t i = 0; i < t.row.size(); ++i)
        if (t.basis[i] < nv) sol.w[t.basis[i]] = t.row[i][t.rhs_col()];
    return sol;
}

}  // namespace uptail
