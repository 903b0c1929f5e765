#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace uptail {

using Rational = boost::multiprecision::cpp_rational;

// Dense LP in the form
//     maximize c.w   subject to   row.coeff . w (<= or ==) row.rhs,  w >= 0.
// Solved by a two-phase tableau simplex with Bland's pivoting rule, entirely
// in exact rational arithmetic, so there is no cycling and no rounding. Sized
// for the tiny bipartite-witness programs this project produces (tens of
// variables); do not feed it anything big.
struct LinearProgram {
    struct Row {
        std::vector<Rational> coeff;
        Rational rhs;        // must be >= 0
        bool equality = false;
    };
    int num_vars = 0;
    std::vector<Row> rows;
    std::vector<Rational> objective;
};

struct LpSolution {
    bool feasible = false;
    Rational value;
    std::vector<Rational> w;  // primal solution, size num_vars
};

LpSolution solve_lp_max(const LinearProgram& lp);

}  // namespace uptail
