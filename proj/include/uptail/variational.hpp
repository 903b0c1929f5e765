#pragma once

#include <string>
#include <vector>

#include "uptail/digraph.hpp"
#include "uptail/tail_polynomial.hpp"

namespace uptail {

struct SolverConfig {
    double tol = 1e-9;        // objective tolerance of the outer refinement
    double level_tol = 1e-12; // relative residual accepted by level solves
    int g_grid = 1025;        // outer grid for the 1-d family searches
    int f_grid = 129;         // stage-1 grid per dimension for the 2-d searches
    int f_zoom_grid = 65;     // per-dimension grid of each zoom stage
    int f_zoom_levels = 2;
    int f_candidates = 4;     // local minima of stage 1 kept for refinement
    int polish_sweeps = 8;    // coordinate golden-section sweeps
    int core_cap = 26;
};

// Both infima live on the boundary y1 v y2 = 1, so the search runs over two
// one-parameter families of y. For F the x side is two-dimensional and is
// parametrized by the ratio t = min(x1,x2)/max(x1,x2) in [0,1] with a region
// telling which coordinate is the larger one.
enum class Family { Y2One, Y1One };
enum class Region { X1LeX2, X2LeX1, XEqual };

struct VariationalResult {
    bool feasible = false;
    double value = 0.0;
    double x1 = 0.0, x2 = 0.0, y1 = 0.0, y2 = 0.0;
    Family family = Family::Y2One;
    Region region = Region::XEqual;
    double family_value_y2_one = 0.0;  // best over the y2=1 family
    double family_value_y1_one = 0.0;  // best over the y1=1 family
    double tol = 0.0;                  // config tol the values were computed under
};

// Smallest x >= 0 with p(x, x, y1, y2) == target. The diagonal slice is
// nondecreasing in x; throws InfeasibleError when it is constant below the
// target (every term with positive x-degree vanishes at this y).
double solve_level_x(const TailPolynomial& p, double y1, double y2, double target,
                     double level_tol = 1e-12);

// inf x(y1+y2) over g(x,x,y1,y2) = 1+delta, 0 <= y <= 1, y1 v y2 = 1.
// Dense grid per family (g_grid points) plus golden-section refinement.
VariationalResult solve_G(const TailPolynomial& g, double delta, const SolverConfig& cfg = {});

// inf x1 y1 + x2 y2 over f(x1,x2,y1,y2) = 1+delta, x >= 0, 0 <= y <= 1,
// y1 v y2 = 1. No x1 = x2 reduction is assumed: per family the outer search
// runs over (free y, ratio t) with nested grids and coordinate-wise
// golden-section refinement; the larger x is recovered by bisection on the
// level equation.
VariationalResult solve_F(const TailPolynomial& f, double delta, const SolverConfig& cfg = {});

// Structural certificates for tightness of the two bounds.
//   (i)   2 a_S >= |S| for all S        -> y1 = 1 optimal for the lower bound
//   (ii)  2 b_S >= |S| for all S        -> y2 = 1 optimal
//   (iii) both                          -> argmin at y1 = y2 = 1, F = G
//   (iv)  a_S = |N+(S)| for all S, and y2 = 1 at the argmin -> F = G
//   (v)   b_S = |N-(S)| for all S, and y1 = 1 at the argmin -> F = G
//   (vi)  f and g coincide term by term -> F = G
struct Certificates {
    bool half_weight_a = false;
    bool half_weight_b = false;
    bool both_half_weights = false;
    bool a_matches_out_neighborhood = false;
    bool b_matches_in_neighborhood = false;
    bool f_equals_g = false;
    std::vector<std::string> fired;  // the conditions that certify F = G here
};

Certificates tightness_certificates(const Digraph& g, const VariationalResult& lower,
                                    int cap = 26);

enum class Tightness { TightCertified, TightNumerical, Gap, Unknown };

std::string to_string(Tightness t);

struct BoundsReport {
    double delta = 0.0;
    VariationalResult upper_variational;  // F
    VariationalResult lower_variational;  // G
    bool clique_branch = false;           // connected and regular: min with delta^{2/v}
    double clique_value = 0.0;
    double upper = 0.0;
    double lower = 0.0;
    Tightness tightness = Tightness::Unknown;
    Certificates certificates;
    std::vector<std::string> warnings;
};

// Full pipeline: polynomials, F, G, clique branch for connected regular
// digraphs, certificates, verdict. Flags (without failing) the cases the
// lower-bound theory does not cover: max degree < 2, disconnected, and the
// non-oriented caveat for the upper bound.
BoundsReport assemble_bounds(const Digraph& g, double delta, const SolverConfig& cfg = {});

// Closed forms for the recognized families: one-way stars (delta), stars
// whose center has both directions (2 delta), and the two orientations of the
// triangle (min(delta^{2/3}, 2 delta / 3)).
struct ClosedForm {
    bool known = false;
    double value = 0.0;
    std::string description;
};

ClosedForm closed_form(const Digraph& g, double delta);

}  // namespace uptail
