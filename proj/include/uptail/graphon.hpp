#pragma once

#include <vector>

#include "uptail/digraph.hpp"

namespace uptail {

// Step function W: [0,1]^2 -> [0,1] with k blocks. measure[i] is the length
// of block i (sums to 1 within 1e-12), value[i][j] the value on block i x j.
// Directed, so value need not be symmetric.
struct StepGraphon {
    std::vector<double> measure;
    std::vector<std::vector<double>> value;

    int blocks() const { return static_cast<int>(measure.size()); }
};

// Relative entropy rate of a single cell, with the usual conventions at the
// endpoints: ip(0,p) = log(1/(1-p)), ip(1,p) = log(1/p).
double ip(double x, double p);

// Homomorphism density of the digraph in the step function:
//   sum over maps V(H) -> blocks of  prod measure[.] * prod value[edge].
double t_step(const Digraph& g, const StepGraphon& w);

// sum_{i,j} measure_i measure_j ip(value[i][j], p) -- the entropic cost of
// the step function relative to the constant-p background.
double ip_mass(const StepGraphon& w, double p);

// Hub construction at a variational point (x1,x2,y1,y2): out-hubs A1 of
// measure x1 p^Delta broadcasting into B1 of measure y1, in-hubs A2 of
// measure x2 p^Delta receiving from B2 of measure y2, with A1 u A2 inside
// B1 n B2 and everything else at level p. Realized on the fixed 7-block
// partition {A1nA2, A1\A2, A2\A1, (B1nB2)\(A1uA2), B1\B2, B2\B1, rest};
// B-measures are enlarged to max(y_i, |A1 u A2|) so the containment always
// holds. Throws InfeasibleError when the measures cannot fit in [0,1].
StepGraphon hub_graphon(double x1, double x2, double y1, double y2, double p, int max_degree);

// Bidirectional clique block of side delta^{1/v} p^{Delta/2}; the relevant
// construction for Delta-regular digraphs.
StepGraphon clique_graphon(double delta, double p, int num_vertices, int max_degree);

}  // namespace uptail
