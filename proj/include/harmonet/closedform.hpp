#pragma once

#include "harmonet/gaussian.hpp"

namespace harmonet {

// Closed-form delta invariants for the exactly solvable couplings. These are
// independent of the matrix pipeline and exist to cross-check it.

// Two coupled oscillators at inverse temperature beta (infinity = ground
// state): delta = sqrt(coth(beta/2) coth(beta w2/2) / w2), w2 = sqrt(1+2 omega^2).
double delta_two_vertex(double omega, double beta);

// Ends of a three-site chain, ground state:
// delta^2 = (2 + sqrt(1+3 omega^2)) / (3 sqrt(1+omega^2)).
double delta_path3(double omega);

// Any pair of a complete graph on n_verts >= 3 sites, ground state:
// delta^2 = (2 + (N-2) sqrt(1+N omega^2)) / (N sqrt(1+N omega^2)).
double delta_meanfield(int n_verts, double omega);

// Entry (k, k+offset) of W^{power} on the ring of n_verts sites, power in
// {-1, +1}, via the discrete cosine sum over the ring spectrum
// 1 + 4 omega^2 sin^2(pi s / N).
double ring_w_element(int n_verts, double omega, int offset, int power);

// Controls for the infinite-lattice quadrature below.
struct QuadratureSpec {
    int dims = 1;          // 1, 2 or 3
    double abs_tol = 1e-6; // absolute error target for the whole integral
    int max_depth = 40;    // recursion cap per axis before giving up
};

// N -> infinity limit of the ring/torus W entries: the d-dimensional integral
//   (1/pi^d) int_{[0,pi]^d} (1 + 4 omega^2 sum_k sin^2 x_k)^{power/2} g(x) dx,
// g = cos(2 x_1) for offset 1 between nearest neighbours along an axis, or 1
// for offset 0. Nested adaptive Simpson, one axis per level, with per-axis
// tolerance abs_tol / 3^(dims-1). Throws ToleranceNotReachedError if any
// axis exhausts max_depth.
double lattice_w_integral(int dims, double omega, int offset, int power,
                          const QuadratureSpec& quad);

// Ground-state EoF of a nearest-neighbour pair on the infinite lattice,
// assembled from four lattice_w_integral calls.
EofResult eof_infinite_lattice(int dims, double omega, const QuadratureSpec& quad);

// Large-N fit for the complete-graph EoF at saturation, 1.72 ln(N) / (2 N^2)
// ebits. Only meaningful deep in the asymptotic regime; requires n_verts >= 50.
double meanfield_largen_estimate(int n_verts);

}  // namespace harmonet
