#pragma once

#include <limits>

#include "harmonet/spectral.hpp"

namespace harmonet {

// beta = +infinity selects the ground state; the thermal coth factor is then
// taken to be exactly 1 rather than evaluated, so T = 0 is not a limit but a
// separate, exact branch.
inline constexpr double ground_state_beta = std::numeric_limits<double>::infinity();

// Position and momentum covariance blocks of the Gibbs state of the coupled
// oscillator Hamiltonian; the full covariance matrix is gx (+) gp, and the
// vacuum of an uncoupled mode has gx = gp = 1.
struct CovariancePair {
    Matrix gx;
    Matrix gp;
    double beta = ground_state_beta;
};

// gx = f_x(V), gp = f_p(V) with f_x: t -> coth(beta sqrt(t)/2)/sqrt(t) and
// f_p: t -> sqrt(t) coth(beta sqrt(t)/2). Requires beta > 0 (infinity ok).
CovariancePair covariance(const PotentialMatrix& pot, double beta);

// Reduced state of two modes in the symmetric standard form. nx, np, mx, mp
// are the raw diagonal and cross entries; n, kx, kp the rescaled form with
// equal diagonals n = sqrt(nx np) and kx >= 0 after the sign gauge
// (m_x, m_p) -> (-m_x, -m_p), which is a local symplectic flip.
struct TwoModeForm {
    double nx = 0, np = 0;  // diagonal entries, position / momentum
    double mx = 0, mp = 0;  // cross entries, after the gauge fix
    double n = 0, kx = 0, kp = 0;
};

// Extract modes (i, j) from a covariance pair. The two diagonal entries are
// required to agree within sym_tol relative; they are then averaged so the
// downstream formulas see an exactly symmetric pair. Throws
// AsymmetricPairError when the sites are not equivalent.
TwoModeForm reduce_pair(const CovariancePair& cov, int i, int j, double sym_tol = 1e-8);

// delta = sqrt((nx - mx)(np + mp)), the determinant-like invariant deciding
// entanglement: the pair is entangled iff delta < 1. Throws
// NegativeDiscriminantError if the product under the root is negative.
double delta_of(const TwoModeForm& form);

// Entanglement of formation of a symmetric two-mode Gaussian state from its
// delta invariant. All the intermediate quantities are kept because callers
// (tests, CLI) report them.
struct EofResult {
    double delta = 0;      // the invariant itself
    double big_delta = 0;  // min(1, delta)
    double c_plus = 0;     // (1 + big_delta)^2 / (4 big_delta)
    double c_minus = 0;    // (1 - big_delta)^2 / (4 big_delta)
    double eof = 0;        // ebits; 0 whenever delta >= 1
};

// Throws InfiniteEntanglementError at delta = 0 and std::invalid_argument
// for negative or non-finite delta. Uses the convention 0 log2 0 = 0, so
// eof is exactly 0.0 for delta >= 1 and continuous at delta = 1.
EofResult eof_from_delta(double delta);

// Whole pipeline: potential -> covariance -> reduction -> delta -> eof.
EofResult eof_pair(const Graph& g, double omega, double beta, int i, int j);

// Temperature T* at which delta(T) crosses 1 for the given pair, found by
// bisection (delta is monotone increasing in T). Throws
// NotEntangledAtZeroError if the pair is separable already at T = 0.
double threshold_temperature(const Graph& g, double omega, int i, int j);

}  // namespace harmonet
