#pragma once

#include <functional>
#include <vector>

#include "harmonet/graphs.hpp"
#include "harmonet/matrix.hpp"

namespace harmonet {

// Eigendecomposition of a real symmetric matrix: m = Q diag(lambda) Q^T,
// eigenvalues ascending, eigenvector k in column k of q.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix q;
};

// Coupling matrix of the quadratic potential on a graph: V = I + omega^2 L
// with L = D - A the graph Laplacian. Positive definite for all omega >= 0
// (smallest eigenvalue is exactly 1, on the uniform vector).
struct PotentialMatrix {
    Matrix v;
    double omega = 0.0;
};

PotentialMatrix potential_matrix(const Graph& g, double omega);

// Cyclic Jacobi diagonalization. Input must be square, finite and symmetric
// to 1e-12 relative to its largest entry. Accuracy is near machine level:
// orthonormality and reconstruction both hold to ~n*eps.
Spectrum eig_sym(const Matrix& m);

// Q f(Lambda) Q^T. Throws std::invalid_argument if f produces a non-finite
// value on any eigenvalue. The result is symmetrized to scrub roundoff.
Matrix apply_spectral_function(const Spectrum& s, const std::function<double(double)>& f);

// Principal square root of V and its inverse, computed from one shared
// eigendecomposition so W * Winv is the identity to roundoff.
struct WPair {
    Matrix w;
    Matrix winv;
};

WPair w_pair(const PotentialMatrix& pot);

}  // namespace harmonet
