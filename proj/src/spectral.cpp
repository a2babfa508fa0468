#include "harmonet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace harmonet {

namespace {

// Frobenius norm of the strict off-diagonal part.
double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

// One Jacobi rotation in the (p, q) plane, applied to both the working
// matrix and the accumulated eigenvector matrix. The rotation angle is the
// classic stable choice t = sign(theta) / (|theta| + sqrt(theta^2 + 1)).
void rotate(Matrix& a, Matrix& q, int p, int r) {
    const double apq = a(p, r);
    if (apq == 0.0) return;

    const double theta = (a(r, r) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);  // avoid theta^2 overflow; exact enough out here
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const int n = a.rows();
    const double app = a(p, p), arr = a(r, r);
    a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * arr;
    a(r, r) = s * s * app + 2.0 * s * c * apq + c * c * arr;
    a(p, r) = 0.0;
    a(r, p) = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k == p || k == r) continue;
        const double akp = a(k, p), akr = a(k, r);
        a(k, p) = c * akp - s * akr;
        a(p, k) = a(k, p);
        a(k, r) = s * akp + c * akr;
        a(r, k) = a(k, r);
    }
    for (int k = 0; k < n; ++k) {
        const double qkp = q(k, p), qkr = q(k, r);
        q(k, p) = c * qkp - s * qkr;
        q(k, r) = s * qkp + c * qkr;
    }
}

}  // namespace

PotentialMatrix potential_matrix(const Graph& g, double omega) {
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("omega must be finite and nonnegative");

    const double w2 = omega * omega;
    Matrix v(g.n, g.n);
    for (int i = 0; i < g.n; ++i) {
        v(i, i) = 1.0 + w2 * g.degree(i);
        for (int j = 0; j < g.n; ++j)
            if (j != i && g.adjacency(i, j) != 0.0) v(i, j) = -w2;
    }
    return PotentialMatrix{std::move(v), omega};
}

Spectrum eig_sym(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("eigendecomposition needs a nonempty square matrix");
    if (!m.all_finite())
        throw std::invalid_argument("eigendecomposition input has non-finite entries");
    const double scale = std::max(1.0, m.max_abs());
    if (m.asymmetry() > 1e-12 * scale)
        throw std::invalid_argument("eigendecomposition input is not symmetric");

    const int n = m.rows();
    Matrix a = m;
    Matrix q = Matrix::identity(n);

    // Cyclic sweeps; quadratic convergence makes ~10 sweeps plenty even for
    // n in the hundreds. The tolerance is relative to the matrix scale so
    // ill-scaled inputs still terminate.
    const double stop = 1e-14 * n * scale;
    bool converged = false;
    for (int sweep = 0; sweep < 50 && !converged; ++sweep) {
        if (offdiag_norm(a) <= stop) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int r = p + 1; r < n; ++r) rotate(a, q, p, r);
    }
    if (!converged && offdiag_norm(a) > stop)
        throw std::runtime_error("jacobi eigensolver failed to converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.q = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        s.eigenvalues[k] = a(order[k], order[k]);
        for (int i = 0; i < n; ++i) s.q(i, k) = q(i, order[k]);
    }
    return s;
}

Matrix apply_spectral_function(const Spectrum& s, const std::function<double(double)>& f) {
    const int n = static_cast<int>(s.eigenvalues.size());
    if (s.q.rows() != n || s.q.cols() != n)
        throw std::invalid_argument("spectrum eigenvector matrix has wrong shape");

    std::vector<double> fval(n);
    for (int k = 0; k < n; ++k) {
        fval[k] = f(s.eigenvalues[k]);
        if (!std::isfinite(fval[k]))
            throw std::invalid_argument("spectral function produced a non-finite value at lambda = " +
                                        std::to_string(s.eigenvalues[k]));
    }

    // B = Q f(Lambda) Q^T, then symmetrized to scrub roundoff so downstream
    // symmetry checks see an exactly symmetric matrix.
    Matrix b(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += s.q(i, k) * fval[k] * s.q(j, k);
            b(i, j) = acc;
            b(j, i) = acc;
        }
    }
    return b;
}

WPair w_pair(const PotentialMatrix& pot) {
    const Spectrum s = eig_sym(pot.v);
    if (s.eigenvalues.front() <= 0.0)
        throw std::runtime_error("potential matrix is not positive definite");
    return WPair{
        apply_spectral_function(s, [](double t) { return std::sqrt(t); }),
        apply_spectral_function(s, [](double t) { return 1.0 / std::sqrt(t); }),
    };
}

}  // namespace harmonet
