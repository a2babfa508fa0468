#include "harmonet/gaussian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "harmonet/errors.hpp"

namespace harmonet {

namespace {

// coth(beta sqrt(t) / 2), with beta = +infinity meaning the ground state,
// where the factor is exactly 1 by definition rather than by limit.
double thermal_factor(double t, double beta) {
    if (std::isinf(beta)) return 1.0;
    return 1.0 / std::tanh(0.5 * beta * std::sqrt(t));
}

void check_beta(double beta) {
    if (std::isnan(beta) || beta <= 0.0)
        throw std::invalid_argument("beta must be positive (use infinity for the ground state)");
}

CovariancePair covariance_from_spectrum(const Spectrum& s, double beta) {
    CovariancePair cov;
    cov.gx = apply_spectral_function(
        s, [beta](double t) { return thermal_factor(t, beta) / std::sqrt(t); });
    cov.gp = apply_spectral_function(
        s, [beta](double t) { return std::sqrt(t) * thermal_factor(t, beta); });
    cov.beta = beta;
    return cov;
}

}  // namespace

CovariancePair covariance(const PotentialMatrix& pot, double beta) {
    check_beta(beta);
    const Spectrum s = eig_sym(pot.v);
    if (s.eigenvalues.front() <= 0.0)
        throw std::runtime_error("potential matrix is not positive definite");
    return covariance_from_spectrum(s, beta);
}

TwoModeForm reduce_pair(const CovariancePair& cov, int i, int j, double sym_tol) {
    const int n = cov.gx.rows();
    if (cov.gx.cols() != n || cov.gp.rows() != n || cov.gp.cols() != n)
        throw std::invalid_argument("covariance blocks must be square and of equal size");
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("mode index out of range");
    if (i == j) throw std::invalid_argument("mode indices must differ");
    if (!(sym_tol > 0.0)) throw std::invalid_argument("symmetry tolerance must be positive");

    // The concurrence formula below is only valid when the two sites are
    // equivalent; require the diagonal entries to agree before averaging
    // away the residual roundoff difference.
    auto check_equal = [&](double a, double b, const char* block) {
        const double rel = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
        if (rel > sym_tol) {
            std::ostringstream msg;
            msg << "modes " << i << " and " << j << " are not equivalent sites: " << block
                << " diagonals differ by relative " << rel;
            throw AsymmetricPairError(msg.str());
        }
    };
    check_equal(cov.gx(i, i), cov.gx(j, j), "position");
    check_equal(cov.gp(i, i), cov.gp(j, j), "momentum");

    TwoModeForm form;
    form.nx = 0.5 * (cov.gx(i, i) + cov.gx(j, j));
    form.np = 0.5 * (cov.gp(i, i) + cov.gp(j, j));
    form.mx = cov.gx(i, j);
    form.mp = cov.gp(i, j);

    // A local symplectic flip on one mode sends (m_x, m_p) to (-m_x, -m_p)
    // without touching the entanglement; use it to make m_x nonnegative.
    if (form.mx < 0.0) {
        form.mx = -form.mx;
        form.mp = -form.mp;
    }

    form.n = std::sqrt(form.nx * form.np);
    form.kx = form.mx * std::sqrt(form.np / form.nx);
    form.kp = form.mp * std::sqrt(form.nx / form.np);
    return form;
}

double delta_of(const TwoModeForm& form) {
    const double product = (form.nx - form.mx) * (form.np + form.mp);
    if (product < 0.0) {
        std::ostringstream msg;
        msg << "(nx - mx)(np + mp) = " << product
            << " is negative; not a valid symmetric two-mode covariance";
        throw NegativeDiscriminantError(msg.str());
    }
    return std::sqrt(product);
}

EofResult eof_from_delta(double delta) {
    if (!std::isfinite(delta) || delta < 0.0)
        throw std::invalid_argument("delta must be finite and nonnegative");
    if (delta == 0.0)
        throw InfiniteEntanglementError("delta = 0: entanglement of formation diverges");

    EofResult r;
    r.delta = delta;
    r.big_delta = std::min(1.0, delta);
    r.c_plus = (1.0 + r.big_delta) * (1.0 + r.big_delta) / (4.0 * r.big_delta);
    r.c_minus = (1.0 - r.big_delta) * (1.0 - r.big_delta) / (4.0 * r.big_delta);
    if (delta >= 1.0) {
        r.eof = 0.0;  // separable: c+ = 1, c- = 0, and 0 log2 0 = 0
    } else {
        r.eof = r.c_plus * std::log2(r.c_plus) - r.c_minus * std::log2(r.c_minus);
    }
    return r;
}

EofResult eof_pair(const Graph& g, double omega, double beta, int i, int j) {
    const PotentialMatrix pot = potential_matrix(g, omega);
    const CovariancePair cov = covariance(pot, beta);
    const TwoModeForm form = reduce_pair(cov, i, j);
    return eof_from_delta(delta_of(form));
}

double threshold_temperature(const Graph& g, double omega, int i, int j) {
    const PotentialMatrix pot = potential_matrix(g, omega);
    const Spectrum s = eig_sym(pot.v);
    if (s.eigenvalues.front() <= 0.0)
        throw std::runtime_error("potential matrix is not positive definite");

    // delta as a function of temperature, reusing the one eigendecomposition.
    auto delta_at = [&](double temperature) {
        const double beta = temperature == 0.0 ? ground_state_beta : 1.0 / temperature;
        const CovariancePair cov = covariance_from_spectrum(s, beta);
        return delta_of(reduce_pair(cov, i, j));
    };

    if (delta_at(0.0) >= 1.0) {
        std::ostringstream msg;
        msg << "pair (" << i << ", " << j << ") of " << g.name << " at omega = " << omega
            << " is separable already in the ground state";
        throw NotEntangledAtZeroError(msg.str());
    }

    // delta grows monotonically with T, so bracket the crossing and bisect.
    double lo = 1e-6;
    double hi = 1e3;
    while (delta_at(hi) < 1.0) {
        lo = hi;
        hi *= 10.0;
        if (hi > 1e15) throw std::runtime_error("no entanglement threshold below T = 1e15");
    }
    if (delta_at(lo) >= 1.0) lo = 0.0;  // crossing sits below the initial bracket

    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double d = delta_at(mid);
        if (std::abs(d - 1.0) <= 1e-9) return mid;
        (d < 1.0 ? lo : hi) = mid;
    }
    return mid;
}

}  // namespace harmonet
