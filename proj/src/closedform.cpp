#include "harmonet/closedform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "harmonet/errors.hpp"

namespace harmonet {

namespace {

constexpr double pi = std::numbers::pi;

double coth(double x) { return 1.0 / std::tanh(x); }

void check_omega(double omega) {
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("omega must be finite and nonnegative");
}

// Acceptance is deferred until a few splits have happened: on very coarse
// panels a Richardson difference can cross zero accidentally while the true
// error is still large, and an interval accepted that way poisons the total
// far beyond the requested tolerance.
constexpr int min_split_depth = 3;

// One split of a Simpson panel. "star" is the Richardson-corrected value
// left + right + (left + right - plain) / 15, which is sixth-order accurate;
// the pieces are kept so a recursion step can reuse them for the children.
struct PanelSplit {
    double flm, frm;    // values at the children's midpoints
    double left, right; // plain Simpson over each half
    double star;
};

template <class F>
PanelSplit split_panel(const F& f, double a, double b, double fa, double fm, double fb) {
    const double m = 0.5 * (a + b);
    PanelSplit p;
    p.flm = f(0.5 * (a + m));
    p.frm = f(0.5 * (m + b));
    p.left = (m - a) / 6.0 * (fa + 4.0 * p.flm + fm);
    p.right = (b - m) / 6.0 * (fm + 4.0 * p.frm + fb);
    const double plain = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double fine = p.left + p.right;
    p.star = fine + (fine - plain) / 15.0;
    return p;
}

// Adaptive recursion on the corrected (sixth-order) estimates: the error of
// the children's combined star against the parent's is (sum - star) / 63,
// and each split hands half the remaining tolerance to each side. Judging
// convergence on the corrected values instead of the raw Simpson difference
// keeps the panel count proportional to tol^(-1/6) rather than tol^(-1/4),
// which is what makes the three-dimensional nesting affordable.
//
// An interval is accepted only when its own estimate AND its parent's pass
// ("parent_ok"). A single difference can dip to zero where a high derivative
// changes sign while the true error is still orders of magnitude above
// tolerance; demanding two consecutive generations keeps any hidden residual
// within a small multiple of the local budget, which matters when these
// integrals feed an outer adaptive pass that would otherwise chase the
// resulting jumps forever.
template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb,
                    const PanelSplit& p, double tol, bool parent_ok, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const PanelSplit lp = split_panel(f, a, m, fa, p.flm, fm);
    const PanelSplit rp = split_panel(f, m, b, fm, p.frm, fb);
    const double err = (lp.star + rp.star - p.star) / 63.0;
    const bool ok = depth >= min_split_depth && std::abs(err) <= tol;
    if (ok && parent_ok) return lp.star + rp.star + err;
    if (depth >= max_depth)
        throw ToleranceNotReachedError("adaptive quadrature hit depth " +
                                       std::to_string(max_depth) +
                                       " before reaching the requested tolerance");
    return simpson_step(f, a, m, fa, p.flm, fm, lp, 0.5 * tol, ok, depth + 1, max_depth) +
           simpson_step(f, m, b, fm, p.frm, fb, rp, 0.5 * tol, ok, depth + 1, max_depth);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int max_depth) {
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    const PanelSplit p = split_panel(f, a, b, fa, fm, fb);
    return simpson_step(f, a, b, fa, fm, fb, p, tol, false, 0, max_depth);
}

}  // namespace

double delta_two_vertex(double omega, double beta) {
    check_omega(omega);
    if (std::isnan(beta) || beta <= 0.0)
        throw std::invalid_argument("beta must be positive (use infinity for the ground state)");

    const double w2 = std::sqrt(1.0 + 2.0 * omega * omega);
    if (std::isinf(beta)) return 1.0 / std::sqrt(w2);
    return std::sqrt(coth(0.5 * beta) * coth(0.5 * beta * w2) / w2);
}

double delta_path3(double omega) {
    check_omega(omega);
    const double s = std::sqrt(1.0 + 3.0 * omega * omega);
    return std::sqrt((2.0 + s) / (3.0 * std::sqrt(1.0 + omega * omega)));
}

double delta_meanfield(int n_verts, double omega) {
    if (n_verts < 3) throw std::invalid_argument("mean-field form needs at least 3 vertices");
    check_omega(omega);
    const double s = std::sqrt(1.0 + n_verts * omega * omega);
    return std::sqrt((2.0 + (n_verts - 2) * s) / (n_verts * s));
}

double ring_w_element(int n_verts, double omega, int offset, int power) {
    if (n_verts < 3) throw std::invalid_argument("ring needs at least 3 vertices");
    check_omega(omega);
    if (offset < 0 || offset >= n_verts)
        throw std::invalid_argument("offset must lie in [0, n_verts)");
    if (power != 1 && power != -1) throw std::invalid_argument("power must be +1 or -1");

    // (1/N) sum_s lambda_s^{power/2} cos(2 pi s k / N) over the ring spectrum
    // lambda_s = 1 + 4 omega^2 sin^2(pi s / N).
    double acc = 0.0;
    for (int s = 0; s < n_verts; ++s) {
        const double sn = std::sin(pi * s / n_verts);
        const double lambda = 1.0 + 4.0 * omega * omega * sn * sn;
        const double root = power > 0 ? std::sqrt(lambda) : 1.0 / std::sqrt(lambda);
        acc += root * std::cos(2.0 * pi * s * offset / n_verts);
    }
    return acc / n_verts;
}

double lattice_w_integral(int dims, double omega, int offset, int power,
                          const QuadratureSpec& quad) {
    if (dims < 1 || dims > 3) throw std::invalid_argument("lattice dimension must be 1, 2 or 3");
    check_omega(omega);
    if (offset != 0 && offset != 1)
        throw std::invalid_argument("offset must be 0 (same site) or 1 (nearest neighbour)");
    if (power != 1 && power != -1) throw std::invalid_argument("power must be +1 or -1");
    if (quad.dims != dims) throw std::invalid_argument("quadrature spec dims mismatch");
    if (!(quad.abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (quad.max_depth < 10) throw std::invalid_argument("quadrature depth cap must be at least 10");

    const double w4 = 4.0 * omega * omega;
    // Every axis must deliver absTol / 3^(dims - 1); inner axes run a further
    // headroom factor tighter, because the axis above them integrates values
    // whose evaluation noise must sit well below its own acceptance threshold.
    const double axis_budget = quad.abs_tol / std::pow(3.0, dims - 1);
    constexpr double nesting_headroom = 8.0;
    const double outer_tol = axis_budget;
    const double middle_tol = axis_budget / nesting_headroom;
    const double inner_tol = middle_tol / nesting_headroom;
    const int cap = quad.max_depth;

    auto kernel = [w4, power](double sin2_sum) {
        const double lambda = 1.0 + w4 * sin2_sum;
        return power > 0 ? std::sqrt(lambda) : 1.0 / std::sqrt(lambda);
    };
    // The integrand is symmetric about pi/2 in every axis (sin^2 and cos(2x)
    // both are), so each axis integrates [0, pi/2] and doubles. The factor-2
    // and the half tolerance cancel into: half-range integral at tol/2.
    auto axis = [cap](const auto& f, double tol) {
        return 2.0 * adaptive_simpson(f, 0.0, 0.5 * pi, 0.5 * tol, cap);
    };

    double raw = 0.0;
    switch (dims) {
        case 1:
            raw = axis(
                [&](double x) {
                    const double sx = std::sin(x);
                    const double v = kernel(sx * sx);
                    return offset ? v * std::cos(2.0 * x) : v;
                },
                outer_tol);
            break;
        case 2:
            raw = axis(
                [&](double x) {
                    const double sx = std::sin(x);
                    const double cx = offset ? std::cos(2.0 * x) : 1.0;
                    const double inner = axis(
                        [&](double y) {
                            const double sy = std::sin(y);
                            return kernel(sx * sx + sy * sy);
                        },
                        middle_tol);
                    return cx * inner;
                },
                outer_tol);
            break;
        case 3:
            raw = axis(
                [&](double x) {
                    const double sx = std::sin(x);
                    const double cx = offset ? std::cos(2.0 * x) : 1.0;
                    const double middle = axis(
                        [&](double y) {
                            const double sy = std::sin(y);
                            const double inner = axis(
                                [&](double z) {
                                    const double sz = std::sin(z);
                                    return kernel(sx * sx + sy * sy + sz * sz);
                                },
                                inner_tol);
                            return inner;
                        },
                        middle_tol);
                    return cx * middle;
                },
                outer_tol);
            break;
    }
    return raw / std::pow(pi, dims);
}

EofResult eof_infinite_lattice(int dims, double omega, const QuadratureSpec& quad) {
    const double winv0 = lattice_w_integral(dims, omega, 0, -1, quad);
    const double winv1 = lattice_w_integral(dims, omega, 1, -1, quad);
    const double w0 = lattice_w_integral(dims, omega, 0, +1, quad);
    const double w1 = lattice_w_integral(dims, omega, 1, +1, quad);

    // Same invariant as the finite pipeline: nx = Winv_0, mx = Winv_1,
    // np = W_0, mp = W_1, with the gauge flip if the cross term is negative.
    TwoModeForm form;
    form.nx = winv0;
    form.np = w0;
    form.mx = winv1;
    form.mp = w1;
    if (form.mx < 0.0) {
        form.mx = -form.mx;
        form.mp = -form.mp;
    }
    form.n = std::sqrt(form.nx * form.np);
    form.kx = form.mx * std::sqrt(form.np / form.nx);
    form.kp = form.mp * std::sqrt(form.nx / form.np);
    return eof_from_delta(delta_of(form));
}

double meanfield_largen_estimate(int n_verts) {
    if (n_verts < 50)
        throw std::invalid_argument("large-N estimate is only meaningful for n_verts >= 50");
    const double n = n_verts;
    return 1.72 * std::log(n) / (2.0 * n * n);
}

}  // namespace harmonet
