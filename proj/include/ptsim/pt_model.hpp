// pt_model.hpp — Closed-form physics of the two-level PT-symmetric system:
// Hamiltonians, analytic evolutions, brachistochrone times, the circuit
// angles phi_V / phi_U1, and the post-selection factor q.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ptsim/linalg.hpp"

namespace ptsim {

// Hamiltonian parameters. alpha = 0 is the Hermitian limit; alpha -> -pi/2
// approaches the exceptional point where the eigenvectors coalesce.
struct PtParams {
    double s;      // coupling amplitude (angular frequency; hbar = 1)
    double alpha;  // non-Hermiticity angle, radians

    PtParams(double s_, double alpha_) : s(s_), alpha(alpha_) {
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::invalid_argument("PtParams: s must be positive and finite");
        if (!(alpha > -std::numbers::pi / 2.0) || !(alpha <= 0.0))
            throw std::invalid_argument("PtParams: alpha must lie in (-pi/2, 0]");
    }

    // Eigenvalue gap of both the PT and the equivalent Hermitian Hamiltonian.
    double omega() const { return 2.0 * s * std::cos(alpha); }

    // Convention for sweeps: hold the gap fixed and let s absorb alpha.
    static PtParams from_omega(double omega, double alpha) {
        return PtParams(omega / (2.0 * std::cos(alpha)), alpha);
    }
};

// Two work-qubit amplitudes produced by a closed-form evolution.
struct EvolvedState {
    Complex a0;
    Complex a1;
    bool normalized;

    double norm() const { return std::sqrt(std::norm(a0) + std::norm(a1)); }

    WorkState vec() const {
        WorkState v;
        v << a0, a1;
        return v;
    }

    WorkState unit_vec() const { return vec() / norm(); }
};

namespace detail {

inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
    }
    return std::sin(x) / x;
}

// sin(omega t / 2) / omega, finite as omega -> 0.
inline double sin_half_over_omega(double omega, double t) {
    return 0.5 * t * sinc(0.5 * omega * t);
}

// Shared ingredients of phi_v, phi_u1 and q: with r = sin(wt/2)/w,
//   a = 2 s r,  c = cos(wt/2),  b = 2 s sin(alpha) r,
//   n1 = sqrt(a^2 + c^2),  n2 = sqrt(a^2 + c^2 + b^2).
struct DilationKernel {
    double a, c, b, n1, n2;

    DilationKernel(const PtParams& p, double t) {
        const double w = p.omega();
        const double r = sin_half_over_omega(w, t);
        a = 2.0 * p.s * r;
        c = std::cos(0.5 * w * t);
        b = 2.0 * p.s * std::sin(p.alpha) * r;
        n1 = std::hypot(a, c);
        n2 = std::hypot(n1, b);
    }
};

} // namespace detail

// H = [[s e^{i alpha}, s], [s, s e^{-i alpha}]]; eigenvalues {0, 2 s cos(alpha)}.
inline Gate2 hamiltonian_pt(const PtParams& p) {
    Gate2 h;
    h << p.s * std::exp(Complex(0, p.alpha)), p.s,
         p.s, p.s * std::exp(Complex(0, -p.alpha));
    return h;
}

// Hermitian Hamiltonian with the same eigenvalues: s cos(alpha) [[1,1],[1,1]].
inline Gate2 hamiltonian_hermitian(const PtParams& p) {
    Gate2 h;
    const double v = p.s * std::cos(p.alpha);
    h << v, v, v, v;
    return h;
}

// e^{-iHt}|0>, un-normalized closed form:
//   (e^{-i t s cos a} / cos a) * (cos(wt/2 - a), -i sin(wt/2)).
inline EvolvedState evolve_pt_analytic(const PtParams& p, double t) {
    const double ca = std::cos(p.alpha);
    if (std::abs(ca) <= 1e-12)
        throw ExceptionalPointError("evolve_pt_analytic: cos(alpha) ~ 0");
    const double w = p.omega();
    const Complex pref = std::exp(Complex(0, -t * p.s * ca)) / ca;
    return EvolvedState{pref * std::cos(0.5 * w * t - p.alpha),
                        pref * Complex(0, -1) * std::sin(0.5 * w * t),
                        false};
}

// e^{-i H0 t}|0> = e^{-i t s cos a} (cos(s cos a t), -i sin(s cos a t)); unit norm.
inline EvolvedState evolve_hermitian_analytic(const PtParams& p, double t) {
    const double th = p.s * std::cos(p.alpha) * t;
    const Complex pref = std::exp(Complex(0, -th));
    return EvolvedState{pref * std::cos(th), pref * Complex(0, -1) * std::sin(th), true};
}

// First-passage time |0> -> |1> under the PT Hamiltonian: (2/w)(alpha + pi/2).
// Shrinks to zero as alpha -> -pi/2 at fixed gap.
inline double tau(const PtParams& p) {
    return (2.0 / p.omega()) * (p.alpha + std::numbers::pi / 2.0);
}

// Hermitian counterpart: pi/w, constant for a fixed gap.
inline double tau0(const PtParams& p) {
    return std::numbers::pi / p.omega();
}

// Ancilla rotation angle of the dilation. The branch is fixed by the
// reconstruction identity (ancilla-0 block = q e^{-iHt}): sin(phi_v) must
// carry the sign of sin(alpha), so the principal arccos value enters with a
// minus sign and phi_v lies in [-pi/2, 0].
inline double phi_v(const PtParams& p, double t) {
    const detail::DilationKernel k(p, t);
    return -std::acos(std::clamp(k.n1 / k.n2, -1.0, 1.0));
}

// Ancilla-0-controlled rotation angle, in [-pi/2, 0] on the studied domain.
inline double phi_u1(const PtParams& p, double t) {
    const detail::DilationKernel k(p, t);
    return std::asin(std::clamp(-k.a / k.n1, -1.0, 1.0));
}

// Complex factor relating the post-selected raw amplitude to e^{-iHt}|0>:
//   q = e^{i t s cos a} / n2, with |q| in (0, 1] and |q| -> 1/sqrt(3) as
//   alpha -> -pi/2 at t = tau.
inline Complex q_factor(const PtParams& p, double t) {
    const detail::DilationKernel k(p, t);
    return std::exp(Complex(0, t * p.s * std::cos(p.alpha))) / k.n2;
}

} // namespace ptsim
