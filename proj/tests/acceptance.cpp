// Acceptance checks: one PASS/FAIL line per criterion, exit code = number of
// failures. Each check is exact simulation or a property suite; tolerances
// are stated inline.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ptsim/circuit.hpp"
#include "ptsim/experiment.hpp"
#include "ptsim/io.hpp"
#include "ptsim/linalg.hpp"
#include "ptsim/nmr.hpp"
#include "ptsim/pt_model.hpp"

#include "oracles.hpp"

using namespace ptsim;
namespace nums = std::numbers;

namespace {

TwoQubitState ket00() {
    TwoQubitState v = TwoQubitState::Zero();
    v(0) = Complex(1, 0);
    return v;
}

// Max per-component error of (raw * sqrt2 / q) against the series propagator
// column, the quantity the dilation is supposed to reproduce.
double dilation_residual(const PtParams& p, double t) {
    const PostSelection ps = post_select_ancilla0(run(build_pt_circuit(p, t), ket00()));
    const WorkState reconstructed = ps.raw_work_state * nums::sqrt2 / q_factor(p, t);
    const WorkState expected = oracles::propagator_series(hamiltonian_pt(p), t).col(0);
    return (reconstructed - expected).cwiseAbs().maxCoeff();
}

// 1. The ancilla-|0> branch of the circuit encodes e^{-iHt}|0> exactly.
bool criterion_dilation(std::string& detail) {
    double worst = 0.0;
    for (double alpha : default_sweep_alphas()) {
        const PtParams p = PtParams::from_omega(2.0, alpha);
        for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0})
            worst = std::max(worst, dilation_residual(p, frac * tau(p)));
    }
    detail = "worst component residual " + format_double(worst) + " over 30 grid points";
    return worst < 1e-9;
}

// 2. Closed-form passage times against root finding; fixed hermitian time;
//    the 1/32 ratio at the steepest working point.
bool criterion_brachistochrone(std::string& detail) {
    bool ok = true;
    double worst_rel = 0.0;
    for (double alpha : default_sweep_alphas()) {
        const PtParams p = PtParams::from_omega(2.0, alpha);
        const double formula = tau(p);
        const double found = oracles::first_passage_time(p);
        worst_rel = std::max(worst_rel, std::abs(formula - found) / formula);
        ok = ok && std::abs(formula - found) <= 1e-6 * formula;
        ok = ok && std::abs(tau0(p) - nums::pi / 2.0) <= 1e-12;
    }
    const PtParams steep = PtParams::from_omega(2.0, -31.0 * nums::pi / 64.0);
    const PtParams flat = PtParams::from_omega(2.0, 0.0);
    const double ratio = tau(steep) / tau(flat);
    ok = ok && std::abs(ratio - 1.0 / 32.0) <= 1e-12;
    const double found_ratio =
        oracles::first_passage_time(steep) / oracles::first_passage_time(flat);
    ok = ok && std::abs(found_ratio - 1.0 / 32.0) <= 1e-6 / 32.0;
    detail = "worst relative mismatch " + format_double(worst_rel) + ", time ratio " +
             format_double(ratio);
    return ok;
}

// 3. Arbitrarily small passage time just off the exceptional point, with the
//    dilation still intact (kernels stay finite there).
bool criterion_near_zero_time(std::string& detail) {
    const PtParams p = PtParams::from_omega(2.0, -nums::pi / 2.0 + 1e-6);
    const double t_pass = tau(p);
    bool ok = t_pass < 1e-6;
    double worst = 0.0;
    for (double frac : {0.0, 0.5, 1.0})
        worst = std::max(worst, dilation_residual(p, frac * t_pass));
    ok = ok && worst < 1e-7;
    detail = "tau " + format_double(t_pass) + ", dilation residual " + format_double(worst);
    return ok;
}

// 4. |q| at the passage point tends to 1/sqrt(3) approaching the
//    exceptional point, monotonically in the offset.
bool criterion_q_limit(std::string& detail) {
    std::vector<double> deviations;
    for (double offset : {1e-2, 1e-3, 1e-4}) {
        const PtParams p = PtParams::from_omega(2.0, -nums::pi / 2.0 + offset);
        deviations.push_back(std::abs(std::abs(q_factor(p, tau(p))) - 0.57735));
    }
    const bool ok = deviations[1] < 1e-2 && deviations[0] > deviations[1] &&
                    deviations[1] > deviations[2];
    detail = "deviations " + format_double(deviations[0]) + " > " +
             format_double(deviations[1]) + " > " + format_double(deviations[2]);
    return ok;
}

// 5. The hermitian comparison circuit post-selects with certainty and
//    reproduces the closed form (up to its known half-gap phase).
bool criterion_hermitian_circuit(std::string& detail) {
    double worst_prob = 0.0;
    double worst_state = 0.0;
    for (double alpha : default_sweep_alphas()) {
        const PtParams p = PtParams::from_omega(2.0, alpha);
        for (double frac : {0.0, 0.5, 1.0}) {
            const double t = frac * tau0(p);
            const PostSelection ps =
                post_select_ancilla0(run(build_hermitian_circuit(p, t), ket00()));
            worst_prob = std::max(worst_prob, std::abs(ps.probability - 1.0));
            const WorkState expected = std::exp(Complex(0, 0.5 * p.omega() * t)) *
                                       evolve_hermitian_analytic(p, t).vec();
            worst_state = std::max(
                worst_state, (ps.raw_work_state - expected).cwiseAbs().maxCoeff());
        }
    }
    detail = "probability residual " + format_double(worst_prob) + ", state residual " +
             format_double(worst_state);
    return worst_prob <= 1e-12 && worst_state <= 1e-11;
}

// 6. Hard-tier pulse identities: the single-rotation block exactly, the
//    two-pulse hadamard up to the global phase pi/2.
bool criterion_pulses_hard(std::string& detail) {
    bool ok = true;
    double worst_v = 0.0;
    for (double alpha : default_sweep_alphas()) {
        const PtParams p = PtParams::from_omega(2.0, alpha);
        for (double frac : {0.0, 0.5, 1.0}) {
            const double t = frac * tau(p);
            const nmr::VerifyReport r =
                nmr::verify_against(nmr::schedule_v(2.0 * phi_v(p, t)),
                                    tensor(gate_v(phi_v(p, t)), identity2()));
            worst_v = std::max(worst_v, r.residual);
        }
    }
    ok = ok && worst_v < 1e-12;
    const nmr::VerifyReport h =
        nmr::verify_against(nmr::schedule_hadamard(), tensor(gate_hadamard(), identity2()));
    ok = ok && h.residual < 1e-9 && std::abs(h.fitted_phase - nums::pi / 2.0) <= 1e-9;
    detail = "rotation residual " + format_double(worst_v) + ", hadamard residual " +
             format_double(h.residual) + " at phase " + format_double(h.fitted_phase);
    return ok;
}

// 7. Fully compiled pulse program against the gate-level circuit on
//    post-selected populations, plus the per-block convention report.
bool criterion_pulses_end_to_end(std::string& detail) {
    const PtParams p = PtParams::from_omega(2.0, -nums::pi / 4.0);
    const double t = 0.5 * tau(p);

    const PostSelection from_pulses =
        post_select_ancilla0(nmr::compile(nmr::pt_pulse_program(p, t)) * ket00());
    const PostSelection from_gates =
        post_select_ancilla0(run(build_pt_circuit(p, t), ket00()));
    double pop_residual = 0.0;
    for (int i = 0; i < 2; ++i)
        pop_residual = std::max(pop_residual,
                                std::abs(std::norm(from_pulses.normalized_work_state(i)) -
                                         std::norm(from_gates.normalized_work_state(i))));
    bool ok = pop_residual < 1e-6;

    const auto entries = nmr::convention_report(p, t);
    ok = ok && entries.size() == 4;
    std::string residuals;
    bool saw_c0 = false;
    bool saw_c1 = false;
    for (const auto& e : entries) {
        if (e.block == "C0U1" || e.block == "C1U2") {
            saw_c0 = saw_c0 || e.block == "C0U1";
            saw_c1 = saw_c1 || e.block == "C1U2";
            ok = ok && std::isfinite(e.report.residual) &&
                 std::isfinite(e.report.fitted_phase);
            residuals += ", " + e.block + " residual " + format_double(e.report.residual) +
                         " phase " + format_double(e.report.fitted_phase);
        }
    }
    ok = ok && saw_c0 && saw_c1;
    detail = "population residual " + format_double(pop_residual) + residuals;
    return ok;
}

// 8. Wall-clock totals: strictly decreasing with alpha at t = tau, floored
//    by the controlled-z free evolution; alpha-independent at t = 0.
bool criterion_timing(std::string& detail) {
    const nmr::NmrConfig cfg;  // J = 215.23 Hz, t_pi2 = 10 us
    bool ok = true;
    double prev = std::numeric_limits<double>::infinity();
    std::string curve;
    for (double alpha : default_sweep_alphas()) {
        const PtParams p = PtParams::from_omega(2.0, alpha);
        const double total = nmr::total_time_pt(p, tau(p), cfg);
        ok = ok && total < prev && total > 2.0 / (4.0 * 215.23);
        curve += (curve.empty() ? "" : " > ") + format_double(total);
        prev = total;
    }
    double t0_min = std::numeric_limits<double>::infinity();
    double t0_max = 0.0;
    for (double alpha : default_sweep_alphas()) {
        const double t0 = nmr::total_time_pt(PtParams::from_omega(2.0, alpha), 0.0, cfg);
        t0_min = std::min(t0_min, t0);
        t0_max = std::max(t0_max, t0);
    }
    ok = ok && t0_min > 0.0 && (t0_max - t0_min) <= 1e-12;
    detail = "totals at tau: " + curve + "; zero-time spread " +
             format_double(t0_max - t0_min);
    return ok;
}

// 9. Property suites: symmetry of H, unitarity, exponential-route agreement,
//    norm conservation, and the hermitian-limit coincidence.
bool criterion_properties(std::string& detail) {
    std::mt19937_64 rng(987654321);
    bool ok = true;

    // PT symmetry of H to 1e-14 on random parameters.
    std::uniform_real_distribution<double> u_s(0.1, 5.0);
    std::uniform_real_distribution<double> u_alpha(-nums::pi / 2.0 + 1e-3, 0.0);
    double worst_sym = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Gate2 h = hamiltonian_pt(PtParams(u_s(rng), u_alpha(rng)));
        worst_sym = std::max(
            worst_sym, max_abs_diff((pauli_x() * h.conjugate() * pauli_x()).eval(), h));
    }
    ok = ok && worst_sym <= 1e-14;

    // Unitarity of circuit elements and compiled schedules to 1e-11.
    bool unitary_ok = true;
    for (double alpha : default_sweep_alphas()) {
        const PtParams p = PtParams::from_omega(2.0, alpha);
        for (double frac : {0.0, 0.5, 1.0}) {
            const GateSeq seq = build_pt_circuit(p, frac * tau(p));
            for (const auto& item : seq.items)
                unitary_ok = unitary_ok && is_unitary(item.op, 1e-11);
            unitary_ok = unitary_ok && is_unitary(seq.product(), 1e-11);
        }
    }
    for (int i = 0; i < 500; ++i) {
        const nmr::PulseSchedule s = oracles::random_schedule(rng, nmr::NmrConfig{});
        unitary_ok = unitary_ok && is_unitary(nmr::compile(s), 1e-11);
    }
    ok = ok && unitary_ok;

    // Exponential routes agree to 1e-9 over 1000 random matrices.
    double worst_expm = 0.0;
    int compared = 0;
    for (int draws = 0; compared < 1000 && draws < 1100; ++draws) {
        const Gate2 m = oracles::random_gate2(rng);
        try {
            const Gate2 via_eig = expm_eig(m);
            worst_expm = std::max(worst_expm, max_abs_diff(expm_series(m), via_eig));
            ++compared;
        } catch (const NonDiagonalizableError&) {
        }
    }
    ok = ok && compared == 1000 && worst_expm < 1e-9;

    // Circuit runs conserve the norm to 1e-12.
    double worst_norm = 0.0;
    for (int i = 0; i < 200; ++i) {
        const PtParams p(u_s(rng), u_alpha(rng));
        const TwoQubitState out =
            run(build_pt_circuit(p, 0.7 * tau(p)), oracles::random_state4(rng));
        worst_norm = std::max(worst_norm, std::abs(out.norm() - 1.0));
    }
    ok = ok && worst_norm <= 1e-12;

    // At alpha = 0 both circuits produce the same work state to 1e-10.
    double worst_coincide = 0.0;
    const PtParams herm(1.0, 0.0);
    for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double t = frac * tau0(herm);
        const PostSelection a =
            post_select_ancilla0(run(build_pt_circuit(herm, t), ket00()));
        const PostSelection b =
            post_select_ancilla0(run(build_hermitian_circuit(herm, t), ket00()));
        worst_coincide = std::max(
            worst_coincide,
            (a.normalized_work_state - b.normalized_work_state).cwiseAbs().maxCoeff());
    }
    ok = ok && worst_coincide <= 1e-10;

    detail = "symmetry " + format_double(worst_sym) + ", expm " + format_double(worst_expm) +
             ", norm " + format_double(worst_norm) + ", coincidence " +
             format_double(worst_coincide);
    return ok;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Entry> entries = {
        {"dilation identity on the working grid", criterion_dilation},
        {"brachistochrone times against root finding", criterion_brachistochrone},
        {"near-zero passage time off the exceptional point", criterion_near_zero_time},
        {"post-selection factor limit 1/sqrt(3)", criterion_q_limit},
        {"hermitian comparison circuit", criterion_hermitian_circuit},
        {"pulse compilation, hard tier", criterion_pulses_hard},
        {"pulse compilation, end to end", criterion_pulses_end_to_end},
        {"wall-clock timing claims", criterion_timing},
        {"property suites", criterion_properties},
    };

    int failures = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        bool ok = false;
        std::string detail;
        try {
            ok = entries[i].check(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s: criterion %zu (%s) -- %s\n", ok ? "PASS" : "FAIL", i + 1,
                    entries[i].name, detail.c_str());
    }
    return failures;
}
