// experiment.hpp — Data records behind the CLI subcommands: single-point
// evolution snapshots, the alpha sweep (tau, tau-tilde, |q|, probability),
// and work-qubit tomography, with deterministic CSV/JSON serialization.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptsim/circuit.hpp"
#include "ptsim/io.hpp"
#include "ptsim/linalg.hpp"
#include "ptsim/nmr.hpp"
#include "ptsim/pt_model.hpp"

namespace ptsim {

namespace detail {

inline TwoQubitState input00() {
    TwoQubitState in = TwoQubitState::Zero();
    in(0) = Complex(1, 0);
    return in;
}

inline nlohmann::ordered_json state_json(const WorkState& v) {
    return nlohmann::ordered_json::array(
        {{v(0).real(), v(0).imag()}, {v(1).real(), v(1).imag()}});
}

inline nlohmann::ordered_json density_json(const Density2& rho) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < 2; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < 2; ++j)
            row.push_back({rho(i, j).real(), rho(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

} // namespace detail

// ---- single-point evolution ----

struct EvolveReport {
    double alpha;
    double s;
    double omega;
    double t;
    WorkState analytic_state;  // normalized closed-form state
    WorkState circuit_state;   // normalized post-selected circuit state
    double fidelity;           // between the two pure-state projectors
    double postselect_probability;
    double q_abs;
};

inline EvolveReport evolve_point(const PtParams& p, double t) {
    const WorkState analytic = evolve_pt_analytic(p, t).unit_vec();
    const PostSelection ps = post_select_ancilla0(run(build_pt_circuit(p, t), detail::input00()));
    const Density2 rho_a = analytic * analytic.adjoint();
    return EvolveReport{p.alpha,
                        p.s,
                        p.omega(),
                        t,
                        analytic,
                        ps.normalized_work_state,
                        fidelity(rho_a, work_density_matrix(ps)),
                        ps.probability,
                        std::abs(q_factor(p, t))};
}

inline std::string evolve_csv(const EvolveReport& r) {
    std::string out =
        "alpha,s,omega,t,"
        "analytic_re0,analytic_im0,analytic_re1,analytic_im1,"
        "circuit_re0,circuit_im0,circuit_re1,circuit_im1,"
        "fidelity,postselect_probability,q_abs\n";
    const double fields[] = {r.alpha,
                             r.s,
                             r.omega,
                             r.t,
                             r.analytic_state(0).real(),
                             r.analytic_state(0).imag(),
                             r.analytic_state(1).real(),
                             r.analytic_state(1).imag(),
                             r.circuit_state(0).real(),
                             r.circuit_state(0).imag(),
                             r.circuit_state(1).real(),
                             r.circuit_state(1).imag(),
                             r.fidelity,
                             r.postselect_probability,
                             r.q_abs};
    bool first = true;
    for (double f : fields) {
        if (!first) out += ',';
        out += format_double(f);
        first = false;
    }
    out += '\n';
    return out;
}

inline std::string evolve_json(const EvolveReport& r) {
    nlohmann::ordered_json j;
    j["alpha"] = r.alpha;
    j["s"] = r.s;
    j["omega"] = r.omega;
    j["t"] = r.t;
    j["analytic_state"] = detail::state_json(r.analytic_state);
    j["circuit_state"] = detail::state_json(r.circuit_state);
    j["fidelity"] = r.fidelity;
    j["postselect_probability"] = r.postselect_probability;
    j["q_abs"] = r.q_abs;
    return j.dump(2) + "\n";
}

// ---- alpha sweep ----

struct SweepRecord {
    double alpha;
    double s;
    double omega;
    double tau_pt;
    double tau_hermitian;
    double tilde_tau_pt;
    double tilde_tau_hermitian;
    double q_abs_at_tau;
    double postselect_prob_at_tau;
};

inline const char* sweep_csv_header() {
    return "alpha,s,omega,tau_pt,tau_hermitian,tilde_tau_pt,tilde_tau_hermitian,"
           "q_abs_at_tau,postselect_prob_at_tau";
}

// The six working points of the experiment.
inline std::vector<double> default_sweep_alphas() {
    const double pi = std::numbers::pi;
    return {0.0, -pi / 4.0, -3.0 * pi / 8.0, -7.0 * pi / 16.0, -15.0 * pi / 32.0,
            -31.0 * pi / 64.0};
}

inline SweepRecord sweep_record(double omega, double alpha, const nmr::NmrConfig& cfg = {}) {
    const PtParams p = PtParams::from_omega(omega, alpha);
    const double t_pt = tau(p);
    const double t_h = tau0(p);
    const PostSelection ps =
        post_select_ancilla0(run(build_pt_circuit(p, t_pt), detail::input00()));
    return SweepRecord{alpha,
                       p.s,
                       p.omega(),
                       t_pt,
                       t_h,
                       nmr::total_time_pt(p, t_pt, cfg),
                       nmr::total_time_hermitian(p, t_h, cfg),
                       std::abs(q_factor(p, t_pt)),
                       ps.probability};
}

inline std::vector<SweepRecord> sweep(double omega, const std::vector<double>& alphas,
                                      const nmr::NmrConfig& cfg = {}) {
    std::vector<SweepRecord> records;
    records.reserve(alphas.size());
    for (double a : alphas) records.push_back(sweep_record(omega, a, cfg));
    return records;
}

inline std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::string out = sweep_csv_header();
    out += '\n';
    for (const auto& r : records) {
        const double fields[] = {r.alpha,         r.s,
                                 r.omega,         r.tau_pt,
                                 r.tau_hermitian, r.tilde_tau_pt,
                                 r.tilde_tau_hermitian, r.q_abs_at_tau,
                                 r.postselect_prob_at_tau};
        bool first = true;
        for (double f : fields) {
            if (!first) out += ',';
            out += format_double(f);
            first = false;
        }
        out += '\n';
    }
    return out;
}

// ---- tomography ----

struct TomographyRecord {
    double alpha;
    double t;
    Density2 rho_sim;     // circuit, post-selected
    Density2 rho_theory;  // analytic projector
    double fidelity;
};

inline std::vector<TomographyRecord> tomography(const PtParams& p,
                                                const std::vector<double>& tau_fractions = {
                                                    0.0, 0.5, 1.0}) {
    const double t_final = tau(p);
    std::vector<TomographyRecord> records;
    records.reserve(tau_fractions.size());
    for (double frac : tau_fractions) {
        const double t = frac * t_final;
        const PostSelection ps =
            post_select_ancilla0(run(build_pt_circuit(p, t), detail::input00()));
        const Density2 rho_sim = work_density_matrix(ps);
        const WorkState th = evolve_pt_analytic(p, t).unit_vec();
        const Density2 rho_theory = th * th.adjoint();
        records.push_back(
            TomographyRecord{p.alpha, t, rho_sim, rho_theory, fidelity(rho_sim, rho_theory)});
    }
    return records;
}

inline std::string tomography_json(const std::vector<TomographyRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["alpha"] = r.alpha;
        j["t"] = r.t;
        j["rho_sim"] = detail::density_json(r.rho_sim);
        j["rho_theory"] = detail::density_json(r.rho_theory);
        j["fidelity"] = r.fidelity;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

} // namespace ptsim
