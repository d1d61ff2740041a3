// circuit.hpp — Two-qubit dilation circuit: gates, labeled sequences,
// ancilla post-selection, and the Hermitian comparison circuit.
// Qubit order: ancilla is the left tensor factor (basis |a e>: 00,01,10,11).

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptsim/linalg.hpp"
#include "ptsim/pt_model.hpp"

namespace ptsim {

// Ordered list of labeled 4x4 unitaries; items[0] acts first.
struct GateSeq {
    struct Item {
        std::string label;
        Mat4 op;
    };

    std::vector<Item> items;

    void push(std::string label, const Mat4& op) {
        if (!is_unitary(op, 1e-12))
            throw NonUnitaryGateError("GateSeq::push: '" + label + "' is not unitary");
        items.push_back({std::move(label), op});
    }

    Mat4 product() const {
        Mat4 m = identity4();
        for (const auto& item : items) m = item.op * m;
        return m;
    }

    std::size_t size() const { return items.size(); }
};

// V = [[cos f, -sin f], [sin f, cos f]]  (a real y-rotation by 2f).
inline Gate2 gate_v(double phi) {
    Gate2 g;
    g << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return g;
}

// U1 = [[cos f, i sin f], [i sin f, cos f]] = e^{i f sigma_x}.
inline Gate2 gate_u1(double phi) {
    const Complex is(0, std::sin(phi));
    Gate2 g;
    g << Complex(std::cos(phi), 0), is, is, Complex(std::cos(phi), 0);
    return g;
}

inline Gate2 gate_u2() { return pauli_z(); }

inline Gate2 gate_hadamard() {
    Gate2 g;
    const double r = 1.0 / std::numbers::sqrt2;
    g << r, r, r, -r;
    return g;
}

// Ancilla-controlled gate: the work qubit sees `gate` only when the ancilla
// is in |control_value>; block-diagonal in the ancilla basis.
inline Mat4 controlled(const Gate2& gate, int control_value) {
    if (control_value != 0 && control_value != 1)
        throw std::invalid_argument("controlled: control_value must be 0 or 1");
    if (!is_unitary(gate, 1e-12))
        throw NonUnitaryGateError("controlled: gate is not unitary");
    Mat4 m = Mat4::Zero();
    if (control_value == 0) {
        m.topLeftCorner<2, 2>() = gate;
        m.bottomRightCorner<2, 2>() = identity2();
    } else {
        m.topLeftCorner<2, 2>() = identity2();
        m.bottomRightCorner<2, 2>() = gate;
    }
    return m;
}

// [V on ancilla] -> [C0-U1] -> [C1-U2] -> [Hadamard on ancilla].
// Applied to |00>, the ancilla-|0> branch is (q/sqrt(2)) e^{-iHt}|0>.
inline GateSeq build_pt_circuit(const PtParams& p, double t) {
    GateSeq seq;
    seq.push("V_a", tensor(gate_v(phi_v(p, t)), identity2()));
    seq.push("C0U1", controlled(gate_u1(phi_u1(p, t)), 0));
    seq.push("C1U2", controlled(gate_u2(), 1));
    seq.push("H_a", tensor(gate_hadamard(), identity2()));
    return seq;
}

// Hermitian comparison: both controlled blocks carry the same rotation
// Ut = e^{-i (w t / 2) sigma_x}, so the pair collapses to I (x) Ut and the
// trailing V-dagger undoes the ancilla rotation exactly (probability 1).
// `ancilla_angle` overrides the V angle; the result must not depend on it.
inline GateSeq build_hermitian_circuit(const PtParams& p, double t,
                                       std::optional<double> ancilla_angle = {}) {
    const double phi = ancilla_angle ? *ancilla_angle : phi_v(p, t);
    const Gate2 ut = gate_u1(-0.5 * p.omega() * t);
    GateSeq seq;
    seq.push("V_a", tensor(gate_v(phi), identity2()));
    seq.push("C0U1t", controlled(ut, 0));
    seq.push("C1U2t", controlled(ut, 1));
    seq.push("Vdag_a", tensor(gate_v(-phi), identity2()));
    return seq;
}

inline TwoQubitState run(const GateSeq& seq, const TwoQubitState& input) {
    if (std::abs(input.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("run: input state must be normalized");
    TwoQubitState state = input;
    for (const auto& item : seq.items) state = item.op * state;
    return state;
}

struct PostSelection {
    WorkState raw_work_state;         // un-normalized (amp|00>, amp|01>)
    double probability;               // squared norm of the raw state
    WorkState normalized_work_state;  // unit vector
};

inline PostSelection post_select_ancilla0(const TwoQubitState& state) {
    WorkState raw;
    raw << state(0), state(1);
    const double prob = raw.squaredNorm();
    if (prob <= 1e-15)
        throw ZeroProbabilityError("post_select_ancilla0: ancilla-|0> probability <= 1e-15");
    return PostSelection{raw, prob, raw / std::sqrt(prob)};
}

inline Density2 work_density_matrix(const PostSelection& ps) {
    return ps.normalized_work_state * ps.normalized_work_state.adjoint();
}

} // namespace ptsim
