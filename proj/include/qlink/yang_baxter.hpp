// yang_baxter.hpp
// The phased-swap operator R built from a phase matrix, verification of the
// Yang-Baxter equation, braid-word operators on W^{k}, and the analysis of
// whether R entangles the uniform superposition (brute force and closed form).

#pragma once

#include <cstdint>
#include <vector>

#include "qlink/matrix.hpp"
#include "qlink/phase_matrix.hpp"
#include "qlink/pure_state.hpp"

namespace qlink {

// A unitary with exactly one nonzero unit-modulus entry per row and column:
// Op|j> = phase[j] |target[j]>. R, its inverse and all braid operators have
// this form, which keeps 2^12-dimensional operators exact and cheap.
struct PhasedPerm {
    std::vector<std::uint64_t> target;
    std::vector<cplx> phase;

    std::uint64_t dim() const { return target.size(); }
    static PhasedPerm identity(std::uint64_t d);
    PhasedPerm adjoint() const;
    CMat dense() const;
    std::vector<cplx> apply(const std::vector<cplx>& v) const;
};

// a after b (apply b first).
PhasedPerm compose(const PhasedPerm& a, const PhasedPerm& b);

// R|alpha,beta> = M_{alpha,beta}|beta,alpha> on W (x) W, dimension 4^n.
PhasedPerm build_R(const PhaseMatrix& m);

struct YbeResult {
    bool ok;
    double max_deviation;
};

// Entrywise check of (R(x)I)(I(x)R)(R(x)I) = (I(x)R)(R(x)I)(I(x)R) by dense
// multiplication on W^{3}. The raw-operator overload accepts arbitrary
// (non-phase) matrices as negative controls.
YbeResult verify_ybe(const CMat& r, double tol = 1e-12);
YbeResult verify_ybe(const PhaseMatrix& m, double tol = 1e-12);

struct BraidWord {
    int strands = 2;                               // k >= 2
    std::vector<std::pair<int, int>> letters;      // (generator in [1,k-1], sign +-1)
};

// sigma_i = I^{(i-1)} (x) R (x) I^{(k-i-1)}; leftmost letter applied first;
// negative letters use the conjugate-transpose of R. Total dimension 2^{kn}
// must not exceed 2^12.
PhasedPerm braid_operator(const BraidWord& word, const PhaseMatrix& m);

// The uniform superposition over W (x) W flattened to 2n qubits.
PureState uniform_state(int n);

// Applies R to the uniform state and asks the product-state criterion.
bool r_entangles_uniform(const PhaseMatrix& m, double tol = 1e-9);

// The closed-form test: R phi is unentangled exactly when
//   lambda^{|a|+|b|-1} M_{a,b} = prod_{i in a} M_{e_i,0} * prod_{j in b} M_{0,e_j}
// for all string pairs. Requires a constant diagonal.
bool r_unentangled_closed_form(const PhaseMatrix& m, double tol = 1e-9);

// M_{a,b}^2/lambda^2 - (m_{a,0}/m_{0,a})(m_{0,b}/m_{b,0}) with
// m_{a,0} = prod_{i in a} M_{e_i,0} and m_{0,a} = prod_{j in a} M_{0,e_j}.
cplx ratio_condition(const PhaseMatrix& m, std::uint64_t alpha, std::uint64_t beta);

}  // namespace qlink
