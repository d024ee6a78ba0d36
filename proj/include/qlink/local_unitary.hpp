// local_unitary.hpp
// Single-qubit unitaries, the 2x2 amplitude minors whose moduli they
// preserve, and a sampler-driven probe of the vanishing-minors conjecture.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qlink/pure_state.hpp"

namespace qlink {

// U(2) as SU(2) times an explicit global phase: e^{i theta/2} *
// [[lambda, mu], [-conj(mu), conj(lambda)]], so Det(U) = e^{i theta}.
struct LocalUnitary {
    cplx lambda{1.0, 0.0};
    cplx mu{0.0, 0.0};
    double theta = 0.0;

    std::array<cplx, 4> matrix() const;  // row-major
    void validate(double tol = 1e-12) const;
    static LocalUnitary identity() { return {}; }
};

PureState apply_single_qubit(const PureState& state, int k, const LocalUnitary& u);

// A 2x2 minor at qubit position k: contexts are (n-1)-bit integers formed by
// the flanking bits alpha||beta. The determinant is
//   a_{a0} * a_{b1} - a_{b0} * a_{a1}
// with subscripts denoting the contexts with 0/1 inserted at position k.
struct MinorSpec {
    int position;             // 1-based qubit index
    std::uint64_t context_a;  // != context_b
    std::uint64_t context_b;
};

cplx minor_det(const PureState& state, const MinorSpec& spec);

// All unordered context pairs at position k: contexts ascending, pairs in
// lexicographic order (a < b).
std::vector<std::pair<MinorSpec, cplx>> all_minors(const PureState& state, int k);

// Relative check against the squared max amplitude.
bool all_minors_vanish(const PureState& state, double tol);

struct ScanReport {
    int trials = 0;
    int counterexamples = 0;
};

// Probes the conjecture "all minors vanish => product state" with random
// states, product states, and states driven toward the vanishing-minor
// variety by alternating least squares. Per-trial seeds derive from the base
// seed and trial index. When `table` is non-null a row per trial is written,
// followed by a machine-readable "counterexamples=<count>" line.
ScanReport conjecture_scan(int n, int trials, std::uint64_t seed, std::ostream* table = nullptr);

}  // namespace qlink
