// bell.hpp
// CHSH machinery: the fixed observable quadruple, the Delta expectation sum,
// its real-coefficient closed form, the exhaustive classical-bound
// certificate, and a deterministic grid+refinement maximizer over X-Z plane
// observables.

#pragma once

#include <array>
#include <cstdint>

#include "qlink/matrix.hpp"
#include "qlink/pure_state.hpp"

namespace qlink {

struct ChshObservables {
    CMat q, r;  // act on qubit 1
    CMat s, t;  // act on qubit 2
};

// Q = diag(1,-1); R = antidiag(1,1); S = [[-1,-1],[-1,1]]/sqrt2;
// T = [[1,-1],[-1,-1]]/sqrt2.
ChshObservables standard_observables();

// cos(theta) Z + sin(theta) X in each slot (angles q, r, s, t).
ChshObservables observables_from_angles(const std::array<double, 4>& angles);

// Delta = <QS> + <RS> + <RT> - <QT> by direct matrix action on a normalized
// two-qubit state. Throws if the state is not normalized within 1e-6; the
// imaginary part must be below 1e-9 and is then discarded.
double chsh_delta(const PureState& state, const ChshObservables& obs);

struct RealTwoQubitState {
    double a, b, c, d;  // a|00> + b|01> + c|10> + d|11>, a^2+b^2+c^2+d^2 = 1
    PureState to_state() const;
};

// (2 - 4(a+d)^2 + 4(ad - bc)) / sqrt(2); requires normalization within 1e-6.
double delta_closed_form(const RealTwoQubitState& s);

// Strict violation condition (sqrt(2)-1)/2 < (ad - bc) - (a+d)^2, which is
// algebraically equivalent to delta_closed_form(s) > 2.
bool violates(const RealTwoQubitState& s);

struct LhvRow {
    int q, r, s, t;  // deterministic values +-1
    int value;       // q*s + r*s + r*t - q*t
};

struct LhvCertificate {
    std::array<LhvRow, 16> rows;
    int bound;  // max over rows, always 2
};

// Exhaustive enumeration of the 16 deterministic assignments; every row
// evaluates to +-2.
LhvCertificate classical_bound();

struct ChshMax {
    double delta_max;
    std::array<double, 4> angles;  // (theta_q, theta_r, theta_s, theta_t)
};

// Coarse pi/64 grid over the four angles, then three sweeps of per-coordinate
// golden-section refinement. Deterministic: ties resolve to the lowest
// lexicographic angle tuple, and the best value never decreases.
ChshMax maximize_chsh(const PureState& state);

}  // namespace qlink
