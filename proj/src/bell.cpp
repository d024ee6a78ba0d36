#include "qlink/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace qlink {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);

CMat two_by_two(double a00, double a01, double a10, double a11) {
    CMat m(2, 2);
    m.at(0, 0) = a00;
    m.at(0, 1) = a01;
    m.at(1, 0) = a10;
    m.at(1, 1) = a11;
    return m;
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    cplx acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

// <phi| A (x) B |phi> for 2x2 observables on a two-qubit state.
cplx expectation(const PureState& state, const CMat& a, const CMat& b) {
    return inner(state.amplitudes(), CMat::kron(a, b).apply(state.amplitudes()));
}

void require_normalized(const PureState& state, double tol) {
    if (state.qubits() != 2) throw std::invalid_argument("CHSH needs a two-qubit state");
    if (std::abs(state.norm() - 1.0) > tol)
        throw std::invalid_argument("state must be normalized");
}

}  // namespace

ChshObservables standard_observables() {
    return ChshObservables{
        two_by_two(1, 0, 0, -1),
        two_by_two(0, 1, 1, 0),
        two_by_two(-1 / kSqrt2, -1 / kSqrt2, -1 / kSqrt2, 1 / kSqrt2),
        two_by_two(1 / kSqrt2, -1 / kSqrt2, -1 / kSqrt2, -1 / kSqrt2),
    };
}

ChshObservables observables_from_angles(const std::array<double, 4>& angles) {
    auto plane = [](double theta) {
        return two_by_two(std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta));
    };
    return ChshObservables{plane(angles[0]), plane(angles[1]), plane(angles[2]), plane(angles[3])};
}

double chsh_delta(const PureState& state, const ChshObservables& obs) {
    require_normalized(state, 1e-6);
    const cplx delta = expectation(state, obs.q, obs.s) + expectation(state, obs.r, obs.s) +
                       expectation(state, obs.r, obs.t) - expectation(state, obs.q, obs.t);
    if (std::abs(delta.imag()) > 1e-9)
        throw std::runtime_error("CHSH expectation came out non-real");
    return delta.real();
}

PureState RealTwoQubitState::to_state() const {
    return PureState(2, {cplx{a, 0}, cplx{b, 0}, cplx{c, 0}, cplx{d, 0}});
}

double delta_closed_form(const RealTwoQubitState& s) {
    const double nrm2 = s.a * s.a + s.b * s.b + s.c * s.c + s.d * s.d;
    if (std::abs(nrm2 - 1.0) > 1e-6) throw std::invalid_argument("state must be normalized");
    const double ad_sum = s.a + s.d;
    return (2.0 - 4.0 * ad_sum * ad_sum + 4.0 * (s.a * s.d - s.b * s.c)) / kSqrt2;
}

bool violates(const RealTwoQubitState& s) {
    const double ad_sum = s.a + s.d;
    return (kSqrt2 - 1.0) / 2.0 < (s.a * s.d - s.b * s.c) - ad_sum * ad_sum;
}

LhvCertificate classical_bound() {
    LhvCertificate cert{};
    cert.bound = -2;
    int row = 0;
    for (int q = 1; q >= -1; q -= 2)
        for (int r = 1; r >= -1; r -= 2)
            for (int s = 1; s >= -1; s -= 2)
                for (int t = 1; t >= -1; t -= 2) {
                    const int value = q * s + r * s + r * t - q * t;
                    cert.rows[row++] = LhvRow{q, r, s, t, value};
                    if (value > cert.bound) cert.bound = value;
                }
    return cert;
}

namespace {

struct Corr {
    // 2x2 real correlation matrix over the (Z, X) axes.
    double t[2][2];
};

Corr correlation_matrix(const PureState& state) {
    const CMat z = two_by_two(1, 0, 0, -1);
    const CMat x = two_by_two(0, 1, 1, 0);
    const CMat axes[2] = {z, x};
    Corr c{};
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) c.t[u][v] = expectation(state, axes[u], axes[v]).real();
    return c;
}

double delta_from_angles(const Corr& c, const std::array<double, 4>& angles) {
    const double q[2] = {std::cos(angles[0]), std::sin(angles[0])};
    const double r[2] = {std::cos(angles[1]), std::sin(angles[1])};
    const double s[2] = {std::cos(angles[2]), std::sin(angles[2])};
    const double t[2] = {std::cos(angles[3]), std::sin(angles[3])};
    double total = 0.0;
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            total += c.t[u][v] * (q[u] * (s[v] - t[v]) + r[u] * (s[v] + t[v]));
    return total;
}

// Golden-section maximization of a 1-d slice; returns the best angle found.
template <typename F>
double golden_max(F f, double lo, double hi, int iters) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return (f1 > f2) ? x1 : x2;
}

}  // namespace

ChshMax maximize_chsh(const PureState& state) {
    require_normalized(state, 1e-6);
    const Corr c = correlation_matrix(state);
    constexpr int kGrid = 128;  // step pi/64 over [0, 2pi)
    const double step = 2.0 * kPi / kGrid;

    double grid_cos[kGrid], grid_sin[kGrid];
    for (int i = 0; i < kGrid; ++i) {
        grid_cos[i] = std::cos(i * step);
        grid_sin[i] = std::sin(i * step);
    }

    // Delta separates as q . T(s-t) + r . T(s+t), so the q and r scans are
    // independent for fixed (s, t).
    double best = -1e300;
    std::array<int, 4> best_idx{0, 0, 0, 0};
    for (int is = 0; is < kGrid; ++is)
        for (int it = 0; it < kGrid; ++it) {
            const double sm[2] = {grid_cos[is] - grid_cos[it], grid_sin[is] - grid_sin[it]};
            const double sp[2] = {grid_cos[is] + grid_cos[it], grid_sin[is] + grid_sin[it]};
            const double u[2] = {c.t[0][0] * sm[0] + c.t[0][1] * sm[1],
                                 c.t[1][0] * sm[0] + c.t[1][1] * sm[1]};
            const double v[2] = {c.t[0][0] * sp[0] + c.t[0][1] * sp[1],
                                 c.t[1][0] * sp[0] + c.t[1][1] * sp[1]};
            int bq = 0, br = 0;
            double bqv = -1e300, brv = -1e300;
            for (int i = 0; i < kGrid; ++i) {
                const double qv = grid_cos[i] * u[0] + grid_sin[i] * u[1];
                if (qv > bqv) {
                    bqv = qv;
                    bq = i;
                }
                const double rv = grid_cos[i] * v[0] + grid_sin[i] * v[1];
                if (rv > brv) {
                    brv = rv;
                    br = i;
                }
            }
            const double value = bqv + brv;
            const std::array<int, 4> idx{bq, br, is, it};
            if (value > best || (value == best && idx < best_idx)) {
                best = value;
                best_idx = idx;
            }
        }

    std::array<double, 4> angles{best_idx[0] * step, best_idx[1] * step, best_idx[2] * step,
                                 best_idx[3] * step};
    // Local refinement: golden-section on each coordinate, three sweeps.
    for (int sweep = 0; sweep < 3; ++sweep)
        for (int coord = 0; coord < 4; ++coord) {
            std::array<double, 4> trial = angles;
            const double center = angles[coord];
            const double candidate = golden_max(
                [&](double x) {
                    trial[coord] = x;
                    return delta_from_angles(c, trial);
                },
                center - step, center + step, 40);
            trial[coord] = candidate;
            if (delta_from_angles(c, trial) >= delta_from_angles(c, angles))
                angles[coord] = candidate;
        }

    return ChshMax{delta_from_angles(c, angles), angles};
}

}  // namespace qlink
