#include "qlink/local_unitary.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "qlink/random.hpp"

namespace qlink {

std::array<cplx, 4> LocalUnitary::matrix() const {
    const cplx phase{std::cos(theta / 2.0), std::sin(theta / 2.0)};
    return {phase * lambda, phase * mu, phase * (-std::conj(mu)), phase * std::conj(lambda)};
}

void LocalUnitary::validate(double tol) const {
    if (std::abs(std::norm(lambda) + std::norm(mu) - 1.0) > tol)
        throw std::invalid_argument("local unitary needs |lambda|^2 + |mu|^2 = 1");
}

PureState apply_single_qubit(const PureState& state, int k, const LocalUnitary& u) {
    const int n = state.qubits();
    if (k < 1 || k > n) throw std::out_of_range("qubit index out of range");
    const auto m = u.matrix();
    PureState out(n);
    const std::uint64_t contexts = std::uint64_t{1} << (n - 1);
    for (std::uint64_t c = 0; c < contexts; ++c) {
        const std::uint64_t i0 = insert_bit(c, 0, k, n);
        const std::uint64_t i1 = insert_bit(c, 1, k, n);
        const cplx a0 = state.amp(i0), a1 = state.amp(i1);
        out.amp(i0) = m[0] * a0 + m[1] * a1;
        out.amp(i1) = m[2] * a0 + m[3] * a1;
    }
    return out;
}

cplx minor_det(const PureState& state, const MinorSpec& spec) {
    const int n = state.qubits();
    const std::uint64_t contexts = std::uint64_t{1} << (n - 1);
    if (spec.position < 1 || spec.position > n || spec.context_a >= contexts ||
        spec.context_b >= contexts || spec.context_a == spec.context_b)
        throw std::invalid_argument("invalid minor spec");
    const std::uint64_t a0 = insert_bit(spec.context_a, 0, spec.position, n);
    const std::uint64_t a1 = insert_bit(spec.context_a, 1, spec.position, n);
    const std::uint64_t b0 = insert_bit(spec.context_b, 0, spec.position, n);
    const std::uint64_t b1 = insert_bit(spec.context_b, 1, spec.position, n);
    return state.amp(a0) * state.amp(b1) - state.amp(b0) * state.amp(a1);
}

std::vector<std::pair<MinorSpec, cplx>> all_minors(const PureState& state, int k) {
    const std::uint64_t contexts = std::uint64_t{1} << (state.qubits() - 1);
    std::vector<std::pair<MinorSpec, cplx>> out;
    for (std::uint64_t a = 0; a < contexts; ++a)
        for (std::uint64_t b = a + 1; b < contexts; ++b) {
            MinorSpec spec{k, a, b};
            out.emplace_back(spec, minor_det(state, spec));
        }
    return out;
}

bool all_minors_vanish(const PureState& state, double tol) {
    const double amax = state.max_abs();
    const double scale = std::max(amax * amax, 1e-300);
    for (int k = 1; k <= state.qubits(); ++k)
        for (const auto& [spec, value] : all_minors(state, k))
            if (std::abs(value) > tol * scale) return false;
    return true;
}

namespace {

// Drives a state toward the vanishing-minor variety by repeatedly solving a
// randomly chosen minor equation for one of its entries.
PureState project_toward_variety(PureState s, std::mt19937_64& rng, int sweeps) {
    const int n = s.qubits();
    const std::uint64_t contexts = std::uint64_t{1} << (n - 1);
    std::uniform_int_distribution<int> pos(1, n);
    std::uniform_int_distribution<std::uint64_t> ctx(0, contexts - 1);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        const int k = pos(rng);
        const std::uint64_t ca = ctx(rng);
        std::uint64_t cb = ctx(rng);
        if (ca == cb) continue;
        const std::uint64_t a0 = insert_bit(ca, 0, k, n);
        const std::uint64_t a1 = insert_bit(ca, 1, k, n);
        const std::uint64_t b0 = insert_bit(cb, 0, k, n);
        const std::uint64_t b1 = insert_bit(cb, 1, k, n);
        if (std::abs(s.amp(a0)) > 1e-8)
            s.amp(b1) = s.amp(b0) * s.amp(a1) / s.amp(a0);
    }
    const double nr = s.norm();
    if (nr > 0.0)
        for (std::uint64_t i = 0; i < s.dim(); ++i) s.amp(i) /= nr;
    return s;
}

double max_relative_minor(const PureState& s) {
    const double amax = s.max_abs();
    const double scale = std::max(amax * amax, 1e-300);
    double worst = 0.0;
    for (int k = 1; k <= s.qubits(); ++k)
        for (const auto& [spec, value] : all_minors(s, k))
            worst = std::max(worst, std::abs(value) / scale);
    return worst;
}

}  // namespace

ScanReport conjecture_scan(int n, int trials, std::uint64_t seed, std::ostream* table) {
    if (n < 2 || n > 4) throw std::invalid_argument("conjecture scan expects 2 <= n <= 4");
    ScanReport report;
    report.trials = trials;
    if (table) *table << "# trial seed n kind max_rel_minor vanish product flagged\n";
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        auto rng = make_rng(trial_seed);
        // Rotate through samplers: generic / product / variety-projected.
        const int kind = t % 3;
        PureState s(n);
        const char* kind_name = "generic";
        if (kind == 0) {
            s = random_state(n, rng);
        } else if (kind == 1) {
            s = random_product_state(n, rng);
            kind_name = "product";
        } else {
            s = project_toward_variety(random_state(n, rng), rng, 12 * n * n);
            kind_name = "projected";
        }
        // Tolerance gap: flag only states that are far from product while
        // having minors vanish well below the criterion tolerance.
        const bool vanish = all_minors_vanish(s, 1e-10);
        const bool product = is_product(s, 1e-6).is_product;
        const bool flagged = vanish && !product;
        if (flagged) ++report.counterexamples;
        if (table) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%d %llu %d %s %.12g %d %d %d\n", t,
                          static_cast<unsigned long long>(trial_seed), n, kind_name,
                          max_relative_minor(s), vanish ? 1 : 0, product ? 1 : 0, flagged ? 1 : 0);
            *table << buf;
        }
    }
    if (table) *table << "counterexamples=" << report.counterexamples << "\n";
    return report;
}

}  // namespace qlink
