// random.hpp
// Deterministic samplers for states, unitaries and phase matrices. All
// randomized tests and scans take explicit seeds; per-trial streams are
// derived with a splitmix step so trials are independent of ordering.

#pragma once

#include <cstdint>
#include <random>

#include "qlink/local_unitary.hpp"
#include "qlink/phase_matrix.hpp"
#include "qlink/pure_state.hpp"

namespace qlink {

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline cplx random_gaussian(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

inline PureState random_state(int n, std::mt19937_64& rng, bool normalize = true) {
    PureState s(n);
    for (std::uint64_t i = 0; i < s.dim(); ++i) s.amp(i) = random_gaussian(rng);
    if (normalize) {
        const double nr = s.norm();
        for (std::uint64_t i = 0; i < s.dim(); ++i) s.amp(i) /= nr;
    }
    return s;
}

inline PureState random_single_qubit(std::mt19937_64& rng, bool zero_ground = false) {
    cplx c0 = zero_ground ? cplx{} : random_gaussian(rng);
    cplx c1 = random_gaussian(rng);
    if (zero_ground) (void)random_gaussian(rng);  // keep the stream length fixed
    PureState s(1, {c0, c1});
    const double nr = s.norm();
    s.amp(0) /= nr;
    s.amp(1) /= nr;
    return s;
}

// Random full product state; zero_ground_qubit (1-based, 0 = none) forces
// that factor's |0> amplitude to zero, making a_{0..0} = 0.
inline PureState random_product_state(int n, std::mt19937_64& rng, int zero_ground_qubit = 0) {
    std::vector<PureState> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        factors.push_back(random_single_qubit(rng, i == zero_ground_qubit));
    return tensor(factors);
}

inline LocalUnitary random_local_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
    const double nr = std::sqrt(a * a + b * b + c * c + d * d);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    return LocalUnitary{cplx{a / nr, b / nr}, cplx{c / nr, d / nr}, angle(rng)};
}

inline cplx random_phase(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    const double t = angle(rng);
    return {std::cos(t), std::sin(t)};
}

// Random unit-circle phase matrix; optionally constant diagonal and/or
// symmetric off-diagonal entries.
inline PhaseMatrix random_phase_matrix(int n, std::mt19937_64& rng, bool constant_diagonal,
                                       bool symmetric = false) {
    const std::uint64_t d = std::uint64_t{1} << n;
    PhaseMatrix m(n);
    if (constant_diagonal) {
        const cplx lambda = random_phase(rng);
        for (std::uint64_t a = 0; a < d; ++a) m.set(a, a, lambda);
        m.set_constant_diagonal(lambda);
    } else {
        for (std::uint64_t a = 0; a < d; ++a) m.set(a, a, random_phase(rng));
    }
    for (std::uint64_t a = 0; a < d; ++a)
        for (std::uint64_t b = 0; b < d; ++b) {
            if (a == b) continue;
            if (symmetric && a > b) {
                m.set(a, b, m.entry(b, a));
                continue;
            }
            m.set(a, b, random_phase(rng));
        }
    return m;
}

// Constant-diagonal phase matrix built so R leaves the uniform state a
// product: M_{a,b} = prod u_a * prod v_b * lambda^{1-|a|-|b|} with
// u_i v_i = lambda^2 (keeps the diagonal constant). The symmetric variant
// forces u_i = v_i = +-lambda, the only symmetric solutions.
inline PhaseMatrix unentangling_phase_matrix(int n, std::mt19937_64& rng, bool symmetric = false) {
    const cplx lambda = random_phase(rng);
    std::vector<cplx> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < n; ++i) {
        if (symmetric) {
            u[static_cast<std::size_t>(i)] = (coin(rng) ? lambda : -lambda);
            v[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
        } else {
            u[static_cast<std::size_t>(i)] = random_phase(rng);
            v[static_cast<std::size_t>(i)] = lambda * lambda * std::conj(u[static_cast<std::size_t>(i)]);
        }
    }
    const std::uint64_t d = std::uint64_t{1} << n;
    PhaseMatrix m(n);
    for (std::uint64_t a = 0; a < d; ++a)
        for (std::uint64_t b = 0; b < d; ++b) {
            cplx entry = unit_ipow(lambda, 1 - weight(a) - weight(b));
            for (int i = 1; i <= n; ++i) {
                if (bit_at(a, i, n)) entry *= u[static_cast<std::size_t>(i - 1)];
                if (bit_at(b, i, n)) entry *= v[static_cast<std::size_t>(i - 1)];
            }
            m.set(a, b, entry);
        }
    m.set_constant_diagonal(lambda);
    return m;
}

}  // namespace qlink
