#include "qlink/yang_baxter.hpp"

#include <cmath>
#include <stdexcept>

namespace qlink {

PhasedPerm PhasedPerm::identity(std::uint64_t d) {
    PhasedPerm p;
    p.target.resize(d);
    p.phase.assign(d, cplx{1.0, 0.0});
    for (std::uint64_t j = 0; j < d; ++j) p.target[j] = j;
    return p;
}

PhasedPerm PhasedPerm::adjoint() const {
    PhasedPerm p;
    p.target.resize(dim());
    p.phase.resize(dim());
    for (std::uint64_t j = 0; j < dim(); ++j) {
        p.target[target[j]] = j;
        p.phase[target[j]] = std::conj(phase[j]);
    }
    return p;
}

CMat PhasedPerm::dense() const {
    CMat m(dim(), dim());
    for (std::uint64_t j = 0; j < dim(); ++j) m.at(target[j], j) = phase[j];
    return m;
}

std::vector<cplx> PhasedPerm::apply(const std::vector<cplx>& v) const {
    if (v.size() != dim()) throw std::invalid_argument("vector dimension mismatch");
    std::vector<cplx> out(dim());
    for (std::uint64_t j = 0; j < dim(); ++j) out[target[j]] = phase[j] * v[j];
    return out;
}

PhasedPerm compose(const PhasedPerm& a, const PhasedPerm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
    PhasedPerm c;
    c.target.resize(a.dim());
    c.phase.resize(a.dim());
    for (std::uint64_t j = 0; j < a.dim(); ++j) {
        c.target[j] = a.target[b.target[j]];
        c.phase[j] = b.phase[j] * a.phase[b.target[j]];
    }
    return c;
}

PhasedPerm build_R(const PhaseMatrix& m) {
    const std::uint64_t d = m.dim();
    PhasedPerm r;
    r.target.resize(d * d);
    r.phase.resize(d * d);
    for (std::uint64_t alpha = 0; alpha < d; ++alpha)
        for (std::uint64_t beta = 0; beta < d; ++beta) {
            const std::uint64_t in = alpha * d + beta;
            r.target[in] = beta * d + alpha;
            r.phase[in] = m.entry(alpha, beta);
        }
    return r;
}

YbeResult verify_ybe(const CMat& r, double tol) {
    const std::uint64_t d2 = r.rows();
    const std::uint64_t d = static_cast<std::uint64_t>(std::llround(std::sqrt(double(d2))));
    if (d * d != d2 || r.cols() != d2) throw std::invalid_argument("R must be d^2 x d^2");
    const CMat id = CMat::identity(d);
    const CMat r_left = CMat::kron(r, id);
    const CMat r_right = CMat::kron(id, r);
    const CMat lhs = r_left * r_right * r_left;
    const CMat rhs = r_right * r_left * r_right;
    const double dev = CMat::max_abs_diff(lhs, rhs);
    return {dev <= tol, dev};
}

YbeResult verify_ybe(const PhaseMatrix& m, double tol) {
    if (m.string_length() > 2)
        throw std::invalid_argument("dense YBE check is limited to n <= 2");
    return verify_ybe(build_R(m).dense(), tol);
}

PhasedPerm braid_operator(const BraidWord& word, const PhaseMatrix& m) {
    const int k = word.strands;
    const int n = m.string_length();
    if (k < 2) throw std::invalid_argument("braid needs at least 2 strands");
    if (k * n > 12) throw std::invalid_argument("braid operator dimension exceeds 2^12");
    const std::uint64_t d = m.dim();
    const std::uint64_t total = std::uint64_t{1} << (k * n);
    PhasedPerm op = PhasedPerm::identity(total);
    for (const auto& [gen, sign] : word.letters) {
        if (gen < 1 || gen >= k) throw std::invalid_argument("braid generator index out of range");
        if (sign != 1 && sign != -1) throw std::invalid_argument("braid letter sign must be +-1");
        // sigma_gen acts on strands gen and gen+1; strand 1 holds the most
        // significant base-d digit.
        const int right_strands = k - gen - 1;
        const int shift = right_strands * n;
        PhasedPerm letter;
        letter.target.resize(total);
        letter.phase.resize(total);
        for (std::uint64_t j = 0; j < total; ++j) {
            const std::uint64_t low = j & ((std::uint64_t{1} << shift) - 1);
            const std::uint64_t beta = (j >> shift) & (d - 1);
            const std::uint64_t alpha = (j >> (shift + n)) & (d - 1);
            const std::uint64_t high = j >> (shift + 2 * n);
            letter.target[j] =
                (((high << n | beta) << n | alpha) << shift) | low;
            letter.phase[j] = m.entry(alpha, beta);
        }
        if (sign < 0) letter = letter.adjoint();
        op = compose(letter, op);
    }
    return op;
}

PureState uniform_state(int n) {
    PureState s(2 * n);
    for (std::uint64_t i = 0; i < s.dim(); ++i) s.amp(i) = cplx{1.0, 0.0};
    return s;
}

bool r_entangles_uniform(const PhaseMatrix& m, double tol) {
    const PureState phi = uniform_state(m.string_length());
    const std::vector<cplx> rphi = build_R(m).apply(phi.amplitudes());
    return !is_product(PureState(2 * m.string_length(), rphi), tol).is_product;
}

namespace {

cplx row_product(const PhaseMatrix& m, std::uint64_t alpha, bool alpha_first) {
    // alpha_first: prod_{i in alpha} M_{e_i, 0}; otherwise prod M_{0, e_j}.
    const int n = m.string_length();
    cplx prod{1.0, 0.0};
    for (int i = 1; i <= n; ++i)
        if (bit_at(alpha, i, n)) {
            const std::uint64_t e = unit_mask(i, n);
            prod *= alpha_first ? m.entry(e, 0) : m.entry(0, e);
        }
    return prod;
}

}  // namespace

bool r_unentangled_closed_form(const PhaseMatrix& m, double tol) {
    const cplx lambda = m.lambda_or_throw();
    const std::uint64_t d = m.dim();
    for (std::uint64_t alpha = 0; alpha < d; ++alpha)
        for (std::uint64_t beta = 0; beta < d; ++beta) {
            const long power = weight(alpha) + weight(beta) - 1;
            const cplx lhs = unit_ipow(lambda, power) * m.entry(alpha, beta);
            const cplx rhs = row_product(m, alpha, true) * row_product(m, beta, false);
            if (std::abs(lhs - rhs) > tol) return false;
        }
    return true;
}

cplx ratio_condition(const PhaseMatrix& m, std::uint64_t alpha, std::uint64_t beta) {
    const cplx lambda = m.lambda_or_throw();
    const cplx m_a0 = row_product(m, alpha, true);
    const cplx m_0a = row_product(m, alpha, false);
    const cplx m_b0 = row_product(m, beta, true);
    const cplx m_0b = row_product(m, beta, false);
    const cplx mab = m.entry(alpha, beta);
    return (mab * mab) / (lambda * lambda) - (m_a0 / m_0a) * (m_0b / m_b0);
}

}  // namespace qlink
