#include "qlink/pure_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qlink {

namespace {
constexpr double kScaleFloor = 1e-300;
}

PureState::PureState(int n) : n_(n) {
    if (n < 1 || n > 20) throw std::invalid_argument("qubit count out of range [1,20]");
    amps_.assign(std::size_t{1} << n, cplx{});
}

PureState::PureState(int n, std::vector<cplx> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (n < 1 || n > 20) throw std::invalid_argument("qubit count out of range [1,20]");
    if (amps_.size() != (std::size_t{1} << n))
        throw std::invalid_argument("amplitude vector must have 2^n entries");
}

double PureState::norm() const {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

double PureState::max_abs() const {
    double m = 0.0;
    for (const cplx& a : amps_) m = std::max(m, std::abs(a));
    return m;
}

std::uint64_t PureState::argmax_abs() const {
    std::uint64_t best = 0;
    double best_abs = std::abs(amps_[0]);
    for (std::uint64_t i = 1; i < amps_.size(); ++i) {
        const double v = std::abs(amps_[i]);
        if (v > best_abs) {
            best_abs = v;
            best = i;
        }
    }
    return best;
}

PureState tensor(const std::vector<PureState>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor of an empty list");
    int n = 0;
    for (const PureState& f : factors) n += f.qubits();
    PureState out(n);
    const std::size_t dim = out.dim();
    for (std::uint64_t s = 0; s < dim; ++s) {
        cplx prod{1.0, 0.0};
        int shift = n;
        for (const PureState& f : factors) {
            shift -= f.qubits();
            const std::uint64_t part = (s >> shift) & ((std::uint64_t{1} << f.qubits()) - 1);
            prod *= f.amp(part);
        }
        out.amp(s) = prod;
    }
    return out;
}

PureState xor_relabel(const PureState& state, std::uint64_t mask) {
    if (mask >= state.dim()) throw std::invalid_argument("xor mask longer than the state");
    PureState out(state.qubits());
    for (std::uint64_t s = 0; s < state.dim(); ++s) out.amp(s) = state.amp(s ^ mask);
    return out;
}

std::vector<Residual> criterion_residuals(const PureState& state) {
    const int n = state.qubits();
    const cplx a0 = state.amp(0);
    std::vector<Residual> out;
    for (std::uint64_t alpha = 0; alpha < state.dim(); ++alpha) {
        const int w = weight(alpha);
        if (w < 2) continue;
        cplx lhs = state.amp(alpha);
        for (int p = 0; p < w - 1; ++p) lhs *= a0;
        cplx rhs{1.0, 0.0};
        for (int i = 1; i <= n; ++i)
            if (bit_at(alpha, i, n)) rhs *= state.amp(unit_mask(i, n));
        const double scale = std::max({std::abs(lhs), std::abs(rhs), kScaleFloor});
        out.push_back(Residual{alpha, lhs - rhs, scale});
    }
    return out;
}

std::vector<std::string> criterion_equations(int n) {
    std::vector<std::string> lines;
    for (int w = 2; w <= n; ++w) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t r = 0; r < dim; ++r) {
            const std::uint64_t alpha = dim - 1 - r;
            if (weight(alpha) != w) continue;
            std::string lhs = "a_" + std::string(static_cast<std::size_t>(n), '0');
            if (w - 1 > 1) lhs += "^" + std::to_string(w - 1);
            lhs += "*a_" + index_to_bits(alpha, n);
            std::string rhs;
            for (int i = 1; i <= n; ++i)
                if (bit_at(alpha, i, n)) {
                    if (!rhs.empty()) rhs += "*";
                    rhs += "a_" + index_to_bits(unit_mask(i, n), n);
                }
            lines.push_back(lhs + " = " + rhs);
        }
    }
    return lines;
}

PureState rebuild(const Factorization& f) {
    std::vector<PureState> singles;
    singles.reserve(f.factors.size());
    for (const auto& [c0, c1] : f.factors) singles.emplace_back(1, std::vector<cplx>{c0, c1});
    PureState out = tensor(singles);
    for (std::uint64_t s = 0; s < out.dim(); ++s) out.amp(s) *= f.scalar;
    return out;
}

namespace {

Factorization make_factorization(const PureState& relabeled, std::uint64_t mask) {
    const int n = relabeled.qubits();
    Factorization f;
    f.flip_mask = mask;
    f.scalar = relabeled.amp(0);
    f.factors.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const cplx ratio = relabeled.amp(unit_mask(i, n)) / relabeled.amp(0);
        cplx c0{1.0, 0.0}, c1 = ratio;
        if (bit_at(mask, i, n)) std::swap(c0, c1);
        // Gauge: keep c0 = 1 whenever possible, folding the rest into k.
        if (std::abs(c0) > 1e-150) {
            f.scalar *= c0;
            c1 /= c0;
            c0 = cplx{1.0, 0.0};
        }
        f.factors.emplace_back(c0, c1);
    }
    return f;
}

}  // namespace

ProductCheck is_product(const PureState& state, double tol) {
    if (state.max_abs() <= 0.0) throw std::invalid_argument("all-zero state");
    const std::uint64_t mask = state.argmax_abs();
    const PureState relabeled = xor_relabel(state, mask);
    ProductCheck result{};
    result.mask = mask;
    result.is_product = true;
    result.worst_relative = 0.0;
    for (const Residual& r : criterion_residuals(relabeled)) {
        const double rel = std::abs(r.value) / r.scale;
        if (rel > result.worst_relative) {
            result.worst_relative = rel;
            result.failing_alpha = r.alpha;
        }
        if (rel > tol) result.is_product = false;
    }
    if (result.is_product) result.factorization = make_factorization(relabeled, mask);
    return result;
}

Factorization factorize(const PureState& state, double tol) {
    ProductCheck check = is_product(state, tol);
    if (!check.is_product) throw std::domain_error("factorize: entangled input");
    return *check.factorization;
}

double purity_oracle(const PureState& state, int k, double /*tol*/) {
    const int n = state.qubits();
    if (k < 1 || k > n) throw std::out_of_range("qubit index out of range");
    const double nrm = state.norm();
    if (nrm == 0.0) throw std::invalid_argument("zero state has no marginal");
    const std::uint64_t contexts = std::uint64_t{1} << (n - 1);
    cplx rho[2][2] = {};
    for (std::uint64_t c = 0; c < contexts; ++c)
        for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp)
                rho[b][bp] += state.amp(insert_bit(c, b, k, n)) *
                              std::conj(state.amp(insert_bit(c, bp, k, n)));
    double purity = 0.0;
    for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp) purity += std::norm(rho[b][bp]);
    return purity / (nrm * nrm * nrm * nrm);
}

ParseError::ParseError(int line_no, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(std::string line) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

}  // namespace

PureState read_state(std::istream& in) {
    std::string raw;
    int line_no = 0;
    int n = -1;
    std::vector<cplx> amps;
    std::vector<bool> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string kw;
            ls >> kw >> n;
            if (kw != "qubits" || ls.fail() || n < 1 || n > 20)
                throw ParseError(line_no, "expected header 'qubits N' with 1 <= N <= 20");
            amps.assign(std::size_t{1} << n, cplx{});
            seen.assign(amps.size(), false);
            continue;
        }
        std::string bits;
        double re, im;
        ls >> bits >> re >> im;
        if (ls.fail()) throw ParseError(line_no, "expected '<bitstring> <re> <im>'");
        std::string trailing;
        if (ls >> trailing) throw ParseError(line_no, "trailing tokens after amplitude");
        if (static_cast<int>(bits.size()) != n)
            throw ParseError(line_no, "bitstring length does not match the header");
        std::uint64_t index;
        try {
            index = bits_to_index(bits);
        } catch (const std::invalid_argument&) {
            throw ParseError(line_no, "bitstring must consist of 0s and 1s");
        }
        if (seen[index]) throw ParseError(line_no, "duplicate amplitude for " + bits);
        seen[index] = true;
        amps[index] = cplx{re, im};
    }
    if (n < 0) throw ParseError(line_no, "missing 'qubits N' header");
    return PureState(n, std::move(amps));
}

PureState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    return read_state(in);
}

void write_state(std::ostream& out, const PureState& state) {
    out << "qubits " << state.qubits() << "\n";
    char buf[128];
    for (std::uint64_t s = 0; s < state.dim(); ++s) {
        const cplx a = state.amp(s);
        if (a == cplx{}) continue;
        std::snprintf(buf, sizeof(buf), "%.17g %.17g", a.real(), a.imag());
        out << index_to_bits(s, state.qubits()) << " " << buf << "\n";
    }
}

}  // namespace qlink
