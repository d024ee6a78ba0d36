#include "qlink/link_invariant.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "qlink/pure_state.hpp"  // ParseError

namespace qlink {

LinkStats stats(const LinkDiagram& d) {
    LinkStats s;
    long shared = 0;
    for (const Crossing& c : d.crossings) {
        if ((c.comp_a != 1 && c.comp_a != 2) || (c.comp_b != 1 && c.comp_b != 2) ||
            (c.sign != 1 && c.sign != -1))
            throw std::invalid_argument("crossing components must be 1/2 and sign +-1");
        if (c.comp_a == c.comp_b) {
            (c.comp_a == 1 ? s.w1 : s.w2) += c.sign;
        } else {
            shared += c.sign;
        }
    }
    if (shared % 2 != 0) throw std::invalid_argument("shared-sign sum is odd; lk is not an integer");
    s.lk = shared / 2;
    s.w = s.w1 + s.w2 + 2 * s.lk;
    return s;
}

cplx state_sum_bruteforce(const LinkDiagram& d, const PhaseMatrix& m) {
    const std::uint64_t dim = m.dim();
    cplx sum{};
    for (std::uint64_t alpha = 0; alpha < dim; ++alpha)
        for (std::uint64_t beta = 0; beta < dim; ++beta) {
            cplx prod{1.0, 0.0};
            for (const Crossing& c : d.crossings) {
                cplx w;
                if (c.comp_a == c.comp_b)
                    w = (c.comp_a == 1) ? m.entry(alpha, alpha) : m.entry(beta, beta);
                else
                    w = m.entry(alpha, beta);
                prod *= (c.sign > 0) ? w : std::conj(w);
            }
            sum += prod;
        }
    return sum;
}

cplx state_sum_closed(const LinkStats& s, const PhaseMatrix& m) {
    const cplx lambda = m.lambda_or_throw();
    const std::uint64_t dim = m.dim();
    cplx cross{};
    for (std::uint64_t alpha = 0; alpha < dim; ++alpha)
        for (std::uint64_t beta = 0; beta < dim; ++beta) {
            if (alpha == beta) continue;
            cross += unit_ipow(m.entry(alpha, beta), 2 * s.lk);
        }
    return unit_ipow(lambda, s.w1 + s.w2) * cross +
           double(dim) * unit_ipow(lambda, s.w1 + s.w2 + 2 * s.lk);
}

cplx z_invariant(const LinkStats& s, const PhaseMatrix& m) {
    const cplx lambda = m.lambda_or_throw();
    return unit_ipow(lambda, -s.w) * state_sum_closed(s, m);
}

LinkingDetection detects_linking(const PhaseMatrix& m, double tol) {
    const cplx lambda = m.lambda_or_throw();
    const cplx lambda2 = lambda * lambda;
    const std::uint64_t dim = m.dim();
    for (std::uint64_t alpha = 0; alpha < dim; ++alpha)
        for (std::uint64_t beta = 0; beta < dim; ++beta) {
            if (alpha == beta) continue;
            const cplx e = m.entry(alpha, beta);
            if (std::abs(e * e - lambda2) > tol) return {true, alpha, beta};
        }
    return {};
}

LinkDiagram read_diagram(std::istream& in) {
    LinkDiagram d;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag != "X") throw ParseError(line_no, "expected 'X <comp_a> <comp_b> <+|->'");
        int a, b;
        std::string sign;
        ls >> a >> b >> sign;
        if (ls.fail() || (a != 1 && a != 2) || (b != 1 && b != 2) || (sign != "+" && sign != "-"))
            throw ParseError(line_no, "expected 'X <comp_a> <comp_b> <+|->' with components 1 or 2");
        d.crossings.push_back(Crossing{a, b, sign == "+" ? 1 : -1});
    }
    return d;
}

LinkDiagram read_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open diagram file: " + path);
    return read_diagram(in);
}

}  // namespace qlink
