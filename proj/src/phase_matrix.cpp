#include "qlink/phase_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qlink/pure_state.hpp"  // ParseError

namespace qlink {

PhaseMatrix::PhaseMatrix(int n) : n_(n) {
    if (n < 1 || n > 6) throw std::invalid_argument("phase matrix string length out of range [1,6]");
    m_.assign((std::uint64_t{1} << n) * (std::uint64_t{1} << n), cplx{1.0, 0.0});
}

void PhaseMatrix::set_constant_diagonal(cplx lambda) {
    for (std::uint64_t a = 0; a < dim(); ++a) set(a, a, lambda);
    lambda_ = lambda;
}

cplx PhaseMatrix::lambda_or_throw() const {
    if (!lambda_) throw std::invalid_argument("phase matrix has no constant diagonal lambda");
    return *lambda_;
}

void PhaseMatrix::validate(double tol) const {
    for (std::uint64_t a = 0; a < dim(); ++a)
        for (std::uint64_t b = 0; b < dim(); ++b)
            if (std::abs(std::abs(entry(a, b)) - 1.0) > tol)
                throw std::invalid_argument("phase matrix entry off the unit circle at (" +
                                            index_to_bits(a, n_) + "," + index_to_bits(b, n_) + ")");
    if (lambda_)
        for (std::uint64_t a = 0; a < dim(); ++a)
            if (std::abs(entry(a, a) - *lambda_) > tol)
                throw std::invalid_argument("diagonal entry deviates from lambda at " +
                                            index_to_bits(a, n_));
}

namespace {

std::string strip(std::string line) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

}  // namespace

PhaseMatrix read_phase_matrix(std::istream& in) {
    std::string raw;
    int line_no = 0;
    std::optional<PhaseMatrix> m;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (!m) {
            std::string kw, nfield;
            ls >> kw >> nfield;
            int n = 0;
            if (kw != "phase-matrix" || nfield.rfind("n=", 0) != 0 ||
                (n = std::atoi(nfield.c_str() + 2)) < 1 || n > 6)
                throw ParseError(line_no, "expected header 'phase-matrix n=<N>' with 1 <= N <= 6");
            m.emplace(n);
            std::string lfield;
            if (ls >> lfield) {
                if (lfield.rfind("lambda=", 0) != 0)
                    throw ParseError(line_no, "expected 'lambda=<re> <im>' after n");
                double re = std::atof(lfield.c_str() + 7), im = 0.0;
                if (!(ls >> im)) throw ParseError(line_no, "lambda needs both re and im parts");
                const cplx lambda{re, im};
                if (std::abs(std::abs(lambda) - 1.0) > 1e-9)
                    throw ParseError(line_no, "lambda must have modulus 1");
                m->set_constant_diagonal(lambda);
            }
            continue;
        }
        std::string abits, bbits;
        double angle;
        ls >> abits >> bbits >> angle;
        if (ls.fail()) throw ParseError(line_no, "expected '<alpha> <beta> <angle-in-radians>'");
        if (static_cast<int>(abits.size()) != m->string_length() ||
            static_cast<int>(bbits.size()) != m->string_length())
            throw ParseError(line_no, "string length does not match the header");
        std::uint64_t a, b;
        try {
            a = bits_to_index(abits);
            b = bits_to_index(bbits);
        } catch (const std::invalid_argument&) {
            throw ParseError(line_no, "strings must consist of 0s and 1s");
        }
        if (a == b && m->diagonal_lambda())
            throw ParseError(line_no, "diagonal entries must not be listed when lambda is set");
        m->set(a, b, cplx{std::cos(angle), std::sin(angle)});
    }
    if (!m) throw ParseError(line_no, "missing 'phase-matrix n=<N>' header");
    return *m;
}

PhaseMatrix read_phase_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open phase matrix file: " + path);
    return read_phase_matrix(in);
}

void write_phase_matrix(std::ostream& out, const PhaseMatrix& m) {
    char buf[128];
    out << "phase-matrix n=" << m.string_length();
    if (m.diagonal_lambda()) {
        const cplx l = *m.diagonal_lambda();
        std::snprintf(buf, sizeof(buf), " lambda=%.17g %.17g", l.real(), l.imag());
        out << buf;
    }
    out << "\n";
    for (std::uint64_t a = 0; a < m.dim(); ++a)
        for (std::uint64_t b = 0; b < m.dim(); ++b) {
            if (a == b && m.diagonal_lambda()) continue;
            const double angle = std::arg(m.entry(a, b));
            if (angle == 0.0) continue;
            std::snprintf(buf, sizeof(buf), "%.17g", angle);
            out << index_to_bits(a, m.string_length()) << " "
                << index_to_bits(b, m.string_length()) << " " << buf << "\n";
        }
}

}  // namespace qlink
