// phase_matrix.hpp
// 2^n x 2^n matrices of unit-modulus entries M_{alpha,beta}; these define the
// phased-swap operator R|alpha,beta> = M_{alpha,beta}|beta,alpha>. An
// optional constant diagonal lambda is tracked explicitly because the link
// invariant and the closed-form entanglement equations require it.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlink/bitstring.hpp"

namespace qlink {

class PhaseMatrix {
public:
    explicit PhaseMatrix(int n);  // all entries 1, no lambda

    int string_length() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }

    cplx entry(std::uint64_t alpha, std::uint64_t beta) const { return m_[alpha * dim() + beta]; }
    void set(std::uint64_t alpha, std::uint64_t beta, cplx value) { m_[alpha * dim() + beta] = value; }

    const std::optional<cplx>& diagonal_lambda() const { return lambda_; }
    void set_constant_diagonal(cplx lambda);
    cplx lambda_or_throw() const;

    // Unit modulus everywhere; constant diagonal when lambda is set.
    void validate(double tol = 1e-12) const;

private:
    int n_;
    std::vector<cplx> m_;
    std::optional<cplx> lambda_;
};

// Text format: header "phase-matrix n=<N>" optionally followed by
// "lambda=<re> <im>"; then rows "<alpha> <beta> <angle-in-radians>".
// Unlisted off-diagonal entries default to angle 0; diagonal entries must
// not be listed when lambda is set.
PhaseMatrix read_phase_matrix(std::istream& in);
PhaseMatrix read_phase_matrix_file(const std::string& path);
void write_phase_matrix(std::ostream& out, const PhaseMatrix& m);

}  // namespace qlink
