// pure_state.hpp
// Dense pure states over n qubits and the polynomial product-state criterion:
// a state is a full tensor product exactly when
//     a_{0..0}^{|alpha|-1} a_alpha = prod_{i in alpha} a_{e_i}
// holds for every binary string alpha. States need not be normalized; the
// equations are homogeneous of equal degree on both sides.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlink/bitstring.hpp"

namespace qlink {

class PureState {
public:
    explicit PureState(int n);
    PureState(int n, std::vector<cplx> amplitudes);

    int qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    cplx& amp(std::uint64_t index) { return amps_[index]; }
    const cplx& amp(std::uint64_t index) const { return amps_[index]; }
    const std::vector<cplx>& amplitudes() const { return amps_; }

    double norm() const;
    double max_abs() const;
    std::uint64_t argmax_abs() const;  // lowest index on ties

private:
    int n_;
    std::vector<cplx> amps_;
};

PureState tensor(const std::vector<PureState>& factors);
PureState xor_relabel(const PureState& state, std::uint64_t mask);

struct Residual {
    std::uint64_t alpha;  // weight >= 2
    cplx value;           // a_0^{|alpha|-1} a_alpha - prod a_{e_i}
    double scale;         // max modulus of the two sides (floored)
};

std::vector<Residual> criterion_residuals(const PureState& state);

// The criterion equations rendered symbolically, one line per alpha with
// weight >= 2, grouped by weight and by descending index within a weight,
// e.g. "a_000*a_110 = a_100*a_010".
std::vector<std::string> criterion_equations(int n);

struct Factorization {
    cplx scalar;                            // overall constant k
    std::vector<std::pair<cplx, cplx>> factors;  // (c0_i, c1_i), qubit order
    std::uint64_t flip_mask;                // relabeling used internally
};

// k * tensor(factors); the flip mask is already folded into the factors.
PureState rebuild(const Factorization& f);

struct ProductCheck {
    bool is_product;
    std::optional<Factorization> factorization;  // set when product
    std::uint64_t failing_alpha;  // in relabeled coordinates, when entangled
    double worst_relative;        // max |residual| / scale seen
    std::uint64_t mask;           // relabeling applied before the residuals
};

ProductCheck is_product(const PureState& state, double tol = 1e-9);
Factorization factorize(const PureState& state, double tol = 1e-9);

// tr(rho_k^2) for the single-qubit marginal at position k (1-based).
// Normalizes internally; throws on the zero state.
double purity_oracle(const PureState& state, int k, double tol = 1e-9);

// Text format: header "qubits N", then one "<bitstring> <re> <im>" line per
// nonzero amplitude; '#' starts a comment. Amplitudes written with 17
// significant digits so binary64 round-trips exactly.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what);
    int line;
};

PureState read_state(std::istream& in);
PureState read_state_file(const std::string& path);
void write_state(std::ostream& out, const PureState& state);

}  // namespace qlink
