// link_invariant.hpp
// Two-component link diagrams as lists of signed crossings, the coloring
// state sum S_K (brute force over all colorings and in closed form), and the
// writhe-normalized invariant Z_K with its linking-detection predicate.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qlink/phase_matrix.hpp"

namespace qlink {

struct Crossing {
    int comp_a;  // 1 or 2
    int comp_b;  // 1 or 2
    int sign;    // +1 or -1
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
};

struct LinkStats {
    long w1 = 0;  // self-writhe of component 1
    long w2 = 0;  // self-writhe of component 2
    long lk = 0;  // linking number (half the shared-sign sum)
    long w = 0;   // total writhe, w = w1 + w2 + 2*lk
};

// Throws if the shared-sign sum is odd (lk would not be an integer).
LinkStats stats(const LinkDiagram& d);

// Sum over colorings (alpha on K1, beta on K2) of the product of crossing
// weights: self crossings contribute M_{c,c}, shared crossings M_{alpha,beta}
// in component order; negative crossings use the conjugate entry.
cplx state_sum_bruteforce(const LinkDiagram& d, const PhaseMatrix& m);

// lambda^{w1+w2} sum_{alpha != beta} M_{alpha,beta}^{2 lk} + 2^n lambda^{w}.
// Requires a constant diagonal.
cplx state_sum_closed(const LinkStats& s, const PhaseMatrix& m);

// Z_K = lambda^{-w} S_K = sum_{alpha != beta} (M_{alpha,beta}^2/lambda^2)^{lk} + 2^n.
cplx z_invariant(const LinkStats& s, const PhaseMatrix& m);

struct LinkingDetection {
    bool detects = false;
    std::uint64_t alpha = 0;  // witness pair when detects
    std::uint64_t beta = 0;
};

// True iff some off-diagonal entry has M_{alpha,beta}^2 != lambda^2.
LinkingDetection detects_linking(const PhaseMatrix& m, double tol = 1e-9);

// Text format: one crossing per line "X <comp_a> <comp_b> <+|->";
// blank lines and '#' comments ignored.
LinkDiagram read_diagram(std::istream& in);
LinkDiagram read_diagram_file(const std::string& path);

}  // namespace qlink
