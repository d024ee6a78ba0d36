// bitstring.hpp
// Binary-string indexing conventions shared across the library.
//
// Convention: bit 1 of a string is the leftmost character and the most
// significant bit of the integer index. Positions are 1-based.

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlink {

using cplx = std::complex<double>;

inline int weight(std::uint64_t index) { return std::popcount(index); }

// Mask with a single 1 in position i of an n-bit string (the paper's e_i).
inline std::uint64_t unit_mask(int i, int n) {
    if (i < 1 || i > n) throw std::out_of_range("bit position out of range");
    return std::uint64_t{1} << (n - i);
}

inline bool bit_at(std::uint64_t index, int i, int n) {
    return (index & unit_mask(i, n)) != 0;
}

// Insert bit b at position pos of an (n-1)-bit context, yielding an n-bit index.
inline std::uint64_t insert_bit(std::uint64_t context, int b, int pos, int n) {
    const int low_bits = n - pos;
    const std::uint64_t low = context & ((std::uint64_t{1} << low_bits) - 1);
    const std::uint64_t high = context >> low_bits;
    return (high << (low_bits + 1)) | (std::uint64_t(b) << low_bits) | low;
}

inline std::string index_to_bits(std::uint64_t index, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
        if (bit_at(index, i, n)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

inline std::uint64_t bits_to_index(const std::string& bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bad bit character in '" + bits + "'");
        index = (index << 1) | std::uint64_t(c - '0');
    }
    return index;
}

// z^p for integer p; unit-modulus z uses conj(z) as the inverse.
inline cplx unit_ipow(cplx z, long p) {
    if (p < 0) {
        z = std::conj(z);
        p = -p;
    }
    cplx result{1.0, 0.0};
    while (p > 0) {
        if (p & 1) result *= z;
        z *= z;
        p >>= 1;
    }
    return result;
}

}  // namespace qlink
