// matrix.hpp
// Small dense complex matrices. Everything in this project is at most
// 4096-dimensional, so a plain row-major vector is all we need.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qlink {

class CMat {
public:
    CMat() : rows_(0), cols_(0) {}
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, std::complex<double>{0.0, 0.0}) {}

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::complex<double>& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    CMat operator*(const CMat& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
        CMat out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const std::complex<double> v = at(i, k);
                if (v == std::complex<double>{}) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
            }
        return out;
    }

    CMat operator+(const CMat& rhs) const {
        check_same_shape(rhs);
        CMat out(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
        return out;
    }

    CMat operator-(const CMat& rhs) const {
        check_same_shape(rhs);
        CMat out(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
        return out;
    }

    CMat operator*(std::complex<double> s) const {
        CMat out(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
        return out;
    }

    CMat adjoint() const {
        CMat out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
        return out;
    }

    // Matrix-vector product.
    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
        std::vector<std::complex<double>> out(rows_, std::complex<double>{});
        for (std::size_t i = 0; i < rows_; ++i) {
            std::complex<double> acc{};
            for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    static CMat kron(const CMat& a, const CMat& b) {
        CMat out(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t ia = 0; ia < a.rows_; ++ia)
            for (std::size_t ja = 0; ja < a.cols_; ++ja) {
                const std::complex<double> v = a.at(ia, ja);
                if (v == std::complex<double>{}) continue;
                for (std::size_t ib = 0; ib < b.rows_; ++ib)
                    for (std::size_t jb = 0; jb < b.cols_; ++jb)
                        out.at(ia * b.rows_ + ib, ja * b.cols_ + jb) = v * b.at(ib, jb);
            }
        return out;
    }

    static double max_abs_diff(const CMat& a, const CMat& b) {
        a.check_same_shape(b);
        double m = 0.0;
        for (std::size_t i = 0; i < a.a_.size(); ++i) m = std::max(m, std::abs(a.a_[i] - b.a_[i]));
        return m;
    }

private:
    void check_same_shape(const CMat& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<std::complex<double>> a_;
};

}  // namespace qlink
