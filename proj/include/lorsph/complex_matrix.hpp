// Small dense complex matrix with optional weight labels on rows/columns.
// Immutable in normal use after construction; all operations return new
// values, so instances can be shared freely between threads.
#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "lorsph/errors.hpp"
#include "lorsph/half_int.hpp"
#include "lorsph/numkernel.hpp"

namespace lorsph {

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0)) {}

    /// Square matrix addressed by weights running from -l to l.
    static ComplexMatrix weight_labeled(HalfInt l) {
        std::size_t dim = static_cast<std::size_t>(l.twice()) + 1;
        ComplexMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            m.row_weights_.push_back(-l + HalfInt::whole(static_cast<int>(i)));
        m.col_weights_ = m.row_weights_;
        return m;
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex(1.0);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<HalfInt>& row_weights() const { return row_weights_; }
    const std::vector<HalfInt>& col_weights() const { return col_weights_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Entry addressed by row/column weight (requires weight labels).
    const Complex& at_weight(HalfInt m, HalfInt n) const {
        return (*this)(weight_index(row_weights_, m), weight_index(col_weights_, n));
    }
    Complex& at_weight(HalfInt m, HalfInt n) {
        return (*this)(weight_index(row_weights_, m), weight_index(col_weights_, n));
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw IndexError("ComplexMatrix: dimension mismatch in product");
        ComplexMatrix out(a.rows_, b.cols_);
        out.row_weights_ = a.row_weights_;
        out.col_weights_ = b.col_weights_;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                Complex aik = a(i, k);
                if (aik == Complex(0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw IndexError("ComplexMatrix: dimension mismatch in difference");
        ComplexMatrix out = a;
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw IndexError("ComplexMatrix: dimension mismatch in sum");
        ComplexMatrix out = a;
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }

    ComplexMatrix scaled(Complex c) const {
        ComplexMatrix out = *this;
        for (auto& v : out.data_) v *= c;
        return out;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        out.row_weights_ = col_weights_;
        out.col_weights_ = row_weights_;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    double max_norm() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Determinant of a 2x2 matrix.
    Complex det2() const {
        if (rows_ != 2 || cols_ != 2) throw IndexError("det2: matrix is not 2x2");
        return data_[0] * data_[3] - data_[1] * data_[2];
    }

private:
    static std::size_t weight_index(const std::vector<HalfInt>& ws, HalfInt w) {
        auto it = std::find(ws.begin(), ws.end(), w);
        if (it == ws.end()) throw IndexError("ComplexMatrix: weight label not present");
        return static_cast<std::size_t>(it - ws.begin());
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<HalfInt> row_weights_, col_weights_;
    std::vector<Complex> data_;
};

}  // namespace lorsph
