#pragma once

#include <cstddef>
#include <vector>

#include "braidlab/scalar.hpp"

namespace braidlab {

// Dense matrix over Scalar with a uniform mode across all entries. Structural
// zeros are skipped in products, which keeps exact arithmetic cheap for the
// sparse tensor-product operators this library builds.
class Matrix {
public:
    Matrix() : Matrix(0, 0, Mode::exact) {}
    Matrix(std::size_t rows, std::size_t cols, Mode mode);

    static Matrix identity(std::size_t n, Mode mode);
    static Matrix diagonal(std::vector<Scalar> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Mode mode() const { return mode_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    // Mode-checked entry assignment (the only mutation path that can change mode).
    void set(std::size_t i, std::size_t j, Scalar value);

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix dagger() const;
    Matrix pow(unsigned k) const;
    Matrix kron(const Matrix& rhs) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    bool fast_zero() const;
    Scalar trace() const;
    Scalar determinant() const;
    Matrix to_float() const;

    // Largest entry modulus. Exactly 0.0 only when every entry is a structural
    // zero, so "residual == 0" certifies exact equality in exact mode.
    double max_residual() const;

private:
    void require_same_shape(const Matrix& rhs, const char* what) const;

    std::size_t rows_ = 0, cols_ = 0;
    Mode mode_ = Mode::exact;
    std::vector<Scalar> entries_;
};

// Hermitian norm and elementwise helpers for raw state vectors.
Scalar norm_squared(const std::vector<Scalar>& v);
bool vector_fast_zero(const std::vector<Scalar>& v);
double vector_max_residual(const std::vector<Scalar>& v);

}  // namespace braidlab
