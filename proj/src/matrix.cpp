#include "braidlab/matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace braidlab {

Matrix::Matrix(std::size_t rows, std::size_t cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), entries_(rows * cols, Scalar::zero(mode)) {}

Matrix Matrix::identity(std::size_t n, Mode mode) {
    Matrix out(n, n, mode);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = Scalar::one(mode);
    return out;
}

Matrix Matrix::diagonal(std::vector<Scalar> entries) {
    if (entries.empty()) throw std::invalid_argument("diagonal: empty entry list");
    Matrix out(entries.size(), entries.size(), entries.front().mode());
    for (std::size_t i = 0; i < entries.size(); ++i) out.set(i, i, std::move(entries[i]));
    return out;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    if (value.mode() != mode_)
        throw ModeMismatchError("Matrix::set: entry mode differs from matrix mode");
    entries_[i * cols_ + j] = std::move(value);
}

void Matrix::require_same_shape(const Matrix& rhs, const char* what) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    if (mode_ != rhs.mode_)
        throw ModeMismatchError(std::string(what) + ": mixed exact/float matrices");
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_shape(rhs, "Matrix::add");
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!rhs.entries_[k].fast_zero()) out.entries_[k] += rhs.entries_[k];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_shape(rhs, "Matrix::sub");
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!rhs.entries_[k].fast_zero()) out.entries_[k] -= rhs.entries_[k];
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix::mul: dimension mismatch");
    if (mode_ != rhs.mode_) throw ModeMismatchError("Matrix::mul: mixed exact/float matrices");
    Matrix out(rows_, rhs.cols_, mode_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.fast_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (b.fast_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_)
        if (!e.fast_zero()) e = -e;
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    if (c.mode() != mode_) throw ModeMismatchError("Matrix::scaled: mixed exact/float");
    Matrix out(rows_, cols_, mode_);
    if (c.fast_zero()) return out;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!entries_[k].fast_zero()) out.entries_[k] = entries_[k] * c;
    }
    return out;
}

Matrix Matrix::dagger() const {
    Matrix out(cols_, rows_, mode_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).fast_zero()) out.at(j, i) = at(i, j).conj();
    return out;
}

Matrix Matrix::pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: not square");
    Matrix acc = identity(rows_, mode_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Matrix Matrix::kron(const Matrix& rhs) const {
    if (mode_ != rhs.mode_) throw ModeMismatchError("Matrix::kron: mixed exact/float");
    Matrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, mode_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.fast_zero()) continue;
            for (std::size_t p = 0; p < rhs.rows_; ++p) {
                for (std::size_t q = 0; q < rhs.cols_; ++q) {
                    const Scalar& b = rhs.at(p, q);
                    if (b.fast_zero()) continue;
                    out.at(i * rhs.rows_ + p, j * rhs.cols_ + q) = a * b;
                }
            }
        }
    }
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(mode_));
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].mode() != mode_) throw ModeMismatchError("Matrix::apply: mixed exact/float");
        if (v[j].fast_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = at(i, j);
            if (a.fast_zero()) continue;
            out[i] += a * v[j];
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != rhs.entries_[k]) return false;
    return true;
}

bool Matrix::fast_zero() const {
    for (const auto& e : entries_)
        if (!e.fast_zero()) return false;
    return true;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::trace: not square");
    Scalar acc = Scalar::zero(mode_);
    for (std::size_t i = 0; i < rows_; ++i) acc += at(i, i);
    return acc;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::determinant: not square");
    Matrix work = *this;
    Scalar det = Scalar::one(mode_);
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).fast_zero()) ++pivot;
        if (pivot == n) return Scalar::zero(mode_);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        const Scalar p = work.at(col, col);
        det = det * p;
        const Scalar inv = p.inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (work.at(i, col).fast_zero()) continue;
            const Scalar f = work.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) {
                if (!work.at(col, j).fast_zero()) work.at(i, j) -= f * work.at(col, j);
            }
        }
    }
    return det;
}

Matrix Matrix::to_float() const {
    Matrix out(rows_, cols_, Mode::floating);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].to_float();
    return out;
}

double Matrix::max_residual() const {
    double worst = 0.0;
    for (const auto& e : entries_) {
        if (e.fast_zero()) continue;
        double mag = std::abs(e.approx());
        // An exactly nonzero entry must never report as a zero residual.
        if (e.is_exact()) mag = std::max(mag, std::numeric_limits<double>::min());
        worst = std::max(worst, mag);
    }
    return worst;
}

Scalar norm_squared(const std::vector<Scalar>& v) {
    if (v.empty()) throw std::invalid_argument("norm_squared: empty vector");
    Scalar acc = Scalar::zero(v.front().mode());
    for (const auto& a : v) {
        if (a.fast_zero()) continue;
        acc += a.conj() * a;
    }
    return acc;
}

bool vector_fast_zero(const std::vector<Scalar>& v) {
    for (const auto& a : v)
        if (!a.fast_zero()) return false;
    return true;
}

double vector_max_residual(const std::vector<Scalar>& v) {
    double worst = 0.0;
    for (const auto& a : v) {
        if (a.fast_zero()) continue;
        double mag = std::abs(a.approx());
        if (a.is_exact()) mag = std::max(mag, std::numeric_limits<double>::min());
        worst = std::max(worst, mag);
    }
    return worst;
}

}  // namespace braidlab
