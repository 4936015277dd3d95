/**
 * Dense exact linear algebra over the field Q(q). Everything is deterministic:
 * Gaussian elimination picks the first nonzero entry in column order, and all
 * division is exact, so identical inputs give identical bases.
 */

#pragma once

#include "qhom/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qhom {

class Matrix {
public:
    Matrix() = default;

    Matrix(long order, std::size_t rows, std::size_t cols)
        : order_(order), rows_(rows), cols_(cols), a_(rows * cols, CyclotomicRational(order)) {}

    static Matrix zero(long order, std::size_t rows, std::size_t cols) { return Matrix(order, rows, cols); }

    static Matrix identity(long order, std::size_t n) {
        Matrix m(order, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CyclotomicRational::one(order);
        return m;
    }

    long order() const { return order_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    CyclotomicRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const CyclotomicRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    bool operator==(const Matrix& o) const {
        return order_ == o.order_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const CyclotomicRational& s) const;

    /// Horizontal concatenation [*this | o].
    Matrix augmented(const Matrix& o) const;

    std::vector<CyclotomicRational> apply(const std::vector<CyclotomicRational>& v) const;

    Matrix column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<CyclotomicRational>& v);

private:
    long order_ = 0;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CyclotomicRational> a_;
};

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of the kernel, one column per basis vector (cols x nullity).
Matrix nullspace(const Matrix& m);

/// Indices of a maximal independent subset of columns, in column order.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Matrix whose columns are an independent spanning set of the column space.
Matrix column_space_basis(const Matrix& m);

/// Indices j such that the columns of z at those positions extend the column
/// space of b to span col(b) + col(z). Deterministic (first-fit order).
std::vector<std::size_t> extend_column_basis(const Matrix& b, const Matrix& z);

/// Solve A x = v when A has full column rank; empty if inconsistent.
std::optional<std::vector<CyclotomicRational>> solve(const Matrix& a, const std::vector<CyclotomicRational>& v);

/// True iff every column of u lies in the column space of v.
bool columns_contained(const Matrix& u, const Matrix& v);

}  // namespace qhom
