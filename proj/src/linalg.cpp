#include "qhom/linalg.hpp"

#include <stdexcept>

namespace qhom {

Matrix Matrix::operator+(const Matrix& o) const {
    if (!same_shape(o)) throw std::invalid_argument("matrix shape mismatch in +");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (!same_shape(o)) throw std::invalid_argument("matrix shape mismatch in -");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    Matrix r(order_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::scaled(const CyclotomicRational& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

Matrix Matrix::augmented(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("matrix row mismatch in augment");
    Matrix r(order_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

std::vector<CyclotomicRational> Matrix::apply(const std::vector<CyclotomicRational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch in apply");
    std::vector<CyclotomicRational> r(rows_, CyclotomicRational(order_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::column(std::size_t j) const {
    Matrix r(order_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

void Matrix::set_column(std::size_t j, const std::vector<CyclotomicRational>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // First nonzero entry in this column at or below `row`.
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        auto inv = try_invert(m.at(row, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= *inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            CyclotomicRational f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix basis(m.order(), m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(f, k) = CyclotomicRational::one(m.order());
        for (std::size_t i = 0; i < pivots.size(); ++i) basis.at(pivots[i], k) = -r.at(i, f);
    }
    return basis;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
    Matrix r = m;
    return rref(r);
}

Matrix column_space_basis(const Matrix& m) {
    auto idx = independent_columns(m);
    Matrix r(m.order(), m.rows(), idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) r.at(i, k) = m.at(i, idx[k]);
    return r;
}

std::vector<std::size_t> extend_column_basis(const Matrix& b, const Matrix& z) {
    if (b.rows() != z.rows()) throw std::invalid_argument("row mismatch in extend_column_basis");
    Matrix acc = b;
    std::size_t r = rank(acc);
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < z.cols(); ++j) {
        Matrix trial = acc.augmented(z.column(j));
        std::size_t tr = rank(trial);
        if (tr > r) {
            acc = std::move(trial);
            r = tr;
            chosen.push_back(j);
        }
    }
    return chosen;
}

std::optional<std::vector<CyclotomicRational>> solve(const Matrix& a, const std::vector<CyclotomicRational>& v) {
    if (v.size() != a.rows()) throw std::invalid_argument("rhs length mismatch in solve");
    Matrix aug(a.order(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = v[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    std::vector<CyclotomicRational> x(a.cols(), CyclotomicRational(a.order()));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

bool columns_contained(const Matrix& u, const Matrix& v) {
    if (u.cols() == 0) return true;
    return rank(v) == rank(v.augmented(u));
}

}  // namespace qhom
