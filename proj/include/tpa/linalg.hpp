#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace tpa {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
bool is_zero(const DenseMatrix<Scalar>& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != Scalar(0))
                return false;
    return true;
}

/// In-place Gauss-Jordan reduction to reduced row echelon form, using
/// the first nonzero entry per column as pivot (no magnitude pivoting;
/// intended for exact scalar types). Returns the pivot columns.
template <class Scalar>
std::vector<Eigen::Index> reduced_row_echelon(DenseMatrix<Scalar>& a) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index p = row;
        while (p < a.rows() && a(p, col) == Scalar(0))
            ++p;
        if (p == a.rows())
            continue;
        if (p != row)
            a.row(p).swap(a.row(row));
        a.row(row) /= a(row, col);
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            if (r != row && a(r, col) != Scalar(0))
                a.row(r) -= a(r, col) * a.row(row);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Scalar>
Eigen::Index rank_of(DenseMatrix<Scalar> a) {
    return static_cast<Eigen::Index>(reduced_row_echelon(a).size());
}

/// Basis of the right kernel {x : a x = 0}, one column per basis
/// vector, in ascending free-column order.
template <class Scalar>
DenseMatrix<Scalar> kernel_basis(DenseMatrix<Scalar> a) {
    std::vector<Eigen::Index> pivots = reduced_row_echelon(a);
    std::vector<char> is_pivot(a.cols(), 0);
    for (Eigen::Index c : pivots)
        is_pivot[c] = 1;
    DenseMatrix<Scalar> k = DenseMatrix<Scalar>::Zero(
            a.cols(), a.cols() - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index out = 0;
    for (Eigen::Index free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        k(free, out) = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            k(pivots[r], out) = -a(static_cast<Eigen::Index>(r), free);
        ++out;
    }
    return k;
}

/// Solves a X = b exactly; std::nullopt when inconsistent. Free
/// variables are set to zero.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> solve_exact(DenseMatrix<Scalar> a,
                                               DenseMatrix<Scalar> b) {
    const Eigen::Index n = a.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < n && row < a.rows(); ++col) {
        Eigen::Index p = row;
        while (p < a.rows() && a(p, col) == Scalar(0))
            ++p;
        if (p == a.rows())
            continue;
        if (p != row) {
            a.row(p).swap(a.row(row));
            b.row(p).swap(b.row(row));
        }
        Scalar pivot = a(row, col);
        a.row(row) /= pivot;
        b.row(row) /= pivot;
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            if (r != row && a(r, col) != Scalar(0)) {
                b.row(r) -= a(r, col) * b.row(row);
                a.row(r) -= a(r, col) * a.row(row);
            }
        pivots.push_back(col);
        ++row;
    }
    for (Eigen::Index r = row; r < a.rows(); ++r)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (b(r, j) != Scalar(0))
                return std::nullopt;
    DenseMatrix<Scalar> x = DenseMatrix<Scalar>::Zero(n, b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        x.row(pivots[r]) = b.row(static_cast<Eigen::Index>(r));
    return x;
}

/// Incrementally maintained subspace in mutually reduced echelon form.
/// insert() reports whether the vector enlarged the span.
template <class Scalar>
class SpanTracker {
public:
    explicit SpanTracker(Eigen::Index width) : width_(width) {}

    Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }

    DenseVector<Scalar> residual(DenseVector<Scalar> v) const {
        for (size_t r = 0; r < rows_.size(); ++r)
            if (v(pivot_[r]) != Scalar(0))
                v -= v(pivot_[r]) * rows_[r];
        return v;
    }

    bool contains(const DenseVector<Scalar>& v) const {
        DenseVector<Scalar> res = residual(v);
        for (Eigen::Index i = 0; i < res.size(); ++i)
            if (res(i) != Scalar(0))
                return false;
        return true;
    }

    bool insert(DenseVector<Scalar> v) {
        v = residual(std::move(v));
        Eigen::Index p = 0;
        while (p < width_ && v(p) == Scalar(0))
            ++p;
        if (p == width_)
            return false;
        v /= v(p);
        for (size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r](p) != Scalar(0))
                rows_[r] -= rows_[r](p) * v;
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

    void insert_columns(const DenseMatrix<Scalar>& m) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            insert(m.col(j));
    }

    /// Basis of the tracked span, one column per vector.
    DenseMatrix<Scalar> basis_columns() const {
        DenseMatrix<Scalar> b(width_, dim());
        for (Eigen::Index r = 0; r < dim(); ++r)
            b.col(r) = rows_[r];
        return b;
    }

private:
    Eigen::Index width_;
    std::vector<DenseVector<Scalar>> rows_;
    std::vector<Eigen::Index> pivot_;
};

}  // namespace tpa
