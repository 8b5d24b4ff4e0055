#include "tiltlab/linalg.hpp"

namespace tiltlab {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Rational& y = rhs.at(k, j);
                if (y != 0) out.at(i, j) += x * y;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix diff: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::col(int c) const {
    Matrix out(rows_, 1);
    for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, c);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_integral() const {
    for (const auto& x : a_)
        if (denominator(x) != 1) return false;
    return true;
}

Rational Matrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

namespace {

// Fraction-free elimination (one-step Bareiss); all divisions exact.
long long rank_integer(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<Int> a(size_t(rows) * size_t(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[size_t(i) * cols + j] = numerator(m.at(i, j));
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[size_t(i) * cols + c] != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a[size_t(p) * cols + j], a[size_t(r) * cols + j]);
        const Int pivot = a[size_t(r) * cols + c];
        for (int i = r + 1; i < rows; ++i) {
            const Int head = a[size_t(i) * cols + c];
            for (int j = c + 1; j < cols; ++j)
                a[size_t(i) * cols + j] = (pivot * a[size_t(i) * cols + j] - head * a[size_t(r) * cols + j]) / prev;
            a[size_t(i) * cols + c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

} // namespace

long long rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.is_integral()) return rank_integer(m);
    std::vector<int> pivots;
    rref(m, &pivots);
    return (long long)pivots.size();
}

Matrix rref(Matrix m, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        const Rational inv = m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return m;
}

Matrix nullspace(const Matrix& m) {
    if (m.cols() == 0) return Matrix(0, 0);
    if (m.rows() == 0) return Matrix::identity(m.cols());
    std::vector<int> pivots;
    Matrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    const int dim = m.cols() - (int)pivots.size();
    Matrix out(m.cols(), dim);
    int col = 0;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        out.at(free, col) = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) out.at(pivots[pr], col) = -r.at((int)pr, free);
        ++col;
    }
    return out;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    std::vector<int> pivots;
    Matrix r = rref(Matrix::hconcat(a, b), &pivots);
    Matrix x(a.cols(), b.cols());
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] >= a.cols()) throw std::domain_error("solve: inconsistent system");
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[pr], j) = r.at((int)pr, a.cols() + j);
    }
    return x;
}

Matrix solve_unique(const Matrix& a, const Matrix& b) {
    if (rank(a) != a.cols()) throw std::domain_error("solve_unique: matrix not of full column rank");
    return solve(a, b);
}

Matrix solve_left(const Matrix& a, const Matrix& b) {
    return solve_unique(a.transposed(), b.transposed()).transposed();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    return solve_unique(m, Matrix::identity(m.rows()));
}

} // namespace tiltlab
