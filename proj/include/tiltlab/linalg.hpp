#ifndef TILTLAB_LINALG_HPP
#define TILTLAB_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace tiltlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense exact matrix. Dimensions in this project never exceed a few dozen
// rows, so no sparsity machinery.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const = default;

    Matrix transposed() const;
    Matrix col(int c) const;
    bool is_zero() const;
    bool is_integral() const;
    Rational trace() const;

    static Matrix hconcat(const Matrix& a, const Matrix& b);

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

long long rank(const Matrix& m);

// Reduced row echelon form; optionally reports pivot columns.
Matrix rref(Matrix m, std::vector<int>* pivot_cols = nullptr);

// Columns form a basis of the right null space.
Matrix nullspace(const Matrix& m);

// One solution X of A X = B; throws std::domain_error if inconsistent.
// Unique when A has full column rank.
Matrix solve(const Matrix& a, const Matrix& b);

// Solution of A X = B with A of full column rank (asserted).
Matrix solve_unique(const Matrix& a, const Matrix& b);

// Solution X of X A = B with A of full row rank.
Matrix solve_left(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& m);

} // namespace tiltlab

#endif
