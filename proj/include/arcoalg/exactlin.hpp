// Exact dense linear algebra over the rationals.
//
// Every basis-producing routine makes rref-canonical choices, so two calls
// on equal input return bit-identical output.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcoalg {

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace lin {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return data_; }

    std::vector<Rational> column(std::size_t c) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix rows_subset(const std::vector<std::size_t>& idx) const;
    Matrix transpose() const;

    bool is_zero() const;
    bool is_identity() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Rational& s) const;
    Matrix& operator+=(const Matrix& o);

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
Matrix power(const Matrix& m, unsigned exponent);

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Columns form the canonical kernel basis: one column per free variable,
/// that variable set to 1 and the other free variables 0, in increasing
/// column order.
Matrix nullspace_basis(const Matrix& m);

/// Free (non-pivot) columns of m, matching the column order of nullspace_basis.
std::vector<std::size_t> free_columns(const Matrix& m);

/// Pivot columns of m, taken from m itself.
Matrix image_basis(const Matrix& m);

/// Particular solution of a*x = b with free variables zero, or nullopt when
/// the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square invertible matrix.
Matrix inverse(const Matrix& m);

struct SubspaceRelation {
    Matrix sum;
    Matrix intersection;
    bool a_in_b = false;
    bool b_in_a = false;
};

/// Bases are given as columns in a common ambient space.
SubspaceRelation subspace_ops(const Matrix& basis_a, const Matrix& basis_b, std::size_t ambient_dim);

/// Rows spanning the annihilator of the column space: a matrix whose kernel
/// is exactly span(basis).
Matrix cokernel_projection(const Matrix& basis, std::size_t ambient_dim);

std::string to_string(const Matrix& m);

}  // namespace lin
}  // namespace arcoalg
