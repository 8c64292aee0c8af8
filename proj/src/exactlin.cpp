#include "arcoalg/exactlin.hpp"

#include <sstream>
#include <utility>

namespace arcoalg::lin {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ContractViolation("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw ContractViolation("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, idx[k]);
    return m;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(idx[k], c);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw ContractViolation("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                                std::to_string(o.cols_));
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (sgn(b) != 0) out(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix out = *this;
    out += o;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ContractViolation("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ContractViolation("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
    }
    return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix m(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Matrix power(const Matrix& m, unsigned exponent) {
    if (m.rows() != m.cols()) throw ContractViolation("power of a non-square matrix");
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

Rref rref(const Matrix& m) {
    Rref out{m, {}, 0};
    Matrix& a = out.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (std::size_t c = col; c < cols; ++c) std::swap(a(pivot, c), a(row, c));
        const Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < cols; ++c)
            if (sgn(a(row, c)) != 0) a(row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || sgn(a(r, col)) == 0) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < cols; ++c)
                if (sgn(a(row, c)) != 0) a(r, c) -= factor * a(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = out.pivot_cols.size();
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<std::size_t> free_columns(const Matrix& m) {
    const auto pivots = rref(m).pivot_cols;
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (p < pivots.size() && pivots[p] == c)
            ++p;
        else
            out.push_back(c);
    }
    return out;
}

Matrix nullspace_basis(const Matrix& m) {
    const Rref r = rref(m);
    std::vector<std::size_t> free;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivot_cols) is_pivot[p] = true;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);

    Matrix basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t row = 0; row < r.rank; ++row) basis(r.pivot_cols[row], k) = -r.reduced(row, free[k]);
    }
    return basis;
}

Matrix image_basis(const Matrix& m) { return m.columns(rref(m).pivot_cols); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ContractViolation("solve: row count of a and b differ");
    const Rref r = rref(hstack(a, b));
    for (auto p : r.pivot_cols)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t row = 0; row < r.rank; ++row)
        for (std::size_t c = 0; c < b.cols(); ++c) x(r.pivot_cols[row], c) = r.reduced(row, a.cols() + c);
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ContractViolation("inverse of a non-square matrix");
    auto x = solve(m, Matrix::identity(m.rows()));
    if (!x || !(m * *x).is_identity()) throw ContractViolation("inverse of a singular matrix");
    return *x;
}

SubspaceRelation subspace_ops(const Matrix& basis_a, const Matrix& basis_b, std::size_t ambient_dim) {
    if (basis_a.rows() != ambient_dim || basis_b.rows() != ambient_dim)
        throw ContractViolation("subspace_ops: ambient dimension mismatch");
    const Matrix a = image_basis(basis_a);
    const Matrix b = image_basis(basis_b);
    SubspaceRelation out;
    out.sum = image_basis(hstack(a, b));
    const Matrix kernel = nullspace_basis(hstack(a, b * Rational(-1)));
    std::vector<std::size_t> top(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) top[i] = i;
    out.intersection = image_basis(a * kernel.rows_subset(top));
    out.a_in_b = out.sum.cols() == b.cols();
    out.b_in_a = out.sum.cols() == a.cols();
    return out;
}

Matrix cokernel_projection(const Matrix& basis, std::size_t ambient_dim) {
    if (basis.rows() != ambient_dim) throw ContractViolation("cokernel_projection: ambient mismatch");
    return nullspace_basis(basis.transpose()).transpose();
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << m(r, c).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace arcoalg::lin
