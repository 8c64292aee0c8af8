#include <doctest.h>

#include "arcoalg/exactlin.hpp"

#include <random>

using arcoalg::ContractViolation;
using namespace arcoalg::lin;

namespace {

// Laplace expansion; independent of the elimination code under test.
Rational det_laplace(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sgn(m(0, c)) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
        for (std::size_t k = 0; k < n; ++k)
            if (k != c) cols.push_back(k);
        const Rational minor = det_laplace(m.rows_subset(rows).columns(cols));
        total += (c % 2 ? -1 : 1) * m(0, c) * minor;
    }
    return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const Matrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        for (const auto& r : rs)
            for (const auto& c : cs)
                if (sgn(det_laplace(m.rows_subset(r).columns(c))) != 0) return k;
    }
    return 0;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int rank_hint) {
    std::uniform_int_distribution<int> val(-3, 3);
    // product of rows x r and r x cols keeps the rank at most r
    const std::size_t r = static_cast<std::size_t>(rank_hint);
    Matrix a(rows, r), b(r, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            a(i, j) = Rational(val(rng), 1 + (val(rng) + 3) % 3);
            a(i, j).canonicalize();
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = val(rng);
    return a * b;
}

}  // namespace

TEST_CASE("rational parsing is canonical") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("rref examples") {
    auto r = rref(Matrix{{2}});
    CHECK(r.reduced == Matrix{{1}});
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
    CHECK(r.rank == 1);

    r = rref(Matrix{{0, 0}, {0, 0}});
    CHECK(r.reduced == Matrix{{0, 0}, {0, 0}});
    CHECK(r.pivot_cols.empty());
    CHECK(r.rank == 0);

    // second row is twice the first
    r = rref(Matrix{{1, 2}, {2, 4}});
    CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
    CHECK(r.rank == 1);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace_basis(Matrix{{1, 1}}) == Matrix{{-1}, {1}});
    CHECK(nullspace_basis(Matrix::identity(3)).cols() == 0);
    const Matrix k = nullspace_basis(Matrix{{1, 2}, {2, 4}});
    REQUIRE(k.cols() == 1);
    CHECK(k == Matrix{{-2}, {1}});
}

TEST_CASE("image examples") {
    CHECK(image_basis(Matrix::identity(2)) == Matrix::identity(2));
    CHECK(image_basis(Matrix(2, 3)).cols() == 0);
    CHECK(image_basis(Matrix{{1, 2}, {2, 4}}) == Matrix{{1}, {2}});
}

TEST_CASE("solve examples") {
    const Matrix b{{3, -1}, {5, 7}};
    CHECK(*solve(Matrix::identity(2), b) == b);
    CHECK(*solve(Matrix{{1, 1}}, Matrix{{2}}) == Matrix{{2}, {0}});
    CHECK_FALSE(solve(Matrix{{0}}, Matrix{{1}}).has_value());
    CHECK_THROWS_AS(solve(Matrix{{1}}, Matrix{{1}, {2}}), ContractViolation);
}

TEST_CASE("subspace examples") {
    const Matrix e1{{1}, {0}}, e2{{0}, {1}}, diag{{1}, {1}};
    auto s = subspace_ops(e1, e2, 2);
    CHECK(s.sum.cols() == 2);
    CHECK(s.intersection.cols() == 0);

    s = subspace_ops(e1, e1, 2);
    CHECK(s.sum.cols() == 1);
    CHECK(s.intersection.cols() == 1);
    CHECK(s.a_in_b);
    CHECK(s.b_in_a);

    s = subspace_ops(diag, Matrix::identity(2), 2);
    REQUIRE(s.intersection.cols() == 1);
    CHECK(s.intersection(0, 0) == s.intersection(1, 0));
    CHECK(s.a_in_b);
    CHECK_FALSE(s.b_in_a);

    CHECK_THROWS_AS(subspace_ops(e1, Matrix{{1}}, 2), ContractViolation);
}

TEST_CASE("empty shapes behave as zero maps") {
    const Matrix a(0, 3), b(3, 0);
    CHECK(rref(a).rank == 0);
    CHECK(nullspace_basis(a) == Matrix::identity(3));
    CHECK(nullspace_basis(b).cols() == 0);
    CHECK((b * a) == Matrix(3, 3));
    CHECK((a * b).rows() == 0);
}

TEST_CASE("property: rank agrees with minors, rank-nullity, rref idempotent") {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        const Matrix m = random_matrix(rng, rows, cols, static_cast<int>(rng() % 5));
        const Rref r = rref(m);
        CHECK(r.rank == rank_by_minors(m));
        const Matrix k = nullspace_basis(m);
        CHECK(r.rank + k.cols() == cols);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
        CHECK(rref(r.reduced).reduced == r.reduced);
        for (std::size_t i = 1; i < r.pivot_cols.size(); ++i) CHECK(r.pivot_cols[i - 1] < r.pivot_cols[i]);
    }
}

TEST_CASE("property: consistent systems are solved exactly") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        const Matrix a = random_matrix(rng, rows, cols, static_cast<int>(1 + rng() % 4));
        const Matrix x0 = random_matrix(rng, cols, 2, 2);
        const Matrix b = a * x0;
        const auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("property: dim(A+B) + dim(A∩B) = dim A + dim B") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const Matrix a = image_basis(random_matrix(rng, n, 1 + rng() % n, static_cast<int>(1 + rng() % n)));
        const Matrix b = image_basis(random_matrix(rng, n, 1 + rng() % n, static_cast<int>(1 + rng() % n)));
        const auto s = subspace_ops(a, b, n);
        CHECK(s.sum.cols() + s.intersection.cols() == a.cols() + b.cols());
        // intersection vectors lie in both spaces
        CHECK(solve(a, s.intersection).has_value());
        CHECK(solve(b, s.intersection).has_value());
    }
}

TEST_CASE("inverse and power") {
    const Matrix m{{2, 1}, {1, 1}};
    CHECK((m * inverse(m)).is_identity());
    CHECK(power(m, 3) == m * m * m);
    CHECK(power(m, 0).is_identity());
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), ContractViolation);
    CHECK(det_laplace(m) == 1);
}

TEST_CASE("cokernel projection has kernel exactly the span") {
    const Matrix basis{{1}, {1}, {0}};
    const Matrix p = cokernel_projection(basis, 3);
    CHECK(p.rows() == 2);
    CHECK((p * basis).is_zero());
    CHECK(rank(p) == 2);
}
