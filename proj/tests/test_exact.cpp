#include "doctest.h"

#include "heartbox/exact.hpp"
#include "oracles.hpp"

using namespace heartbox;
using heartbox_test::fraction_free_rank;
using heartbox_test::random_matrix;

namespace {
const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec QQ = FieldSpec::rationals();
} // namespace

TEST_CASE("barrett arithmetic agrees with naive modular arithmetic") {
    for (std::uint64_t p : {2ull, 3ull, 7ull, 61ull, 1000003ull, (1ull << 61) - 1}) {
        if (!is_prime_u64(p)) continue;
        Barrett br(p);
        std::mt19937_64 rng(p);
        for (int t = 0; t < 200; ++t) {
            std::uint64_t a = rng() % p, b = rng() % p;
            CHECK(br.mul(a, b) == static_cast<std::uint64_t>(
                                      (static_cast<unsigned __int128>(a) * b) % p));
            CHECK(br.add(a, b) == (a + b) % p);
            CHECK(br.sub(a, b) == (a + p - b) % p);
            if (a != 0) CHECK(br.mul(a, br.inv(a)) == 1 % p);
        }
    }
}

TEST_CASE("rref: identity over GF(7)") {
    Matrix id = Matrix::identity(F7, 2);
    RrefResult rr = rref(id);
    CHECK(rr.reduced == id);
    CHECK(rr.rank == 2);
    CHECK(rr.pivot_cols == std::vector<int>{0, 1});
}

TEST_CASE("rref: zero matrix over Q") {
    Matrix z(QQ, 3, 3);
    RrefResult rr = rref(z);
    CHECK(rr.reduced == z);
    CHECK(rr.rank == 0);
    CHECK(rr.pivot_cols.empty());
}

TEST_CASE("rref: rank-1 example over Q") {
    Matrix m = Matrix::from_int_rows(QQ, {{1, 2}, {2, 4}});
    RrefResult rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.reduced == Matrix::from_int_rows(QQ, {{1, 2}, {0, 0}}));
}

TEST_CASE("solve_kernel examples") {
    CHECK(kernel_basis(Matrix::identity(QQ, 3)).cols() == 0);
    CHECK(kernel_basis(Matrix(F7, 2, 3)).cols() == 3);
    Matrix k = kernel_basis(Matrix::from_int_rows(QQ, {{1, 2}, {2, 4}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == Scalar::from_int(QQ, -2));
    CHECK(k.at(1, 0) == Scalar::from_int(QQ, 1));
}

TEST_CASE("kronecker examples") {
    CHECK(kronecker(Matrix::identity(QQ, 2), Matrix::identity(QQ, 3)) == Matrix::identity(QQ, 6));

    Matrix a = Matrix::from_int_rows(QQ, {{1, 2}, {3, 4}});
    Matrix c(QQ, 1, 1);
    c.set_int(0, 0, 5);
    CHECK(kronecker(a, c) == a.scaled(Scalar::from_int(QQ, 5)));

    Matrix n = Matrix::from_int_rows(F7, {{0, 1}, {0, 0}});
    Matrix nn = kronecker(n, n);
    Matrix expect(F7, 4, 4);
    expect.set_int(0, 3, 1); // single surviving product entry: a[0,1]*b[0,1]
    CHECK(nn == expect);
    CHECK_THROWS_AS(kronecker(n, Matrix::identity(QQ, 2)), Error);
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
    std::mt19937_64 rng(42);
    for (const FieldSpec& fs : {F7, QQ}) {
        for (int t = 0; t < 60; ++t) {
            int r = 1 + static_cast<int>(rng() % 10), c = 1 + static_cast<int>(rng() % 10);
            Matrix m = random_matrix(fs, r, c, rng);
            RrefResult rr = rref(m);
            RrefResult rr2 = rref(rr.reduced);
            CHECK(rr2.reduced == rr.reduced);
            CHECK(rr2.rank == rr.rank);
            Matrix k = kernel_basis(m);
            CHECK(k.cols() == c - rr.rank);
            CHECK((m * k).is_zero());
            if (k.cols() > 0) CHECK(rank(k) == k.cols());
        }
    }
}

TEST_CASE("rref rank agrees with independent fraction-free oracle") {
    std::mt19937_64 rng(7);
    for (const FieldSpec& fs : {F7, FieldSpec::prime(1000003), QQ}) {
        for (int t = 0; t < 100; ++t) {
            int r = 1 + static_cast<int>(rng() % 12), c = 1 + static_cast<int>(rng() % 12);
            Matrix m = random_matrix(fs, r, c, rng);
            CHECK(rref(m).rank == fraction_free_rank(m));
        }
    }
}

TEST_CASE("kronecker is multiplicative when shapes compose") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        int m1 = 1 + static_cast<int>(rng() % 4), n1 = 1 + static_cast<int>(rng() % 4),
            k1 = 1 + static_cast<int>(rng() % 4);
        int m2 = 1 + static_cast<int>(rng() % 4), n2 = 1 + static_cast<int>(rng() % 4),
            k2 = 1 + static_cast<int>(rng() % 4);
        Matrix a = random_matrix(F7, m1, n1, rng), c = random_matrix(F7, n1, k1, rng);
        Matrix b = random_matrix(F7, m2, n2, rng), d = random_matrix(F7, n2, k2, rng);
        CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
    }
}

TEST_CASE("serial and parallel elimination produce identical results") {
    std::mt19937_64 rng(3);
    for (const FieldSpec& fs : {F7, QQ}) {
        for (int t = 0; t < 6; ++t) {
            int n = 40 + static_cast<int>(rng() % 80);
            Matrix m = random_matrix(fs, n, n + 3, rng);
            RrefResult s = rref_serial(m), p = rref_parallel(m);
            CHECK(s.reduced == p.reduced);
            CHECK(s.rank == p.rank);
            CHECK(s.pivot_cols == p.pivot_cols);
        }
    }
}

TEST_CASE("solve and inverse") {
    std::mt19937_64 rng(5);
    Matrix a = random_matrix(F7, 6, 6, rng);
    while (rank(a) < 6) a = random_matrix(F7, 6, 6, rng);
    auto ai = inverse(a);
    REQUIRE(ai.has_value());
    CHECK(a * *ai == Matrix::identity(F7, 6));
    Matrix b = random_matrix(F7, 6, 2, rng);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    // Inconsistent system has no solution.
    Matrix sing = Matrix::from_int_rows(QQ, {{1, 2}, {2, 4}});
    Matrix rhs = Matrix::from_int_rows(QQ, {{1}, {0}});
    CHECK(!solve(sing, rhs).has_value());
    CHECK(!inverse(sing).has_value());
}

TEST_CASE("span utilities") {
    Matrix u = Matrix::from_int_rows(QQ, {{1, 0}, {0, 1}, {0, 0}});
    Matrix comp = complement_basis(u, 3);
    REQUIRE(comp.cols() == 1);
    CHECK(rank(hstack(u, comp)) == 3);

    Matrix a = Matrix::from_int_rows(QQ, {{1, 0}, {0, 1}, {0, 0}});
    Matrix b = Matrix::from_int_rows(QQ, {{0, 0}, {1, 0}, {0, 1}});
    Matrix inter = span_intersection(a, b);
    REQUIRE(inter.cols() == 1);
    // The intersection is the middle axis.
    CHECK(span_canonical(inter) == span_canonical(Matrix::from_int_rows(QQ, {{0}, {1}, {0}})));
    CHECK(in_column_space(a, inter));
    CHECK(in_column_space(b, inter));
}
