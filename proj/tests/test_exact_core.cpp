#include <catch2/catch_amalgamated.hpp>

#include "zalg/dual_linalg.hpp"
#include "zalg/matrix.hpp"
#include "zalg/sparse.hpp"

#include <random>

using namespace zalg;

namespace {
Matrix<Rational> rq(std::size_t r, std::size_t c, std::vector<long long> v) {
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(v[i * c + j]);
    return m;
}
} // namespace

TEST_CASE("rref basics") {
    auto id = Matrix<Rational>::identity(2);
    auto rr = rref(id);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});

    auto dep = rq(2, 2, {1, 2, 2, 4});
    CHECK(rank(dep) == 1);

    GFpContext ctx(3);
    Matrix<GFp> g(2, 2);
    g(0, 0) = GFp(2); g(0, 1) = GFp(1); g(1, 0) = GFp(1); g(1, 1) = GFp(1);
    CHECK(rank(g) == 2); // det = 1 != 0 mod 3
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Rational> m(4, 5);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                m(i, j) = Rational(static_cast<int>(rng() % 19) - 9);
        auto r1 = rref(m);
        auto r2 = rref(r1.r);
        CHECK(r1.r == r2.r);
        CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(Matrix<Rational>::identity(3)).empty());
    CHECK(kernel_basis(Matrix<Rational>(3, 3)).size() == 3);
    auto m = rq(1, 3, {1, 1, 0});
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 2);
    for (const auto& v : kb) {
        auto mv = m.apply(v);
        for (const auto& x : mv) CHECK(x == 0);
    }
    // independence of the returned vectors
    Matrix<Rational> stacked = Matrix<Rational>::from_cols(3, kb);
    CHECK(rank(stacked) == kb.size());
}

TEST_CASE("solve") {
    auto id = Matrix<Rational>::identity(3);
    std::vector<Rational> b{Rational(1), Rational(-2), Rational(5)};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto m = rq(2, 2, {1, 2, 2, 4});
    CHECK_FALSE(solve(m, {Rational(1), Rational(3)}).has_value());
    auto x2 = solve(m, {Rational(1), Rational(2)});
    REQUIRE(x2.has_value());
    CHECK(m.apply(*x2) == std::vector<Rational>{Rational(1), Rational(2)});

    CHECK_THROWS_AS(solve(m, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("solve recovers a preimage for every x") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Rational> m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) = Rational(static_cast<int>(rng() % 11) - 5);
        std::vector<Rational> x(4);
        for (auto& v : x) v = Rational(static_cast<int>(rng() % 11) - 5);
        auto sol = solve(m, m.apply(x));
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == m.apply(x));
    }
}

TEST_CASE("ranks over Q and GF(p) agree on small integer matrices") {
    // p beats any elementary divisor of a 4x4 matrix with entries in [-9, 9]
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix<Rational> mq(4, 4);
        GFpContext ctx(1000003);
        Matrix<GFp> mp(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                long long e = static_cast<long long>(rng() % 19) - 9;
                mq(i, j) = Rational(e);
                mp(i, j) = GFp(e);
            }
        CHECK(rank(mq) == rank(mp));
    }
}

TEST_CASE("sparse rref agrees with dense") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 6, cols = 8;
        Matrix<Rational> dense(rows, cols);
        SparseRref<Rational> el(cols);
        for (std::size_t i = 0; i < rows; ++i) {
            SparseVec<Rational> row;
            for (std::size_t j = 0; j < cols; ++j) {
                if (rng() % 3 == 0) {
                    long long e = static_cast<long long>(rng() % 7) - 3;
                    if (e == 0) continue;
                    dense(i, j) = Rational(e);
                    row.emplace_back(static_cast<std::uint32_t>(j), Rational(e));
                }
            }
            el.add_row(std::move(row));
        }
        CHECK(el.rank() == rank(dense));
        auto kb = el.kernel_basis();
        CHECK(kb.size() == cols - el.rank());
        for (const auto& kv : kb) {
            std::vector<Rational> v(cols, Rational(0));
            for (auto& [c, val] : kv) v[c] = val;
            for (const auto& x : dense.apply(v)) CHECK(x == 0);
        }
    }
}

TEST_CASE("sparse_solve") {
    // x + y = 3, x - y = 1
    std::vector<SparseVec<Rational>> rows{
        {{0, Rational(1)}, {1, Rational(1)}},
        {{0, Rational(1)}, {1, Rational(-1)}}};
    auto x = sparse_solve<Rational>(2, rows, {Rational(3), Rational(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(2));
    CHECK((*x)[1] == Rational(1));

    std::vector<SparseVec<Rational>> bad{
        {{0, Rational(1)}, {1, Rational(2)}},
        {{0, Rational(2)}, {1, Rational(4)}}};
    CHECK_FALSE(sparse_solve<Rational>(2, bad, {Rational(1), Rational(3)}).has_value());
}

TEST_CASE("dual numbers") {
    using D = Dual<Rational>;
    D e = D::eps();
    CHECK(e * e == D(0));
    D x(Rational(2), Rational(3));
    D y(Rational(-1), Rational(5));
    CHECK(reduce_eps(x * y) == reduce_eps(x) * reduce_eps(y)); // reduction is a ring map
    CHECK(reduce_eps(x + y) == reduce_eps(x) + reduce_eps(y));
    CHECK(x * x.inv() == D(1));
    CHECK_FALSE(e.is_unit());
    CHECK_THROWS_AS(e.inv(), std::domain_error);
}

TEST_CASE("free_rank_dual") {
    using D = Dual<Rational>;
    // free module of rank 3: no relations
    auto r = free_rank_dual<Rational>(3, {});
    REQUIRE(r.has_value());
    CHECK(*r == 3);

    // k = R/(eps): one generator, relation eps*g
    auto k = free_rank_dual<Rational>(1, {{D::eps()}});
    CHECK_FALSE(k.has_value());

    // R^2 / (g1 - eps g2) is free of rank 1
    auto r1 = free_rank_dual<Rational>(2, {{D(1), -D::eps()}});
    REQUIRE(r1.has_value());
    CHECK(*r1 == 1);
}

TEST_CASE("solve_dual") {
    using D = Dual<Rational>;
    Matrix<D> m(2, 2);
    m(0, 0) = D(1); m(0, 1) = D::eps();
    m(1, 0) = D(0); m(1, 1) = D(1) + D::eps();
    std::vector<D> b{D(Rational(1), Rational(1)), D(Rational(2), Rational(0))};
    auto x = solve_dual(m, b);
    REQUIRE(x.has_value());
    // verify m x = b exactly
    for (std::size_t i = 0; i < 2; ++i) {
        D acc(0);
        for (std::size_t j = 0; j < 2; ++j) acc += m(i, j) * (*x)[j];
        CHECK(acc == b[i]);
    }
}
