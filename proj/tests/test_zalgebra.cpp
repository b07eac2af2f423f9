#include <catch2/catch_amalgamated.hpp>

#include "zalg/window_algebra.hpp"

using namespace zalg;

namespace {

// independent oracle: monomials of degree k in v commuting variables
std::size_t monomial_count(int v, int k) {
    if (k < 0) return 0;
    // C(k + v - 1, v - 1)
    unsigned long long num = 1, den = 1;
    for (int i = 1; i <= v - 1; ++i) {
        num *= static_cast<unsigned long long>(k + i);
        den *= static_cast<unsigned long long>(i);
    }
    return static_cast<std::size_t>(num / den);
}

} // namespace

TEST_CASE("projective_space(1) dims on [-4,4]") {
    auto w = realize_window<Rational>(projective_space(1), -4, 4);
    for (int m = -4; m <= 4; ++m)
        for (int n = m; n <= 4; ++n)
            CHECK(w.dim(n, m) == static_cast<std::size_t>(n - m + 1));
}

TEST_CASE("projective_space(2) dims against the monomial oracle") {
    auto w = realize_window<Rational>(projective_space(2), 0, 4);
    CHECK(w.dim(4, 0) == 15);
    for (int m = 0; m <= 4; ++m)
        for (int n = m; n <= 4; ++n)
            CHECK(w.dim(n, m) == monomial_count(3, n - m));
}

TEST_CASE("presentation with no generators is the identity category") {
    GradedPresentation p;
    p.name = "empty";
    auto w = realize_window<Rational>(p, -2, 2);
    for (int m = -2; m <= 2; ++m)
        for (int n = m; n <= 2; ++n)
            CHECK(w.dim(n, m) == static_cast<std::size_t>(n == m ? 1 : 0));
}

TEST_CASE("truncated_infinite_polynomial(3): dim a(2,0) = 6") {
    auto w = realize_window<Rational>(truncated_infinite_polynomial(3), 0, 3);
    CHECK(w.dim(2, 0) == 6);
    CHECK(w.dim(3, 0) == monomial_count(3, 3));
}

TEST_CASE("compose: unit laws and commutativity instance") {
    auto w = realize_window<Rational>(projective_space(2), 0, 4);
    // 1_n o a = a and a o 1_m = a for every basis element
    for (int m = 0; m <= 3; ++m)
        for (int n = m; n <= 4; ++n)
            for (std::size_t i = 0; i < w.dim(n, m); ++i) {
                auto a = w.basis_element(n, m, i);
                CHECK(w.compose(w.unit(n), a).coords == a.coords);
                CHECK(w.compose(a, w.unit(m)).coords == a.coords);
            }
    // x o y = y o x in a(2,0): x at object 1 composed with y at object 0
    auto x0 = w.basis_element(1, 0, 0), y0 = w.basis_element(1, 0, 1);
    auto x1 = w.basis_element(2, 1, 0), y1 = w.basis_element(2, 1, 1);
    CHECK(w.compose(x1, y0).coords == w.compose(y1, x0).coords);

    CHECK_THROWS_AS(w.compose(x0, x1), std::invalid_argument);
}

TEST_CASE("quantum relation holds in the realized window") {
    Rational q(3, 2);
    auto w = realize_window<Rational>(quantum_projective_space(1, q), 0, 3);
    for (int m = 0; m <= 2; ++m)
        for (int n = m; n <= 3; ++n)
            CHECK(w.dim(n, m) == static_cast<std::size_t>(n - m + 1));
    // x o y - q * (y o x) = 0 in b(2,0)
    auto y0 = w.basis_element(1, 0, 1), x0 = w.basis_element(1, 0, 0);
    auto x1 = w.basis_element(2, 1, 0), y1 = w.basis_element(2, 1, 1);
    auto xy = w.compose(x1, y0), yx = w.compose(y1, x0);
    for (std::size_t i = 0; i < xy.coords.size(); ++i)
        CHECK(xy.coords[i] - q * yx.coords[i] == 0);
}

TEST_CASE("associativity and degree additivity, exhaustive on a window") {
    for (auto pres : {projective_space(1), quantum_projective_space(1, Rational(2))}) {
        auto w = realize_window<Rational>(pres, 0, 3);
        for (int l = 0; l <= 3; ++l)
            for (int m = l; m <= 3; ++m)
                for (int n = m; n <= 3; ++n)
                    for (std::size_t i = 0; i < w.dim(n, m); ++i)
                        for (std::size_t j = 0; j < w.dim(m, l); ++j) {
                            auto a = w.basis_element(n, m, i);
                            auto b = w.basis_element(m, l, j);
                            auto ab = w.compose(a, b);
                            CHECK(ab.degree() == a.degree() + b.degree());
                            for (int k = 0; k <= l; ++k) {
                                for (std::size_t q = 0; q < w.dim(l, k); ++q) {
                                    auto c = w.basis_element(l, k, q);
                                    auto lhs = w.compose(ab, c);
                                    auto rhs = w.compose(a, w.compose(b, c));
                                    CHECK(lhs.coords == rhs.coords);
                                }
                            }
                        }
    }
}

TEST_CASE("grading report") {
    auto w = realize_window<Rational>(projective_space(2), -2, 2);
    auto g = w.grading_report();
    CHECK(g.positively_graded);
    CHECK(g.connected);
    CHECK(g.locally_finite);

    // table-level degree-0 injection breaks connectedness
    auto w2 = realize_window<Rational>(projective_space(1), -2, 2);
    w2.inject_dead_element(0, 0, "u");
    CHECK_FALSE(w2.grading_report().connected);

    auto w3 = realize_window<Rational>(truncated_infinite_polynomial(5), 0, 5);
    auto g3 = w3.grading_report();
    CHECK(g3.connected);
    CHECK(g3.positively_graded);
}

TEST_CASE("finite generation window check") {
    auto hz5 = Horizon::standard(0, 5);
    auto w = realize_window<Rational>(projective_space(2), 0, 5);
    auto fg = w.is_finitely_generated_window(hz5);
    CHECK(fg.status == Status::pass);
    for (const auto& po : fg.objects)
        CHECK(WindowAlgebra<Rational>::generators_at(po) == 3);

    auto w1 = realize_window<Rational>(projective_space(1), 0, 5);
    auto fg1 = w1.is_finitely_generated_window(hz5);
    CHECK(fg1.status == Status::pass);
    for (const auto& po : fg1.objects)
        CHECK(WindowAlgebra<Rational>::generators_at(po) == 2);

    // the dead-socle fixture fails, pinpointing the object
    auto bad = dead_socle_fixture<Rational>(1, 0, 5, 1);
    auto fgb = bad.is_finitely_generated_window(hz5);
    CHECK(fgb.status == Status::fail);
    REQUIRE(fgb.pinpointed_object.has_value());
    CHECK(*fgb.pinpointed_object == 1);

    // declared generators beyond window reach cannot be certified
    GradedPresentation far = projective_space(1);
    far.generators.push_back({"g", 9, {}});
    auto wf = realize_window<Rational>(far, 0, 5);
    CHECK(wf.is_finitely_generated_window(hz5).status == Status::inconclusive);

    // window too small
    auto tiny = realize_window<Rational>(projective_space(1), 0, 1);
    CHECK(tiny.is_finitely_generated_window(Horizon::standard(0, 1)).status ==
          Status::inconclusive);
}

TEST_CASE("finite generation tracks the graded algebra on several windows") {
    // window shadow of: k[x,y] finitely generated as an algebra iff the
    // associated Z-algebra is finitely generated
    for (auto [lo, hi] : {std::pair{-3, 2}, std::pair{0, 4}, std::pair{-1, 4}}) {
        auto w = realize_window<Rational>(projective_space(1), lo, hi);
        CHECK(w.is_finitely_generated_window(Horizon::standard(lo, hi)).status == Status::pass);
    }
}

TEST_CASE("deterministic realization") {
    auto w1 = realize_window<Rational>(projective_space(2), -2, 2);
    auto w2 = realize_window<Rational>(projective_space(2), -2, 2);
    for (int m = -2; m <= 2; ++m)
        for (int n = m; n <= 2; ++n) {
            REQUIRE(w1.dim(n, m) == w2.dim(n, m));
            for (std::size_t i = 0; i < w1.dim(n, m); ++i)
                CHECK(w1.basis_label(n, m, i) == w2.basis_label(n, m, i));
        }
}

TEST_CASE("builtin validation") {
    CHECK_THROWS_AS(quantum_projective_space(1, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(projective_space(0), std::invalid_argument);
    CHECK_THROWS_AS(truncated_infinite_polynomial(0), std::invalid_argument);
    GradedPresentation bad;
    bad.generators.push_back({"x", 0, {}});
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(realize_window<Rational>(projective_space(1), 2, 1), std::invalid_argument);
}

TEST_CASE("GF(p) realization matches rational dimensions") {
    GFpContext ctx(7);
    auto wp = realize_window<GFp>(projective_space(2), 0, 3);
    auto wq = realize_window<Rational>(projective_space(2), 0, 3);
    for (int m = 0; m <= 3; ++m)
        for (int n = m; n <= 3; ++n) CHECK(wp.dim(n, m) == wq.dim(n, m));
}
