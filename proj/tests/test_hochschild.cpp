#include <catch2/catch_amalgamated.hpp>

#include "zalg/hochschild.hpp"

#include "bar_oracle.hpp"

using namespace zalg;



TEST_CASE("hochschild dims of the Kronecker algebra") {
    auto w = realize_window<Rational>(projective_space(1), -2, 2);
    auto kron = extract_thread(w, 0, 1);
    auto h = hochschild_dims(kron, 2);
    CHECK(h == std::vector<std::size_t>{1, 3, 0});
}

TEST_CASE("hochschild dims of the Beilinson P^2 algebra") {
    auto w = realize_window<Rational>(projective_space(2), -2, 2);
    auto beil = extract_thread(w, 0, 2);
    auto h = hochschild_dims(beil, 2);
    CHECK(h == std::vector<std::size_t>{1, 8, 10});
}

TEST_CASE("separable thread: product of fields") {
    auto w = realize_window<Rational>(projective_space(1), -2, 2);
    auto pt = extract_thread(w, 0, 0);
    // several objects with no arrows between them
    GradedPresentation empty;
    auto we = realize_window<Rational>(empty, 0, 2);
    auto prod = extract_thread(we, 2, 2);
    auto h = hochschild_dims(prod, 2);
    CHECK(h == std::vector<std::size_t>{3, 0, 0});
    CHECK(hochschild_dims(pt, 2) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("the differential squares to zero through arity 3") {
    auto w = realize_window<Rational>(projective_space(2), -2, 2);
    for (auto thread : {extract_thread(w, 0, 1), extract_thread(w, 0, 2)}) {
        HochschildComplex<Rational> hh(thread, 4);
        for (int p = 0; p <= 2; ++p) {
            auto rows_p = hh.differential_rows(p);
            auto rows_q = hh.differential_rows(p + 1);
            // compose: for each output coordinate of d^{p+1}, substitute d^p rows
            for (std::size_t r = 0; r < rows_q.size(); ++r) {
                std::map<std::size_t, Rational> acc;
                for (auto& [mid, v] : rows_q[r])
                    for (auto& [c, w2] : rows_p[mid]) acc[c] += v * w2;
                for (auto& [c, v] : acc) CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("normalized complex matches the full bar-complex oracle") {
    auto w1 = realize_window<Rational>(projective_space(1), -2, 2);
    auto w2 = realize_window<Rational>(projective_space(2), -2, 2);
    {
        auto kron = extract_thread(w1, 0, 1);
        zalg_test::FullBar oracle(kron, 3);
        CHECK(oracle.cohomology(2) == hochschild_dims(kron, 2));
    }
    {
        auto p1w3 = extract_thread(w1, 1, 2); // width-3 interval of P^1
        zalg_test::FullBar oracle(p1w3, 3);
        CHECK(oracle.cohomology(2) == hochschild_dims(p1w3, 2));
    }
    {
        auto beil = extract_thread(w2, 0, 2);
        zalg_test::FullBar oracle(beil, 3);
        CHECK(oracle.cohomology(2) == hochschild_dims(beil, 2));
    }
}

TEST_CASE("interior interval dims stabilize for P^2") {
    auto w = realize_window<Rational>(projective_space(2), -3, 3);
    auto w4 = extract_thread(w, 1, 3);
    CHECK(hochschild_dims(w4, 2) == std::vector<std::size_t>{1, 8, 10});
}

TEST_CASE("h2 data and quotient coordinates") {
    auto w = realize_window<Rational>(projective_space(2), -2, 2);
    auto beil = extract_thread(w, 0, 2);
    HochschildComplex<Rational> hh(beil, 3);
    auto h2 = h2_data(hh);
    CHECK(h2.reps.size() == 10);
    // a representative maps to a unit coordinate vector
    auto c = quotient_coords(h2.boundaries, h2.reps, h2.reps[3]);
    REQUIRE(c.has_value());
    for (std::size_t i = 0; i < c->size(); ++i)
        CHECK((*c)[i] == (i == 3 ? Rational(1) : Rational(0)));
    // a boundary maps to zero
    auto rows = hh.differential_rows(1);
    std::vector<Rational> bnd(hh.dim(2), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto& [cc, v] : rows[r])
            if (cc == 0) bnd[r] += v;
    auto c0 = quotient_coords(h2.boundaries, h2.reps, bnd);
    REQUIRE(c0.has_value());
    for (auto& x : *c0) CHECK(x == 0);
}
