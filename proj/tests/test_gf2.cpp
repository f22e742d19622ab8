#include "z2gg/gf2.hpp"

#include <doctest.h>

#include <random>

using namespace z2gg;

namespace {

gf2::Matrix random_matrix(int rows, int cols, std::mt19937& rng, double density = 0.5) {
    gf2::Matrix m(rows, cols);
    std::bernoulli_distribution coin(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng)) m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("gf2 vector basics") {
    gf2::Vec v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.popcount() == 3);
    CHECK(v.first_set() == 0);
    v.flip(0);
    CHECK(v.first_set() == 64);
    gf2::Vec w(130);
    w.set(64, true);
    CHECK(v.dot(w));
    v ^= w;
    CHECK(v.popcount() == 1);
}

TEST_CASE("rank and nullspace on known matrices") {
    // identity
    gf2::Matrix id(5, 5);
    for (int i = 0; i < 5; ++i) id.set(i, i, true);
    CHECK(gf2::rank(id) == 5);
    CHECK(gf2::nullspace(id).empty());

    // duplicated rows
    gf2::Matrix dup(4, 3);
    dup.set(0, 0, true);
    dup.set(1, 0, true);
    dup.set(2, 1, true);
    dup.set(3, 1, true);
    CHECK(gf2::rank(dup) == 2);
    CHECK(gf2::nullspace(dup).size() == 1);

    // zero matrix: nullspace is everything
    gf2::Matrix z(3, 4);
    CHECK(gf2::rank(z) == 0);
    CHECK(gf2::nullspace(z).size() == 4);
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        gf2::Matrix m = random_matrix(60 + trial, 90, rng);
        gf2::Echelon a = gf2::eliminate(m, gf2::Kernel::Serial);
        gf2::Echelon b = gf2::eliminate(m, gf2::Kernel::Parallel);
        CHECK(a.rank == b.rank);
        CHECK(a.pivot_cols == b.pivot_cols);
        for (int r = 0; r < a.reduced.rows(); ++r) CHECK(a.reduced.row(r) == b.reduced.row(r));
    }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        gf2::Matrix m = random_matrix(18, 12, rng);
        gf2::Vec x(12);
        std::bernoulli_distribution coin(0.5);
        for (int c = 0; c < 12; ++c)
            if (coin(rng)) x.set(c, true);
        gf2::Vec b = m.apply(x);
        auto sol = gf2::solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
    gf2::Matrix m(2, 2);  // 0 = 1 is inconsistent
    gf2::Vec b(2);
    b.set(0, true);
    CHECK_FALSE(gf2::solve(m, b).has_value());
}

TEST_CASE("reducer canonicalizes cosets with lex-least representatives") {
    gf2::Reducer red(6);
    gf2::Vec a(6), b(6);
    a.set(0, true);
    a.set(3, true);
    b.set(1, true);
    b.set(3, true);
    red.insert(a);
    red.insert(b);
    CHECK(red.rank() == 2);
    // reduce a coset element: zeros at both pivots
    gf2::Vec x(6);
    x.set(0, true);
    x.set(1, true);
    x.set(5, true);
    red.reduce(x);
    CHECK_FALSE(x.get(0));
    CHECK_FALSE(x.get(1));
    CHECK(x.get(5));
}

TEST_CASE("reducer tags track coordinates") {
    gf2::Reducer red(4, 2);
    gf2::Vec r0(4), r1(4);
    r0.set(0, true);
    r1.set(1, true);
    gf2::Vec t0(2), t1(2);
    t0.set(0, true);
    t1.set(1, true);
    red.insert(r0, t0);
    red.insert(r1, t1);
    gf2::Vec x(4), acc(2);
    x.set(0, true);
    x.set(1, true);
    red.reduce(x, &acc);
    CHECK(x.is_zero());
    CHECK(acc.get(0));
    CHECK(acc.get(1));
}
