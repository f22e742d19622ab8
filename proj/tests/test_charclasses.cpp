#include "z2gg/charclasses.hpp"

#include "z2gg/errors.hpp"
#include "z2gg/simplicial.hpp"

#include <doctest.h>

using namespace z2gg;

namespace {

bool vec_zero(const gf2::Vec& v) { return v.is_zero(); }

Lagrangian lag(const std::string& s) { return parse_lagrangian(s); }

}  // namespace

TEST_CASE("wu and stiefel-whitney profiles") {
    for (const char* name : {"sphere(2)", "sphere(3)"}) {
        CohomologyRing ring = CohomologyRing::build(builtin(name).complex);
        auto wu = wu_classes(ring);
        auto sw = stiefel_whitney(ring);
        for (int d = 1; d <= ring.dim(); ++d) {
            CHECK(vec_zero(wu.v[d]));
            CHECK(vec_zero(sw.w[d]));
        }
    }
    {
        CohomologyRing rp2 = CohomologyRing::build(builtin("rp2_6").complex);
        auto wu = wu_classes(rp2);
        auto sw = stiefel_whitney(rp2);
        CHECK(wu.v[1].get(0));       // v1 = z, forced by Sq^1 z = z^2 != 0
        CHECK(vec_zero(wu.v[2]));    // v_k = 0 above d/2
        CHECK(sw.w[1].get(0));       // w = 1 + z + z^2
        CHECK(sw.w[2].get(0));
    }
    {
        CohomologyRing t7 = CohomologyRing::build(builtin("torus_7").complex);
        auto wu = wu_classes(t7);
        CHECK(vec_zero(wu.v[1]));
        CHECK(vec_zero(wu.v[2]));
    }
    {
        CohomologyRing rp3 = CohomologyRing::build(builtin("rp3_11").complex);
        auto sw = stiefel_whitney(rp3);
        for (int d = 1; d <= 3; ++d) CHECK(vec_zero(sw.w[d]));  // RP^3 is parallelizable
        GradedClass wtop = rp3.homogeneous(3, sw.w[3]);
        CHECK(rp3.pair_top(wtop) == 0);  // chi(RP^3) = 0
    }
    {
        // w_top pairs to chi mod 2; w1 = 0 exactly for the orientable ones
        for (const char* name : {"circle(3)", "sphere(2)", "sphere(3)", "rp2_6", "torus_7",
                                 "klein_8", "rp3_11", "cp2_9"}) {
            ManifoldRecord rec = builtin(name);
            CohomologyRing ring = CohomologyRing::build(rec.complex);
            auto sw = stiefel_whitney(ring);
            GradedClass wtop = ring.homogeneous(ring.dim(), sw.w[ring.dim()]);
            long chi = rec.complex.euler_characteristic();
            CHECK(ring.pair_top(wtop) == ((chi % 2) + 2) % 2);
            bool orientable = std::string(name) != "rp2_6" && std::string(name) != "klein_8";
            CHECK(vec_zero(sw.w[1]) == orientable);
        }
    }
}

TEST_CASE("lagrangian builders") {
    CHECK(gds_lagrangian(1) == lag("a"));
    CHECK(gds_lagrangian(2) == lag("a^2 + w1*a"));
    CHECK(gds_lagrangian(3) == lag("a^3 + w1*a^2 + w2*a"));
    CHECK(dw_lagrangian(3) == lag("a^3"));
    CHECK(beta2_lagrangian(2) == lag("w1*a"));
    CHECK(beta2_lagrangian(3) == lag("a^3 + w2*a"));
    CHECK(zero_lagrangian(4).monomials.empty());
    for (int n = 1; n <= 5; ++n)  // printer and parser agree
        CHECK(parse_lagrangian(to_string(gds_lagrangian(n))) == gds_lagrangian(n));
    CHECK_THROWS_AS(lag("a^2 + w1"), Error);   // inhomogeneous
    CHECK_THROWS_AS(lag("q"), Error);
}

TEST_CASE("orientation twisting") {
    CHECK(orientation_twist(dw_lagrangian(2)) == lag("a^2 + w1^2"));
    CHECK(orientation_twist(dw_lagrangian(3)) == lag("a^3 + w1*a^2 + w1^2*a + w1^3"));
    CHECK(orientation_twist(zero_lagrangian(3)).monomials.empty());
    for (const Lagrangian& beta :
         {gds_lagrangian(4), dw_lagrangian(5), beta2_lagrangian(4), lag("w2*a^2 + w1^2*a^2")})
        CHECK(orientation_twist(orientation_twist(beta)) == beta);
}

TEST_CASE("lagrangian evaluation") {
    CohomologyRing rp2 = CohomologyRing::build(builtin("rp2_6").complex);
    GradedClass z = rp2.h1_class(1);
    CHECK(lagrangian_value(lag("a^2"), rp2, z) == 1);
    CHECK(lagrangian_value(lag("a^2 + w1^2"), rp2, rp2.zero()) == 1);
    CHECK(lagrangian_value(lag("a^2"), rp2, rp2.zero()) == 0);
    // every monomial carries an alpha factor, so a = 0 kills the value
    CHECK(lagrangian_value(gds_lagrangian(2), rp2, rp2.zero()) == 0);
    CHECK(lagrangian_value(beta2_lagrangian(2), rp2, rp2.zero()) == 0);
    // while a genuinely pure-w monomial need not vanish
    CHECK(lagrangian_value(lag("w2"), rp2, rp2.zero()) == 1);
    CHECK_THROWS_WITH_AS(lagrangian_value(lag("a^3"), rp2, z),
                         doctest::Contains("DegreeMismatch"), Error);

    // Wu-equivalence instance: w1^2 a and w2 a agree on closed 3-manifolds
    for (const char* name : {"sphere(3)", "rp3_11", "product(circle(3),rp2_6)",
                             "product(circle(3),klein_8)"}) {
        CohomologyRing ring = CohomologyRing::build(builtin(name).complex);
        for (unsigned long bits = 0; bits < (1ul << ring.betti(1)); ++bits) {
            GradedClass a = ring.h1_class(bits);
            CHECK(lagrangian_value(lag("w1^2*a"), ring, a) ==
                  lagrangian_value(lag("w2*a"), ring, a));
        }
    }
}

TEST_CASE("mapping torus characters") {
    CohomologyRing rp2 = CohomologyRing::build(builtin("rp2_6").complex);
    GradedClass t = rp2.component_indicator(0);
    CHECK(mapping_torus_character(zero_lagrangian(3), rp2, rp2.zero(), t) == 0);
    // trivial bundle not permitted (chi odd), tautological bundle permitted
    CHECK(mapping_torus_character(gds_lagrangian(3), rp2, rp2.zero(), t) == 1);
    CHECK(mapping_torus_character(gds_lagrangian(3), rp2, rp2.h1_class(1), t) == 0);
    CHECK_THROWS_WITH_AS(mapping_torus_character(gds_lagrangian(2), rp2, rp2.zero(), t),
                         doctest::Contains("DegreeMismatch"), Error);

    // trivial-bundle character = chi mod 2 across the catalog
    for (const char* name :
         {"circle(3)", "sphere(2)", "sphere(3)", "torus_7", "klein_8", "rp3_11", "cp2_9"}) {
        ManifoldRecord rec = builtin(name);
        CohomologyRing ring = CohomologyRing::build(rec.complex);
        int got = mapping_torus_character(gds_lagrangian(ring.dim() + 1), ring, ring.zero(),
                                          ring.component_indicator(0));
        CHECK(got == ((rec.complex.euler_characteristic() % 2) + 2) % 2);
    }

    // even ambient dimension: every character vanishes (GDS = DW0 there)
    for (const char* name : {"circle(3)", "circle(5)", "sphere(3)", "rp3_11",
                             "product(circle(3),rp2_6)"}) {
        CohomologyRing ring = CohomologyRing::build(builtin(name).complex);
        Lagrangian beta = gds_lagrangian(ring.dim() + 1);
        for (unsigned long bits = 0; bits < (1ul << ring.betti(1)); ++bits)
            for (int c = 0; c < ring.num_components(); ++c)
                CHECK(mapping_torus_character(beta, ring, ring.h1_class(bits),
                                              ring.component_indicator(c)) == 0);
    }
}

TEST_CASE("ccl1 pairing vanishes on odd-dimensional manifolds") {
    for (const char* name : {"circle(3)", "circle(5)", "sphere(3)", "rp3_11",
                             "product(circle(3),rp2_6)", "product(circle(3),klein_8)"}) {
        CohomologyRing ring = CohomologyRing::build(builtin(name).complex);
        REQUIRE(ring.dim() % 2 == 1);
        const auto& sw = cached_stiefel_whitney(ring);
        GradedClass w1 = ring.homogeneous(1, sw[1]);
        for (unsigned long bits = 0; bits < (1ul << ring.betti(1)); ++bits) {
            GradedClass y = ring.h1_class(bits);
            GradedClass term = ring.mul(w1, ring.power(y, ring.dim() - 1));
            CHECK(ring.pair_top(term) == 0);
        }
    }
}
