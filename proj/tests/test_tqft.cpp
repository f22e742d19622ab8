#include "z2gg/tqft.hpp"

#include "z2gg/errors.hpp"
#include "z2gg/lattice.hpp"

#include <doctest.h>

using namespace z2gg;

TEST_CASE("dyadic normalization") {
    CHECK(Dyadic::make(4, 2) == Dyadic::make(1, 0));
    CHECK(Dyadic::make(6, 2).to_string() == "3/2");
    CHECK(Dyadic::make(0, 3).to_string() == "0");
    CHECK(Dyadic::make(-2, 1).to_string() == "-1");
}

TEST_CASE("classical partition values") {
    CohomologyRing rp2 = CohomologyRing::build(builtin("rp2_6").complex);
    TheoryHandle a2 = make_theory("a^2", 2);
    CHECK(classical_partition(a2, rp2, rp2.zero()) == 1);
    CHECK(classical_partition(a2, rp2, rp2.h1_class(1)) == -1);
    TheoryHandle tw = make_theory("a^2 + w1^2", 2);
    CHECK(classical_partition(tw, rp2, rp2.zero()) == -1);
}

TEST_CASE("quantum partition functions") {
    CohomologyRing rp2 = CohomologyRing::build(builtin("rp2_6").complex);
    CHECK(quantum_partition(make_theory("gds", 2), rp2) == Dyadic::make(1, 0));
    CHECK(quantum_partition(make_theory("beta2", 2), rp2) == Dyadic::make(0, 0));

    CohomologyRing t2 =
        CohomologyRing::build(builtin("product(circle(3),circle(3))").complex);
    CHECK(quantum_partition(make_theory("dw0", 2), t2) == Dyadic::make(2, 0));

    // DW0 partition = |H^1| / 2^#components on every built-in
    for (const char* name :
         {"circle(3)", "sphere(2)", "rp2_6", "torus_7", "klein_8", "rp3_11", "cp2_9"}) {
        CohomologyRing ring = CohomologyRing::build(builtin(name).complex);
        Dyadic z = quantum_partition(make_theory("dw0", ring.dim()), ring);
        CHECK(z == Dyadic::make(1l << ring.betti(1), ring.num_components()));
    }
}

TEST_CASE("state dimensions") {
    // DW0 dimension = 2^b1 always
    for (const char* name : {"circle(4)", "sphere(2)", "rp2_6", "torus_7", "klein_8"}) {
        CohomologyRing ring = CohomologyRing::build(builtin(name).complex);
        TheoryHandle dw0 = make_theory("dw0", ring.dim() + 1);
        CHECK(state_dim(dw0, ring).dim == (1l << ring.betti(1)));
    }
    CohomologyRing rp3 = CohomologyRing::build(builtin("rp3_11").complex);
    CHECK(state_dim(make_theory("gds", 4), rp3).dim == 2);
    CohomologyRing s2rp2 =
        CohomologyRing::build(builtin("product(sphere(2),rp2_6)").complex);
    CHECK(state_dim(make_theory("gds", 5), s2rp2).dim == 2);
    CHECK_THROWS_WITH_AS(state_dim(make_theory("gds", 3), rp3),
                         doctest::Contains("DegreeMismatch"), Error);
}

TEST_CASE("state dims match lattice permitted classes per class index") {
    for (const char* name : {"sphere(2)", "rp2_6", "torus_7", "klein_8", "rp3_11", "cp2_9",
                             "product(circle(3),circle(3))", "product(circle(3),rp2_6)"}) {
        ManifoldRecord rec = builtin(name);
        CohomologyRing ring = CohomologyRing::build(rec.complex);
        TheoryHandle gds = make_theory("gds", ring.dim() + 1);
        StateSpaceResult t = state_dim(gds, ring, rec.name);
        GroundStateReport l = ground_dim(rec.complex, Model::GDS, rec.name);
        CHECK(t.dim == l.dim);
        CHECK(t.permitted == l.permitted);
        // full character tables agree class-by-class, not just the dims
        FlatClassSet classes = flat_classes(rec.complex);
        CharacterTable lattice = character_table(rec.complex, classes);
        auto tqft = theory_characters(gds, ring);
        REQUIRE(lattice.chars.size() == tqft.size());
        for (std::size_t c = 0; c < tqft.size(); ++c) CHECK(lattice.chars[c] == tqft[c]);
    }
}

TEST_CASE("theory comparison") {
    std::vector<std::string> names = {"sphere(2)", "torus_7", "rp2_6", "klein_8"};
    std::vector<CohomologyRing> owned;
    owned.reserve(names.size());
    std::vector<const CohomologyRing*> rings;
    for (const auto& n : names) {
        owned.push_back(CohomologyRing::build(builtin(n).complex));
        rings.push_back(&owned.back());
    }
    std::vector<TheoryHandle> theories = {make_theory("gds", 3), make_theory("dw^n", 3),
                                          make_theory("dw0", 3)};
    ComparisonTable table = compare_theories(theories, rings, names);
    CHECK(table.equal[0][1]);        // dim3isom: GDS and alpha^3 agree
    CHECK_FALSE(table.equal[0][2]);  // but not DW0 (rp2_6 separates them)
    // literal per-class values on rp2_6 are swapped between GDS and alpha^3
    const auto& rp2row = table.rows[2];
    CHECK(rp2row.columns[0].characters[0] == std::vector<int>{-1});
    CHECK(rp2row.columns[0].characters[1] == std::vector<int>{1});
    CHECK(rp2row.columns[1].characters[0] == std::vector<int>{1});
    CHECK(rp2row.columns[1].characters[1] == std::vector<int>{-1});
    // rendering smoke checks
    CHECK(table.to_text().find("manifold") == 0);
    CHECK(table.to_json().find("\"theories\"") != std::string::npos);
}

TEST_CASE("even ambient dimension: GDS column equals DW0 column") {
    std::vector<std::string> names = {"sphere(3)", "rp3_11"};
    std::vector<CohomologyRing> owned;
    owned.reserve(names.size());
    std::vector<const CohomologyRing*> rings;
    for (const auto& n : names) {
        owned.push_back(CohomologyRing::build(builtin(n).complex));
        rings.push_back(&owned.back());
    }
    std::vector<TheoryHandle> theories = {make_theory("gds", 4), make_theory("dw0", 4)};
    ComparisonTable table = compare_theories(theories, rings, names);
    CHECK(table.equal[0][1]);
}

TEST_CASE("trace identity") {
    CHECK(trace_identity_check(make_theory("dw0", 2), builtin("circle(3)")));
    CHECK(trace_identity_check(make_theory("gds", 2), builtin("circle(3)")));
    CHECK(trace_identity_check(make_theory("gds", 3), builtin("rp2_6")));
}

TEST_CASE("orientation twist invariance of the quantum theory") {
    std::vector<ManifoldRecord> circles;
    for (int m = 3; m <= 6; ++m) circles.push_back(builtin("circle(" + std::to_string(m) + ")"));
    CHECK(w1_twist_check(dw_lagrangian(2), circles));
    // the twist is nontrivial classically
    CohomologyRing rp2 = CohomologyRing::build(builtin("rp2_6").complex);
    TheoryHandle a2 = make_theory("a^2", 2);
    TheoryHandle tw{"tw", orientation_twist(dw_lagrangian(2)), 2};
    CHECK(classical_partition(a2, rp2, rp2.zero()) !=
          classical_partition(tw, rp2, rp2.zero()));
    // surfaces for alpha^3
    std::vector<ManifoldRecord> surfaces = {builtin("sphere(2)"), builtin("rp2_6"),
                                            builtin("torus_7")};
    CHECK(w1_twist_check(dw_lagrangian(3), surfaces));
}

TEST_CASE("theory spec parsing") {
    CHECK(make_theory("gds", 3).beta == gds_lagrangian(3));
    CHECK(make_theory("dw^3", 3).beta == dw_lagrangian(3));
    CHECK(make_theory("w2*a", 3).beta == parse_lagrangian("w2*a"));
    CHECK(make_theory("0", 4).beta.degree == 4);
    CHECK_THROWS_AS(make_theory("dw^2", 3), Error);
    CHECK_THROWS_AS(make_theory("a^2", 3), Error);
}
