#include "z2gg/lattice.hpp"

#include "z2gg/errors.hpp"
#include "z2gg/simplicial.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace z2gg;

namespace {

SpinConfiguration zero_config(const SimplicialComplex& k) {
    return SpinConfiguration{gf2::Vec(k.count(1))};
}

SimplicialComplex two_spheres_and_rp2() {
    // sphere(2) on 0..3 disjoint from rp2_6 shifted to 4..9
    ManifoldRecord sphere = builtin("sphere(2)");
    ManifoldRecord rp2 = builtin("rp2_6");
    std::vector<Simplex> facets;
    for (const auto& f : sphere.complex.simplices(2)) facets.push_back(f);
    for (const auto& f : rp2.complex.simplices(2)) {
        Simplex g;
        for (Vertex v : f) g.push_back(v + 4);
        facets.push_back(g);
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST_CASE("holonomy and flatness") {
    SimplicialComplex s2 = builtin("sphere(2)").complex;
    SpinConfiguration s = zero_config(s2);
    for (int f = 0; f < s2.count(2); ++f) CHECK(holonomy(s2, s, f) == 0);
    s.edges.set(0, true);  // one edge of some faces
    int ones = 0;
    for (int f = 0; f < s2.count(2); ++f) ones += holonomy(s2, s, f);
    CHECK(ones == 2);  // every edge lies in exactly two triangles
    CHECK_FALSE(is_flat(s2, s));

    FlatClassSet classes = flat_classes(s2);
    for (const auto& rep : classes.representatives)
        for (int f = 0; f < s2.count(2); ++f) CHECK(holonomy(s2, rep, f) == 0);
}

TEST_CASE("flat class counts") {
    CHECK(flat_classes(builtin("sphere(2)").complex).representatives.size() == 1);
    CHECK(flat_classes(builtin("rp2_6").complex).representatives.size() == 2);
    CHECK(flat_classes(builtin("torus_7").complex).representatives.size() == 4);
    // the trivial class representative is the zero configuration
    CHECK(flat_classes(builtin("torus_7").complex).representatives[0].edges.is_zero());
}

TEST_CASE("gds signs") {
    SimplicialComplex c3 = builtin("circle(3)").complex;
    CHECK(gds_sign(c3, zero_config(c3), 0) == -1);  // Z_v empty
    SpinConfiguration s = zero_config(c3);
    s.edges.set(c3.index_of({0, 1}), true);
    CHECK(gds_sign(c3, s, 0) == 1);  // #Z_v = 1

    CHECK(gds_sign(builtin("sphere(2)").complex, zero_config(builtin("sphere(2)").complex), 2)
          == -1);

    // a lone triangle has odd #N_v, which the Z/W self-check rejects
    SimplicialComplex tri = SimplicialComplex::from_facets({{0, 1, 2}});
    CHECK_THROWS_WITH_AS(gds_sign(tri, zero_config(tri), 0),
                         doctest::Contains("InternalSignMismatch"), Error);

    // Z/W double-count consistency on random configurations (checked inside)
    std::mt19937 rng(19);
    for (const char* name : {"rp2_6", "torus_7", "klein_8", "rp3_11", "cp2_9"}) {
        SimplicialComplex k = builtin(name).complex;
        GdsSignEvaluator sgn(k);
        std::bernoulli_distribution coin(0.5);
        for (int t = 0; t < 20; ++t) {
            SpinConfiguration cfg = zero_config(k);
            for (int e = 0; e < k.count(1); ++e)
                if (coin(rng)) cfg.edges.set(e, true);
            for (int v = 0; v < k.num_vertices(); ++v)
                CHECK(std::abs(sgn.sign(cfg, v)) == 1);
        }
    }
}

TEST_CASE("vertex flips") {
    SimplicialComplex rp2 = builtin("rp2_6").complex;
    SpinConfiguration s = zero_config(rp2);
    s.edges.set(3, true);
    CHECK(vertex_flip(rp2, vertex_flip(rp2, s, 2), 2) == s);
    // flipping every vertex of a connected complex is the identity
    SpinConfiguration t = s;
    for (int v = 0; v < rp2.num_vertices(); ++v) t = vertex_flip(rp2, t, v);
    CHECK(t == s);
    // flatness preserved
    for (const auto& rep : flat_classes(rp2).representatives)
        for (int v = 0; v < rp2.num_vertices(); ++v)
            CHECK(is_flat(rp2, vertex_flip(rp2, rep, v)));
}

TEST_CASE("sigma loops") {
    SimplicialComplex s2 = builtin("sphere(2)").complex;
    CHECK(sigma_loop(s2, zero_config(s2), {}) == 1);
    std::vector<Vertex> all4 = {0, 1, 2, 3};
    CHECK(sigma_loop(s2, zero_config(s2), all4) == 1);  // chi(S^2) even

    SimplicialComplex rp2 = builtin("rp2_6").complex;
    std::vector<Vertex> all6 = {0, 1, 2, 3, 4, 5};
    CHECK(sigma_loop(rp2, zero_config(rp2), all6) == -1);  // chi(RP^2) odd

    SpinConfiguration bad = zero_config(rp2);
    bad.edges.set(0, true);
    CHECK_THROWS_WITH_AS(sigma_loop(rp2, bad, all6), doctest::Contains("NotFlat"), Error);

    // order independence
    std::mt19937 rng(29);
    for (const char* name : {"rp2_6", "torus_7", "klein_8"}) {
        SimplicialComplex k = builtin(name).complex;
        std::vector<Vertex> verts(k.num_vertices());
        std::iota(verts.begin(), verts.end(), 0);
        for (const auto& rep : flat_classes(k).representatives) {
            int ref = sigma_loop(k, rep, verts);
            for (int t = 0; t < 30; ++t) {
                std::shuffle(verts.begin(), verts.end(), rng);
                CHECK(sigma_loop(k, rep, verts) == ref);
            }
        }
    }
}

TEST_CASE("characters") {
    SimplicialComplex rp2 = builtin("rp2_6").complex;
    FlatClassSet classes = flat_classes(rp2);
    CHECK(character(rp2, classes.representatives[0]) == std::vector<int>{-1});
    CHECK(character(rp2, classes.representatives[1]) == std::vector<int>{1});

    // disconnected manifold: independent per-component values
    SimplicialComplex both = two_spheres_and_rp2();
    REQUIRE(both.components().size() == 2);
    FlatClassSet cls = flat_classes(both);
    REQUIRE(cls.representatives.size() == 2);
    for (const auto& rep : cls.representatives) {
        auto ch = character(both, rep);
        CHECK(ch[0] == 1);  // sphere component: chi even
    }
    bool saw_minus = false;
    for (const auto& rep : cls.representatives) {
        auto ch = character(both, rep);
        if (ch[1] == -1) saw_minus = true;
    }
    CHECK(saw_minus);  // trivial class on the RP^2 component is not permitted

    // gauge invariance under each coboundary generator
    for (const auto& rep : classes.representatives) {
        auto ref = character(rp2, rep);
        for (const auto& cb : classes.coboundary_basis)
            CHECK(character(rp2, SpinConfiguration{rep.edges ^ cb}) == ref);
    }
}

TEST_CASE("ground state dimensions (fast)") {
    CHECK(ground_dim(builtin("torus_7").complex, Model::TC).dim == 4);
    CHECK(ground_dim(builtin("rp3_11").complex, Model::GDS).dim == 2);
    CHECK(ground_dim(builtin("cp2_9").complex, Model::GDS).dim == 0);
    CHECK(ground_dim(builtin("klein_8").complex, Model::GDS).dim == 2);
    // TC dimension is 2^b1 on every built-in, including the 4-manifold
    CHECK(ground_dim(builtin("cp2_9").complex, Model::TC).dim == 1);
    CHECK(ground_dim(builtin("klein_8").complex, Model::TC).dim == 4);
    GroundStateReport rep = ground_dim(builtin("rp2_6").complex, Model::GDS, "rp2_6");
    CHECK(rep.dim == 1);
    CHECK(rep.permitted == std::vector<long>{1});  // the tautological class
    CHECK(long(rep.permitted.size()) == rep.dim);
}

TEST_CASE("oracles agree with the fast path") {
    for (Model model : {Model::TC, Model::GDS}) {
        for (const char* name :
             {"circle(3)", "circle(4)", "circle(5)", "circle(6)", "sphere(2)"}) {
            SimplicialComplex k = builtin(name).complex;
            long fast = ground_dim(k, model).dim;
            CHECK(full_oracle_ground_dim(k, model) == fast);
            CHECK(flat_oracle_ground_dim(k, model) == fast);
        }
        CHECK(flat_oracle_ground_dim(builtin("rp2_6").complex, model) ==
              ground_dim(builtin("rp2_6").complex, model).dim);
    }
    CHECK(full_oracle_ground_dim(builtin("circle(3)").complex, Model::TC) == 2);
    CHECK(flat_oracle_ground_dim(builtin("torus_7").complex, Model::TC) == 4);
    CHECK(full_oracle_ground_dim(builtin("sphere(2)").complex, Model::GDS) == 1);

    LatticeBudget tiny;
    tiny.max_flat_bits = 5;
    CHECK_THROWS_WITH_AS(flat_oracle_ground_dim(builtin("rp2_6").complex, Model::GDS, tiny),
                         doctest::Contains("TooLarge"), Error);
    CHECK_THROWS_WITH_AS(full_oracle_ground_dim(builtin("rp2_6").complex, Model::GDS),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("automorphism action on flat classes") {
    SimplicialComplex t7 = builtin("torus_7").complex;
    FlatClassSet classes = flat_classes(t7);
    std::vector<Vertex> id(7);
    std::iota(id.begin(), id.end(), 0);
    for (long i = 0; i < 4; ++i)
        CHECK(automorphism_action(t7, id, classes.representatives[i]) == i);

    auto auts = automorphisms(t7);
    for (const auto& p : auts) {
        // the trivial class is fixed; characters are preserved
        CHECK(automorphism_action(t7, p, classes.representatives[0]) == 0);
        for (long i = 0; i < 4; ++i) {
            long j = automorphism_action(t7, p, classes.representatives[i]);
            CHECK(character(t7, classes.representatives[j]) ==
                  character(t7, classes.representatives[i]));
        }
    }
    // a nontrivial orbit exists on the torus classes
    bool moved = false;
    for (const auto& p : auts)
        for (long i = 1; i < 4; ++i)
            if (automorphism_action(t7, p, classes.representatives[i]) != i) moved = true;
    CHECK(moved);

    std::vector<Vertex> notaut = {1, 0, 2, 3, 4, 5, 6};
    bool is_aut = true;
    try {
        automorphism_action(t7, notaut, classes.representatives[0]);
    } catch (const Error& e) {
        is_aut = false;
        CHECK(e.name() == "NotAutomorphism");
    }
    // {0<->1} happens to not preserve the Moebius-Kantor facets
    CHECK_FALSE(is_aut);

    // character preservation under the full automorphism groups
    for (const char* name : {"rp2_6", "klein_8", "rp3_11"}) {
        SimplicialComplex k = builtin(name).complex;
        FlatClassSet cls = flat_classes(k);
        for (const auto& p : automorphisms(k))
            for (std::size_t i = 0; i < cls.representatives.size(); ++i) {
                long j = automorphism_action(k, p, cls.representatives[i]);
                CHECK(character(k, cls.representatives[j]) ==
                      character(k, cls.representatives[i]));
            }
    }
}

TEST_CASE("ground report serialization round-trips") {
    GroundStateReport rep =
        ground_dim(builtin("rp3_11").complex, Model::GDS, "rp3_11");
    std::string json = report_to_json(rep);
    GroundStateReport back = report_from_json(json);
    CHECK(back.manifold == rep.manifold);
    CHECK(back.dim == rep.dim);
    CHECK(back.permitted == rep.permitted);
    CHECK(back.method == "fast");
}
