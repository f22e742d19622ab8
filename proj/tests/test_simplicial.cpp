#include "z2gg/simplicial.hpp"

#include "z2gg/cohomology.hpp"
#include "z2gg/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace z2gg;

namespace {

std::vector<long> betti(const SimplicialComplex& k) {
    std::vector<long> b;
    for (int d = 0; d <= k.dim(); ++d) b.push_back(cohomology_basis(k, d).rank());
    return b;
}

// exhaustive facet-preservation oracle (feasible for 7 vertices)
long brute_automorphism_count(const SimplicialComplex& k) {
    std::vector<Vertex> perm(k.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<Simplex> facets(k.simplices(k.dim()).begin(), k.simplices(k.dim()).end());
    long count = 0;
    do {
        bool ok = true;
        for (const auto& f : facets) {
            Simplex img;
            for (Vertex v : f) img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            if (!facets.count(img)) { ok = false; break; }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("build_from_facets closes faces") {
    SimplicialComplex bd3 = builtin("sphere(2)").complex;
    CHECK(bd3.f_vector() == std::vector<long>{4, 6, 4});

    SimplicialComplex rp2 = builtin("rp2_6").complex;
    CHECK(rp2.f_vector() == std::vector<long>{6, 15, 10});

    CHECK_THROWS_WITH_AS(SimplicialComplex::from_facets({}), doctest::Contains("EmptyInput"),
                         Error);
    CHECK_THROWS_WITH_AS(SimplicialComplex::from_facets({{0, 1, 2}, {0, 1}}),
                         doctest::Contains("MixedDimension"), Error);
    CHECK_THROWS_WITH_AS(SimplicialComplex::from_facets({{0, 1, 1}}),
                         doctest::Contains("RepeatedVertexInFacet"), Error);
    // non-dense vertex ids are rejected
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 2, 3}}), Error);
    // idempotence: rebuilding from the facet list reproduces the complex
    SimplicialComplex again = SimplicialComplex::from_facets(rp2.simplices(2));
    CHECK(again.f_vector() == rp2.f_vector());
    for (int d = 0; d <= 2; ++d) CHECK(again.simplices(d) == rp2.simplices(d));
}

TEST_CASE("validate_closed_manifold") {
    std::string diag;
    CHECK(validate_closed_manifold(builtin("sphere(2)").complex));
    CHECK(validate_closed_manifold(builtin("torus_7").complex));
    SimplicialComplex tri = SimplicialComplex::from_facets({{0, 1, 2}});
    CHECK_FALSE(validate_closed_manifold(tri, &diag));
    CHECK(diag.find("1 facets") != std::string::npos);
}

TEST_CASE("incident simplices") {
    SimplicialComplex c3 = builtin("circle(3)").complex;
    CHECK(incident_simplices(c3, 0).size() == 2);
    SimplicialComplex s2 = builtin("sphere(2)").complex;
    CHECK(incident_simplices(s2, 1).size() == 6);
    SimplicialComplex rp2 = builtin("rp2_6").complex;
    for (int v = 0; v < 6; ++v) CHECK(incident_simplices(rp2, v).size() % 2 == 0);
    CHECK_THROWS_AS(incident_simplices(rp2, 17), Error);
}

TEST_CASE("staircase products") {
    SimplicialComplex seg = SimplicialComplex::from_facets({{0, 1}});
    SimplicialComplex square = simplicial_product(seg, seg);
    CHECK(square.count(2) == 2);

    SimplicialComplex c3 = builtin("circle(3)").complex;
    SimplicialComplex t2 = simplicial_product(c3, c3);
    CHECK(t2.euler_characteristic() == 0);
    CHECK(validate_closed_manifold(t2));
    CHECK(betti(t2) == std::vector<long>{1, 2, 1});

    SimplicialComplex m3 = simplicial_product(c3, builtin("rp2_6").complex);
    CHECK(validate_closed_manifold(m3));
    CHECK(betti(m3) == std::vector<long>{1, 2, 2, 1});  // |H^1| = 4

    // facet count: #K * #L * binom(p+q, p)
    CHECK(m3.count(3) == 3 * 10 * 3);

    // associativity up to isomorphism, checked by f-vector and homology
    SimplicialComplex left = simplicial_product(t2, c3);
    SimplicialComplex right = simplicial_product(c3, t2);
    CHECK(left.f_vector() == right.f_vector());
    CHECK(betti(left) == betti(right));
    CHECK(betti(left) == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("builtin catalog") {
    CHECK(builtin("sphere(2)").complex.f_vector() == std::vector<long>{4, 6, 4});
    ManifoldRecord cp2 = builtin("cp2_9");
    CHECK(cp2.complex.euler_characteristic() == 3);
    CHECK(cp2.complex.f_vector() == std::vector<long>{9, 36, 84, 90, 36});
    ManifoldRecord rp3 = builtin("rp3_11");
    CHECK(rp3.complex.euler_characteristic() == 0);
    CHECK(betti(rp3.complex) == std::vector<long>{1, 1, 1, 1});
    CHECK_THROWS_WITH_AS(builtin("lens(7,2)"), doctest::Contains("UnknownManifold"), Error);
    CHECK(builtin("product(circle(3),circle(4))").complex.count(2) == 24);
}

TEST_CASE("barycentric subdivision") {
    SimplicialComplex c6 = barycentric_subdivision(builtin("circle(3)").complex);
    CHECK(c6.f_vector() == std::vector<long>{6, 6});
    CHECK(validate_closed_manifold(c6));

    SimplicialComplex bs = barycentric_subdivision(builtin("sphere(2)").complex);
    CHECK(bs.f_vector() == std::vector<long>{14, 36, 24});

    SimplicialComplex rp2 = builtin("rp2_6").complex;
    SimplicialComplex brp2 = barycentric_subdivision(rp2);
    CHECK(betti(brp2) == betti(rp2));
}

TEST_CASE("automorphism groups") {
    auto tetra = automorphisms(builtin("sphere(2)").complex);
    CHECK(tetra.size() == 24);

    auto c5 = automorphisms(builtin("circle(5)").complex);
    CHECK(c5.size() == 10);

    SimplicialComplex t7 = builtin("torus_7").complex;
    auto auts = automorphisms(t7);
    CHECK(long(auts.size()) == brute_automorphism_count(t7));
    CHECK(auts.size() == 42);

    CHECK(automorphisms(builtin("rp2_6").complex).size() == 60);
    CHECK(automorphisms(builtin("klein_8").complex).size() == 2);
    CHECK(automorphisms(builtin("sphere(3)").complex).size() == 120);
    CHECK(automorphisms(builtin("rp3_11").complex).size() == 48);
    CHECK(automorphisms(builtin("cp2_9").complex).size() == 54);

    // closed under composition
    std::set<std::vector<Vertex>> group(auts.begin(), auts.end());
    for (const auto& a : auts)
        for (const auto& b : auts) {
            std::vector<Vertex> ab(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) ab[i] = a[b[i]];
            CHECK(group.count(ab));
        }

    CHECK_THROWS_WITH_AS(automorphisms(builtin("circle(13)").complex),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("facet file loading honors expected f-vector") {
    ManifoldRecord rec = builtin("klein_8");
    REQUIRE(rec.expected_f_vector.has_value());
    CHECK(*rec.expected_f_vector == rec.complex.f_vector());
    CHECK(rec.complex.euler_characteristic() == 0);
    CHECK(betti(rec.complex) == std::vector<long>{1, 2, 1});
}
