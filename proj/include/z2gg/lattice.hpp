#pragma once

#include "z2gg/cohomology.hpp"
#include "z2gg/simplicial.hpp"

#include <span>
#include <string>
#include <vector>

namespace z2gg {

enum class Model { TC, GDS };
std::string model_name(Model m);

// Edge labeling in Z/2: the function spin_{(P,xi)} of a principal Z/2-bundle
// on the 1-skeleton trivialized over the vertices.
struct SpinConfiguration {
    gf2::Vec edges;

    bool operator==(const SpinConfiguration& o) const { return edges == o.edges; }
};

// Holonomy around a 2-simplex: the GF(2) sum of its three edge spins.
int holonomy(const SimplicialComplex& k, const SpinConfiguration& s, int face_index);
bool is_flat(const SimplicialComplex& k, const SpinConfiguration& s);

// Toggle every edge at v (the shift operator A_v; coboundary of the vertex
// indicator). An involution; preserves flatness.
SpinConfiguration vertex_flip(const SimplicialComplex& k, const SpinConfiguration& s,
                              Vertex v);

// GDS sign: -1 to the (1 + #Z_v) with Z_v the incident simplices touching a
// spin-1 edge. The complementary all-spin-0 count W_v gives the same sign
// because #N_v is even; both are computed and compared.
int gds_sign(const SimplicialComplex& k, const SpinConfiguration& s, Vertex v);

// Sign evaluator with precomputed incidence geometry, for hot loops.
class GdsSignEvaluator {
public:
    explicit GdsSignEvaluator(const SimplicialComplex& k);
    int sign(const SpinConfiguration& s, Vertex v) const;

private:
    std::vector<std::vector<std::vector<int>>> nv_edges_;
};

// Flat-class representatives, one per H^1 class (index = coordinate bits in
// the H^1 basis), each the lexicographically least cocycle of its class.
struct FlatClassSet {
    std::vector<SpinConfiguration> representatives;
    std::vector<gf2::Vec> coboundary_basis;  // reduced basis of B^1
    int b1 = 0;
};

FlatClassSet flat_classes(const SimplicialComplex& k);

// Product of GDS signs over sequential vertex flips. Requires a flat input
// (the commutation guarantee only holds there); order-independent.
int sigma_loop(const SimplicialComplex& k, SpinConfiguration s,
               std::span<const Vertex> vertices);

// One +-1 per connected component: sigma_loop over that component's vertices.
std::vector<int> character(const SimplicialComplex& k, const SpinConfiguration& class_rep);

struct CharacterTable {
    std::vector<std::vector<int>> chars;  // per class, per component
};
CharacterTable character_table(const SimplicialComplex& k, const FlatClassSet& classes);

struct GroundStateReport {
    std::string manifold;
    Model model = Model::TC;
    long dim = 0;
    std::vector<long> permitted;  // class indices; filled by the fast method
    std::string method;
    double elapsed_ms = 0.0;
};
std::string report_to_json(const GroundStateReport& r, bool with_timing = true);
GroundStateReport report_from_json(const std::string& text);

enum class GroundMethod { Fast, FlatOracle, FullOracle };

struct LatticeBudget {
    int max_flat_bits = 20;  // flat oracle dimension guard: 2^bits states
    int max_edges = 13;      // full oracle guard
};

// TC: number of flat classes. GDS: number of flat classes with trivial
// character. Oracle methods recompute the same count from operator algebra.
GroundStateReport ground_dim(const SimplicialComplex& k, Model model,
                             const std::string& manifold_name = "",
                             GroundMethod method = GroundMethod::Fast,
                             const LatticeBudget& budget = {});

// Dimension of the joint (+1)-eigenspace of the vertex operators on the space
// of functions on all cocycles, as the rational nullity of sum_v (1 - U_v).
long flat_oracle_ground_dim(const SimplicialComplex& k, Model model,
                            const LatticeBudget& budget = {});

// Rational nullity of 2H on the full 2^#edges state space.
long full_oracle_ground_dim(const SimplicialComplex& k, Model model,
                            const LatticeBudget& budget = {});

// Push a flat representative through a simplicial automorphism; returns the
// image flat-class index.
long automorphism_action(const SimplicialComplex& k, const std::vector<Vertex>& perm,
                         const SpinConfiguration& class_rep);

}  // namespace z2gg
