#pragma once

#include <optional>
#include <string>
#include <vector>

namespace z2gg {

using Vertex = int;
using Simplex = std::vector<Vertex>;  // strictly increasing vertex ids

// Face-closed, pure simplicial complex with per-dimension index-addressable
// simplex lists (sorted lexicographically). Immutable after construction.
class SimplicialComplex {
public:
    // Face closure of the given facets. Vertex ids must be dense in 0..V-1.
    static SimplicialComplex from_facets(std::vector<Simplex> facets);

    int dim() const { return int(by_dim_.size()) - 1; }
    int num_vertices() const { return num_vertices_; }
    int count(int k) const;
    const std::vector<Simplex>& simplices(int k) const;
    const Simplex& simplex(int k, int index) const { return simplices(k)[index]; }

    // Index of a simplex in its dimension list, or -1.
    int index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    std::vector<long> f_vector() const;
    long euler_characteristic() const;

    // Connected components of the 1-skeleton, each a sorted vertex list,
    // ordered by smallest vertex.
    const std::vector<std::vector<Vertex>>& components() const { return components_; }

    // Edges incident to a vertex, as dimension-1 indices.
    const std::vector<int>& edges_at_vertex(Vertex v) const;

private:
    int num_vertices_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::vector<int>> edges_at_vertex_;
    std::vector<std::vector<Vertex>> components_;
};

struct ManifoldRecord {
    std::string name;
    SimplicialComplex complex;
    std::optional<std::vector<long>> expected_f_vector;
};

// Closed-pseudomanifold check: every (d-1)-simplex in exactly two facets and
// every vertex link connected (links are S^0 when d = 1, so that case only
// counts facets). On failure *diagnostic names an offending simplex.
bool validate_closed_manifold(const SimplicialComplex& k, std::string* diagnostic = nullptr);

// N_v: all simplices of dimension >= 1 whose closure contains v.
std::vector<Simplex> incident_simplices(const SimplicialComplex& k, Vertex v);

// Ordered (staircase) simplicial product; triangulates |K| x |L|.
SimplicialComplex simplicial_product(const SimplicialComplex& k, const SimplicialComplex& l);

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

// All facet-preserving vertex permutations, closed under composition.
// Backtracking search, guarded to num_vertices <= max_vertices.
std::vector<std::vector<Vertex>> automorphisms(const SimplicialComplex& k,
                                               int max_vertices = 12);

// Built-in catalog. Accepts the full manifold expression grammar:
//   circle(m) | sphere(d) | rp2_6 | torus_7 | klein_8 | rp3_11 | cp2_9
//   | product(expr,expr) | file:<path>
// Fixed complexes are loaded from JSON facet files under the data directory
// (GDS_DATA_DIR overrides the compiled-in default) and validated on load.
ManifoldRecord builtin(const std::string& spec);

std::vector<std::string> builtin_names();

ManifoldRecord load_facet_file(const std::string& path);

}  // namespace z2gg
