#include "z2gg/lattice.hpp"

#include "z2gg/errors.hpp"
#include "z2gg/exact.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>

namespace z2gg {

namespace {

constexpr std::uint32_t kOraclePrime = 2147483647u;  // 2^31 - 1

// Per-vertex incidence data for the sign computation: for every simplex of
// dimension >= 1 whose closure contains v, the edge indices of its closure.
struct SignGeometry {
    std::vector<std::vector<std::vector<int>>> nv_edges;  // per vertex

    static SignGeometry from(const SimplicialComplex& k) {
        SignGeometry g;
        g.nv_edges.assign(k.num_vertices(), {});
        for (int deg = 1; deg <= k.dim(); ++deg) {
            for (const Simplex& s : k.simplices(deg)) {
                std::vector<int> edges;
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        edges.push_back(k.index_of({s[i], s[j]}));
                for (Vertex v : s) g.nv_edges[v].push_back(edges);
            }
        }
        return g;
    }
};

int sign_at(const std::vector<std::vector<int>>& nv, const gf2::Vec& spins, Vertex v) {
    int z = 0, w = 0;
    for (const auto& edges : nv) {
        bool touched = false;
        for (int e : edges)
            if (spins.get(e)) { touched = true; break; }
        touched ? ++z : ++w;
    }
    int sz = (1 + z) % 2 ? -1 : 1;
    int sw = (1 + w) % 2 ? -1 : 1;
    if (sz != sw)
        throw Error("InternalSignMismatch",
                    "Z/W sign routes disagree at vertex " + std::to_string(v) +
                        " (#N_v odd; not a closed manifold?)");
    return sz;
}

int sign_from_geometry(const SignGeometry& g, const gf2::Vec& spins, Vertex v) {
    return sign_at(g.nv_edges[v], spins, v);
}

Cochain as_cochain(const SpinConfiguration& s) { return Cochain{1, s.edges}; }

}  // namespace

std::string model_name(Model m) { return m == Model::TC ? "tc" : "gds"; }

int holonomy(const SimplicialComplex& k, const SpinConfiguration& s, int face_index) {
    const Simplex& f = k.simplex(2, face_index);
    int acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            acc ^= int(s.edges.get(k.index_of({f[i], f[j]})));
    return acc;
}

bool is_flat(const SimplicialComplex& k, const SpinConfiguration& s) {
    if (k.dim() < 2) return true;
    return coboundary(k, as_cochain(s)).is_zero();
}

SpinConfiguration vertex_flip(const SimplicialComplex& k, const SpinConfiguration& s,
                              Vertex v) {
    SpinConfiguration out = s;
    for (int e : k.edges_at_vertex(v)) out.edges.flip(e);
    return out;
}

int gds_sign(const SimplicialComplex& k, const SpinConfiguration& s, Vertex v) {
    if (v < 0 || v >= k.num_vertices())
        throw Error("UnknownVertex", "vertex id out of range");
    SignGeometry g = SignGeometry::from(k);
    return sign_from_geometry(g, s.edges, v);
}

GdsSignEvaluator::GdsSignEvaluator(const SimplicialComplex& k)
    : nv_edges_(SignGeometry::from(k).nv_edges) {}

int GdsSignEvaluator::sign(const SpinConfiguration& s, Vertex v) const {
    return sign_at(nv_edges_[v], s.edges, v);
}

FlatClassSet flat_classes(const SimplicialComplex& k) {
    FlatClassSet out;
    CohomologyBasis h1 = cohomology_basis(k, 1);
    out.b1 = h1.rank();

    // reduced basis of B^1 for lexicographic coset canonicalization;
    // coboundary_matrix(k,0) has rows = edges, cols = vertices, so its
    // columns delta(1_v) span B^1
    gf2::Reducer breducer(k.count(1));
    gf2::Matrix d0 = coboundary_matrix(k, 0);
    for (int v = 0; v < d0.cols(); ++v) {
        gf2::Vec col(d0.rows());
        for (int r = 0; r < d0.rows(); ++r)
            if (d0.get(r, v)) col.set(r, true);
        if (breducer.insert(col)) out.coboundary_basis.push_back(col);
    }

    const unsigned long n_classes = 1ul << out.b1;
    out.representatives.reserve(n_classes);
    for (unsigned long idx = 0; idx < n_classes; ++idx) {
        gf2::Vec rep(k.count(1));
        for (int j = 0; j < out.b1; ++j)
            if ((idx >> j) & 1ul) rep ^= h1.representatives()[j].bits;
        breducer.reduce(rep);  // lexicographically least element of the coset
        out.representatives.push_back(SpinConfiguration{rep});
    }
    return out;
}

int sigma_loop(const SimplicialComplex& k, SpinConfiguration s,
               std::span<const Vertex> vertices) {
    if (!is_flat(k, s))
        throw Error("NotFlat", "sigma_loop requires a flat spin configuration");
    SignGeometry g = SignGeometry::from(k);
    int sign = 1;
    for (Vertex v : vertices) {
        sign *= sign_from_geometry(g, s.edges, v);
        for (int e : k.edges_at_vertex(v)) s.edges.flip(e);
    }
    return sign;
}

std::vector<int> character(const SimplicialComplex& k, const SpinConfiguration& rep) {
    if (!is_flat(k, rep))
        throw Error("NotFlat", "character requires a flat class representative");
    std::vector<int> out;
    for (const auto& comp : k.components())
        out.push_back(sigma_loop(k, rep, comp));
    return out;
}

CharacterTable character_table(const SimplicialComplex& k, const FlatClassSet& classes) {
    CharacterTable t;
    t.chars.resize(classes.representatives.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < long(classes.representatives.size()); ++i)
        t.chars[i] = character(k, classes.representatives[i]);
    return t;
}

std::string report_to_json(const GroundStateReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["manifold"] = r.manifold;
    j["model"] = model_name(r.model);
    j["dim"] = r.dim;
    j["permitted"] = r.permitted;
    j["method"] = r.method;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

GroundStateReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GroundStateReport r;
    r.manifold = j.at("manifold").get<std::string>();
    r.model = j.at("model").get<std::string>() == "tc" ? Model::TC : Model::GDS;
    r.dim = j.at("dim").get<long>();
    r.permitted = j.at("permitted").get<std::vector<long>>();
    r.method = j.at("method").get<std::string>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<double>();
    return r;
}

GroundStateReport ground_dim(const SimplicialComplex& k, Model model,
                             const std::string& manifold_name, GroundMethod method,
                             const LatticeBudget& budget) {
    auto t0 = std::chrono::steady_clock::now();
    GroundStateReport rep;
    rep.manifold = manifold_name;
    rep.model = model;
    switch (method) {
        case GroundMethod::Fast: {
            rep.method = "fast";
            FlatClassSet classes = flat_classes(k);
            if (model == Model::TC) {
                rep.dim = long(classes.representatives.size());
                for (long i = 0; i < rep.dim; ++i) rep.permitted.push_back(i);
            } else {
                CharacterTable table = character_table(k, classes);
                for (long i = 0; i < long(table.chars.size()); ++i) {
                    bool trivial = std::all_of(table.chars[i].begin(), table.chars[i].end(),
                                               [](int c) { return c == 1; });
                    if (trivial) rep.permitted.push_back(i);
                }
                rep.dim = long(rep.permitted.size());
            }
            break;
        }
        case GroundMethod::FlatOracle:
            rep.method = "flat_oracle";
            rep.dim = flat_oracle_ground_dim(k, model, budget);
            break;
        case GroundMethod::FullOracle:
            rep.method = "full_oracle";
            rep.dim = full_oracle_ground_dim(k, model, budget);
            break;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

long flat_oracle_ground_dim(const SimplicialComplex& k, Model model,
                            const LatticeBudget& budget) {
    std::vector<int> free_cols;
    std::vector<gf2::Vec> zbasis = gf2::nullspace(coboundary_matrix(k, 1),
                                                  gf2::Kernel::Auto, &free_cols);
    const int z = int(zbasis.size());
    if (z > budget.max_flat_bits)
        throw Error("TooLarge", "flat oracle needs 2^" + std::to_string(z) +
                                    " states, over the 2^" +
                                    std::to_string(budget.max_flat_bits) + " budget");
    const std::size_t n = std::size_t(1) << z;
    if (n * n * 4 > (std::size_t(3) << 30))
        throw Error("TooLarge", "flat oracle matrix would need " +
                                    std::to_string(n * n * 4 >> 20) + " MiB");

    // configs in index order; configuration of index s = XOR of basis vectors
    std::vector<gf2::Vec> configs(n, gf2::Vec(k.count(1)));
    for (std::size_t s = 1; s < n; ++s) {
        int low = std::countr_zero(s);
        configs[s] = configs[s & (s - 1)] ^ zbasis[low];
    }

    // vertex flip acts on indices by XOR with the coordinates of delta(1_v);
    // coordinates w.r.t. the nullspace basis read off at the free columns
    const int nv = k.num_vertices();
    std::vector<std::size_t> flip_mask(nv, 0);
    for (int v = 0; v < nv; ++v) {
        gf2::Vec dv(k.count(1));
        for (int e : k.edges_at_vertex(v)) dv.flip(e);
        std::size_t m = 0;
        for (int j = 0; j < z; ++j)
            if (dv.get(free_cols[j])) m |= std::size_t(1) << j;
        flip_mask[v] = m;
    }

    SignGeometry geom = SignGeometry::from(k);
    exact::ModMatrix t;
    t.rows = t.cols = int(n);
    t.p = kOraclePrime;
    t.a.assign(n * n, 0);
    const std::uint32_t p = t.p;
    for (std::size_t s = 0; s < n; ++s) {
        t.at(int(s), int(s)) = std::uint32_t(nv % p);
        for (int v = 0; v < nv; ++v) {
            std::size_t target = s ^ flip_mask[v];
            int sigma = model == Model::GDS ? sign_from_geometry(geom, configs[s], v) : 1;
            std::uint32_t dec = sigma == 1 ? p - 1 : 1;  // subtract sigma mod p
            t.at(int(target), int(s)) = std::uint32_t((t.at(int(target), int(s)) + dec) % p);
        }
    }
    // Sum of (1 - U_v) over commuting involutions U_v: diagonalizable over Q
    // with integer eigenvalues in [0, 2V], so any prime > 2V sees the exact
    // rational nullity.
    int rank = exact::modp_rank(std::move(t));
    return long(n) - rank;
}

long full_oracle_ground_dim(const SimplicialComplex& k, Model model,
                            const LatticeBudget& budget) {
    const int ne = k.count(1);
    if (ne > budget.max_edges)
        throw Error("TooLarge", "full oracle guarded to " + std::to_string(budget.max_edges) +
                                    " edges, complex has " + std::to_string(ne));
    const std::size_t n = std::size_t(1) << ne;
    if (n > 2048)
        throw Error("TooLarge", "full oracle dense exact matrix capped at 2^11 states");

    const int nv = k.num_vertices();
    const int nf = k.count(2);
    std::vector<std::vector<int>> face_edges(nf);
    for (int f = 0; f < nf; ++f) {
        const Simplex& s = k.simplex(2, f);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                face_edges[f].push_back(k.index_of({s[i], s[j]}));
    }
    std::vector<std::size_t> vmask(nv, 0);
    for (int v = 0; v < nv; ++v)
        for (int e : k.edges_at_vertex(v)) vmask[v] |= std::size_t(1) << e;

    SignGeometry geom = SignGeometry::from(k);
    std::vector<std::vector<exact::BigInt>> h(n, std::vector<exact::BigInt>(n));
    gf2::Vec spins(ne);
    for (std::size_t s = 0; s < n; ++s) {
        for (int e = 0; e < ne; ++e) spins.set(e, (s >> e) & 1u);
        long diag = nv;  // sum_v (1 - U_v) contributes V to the diagonal
        for (int f = 0; f < nf; ++f) {
            int hol = 0;
            for (int e : face_edges[f]) hol ^= int((s >> e) & 1u);
            if (hol) diag += 2;  // (1 - B_f) doubles on violated faces
        }
        h[s][s] = exact::BigInt(diag);
        for (int v = 0; v < nv; ++v) {
            std::size_t target = s ^ vmask[v];
            int sigma = model == Model::GDS ? sign_from_geometry(geom, spins, v) : 1;
            h[target][s] = h[target][s] - exact::BigInt(sigma);
        }
    }
    return bareiss_nullity(std::move(h));
}

long automorphism_action(const SimplicialComplex& k, const std::vector<Vertex>& perm,
                         const SpinConfiguration& rep) {
    if (int(perm.size()) != k.num_vertices())
        throw Error("NotAutomorphism", "permutation has the wrong length");
    for (const Simplex& f : k.simplices(k.dim())) {
        Simplex img;
        for (Vertex v : f) img.push_back(perm[v]);
        std::sort(img.begin(), img.end());
        if (!k.contains(img))
            throw Error("NotAutomorphism", "permutation does not preserve the facets");
    }
    if (!is_flat(k, rep)) throw Error("NotFlat", "automorphism action needs a flat class");

    SpinConfiguration out{gf2::Vec(k.count(1))};
    const auto& edges = k.simplices(1);
    for (int e = 0; e < int(edges.size()); ++e) {
        if (!rep.edges.get(e)) continue;
        Simplex img{perm[edges[e][0]], perm[edges[e][1]]};
        std::sort(img.begin(), img.end());
        out.edges.flip(k.index_of(img));
    }
    CohomologyBasis h1 = cohomology_basis(k, 1);
    gf2::Vec coords = h1.coordinates(k, Cochain{1, out.edges});
    long idx = 0;
    for (int j = 0; j < h1.rank(); ++j)
        if (coords.get(j)) idx |= 1l << j;
    return idx;
}

}  // namespace z2gg
