#include "z2gg/simplicial.hpp"

#include "z2gg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace z2gg {

namespace {

std::string simplex_str(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
    if (facets.empty()) throw Error("EmptyInput", "no facets given");
    const std::size_t fsize = facets[0].size();
    int max_v = -1;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (f.size() != fsize)
            throw Error("MixedDimension", "facet " + simplex_str(f) + " has wrong dimension");
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0) throw Error("RepeatedVertexInFacet", "negative vertex id");
            if (i && f[i] == f[i - 1])
                throw Error("RepeatedVertexInFacet", "facet " + simplex_str(f) + " repeats a vertex");
            max_v = std::max(max_v, f[i]);
        }
    }
    const int d = int(fsize) - 1;

    SimplicialComplex k;
    k.num_vertices_ = max_v + 1;
    k.by_dim_.assign(d + 1, {});

    std::vector<std::set<Simplex>> faces(d + 1);
    std::function<void(const Simplex&)> close = [&](const Simplex& s) {
        auto [it, fresh] = faces[s.size() - 1].insert(s);
        if (!fresh) return;
        if (s.size() == 1) return;
        Simplex sub(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) sub[j++] = s[i];
            close(sub);
        }
    };
    for (const auto& f : facets) close(f);

    if (int(faces[0].size()) != k.num_vertices_)
        throw Error("RepeatedVertexInFacet",
                    "vertex ids are not dense in 0..V-1");
    for (int kk = 0; kk <= d; ++kk)
        k.by_dim_[kk].assign(faces[kk].begin(), faces[kk].end());

    k.edges_at_vertex_.assign(k.num_vertices_, {});
    if (d >= 1) {
        const auto& edges = k.by_dim_[1];
        for (int e = 0; e < int(edges.size()); ++e) {
            k.edges_at_vertex_[edges[e][0]].push_back(e);
            k.edges_at_vertex_[edges[e][1]].push_back(e);
        }
    }

    // components of the 1-skeleton
    std::vector<int> parent(k.num_vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (d >= 1)
        for (const auto& e : k.by_dim_[1]) {
            int a = find(e[0]), b = find(e[1]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<Vertex>> comps;
    for (int v = 0; v < k.num_vertices_; ++v) comps[find(v)].push_back(v);
    for (auto& [root, verts] : comps) k.components_.push_back(verts);

    return k;
}

int SimplicialComplex::count(int k) const {
    if (k < 0 || k > dim()) return 0;
    return int(by_dim_[k].size());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    if (k < 0 || k > dim()) {
        static const std::vector<Simplex> empty;
        return empty;
    }
    return by_dim_[k];
}

int SimplicialComplex::index_of(const Simplex& s) const {
    int k = int(s.size()) - 1;
    if (k < 0 || k > dim()) return -1;
    const auto& list = by_dim_[k];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return -1;
    return int(it - list.begin());
}

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> f;
    for (int k = 0; k <= dim(); ++k) f.push_back(count(k));
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dim(); ++k) chi += (k % 2 ? -1 : 1) * long(count(k));
    return chi;
}

const std::vector<int>& SimplicialComplex::edges_at_vertex(Vertex v) const {
    if (v < 0 || v >= num_vertices_) throw Error("UnknownVertex", "vertex id out of range");
    return edges_at_vertex_[v];
}

bool validate_closed_manifold(const SimplicialComplex& k, std::string* diagnostic) {
    const int d = k.dim();
    auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    if (d < 1) return fail("dimension 0 complex");

    // purity: every simplex is a face of some facet
    std::vector<std::set<Simplex>> covered(d);
    for (const auto& f : k.simplices(d)) {
        std::function<void(const Simplex&)> mark = [&](const Simplex& s) {
            if (s.size() >= 2) {
                Simplex sub(s.size() - 1);
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    std::size_t j = 0;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) sub[j++] = s[i];
                    if (covered[sub.size() - 1].insert(sub).second) mark(sub);
                }
            }
        };
        mark(f);
    }
    for (int kk = 0; kk < d; ++kk)
        if (int(covered[kk].size()) != k.count(kk))
            return fail("complex is not pure in dimension " + std::to_string(kk));

    // every ridge in exactly two facets
    std::map<Simplex, int> ridge_count;
    for (const auto& f : k.simplices(d)) {
        Simplex sub(f.size() - 1);
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub[j++] = f[i];
            ridge_count[sub]++;
        }
    }
    for (const auto& [r, c] : ridge_count)
        if (c != 2)
            return fail("ridge " + simplex_str(r) + " lies in " + std::to_string(c) + " facets");

    if (d == 1) return true;  // vertex links are S^0

    // connected vertex links
    for (int v = 0; v < k.num_vertices(); ++v) {
        std::vector<Simplex> link_facets;
        for (const auto& f : k.simplices(d)) {
            if (std::binary_search(f.begin(), f.end(), v)) {
                Simplex rest;
                for (Vertex w : f)
                    if (w != v) rest.push_back(w);
                link_facets.push_back(rest);
            }
        }
        if (link_facets.empty())
            return fail("vertex {" + std::to_string(v) + "} lies in no facet");
        std::map<Vertex, int> comp;
        int nc = 0;
        for (const auto& lf : link_facets)
            for (Vertex w : lf)
                if (!comp.count(w)) comp[w] = nc++;
        bool merged = true;
        while (merged) {
            merged = false;
            for (const auto& lf : link_facets) {
                int m = comp[lf[0]];
                for (Vertex w : lf) m = std::min(m, comp[w]);
                for (Vertex w : lf)
                    if (comp[w] != m) { comp[w] = m; merged = true; }
            }
        }
        std::set<int> roots;
        for (auto& [w, c] : comp) roots.insert(c);
        if (roots.size() != 1)
            return fail("link of vertex {" + std::to_string(v) + "} is disconnected");
    }
    return true;
}

std::vector<Simplex> incident_simplices(const SimplicialComplex& k, Vertex v) {
    if (v < 0 || v >= k.num_vertices())
        throw Error("UnknownVertex", "vertex id " + std::to_string(v) + " out of range");
    std::vector<Simplex> out;
    for (int kk = 1; kk <= k.dim(); ++kk)
        for (const auto& s : k.simplices(kk))
            if (std::binary_search(s.begin(), s.end(), v)) out.push_back(s);
    return out;
}

SimplicialComplex simplicial_product(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int vb = b.num_vertices();
    auto vid = [&](Vertex u, Vertex v) { return u * vb + v; };

    std::vector<Simplex> facets;
    const int p = a.dim(), q = b.dim();
    // staircase paths through the (p+1) x (q+1) grid of each facet pair
    std::vector<int> steps(p + q, 0);  // 0 = advance in a, 1 = advance in b
    for (int i = 0; i < q; ++i) steps[p + i] = 1;
    for (const auto& fa : a.simplices(p)) {
        for (const auto& fb : b.simplices(q)) {
            std::vector<int> perm = steps;
            std::sort(perm.begin(), perm.end());
            do {
                Simplex f;
                int i = 0, j = 0;
                f.push_back(vid(fa[0], fb[0]));
                for (int m : perm) {
                    if (m == 0) ++i; else ++j;
                    f.push_back(vid(fa[i], fb[j]));
                }
                std::sort(f.begin(), f.end());
                facets.push_back(std::move(f));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    // vertex of the subdivision = simplex of k, numbered by dimension blocks
    std::vector<int> offset(k.dim() + 1, 0);
    for (int d = 1; d <= k.dim(); ++d) offset[d] = offset[d - 1] + k.count(d - 1);

    std::vector<Simplex> facets;
    std::function<void(const Simplex&, Simplex&)> descend = [&](const Simplex& s, Simplex& flag) {
        flag.push_back(offset[s.size() - 1] + k.index_of(s));
        if (s.size() == 1) {
            Simplex f = flag;
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        } else {
            Simplex sub(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::size_t j = 0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) sub[j++] = s[i];
                descend(sub, flag);
            }
        }
        flag.pop_back();
    };
    Simplex flag;
    for (const auto& f : k.simplices(k.dim())) descend(f, flag);
    return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<std::vector<Vertex>> automorphisms(const SimplicialComplex& k, int max_vertices) {
    const int n = k.num_vertices();
    if (n > max_vertices)
        throw Error("TooLarge", "automorphism search guarded to " +
                                    std::to_string(max_vertices) + " vertices");
    const int d = k.dim();
    std::set<Simplex> facet_set(k.simplices(d).begin(), k.simplices(d).end());

    // per-vertex facet stars for pruning and incremental checks
    std::vector<std::vector<Simplex>> star(n);
    for (const auto& f : k.simplices(d))
        for (Vertex v : f) star[v].push_back(f);

    std::vector<Vertex> img(n, -1);
    std::vector<bool> used(n, false);
    std::vector<std::vector<Vertex>> out;

    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(img);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || star[w].size() != star[v].size() ||
                k.edges_at_vertex(w).size() != k.edges_at_vertex(v).size())
                continue;
            img[v] = w;
            used[w] = true;
            // facets fully mapped so far must land on facets
            bool ok = true;
            for (const auto& f : star[v]) {
                Simplex m;
                bool complete = true;
                for (Vertex u : f) {
                    if (img[u] < 0) { complete = false; break; }
                    m.push_back(img[u]);
                }
                if (!complete) continue;
                std::sort(m.begin(), m.end());
                if (!facet_set.count(m)) { ok = false; break; }
            }
            if (ok) rec(v + 1);
            img[v] = -1;
            used[w] = false;
        }
    };
    rec(0);
    return out;
}

namespace {

SimplicialComplex make_circle(int m) {
    if (m < 3) throw Error("UnknownManifold", "circle(m) needs m >= 3");
    std::vector<Simplex> facets;
    for (int i = 0; i < m; ++i) {
        Simplex e{i, (i + 1) % m};
        std::sort(e.begin(), e.end());
        facets.push_back(e);
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex make_sphere(int d) {
    if (d < 1) throw Error("UnknownManifold", "sphere(d) needs d >= 1");
    std::vector<Simplex> facets;
    for (int drop = 0; drop <= d + 1; ++drop) {
        Simplex f;
        for (int v = 0; v <= d + 1; ++v)
            if (v != drop) f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

std::string data_dir() {
    if (const char* env = std::getenv("GDS_DATA_DIR")) return env;
#ifdef Z2GG_DATA_DIR
    return Z2GG_DATA_DIR;
#else
    return "data";
#endif
}

// splits "product(a,b)" style arguments at the top-level comma
std::pair<std::string, std::string> split_two(const std::string& args) {
    int depth = 0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == '(') ++depth;
        else if (args[i] == ')') --depth;
        else if (args[i] == ',' && depth == 0)
            return {args.substr(0, i), args.substr(i + 1)};
    }
    throw Error("UnknownManifold", "product needs two arguments");
}

std::string strip(const std::string& s) {
    auto a = s.find_first_not_of(" \t");
    auto b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

}  // namespace

ManifoldRecord load_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("UnknownManifold", "cannot open facet file " + path);
    nlohmann::json doc;
    in >> doc;
    ManifoldRecord rec;
    rec.name = doc.value("name", path);
    std::vector<Simplex> facets;
    for (const auto& f : doc.at("facets")) facets.push_back(f.get<Simplex>());
    rec.complex = SimplicialComplex::from_facets(std::move(facets));
    if (doc.contains("expected_f_vector")) {
        rec.expected_f_vector = doc["expected_f_vector"].get<std::vector<long>>();
        if (*rec.expected_f_vector != rec.complex.f_vector())
            throw Error("UnknownManifold", "facet file " + path + " fails its f-vector check");
    }
    std::string diag;
    if (!validate_closed_manifold(rec.complex, &diag))
        throw Error("UnknownManifold", "facet file " + path + " is not a closed manifold: " + diag);
    return rec;
}

std::vector<std::string> builtin_names() {
    return {"circle(m)", "sphere(d)", "rp2_6", "torus_7", "klein_8",
            "rp3_11", "cp2_9", "product(a,b)"};
}

ManifoldRecord builtin(const std::string& raw) {
    const std::string spec = strip(raw);
    auto paren = spec.find('(');
    if (spec.rfind("file:", 0) == 0) return load_facet_file(spec.substr(5));
    if (paren != std::string::npos) {
        if (spec.back() != ')')
            throw Error("UnknownManifold", "malformed manifold expression " + spec);
        std::string head = spec.substr(0, paren);
        std::string args = spec.substr(paren + 1, spec.size() - paren - 2);
        if (head == "circle")
            return {spec, make_circle(std::stoi(args)), std::nullopt};
        if (head == "sphere")
            return {spec, make_sphere(std::stoi(args)), std::nullopt};
        if (head == "product") {
            auto [sa, sb] = split_two(args);
            ManifoldRecord a = builtin(strip(sa));
            ManifoldRecord b = builtin(strip(sb));
            ManifoldRecord rec;
            rec.name = "product(" + a.name + "," + b.name + ")";
            rec.complex = simplicial_product(a.complex, b.complex);
            std::string diag;
            if (!validate_closed_manifold(rec.complex, &diag))
                throw Error("UnknownManifold", rec.name + " is not closed: " + diag);
            return rec;
        }
        throw Error("UnknownManifold", "unknown manifold " + spec);
    }
    for (const char* fixed : {"rp2_6", "torus_7", "klein_8", "rp3_11", "cp2_9"})
        if (spec == fixed) return load_facet_file(data_dir() + "/" + spec + ".json");
    throw Error("UnknownManifold", "unknown manifold " + spec);
}

}  // namespace z2gg
