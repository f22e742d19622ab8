#include "z2gg/cohomology.hpp"

#include "z2gg/errors.hpp"

#include <algorithm>
#include <functional>

namespace z2gg {

Cochain Cochain::zero(const SimplicialComplex& k, int degree) {
    return Cochain{degree, gf2::Vec(k.count(degree))};
}

Cochain& Cochain::operator^=(const Cochain& o) {
    if (degree != o.degree) throw Error("BadDegree", "cochain degree mismatch");
    bits ^= o.bits;
    return *this;
}

gf2::Matrix boundary_matrix(const SimplicialComplex& k, int deg) {
    if (deg < 1 || deg > k.dim())
        throw Error("BadDegree", "boundary matrix degree out of range");
    gf2::Matrix m(k.count(deg - 1), k.count(deg));
    const auto& list = k.simplices(deg);
    for (int c = 0; c < int(list.size()); ++c) {
        const Simplex& s = list[c];
        Simplex sub(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) sub[j++] = s[i];
            m.set(k.index_of(sub), c, true);
        }
    }
    return m;
}

gf2::Matrix coboundary_matrix(const SimplicialComplex& k, int deg) {
    if (deg < 0 || deg >= k.dim()) return gf2::Matrix(0, k.count(deg));
    return boundary_matrix(k, deg + 1).transposed();
}

Cochain coboundary(const SimplicialComplex& k, const Cochain& x) {
    Cochain out = Cochain::zero(k, x.degree + 1);
    if (x.degree + 1 > k.dim()) return out;
    const auto& list = k.simplices(x.degree + 1);
    for (int c = 0; c < int(list.size()); ++c) {
        const Simplex& s = list[c];
        Simplex sub(s.size() - 1);
        int acc = 0;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) sub[j++] = s[i];
            acc ^= int(x.bits.get(k.index_of(sub)));
        }
        if (acc) out.bits.set(c, true);
    }
    return out;
}

bool is_cocycle(const SimplicialComplex& k, const Cochain& x) {
    return coboundary(k, x).is_zero();
}

gf2::Vec CohomologyBasis::coordinates(const SimplicialComplex& k, const Cochain& x) const {
    if (x.degree != degree_) throw Error("BadDegree", "coordinate map degree mismatch");
    if (!is_cocycle(k, x)) throw Error("NotACocycle", "coordinate map needs a cocycle");
    gf2::Vec v = x.bits;
    gf2::Vec tag(rank());
    reducer_.reduce(v, &tag);
    if (!v.is_zero())
        throw Error("NotACocycle", "cocycle not in the span of the stored basis");
    return tag;
}

CohomologyBasis cohomology_basis(const SimplicialComplex& k, int deg) {
    CohomologyBasis out;
    out.degree_ = deg;
    const int n = k.count(deg);

    if (deg == 0) {
        // component indicators, ordered by smallest vertex: keeps H^0 aligned
        // with the lattice-side component order
        const auto& comps = k.components();
        out.reducer_ = gf2::Reducer(n, int(comps.size()));
        for (int c = 0; c < int(comps.size()); ++c) {
            Cochain rep = Cochain::zero(k, 0);
            for (Vertex v : comps[c]) rep.bits.set(v, true);
            gf2::Vec tag(int(comps.size()));
            tag.set(c, true);
            out.reducer_.insert(rep.bits, tag);
            out.reps_.push_back(std::move(rep));
        }
        return out;
    }

    // kernel of delta^deg modulo image of delta^{deg-1}
    std::vector<gf2::Vec> zbasis = gf2::nullspace(coboundary_matrix(k, deg));
    // coboundaries of the (deg-1)-simplex indicators span B^deg
    gf2::Matrix below = coboundary_matrix(k, deg - 1);  // rows: deg-simplices
    gf2::Matrix beltr = below.transposed();             // rows: (deg-1)-simplices

    // first pass: count the H rank so the tag width is known
    gf2::Reducer probe(n);
    for (int r = 0; r < beltr.rows(); ++r) probe.insert(beltr.row(r));
    int brank = probe.rank();
    for (const auto& z : zbasis) probe.insert(z);
    const int hrank = probe.rank() - brank;

    // Every stored row carries the H-coordinates of its cohomology class:
    // coboundary rows are tagged 0, each new representative e_i. Reducing a
    // cocycle to zero then accumulates exactly its coordinates.
    gf2::Reducer work(n, hrank);
    for (int r = 0; r < beltr.rows(); ++r) work.insert(beltr.row(r), gf2::Vec(hrank));
    int idx = 0;
    for (const auto& z : zbasis) {
        gf2::Vec v = z;
        gf2::Vec tag(hrank);
        work.reduce(v, &tag);
        if (v.is_zero()) continue;
        gf2::Vec e(hrank);
        e.set(idx, true);
        work.insert(v, e);
        out.reps_.push_back(Cochain{deg, v});  // basis rep = reduced remainder
        ++idx;
    }
    out.reducer_ = work;
    return out;
}

namespace {

// simplex lookup helper for sub-tuples
int sub_index(const SimplicialComplex& k, const Simplex& s) { return k.index_of(s); }

}  // namespace

Cochain cup(const SimplicialComplex& k, const Cochain& x, const Cochain& y) {
    const int deg = x.degree + y.degree;
    if (deg > k.dim()) return Cochain{deg, gf2::Vec(0)};
    Cochain out = Cochain::zero(k, deg);
    const auto& list = k.simplices(deg);
    Simplex front(x.degree + 1), back(y.degree + 1);
    for (int c = 0; c < int(list.size()); ++c) {
        const Simplex& s = list[c];
        for (int i = 0; i <= x.degree; ++i) front[i] = s[i];
        for (int i = 0; i <= y.degree; ++i) back[i] = s[x.degree + i];
        int fi = sub_index(k, front);
        int bi = sub_index(k, back);
        if (x.bits.get(fi) && y.bits.get(bi)) out.bits.flip(c);
    }
    return out;
}

Cochain cup_i(const SimplicialComplex& k, const Cochain& x, const Cochain& y, int i) {
    if (i == 0) return cup(k, x, y);
    const int p = x.degree, q = y.degree;
    const int deg = p + q - i;
    if (i < 0 || deg < 0 || deg > k.dim()) return Cochain{deg, gf2::Vec(0)};
    Cochain out = Cochain::zero(k, deg);
    const int n = deg;  // simplex vertices w_0..w_n
    // cut points 0 <= a_0 < ... < a_i <= n split the simplex into i+2 blocks;
    // x eats the even blocks, y the odd ones, adjacent blocks share a vertex
    std::vector<int> cuts(i + 1);
    const auto& list = k.simplices(deg);
    for (int c = 0; c < int(list.size()); ++c) {
        const Simplex& s = list[c];
        int parity = 0;
        std::function<void(int, int)> rec = [&](int pos, int from) {
            if (pos == i + 1) {
                Simplex xs, ys;
                int prev = 0;
                for (int b = 0; b <= i + 1; ++b) {
                    int hi = b <= i ? cuts[b] : n;
                    auto& dst = (b % 2 == 0) ? xs : ys;
                    for (int t = prev; t <= hi; ++t) dst.push_back(s[t]);
                    prev = hi;
                }
                if (int(xs.size()) == p + 1 && int(ys.size()) == q + 1) {
                    int xi = sub_index(k, xs);
                    int yi = sub_index(k, ys);
                    if (x.bits.get(xi) && y.bits.get(yi)) parity ^= 1;
                }
                return;
            }
            for (int a = from; a <= n; ++a) {
                cuts[pos] = a;
                rec(pos + 1, a + 1);
            }
        };
        rec(0, 0);
        if (parity) out.bits.set(c, true);
    }
    return out;
}

Cochain steenrod_square(const SimplicialComplex& k, int i, const Cochain& x) {
    if (!is_cocycle(k, x)) throw Error("NotACocycle", "Sq needs a cocycle input");
    const int deg = x.degree;
    const int outdeg = deg + i;
    if (i < 0 || i > deg || outdeg > k.dim())  // vanishing range, or truncated
        return Cochain{outdeg, gf2::Vec(outdeg >= 0 && outdeg <= k.dim() ? k.count(outdeg) : 0)};
    return cup_i(k, x, x, deg - i);
}

int fundamental_pairing(const SimplicialComplex& k, const Cochain& x) {
    if (x.degree != k.dim()) throw Error("BadDegree", "pairing needs a top-degree cochain");
    return x.bits.popcount() & 1;
}

bool GradedClass::is_zero() const {
    for (const auto& v : coords)
        if (!v.is_zero()) return false;
    return true;
}

GradedClass& GradedClass::operator^=(const GradedClass& o) {
    for (std::size_t d = 0; d < coords.size(); ++d) coords[d] ^= o.coords[d];
    return *this;
}

int CohomologyRing::betti(int deg) const {
    if (deg < 0 || deg > dim()) return 0;
    return bases_[deg].rank();
}

GradedClass CohomologyRing::zero() const {
    GradedClass g;
    for (int d = 0; d <= dim(); ++d) g.coords.emplace_back(betti(d));
    return g;
}

GradedClass CohomologyRing::unit() const {
    GradedClass g = zero();
    for (int c = 0; c < betti(0); ++c) g.coords[0].set(c, true);
    return g;
}

GradedClass CohomologyRing::component_indicator(int component) const {
    GradedClass g = zero();
    g.coords[0].set(component, true);
    return g;
}

GradedClass CohomologyRing::homogeneous(int deg, const gf2::Vec& coords) const {
    GradedClass g = zero();
    g.coords[deg] = coords;
    return g;
}

GradedClass CohomologyRing::h1_class(unsigned long index) const {
    GradedClass g = zero();
    for (int j = 0; j < betti(1); ++j)
        if ((index >> j) & 1u) g.coords[1].set(j, true);
    return g;
}

const gf2::Vec& CohomologyRing::cup_coords(int k, int l, int i, int j) const {
    return cup_[k][l][std::size_t(i) * betti(l) + j];
}

const gf2::Matrix& CohomologyRing::sq_matrix(int deg, int i) const { return sq_[deg][i]; }

GradedClass CohomologyRing::mul(const GradedClass& a, const GradedClass& b) const {
    GradedClass out = zero();
    for (int k = 0; k <= dim(); ++k) {
        for (int l = 0; k + l <= dim(); ++l) {
            for (int i = 0; i < betti(k); ++i) {
                if (!a.coords[k].get(i)) continue;
                for (int j = 0; j < betti(l); ++j) {
                    if (!b.coords[l].get(j)) continue;
                    out.coords[k + l] ^= cup_coords(k, l, i, j);
                }
            }
        }
    }
    return out;
}

GradedClass CohomologyRing::sq(int i, const GradedClass& a) const {
    GradedClass out = zero();
    for (int k = 0; k <= dim(); ++k) {
        if (i > k || k + i > dim()) continue;
        const gf2::Matrix& m = sq_[k][i];
        for (int col = 0; col < betti(k); ++col) {
            if (!a.coords[k].get(col)) continue;
            for (int row = 0; row < betti(k + i); ++row)
                if (m.get(row, col)) out.coords[k + i].flip(row);
        }
    }
    return out;
}

GradedClass CohomologyRing::power(const GradedClass& a, int e) const {
    GradedClass out = unit();
    for (int t = 0; t < e; ++t) out = mul(out, a);
    return out;
}

int CohomologyRing::pair_top(const GradedClass& a) const {
    int acc = 0;
    for (int i = 0; i < betti(dim()); ++i)
        if (a.coords[dim()].get(i) && top_pairing_.get(i)) acc ^= 1;
    return acc;
}

CohomologyRing CohomologyRing::build(const SimplicialComplex& k) {
    CohomologyRing r;
    r.k_ = std::make_shared<SimplicialComplex>(k);
    const SimplicialComplex& kc = *r.k_;
    const int d = kc.dim();

    for (int deg = 0; deg <= d; ++deg) r.bases_.push_back(cohomology_basis(kc, deg));

    // cup structure constants
    r.cup_.assign(d + 1, {});
    for (int a = 0; a <= d; ++a) {
        r.cup_[a].assign(d + 1, {});
        for (int b = 0; a + b <= d; ++b) {
            auto& tab = r.cup_[a][b];
            tab.reserve(std::size_t(r.betti(a)) * r.betti(b));
            for (int i = 0; i < r.betti(a); ++i) {
                for (int j = 0; j < r.betti(b); ++j) {
                    Cochain prod = cup(kc, r.bases_[a].representatives()[i],
                                       r.bases_[b].representatives()[j]);
                    tab.push_back(r.bases_[a + b].coordinates(kc, prod));
                }
            }
        }
    }

    // Steenrod matrices
    r.sq_.assign(d + 1, {});
    for (int deg = 0; deg <= d; ++deg) {
        for (int i = 0; deg + i <= d && i <= deg; ++i) {
            gf2::Matrix m(r.betti(deg + i), r.betti(deg));
            for (int col = 0; col < r.betti(deg); ++col) {
                Cochain s = steenrod_square(kc, i, r.bases_[deg].representatives()[col]);
                if (int(s.bits.size()) == 0) continue;  // truncated above top degree
                gf2::Vec coords = r.bases_[deg + i].coordinates(kc, s);
                for (int row = 0; row < r.betti(deg + i); ++row)
                    if (coords.get(row)) m.set(row, col, true);
            }
            r.sq_[deg].push_back(std::move(m));
        }
    }

    // fundamental pairing
    r.top_pairing_ = gf2::Vec(r.betti(d));
    for (int i = 0; i < r.betti(d); ++i)
        if (fundamental_pairing(kc, r.bases_[d].representatives()[i]))
            r.top_pairing_.set(i, true);

    r.pairing_.assign(d + 1, gf2::Matrix());
    for (int deg = 0; deg <= d; ++deg) {
        gf2::Matrix p(r.betti(deg), r.betti(d - deg));
        for (int i = 0; i < r.betti(deg); ++i) {
            for (int j = 0; j < r.betti(d - deg); ++j) {
                Cochain prod = cup(kc, r.bases_[deg].representatives()[i],
                                   r.bases_[d - deg].representatives()[j]);
                if (fundamental_pairing(kc, prod)) p.set(i, j, true);
            }
        }
        r.pairing_[deg] = std::move(p);
    }

    // --- build-time invariants ---
    for (int deg = 0; deg <= d; ++deg) {
        const auto& p = r.pairing_[deg];
        if (p.rows() != p.cols() || gf2::rank(p) != p.rows())
            throw Error("PairingDegenerate",
                        "Poincare pairing degenerate in degree " + std::to_string(deg));
    }
    // commutativity and associativity on basis elements
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (int i = 0; i < r.betti(a); ++i)
                for (int j = 0; j < r.betti(b); ++j)
                    if (!(r.cup_coords(a, b, i, j) == r.cup_coords(b, a, j, i)))
                        throw Error("PairingDegenerate", "cup product not commutative");
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (int c = 0; a + b + c <= d; ++c)
                for (int i = 0; i < r.betti(a); ++i)
                    for (int j = 0; j < r.betti(b); ++j)
                        for (int l = 0; l < r.betti(c); ++l) {
                            GradedClass x = r.homogeneous(a, [&] {
                                gf2::Vec v(r.betti(a));
                                v.set(i, true);
                                return v;
                            }());
                            GradedClass y = r.homogeneous(b, [&] {
                                gf2::Vec v(r.betti(b));
                                v.set(j, true);
                                return v;
                            }());
                            GradedClass z = r.homogeneous(c, [&] {
                                gf2::Vec v(r.betti(c));
                                v.set(l, true);
                                return v;
                            }());
                            if (!(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z))))
                                throw Error("PairingDegenerate", "cup product not associative");
                        }
    // Sq^0 = identity on every basis
    for (int deg = 0; deg <= d; ++deg) {
        const gf2::Matrix& m = r.sq_[deg][0];
        for (int i = 0; i < r.betti(deg); ++i)
            for (int j = 0; j < r.betti(deg); ++j)
                if (m.get(i, j) != (i == j))
                    throw Error("PairingDegenerate", "Sq^0 is not the identity");
    }
    return r;
}

}  // namespace z2gg
