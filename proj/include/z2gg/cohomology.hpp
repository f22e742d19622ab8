#pragma once

#include "z2gg/gf2.hpp"
#include "z2gg/simplicial.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace z2gg {

// GF(2) simplicial cochain: characteristic vector over the k-simplices.
struct Cochain {
    int degree = 0;
    gf2::Vec bits;

    static Cochain zero(const SimplicialComplex& k, int degree);
    bool is_zero() const { return bits.is_zero(); }
    bool operator==(const Cochain& o) const { return degree == o.degree && bits == o.bits; }
    Cochain& operator^=(const Cochain& o);
};

// Boundary del_k : C_k -> C_{k-1}; rows are (k-1)-simplices.
gf2::Matrix boundary_matrix(const SimplicialComplex& k, int deg);
// Coboundary delta^k : C^k -> C^{k+1}; rows are (k+1)-simplices.
gf2::Matrix coboundary_matrix(const SimplicialComplex& k, int deg);
Cochain coboundary(const SimplicialComplex& k, const Cochain& x);

bool is_cocycle(const SimplicialComplex& k, const Cochain& x);

// Basis of H^k with a working coordinate map. Representatives are cocycles,
// pairwise independent mod coboundaries; coordinates(rep_i) = e_i and
// coordinates kill coboundaries.
class CohomologyBasis {
public:
    int degree() const { return degree_; }
    int rank() const { return int(reps_.size()); }
    const std::vector<Cochain>& representatives() const { return reps_; }
    gf2::Vec coordinates(const SimplicialComplex& k, const Cochain& cocycle) const;

private:
    friend CohomologyBasis cohomology_basis(const SimplicialComplex&, int);
    int degree_ = 0;
    std::vector<Cochain> reps_;
    gf2::Reducer reducer_{0, 0};
};

CohomologyBasis cohomology_basis(const SimplicialComplex& k, int deg);

// Alexander-Whitney cup product w.r.t. the global vertex order. Degrees above
// dim K give the zero top-degree-truncated cochain rather than an error.
Cochain cup(const SimplicialComplex& k, const Cochain& x, const Cochain& y);

// Steenrod cup-i product (front/back block formula, all signs trivial mod 2).
Cochain cup_i(const SimplicialComplex& k, const Cochain& x, const Cochain& y, int i);

// Sq^i x = x cup_{k-i} x for a degree-k cocycle x.
Cochain steenrod_square(const SimplicialComplex& k, int i, const Cochain& x);

// <x, [M]> for a top-degree cochain: the facet count of x mod 2.
int fundamental_pairing(const SimplicialComplex& k, const Cochain& x);

// Graded cohomology element in basis coordinates, one vector per degree.
struct GradedClass {
    std::vector<gf2::Vec> coords;

    bool is_zero() const;
    bool operator==(const GradedClass& o) const { return coords == o.coords; }
    GradedClass& operator^=(const GradedClass& o);
};

// The cohomology ring of a validated closed manifold: bases, cup structure
// constants, Steenrod matrices, and the fundamental pairing. Invariants
// (Poincare nondegeneracy, cup commutativity/associativity, Sq axioms on the
// basis) are verified at construction.
class CohomologyRing {
public:
    static CohomologyRing build(const SimplicialComplex& k);

    const SimplicialComplex& complex() const { return *k_; }
    int dim() const { return k_->dim(); }
    int betti(int deg) const;
    const CohomologyBasis& basis(int deg) const { return bases_[deg]; }
    int num_components() const { return betti(0); }

    GradedClass zero() const;
    GradedClass unit() const;
    GradedClass component_indicator(int component) const;
    GradedClass homogeneous(int deg, const gf2::Vec& coords) const;
    // H^1 class whose coordinate vector is the bit pattern of `index`.
    GradedClass h1_class(unsigned long index) const;

    GradedClass mul(const GradedClass& a, const GradedClass& b) const;
    GradedClass sq(int i, const GradedClass& a) const;
    GradedClass power(const GradedClass& a, int e) const;

    // <top part of a, [M]>
    int pair_top(const GradedClass& a) const;
    // pairing matrix H^k x H^{d-k}
    const gf2::Matrix& pairing_matrix(int deg) const { return pairing_[deg]; }

    // coordinates of cup(basis_k[i], basis_l[j]) in H^{k+l}
    const gf2::Vec& cup_coords(int k, int l, int i, int j) const;
    const gf2::Matrix& sq_matrix(int deg, int i) const;  // H^deg -> H^{deg+i}

private:
    std::shared_ptr<const SimplicialComplex> k_;
    std::vector<CohomologyBasis> bases_;
    // cup_[k][l][i*b_l + j]
    std::vector<std::vector<std::vector<gf2::Vec>>> cup_;
    // sq_[k][i]: H^k -> H^{k+i}
    std::vector<std::vector<gf2::Matrix>> sq_;
    std::vector<gf2::Matrix> pairing_;
    gf2::Vec top_pairing_;  // <e_i, [M]> over the top basis

    struct SwCache {
        std::once_flag once;
        std::vector<gf2::Vec> coords;  // per-degree SW coordinates
    };
    std::shared_ptr<SwCache> sw_cache_ = std::make_shared<SwCache>();
    friend const std::vector<gf2::Vec>& cached_stiefel_whitney(const CohomologyRing&);
};

}  // namespace z2gg
