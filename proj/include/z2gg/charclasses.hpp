#pragma once

#include "z2gg/cohomology.hpp"

#include <map>
#include <set>
#include <string>

namespace z2gg {

// Wu classes v_0..v_d in basis coordinates; v_k is the unique solution of
// <v_k ~ x, [M]> = <Sq^k x, [M]> over x in H^{d-k}.
struct WuProfile {
    std::vector<gf2::Vec> v;  // per degree
};

// Total Stiefel-Whitney class w = Sq(v), per-degree coordinates.
struct SWProfile {
    std::vector<gf2::Vec> w;
};

WuProfile wu_classes(const CohomologyRing& ring);
SWProfile stiefel_whitney(const CohomologyRing& ring);
const std::vector<gf2::Vec>& cached_stiefel_whitney(const CohomologyRing& ring);

// Monomial w_{i1}^{e1} ... w_{ik}^{ek} * a^j in the formal symbols w1..w9, a.
struct LagMonomial {
    std::map<int, int> wexp;  // i -> exponent, i >= 1, exponents >= 1
    int aexp = 0;

    int degree() const;
    auto operator<=>(const LagMonomial&) const = default;
};

// Homogeneous degree-n GF(2) polynomial in w1..wn, a: an element of
// H^n(BO_n x BZ/2; Z/2).
struct Lagrangian {
    int degree = 0;
    std::set<LagMonomial> monomials;

    void toggle(const LagMonomial& m);  // GF(2) addition
    bool operator==(const Lagrangian& o) const = default;
};

// degree-n piece of w*a/(1+a) = (1+w1+w2+...)(a+a^2+...)
Lagrangian gds_lagrangian(int n);
Lagrangian dw_lagrangian(int n);     // a^n
Lagrangian zero_lagrangian(int n);   // 0
Lagrangian beta2_lagrangian(int n);  // degree-n piece of w*a/(1+a^2)

// substitute a -> a + w1, expanded by Lucas' theorem mod 2
Lagrangian orientation_twist(const Lagrangian& beta);

// Grammar: sums of monomials like "a^3 + w1*a^2 + w2*a"; symbols w1..w9 and
// a, operators '*' '^' '+', whitespace ignored.
Lagrangian parse_lagrangian(const std::string& text);
std::string to_string(const Lagrangian& beta);

// <beta(N, a), [N]> for a closed manifold ring of dimension beta.degree.
int lagrangian_value(const Lagrangian& beta, const CohomologyRing& ring,
                     const GradedClass& a);

// Element u + x*u' of H^*(M)[x]/(x^2) = H^*(S^1 x M; Z/2), with
// w(S^1 x M) pulled back from M.
struct MappingTorusElement {
    GradedClass u;   // coefficient of 1
    GradedClass ux;  // coefficient of x
};

MappingTorusElement mt_mul(const CohomologyRing& ring, const MappingTorusElement& a,
                           const MappingTorusElement& b);
// <u + x u', [S^1 x M]> = <top part of u', [M]>
int mt_pair(const CohomologyRing& ring, const MappingTorusElement& e);

// The character exponent <beta(P_phi), [S^1 x M]> with alpha(P_phi) = a + x t,
// for a in H^1(M) and a component indicator t in H^0(M).
int mapping_torus_character(const Lagrangian& beta, const CohomologyRing& ring,
                            const GradedClass& a, const GradedClass& t);

}  // namespace z2gg
