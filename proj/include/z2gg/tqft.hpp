#pragma once

#include "z2gg/charclasses.hpp"
#include "z2gg/cohomology.hpp"
#include "z2gg/simplicial.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace z2gg {

// Exact rational with power-of-two denominator (partition values).
struct Dyadic {
    long long num = 0;
    int log2den = 0;

    static Dyadic make(long long num, int log2den);
    bool operator==(const Dyadic& o) const { return num == o.num && log2den == o.log2den; }
    std::string to_string() const;
};

// A quantum gauge-gravity theory: named Lagrangian in ambient dimension n.
struct TheoryHandle {
    std::string name;
    Lagrangian beta;
    int n = 0;
};

// "gds" | "dw0" | "dw^n" (alpha^n) | "beta2" | explicit Lagrangian text
TheoryHandle make_theory(const std::string& spec, int n);

// Z^cl_beta(N, P) = (-1)^{<beta(N,P),[N]>}
int classical_partition(const TheoryHandle& t, const CohomologyRing& n_manifold,
                        const GradedClass& a);

// Z_beta(N) = sum over [P] of Z^cl / |Aut P|, |Aut P| = 2^#components
Dyadic quantum_partition(const TheoryHandle& t, const CohomologyRing& n_manifold);

struct StateSpaceResult {
    std::string manifold;
    std::string theory;
    long dim = 0;
    std::vector<long> permitted;  // H^1 class indices with trivial character
};

// Per-class, per-component character signs of the theory on M.
std::vector<std::vector<int>> theory_characters(const TheoryHandle& t,
                                                const CohomologyRing& m);

StateSpaceResult state_dim(const TheoryHandle& t, const CohomologyRing& m,
                           const std::string& manifold_name = "");

struct TheoryColumn {
    std::string theory;
    long dim = 0;
    std::vector<std::vector<int>> characters;  // per class, per component
};
struct ComparisonRow {
    std::string manifold;
    std::vector<TheoryColumn> columns;
};
struct ComparisonTable {
    std::vector<std::string> theories;
    std::vector<ComparisonRow> rows;
    // equal[i][j]: columns i and j have equal dims and equal character
    // multisets on every listed manifold (theory isomorphism may relabel the
    // bundle classes, so multiset equality is the character-level test)
    std::vector<std::vector<bool>> equal;

    std::string to_text() const;
    std::string to_json() const;
};

ComparisonTable compare_theories(const std::vector<TheoryHandle>& theories,
                                 const std::vector<const CohomologyRing*>& rings,
                                 const std::vector<std::string>& names);

// Z(S^1 x M) = dim Z(M): the partition function over an honest triangulation
// of circle(3) x M must equal the state-space dimension.
bool trace_identity_check(const TheoryHandle& t, const ManifoldRecord& m);

// state dims (and partition functions, in matching dimension) agree between
// beta and its orientation twist on each listed manifold
bool w1_twist_check(const Lagrangian& beta, const std::vector<ManifoldRecord>& manifolds);

// Shared ring construction for CLI / validation paths.
class RingCache {
public:
    const CohomologyRing& get(const ManifoldRecord& rec);

private:
    std::map<std::string, std::shared_ptr<CohomologyRing>> cache_;
};

}  // namespace z2gg
