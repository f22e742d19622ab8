#include "z2gg/charclasses.hpp"

#include "z2gg/errors.hpp"

#include <cctype>
#include <sstream>

namespace z2gg {

WuProfile wu_classes(const CohomologyRing& ring) {
    const int d = ring.dim();
    WuProfile out;
    out.v.reserve(d + 1);
    // v_0 = 1
    out.v.push_back(ring.unit().coords[0]);
    for (int k = 1; k <= d; ++k) {
        const int bk = ring.betti(k);
        const int bd = ring.betti(d - k);
        // equations indexed by the H^{d-k} basis: P^T c = rhs
        gf2::Matrix sys(bd, bk);
        for (int i = 0; i < bk; ++i)
            for (int j = 0; j < bd; ++j)
                if (ring.pairing_matrix(k).get(i, j)) sys.set(j, i, true);
        gf2::Vec rhs(bd);
        for (int j = 0; j < bd; ++j) {
            gf2::Vec e(bd);
            e.set(j, true);
            GradedClass x = ring.homogeneous(d - k, e);
            if (ring.pair_top(ring.sq(k, x))) rhs.set(j, true);
        }
        auto sol = gf2::solve(sys, rhs);
        if (!sol)
            throw Error("PairingDegenerate", "Wu system inconsistent in degree " +
                                                 std::to_string(k));
        out.v.push_back(*sol);
    }
    return out;
}

SWProfile stiefel_whitney(const CohomologyRing& ring) {
    const int d = ring.dim();
    WuProfile wu = wu_classes(ring);
    SWProfile out;
    out.w.reserve(d + 1);
    for (int m = 0; m <= d; ++m) {
        gf2::Vec acc(ring.betti(m));
        for (int i = 0; i <= m; ++i) {
            const int j = m - i;  // w_m += Sq^i(v_j)
            if (i > j) continue;  // Sq^i vanishes above the degree
            GradedClass vj = ring.homogeneous(j, wu.v[j]);
            acc ^= ring.sq(i, vj).coords[m];
        }
        out.w.push_back(std::move(acc));
    }
    return out;
}

const std::vector<gf2::Vec>& cached_stiefel_whitney(const CohomologyRing& ring) {
    auto box = ring.sw_cache_;
    std::call_once(box->once, [&] { box->coords = stiefel_whitney(ring).w; });
    return box->coords;
}

int LagMonomial::degree() const {
    int d = aexp;
    for (auto [i, e] : wexp) d += i * e;
    return d;
}

void Lagrangian::toggle(const LagMonomial& m) {
    auto it = monomials.find(m);
    if (it == monomials.end()) monomials.insert(m);
    else monomials.erase(it);
}

Lagrangian gds_lagrangian(int n) {
    if (n < 1) throw Error("BadDegree", "Lagrangian degree must be >= 1");
    Lagrangian beta{n, {}};
    for (int i = 0; i + 1 <= n; ++i) {  // w_i * a^{n-i}, w_0 = 1
        LagMonomial m;
        if (i > 0) m.wexp[i] = 1;
        m.aexp = n - i;
        beta.toggle(m);
    }
    return beta;
}

Lagrangian dw_lagrangian(int n) {
    if (n < 1) throw Error("BadDegree", "Lagrangian degree must be >= 1");
    Lagrangian beta{n, {}};
    beta.toggle(LagMonomial{{}, n});
    return beta;
}

Lagrangian zero_lagrangian(int n) {
    if (n < 1) throw Error("BadDegree", "Lagrangian degree must be >= 1");
    return Lagrangian{n, {}};
}

Lagrangian beta2_lagrangian(int n) {
    if (n < 1) throw Error("BadDegree", "Lagrangian degree must be >= 1");
    Lagrangian beta{n, {}};
    for (int i = 0; i + 1 <= n; ++i) {
        if ((n - i) % 2 == 0) continue;  // w*a*(1+a^2+a^4+...): odd a-powers
        LagMonomial m;
        if (i > 0) m.wexp[i] = 1;
        m.aexp = n - i;
        beta.toggle(m);
    }
    return beta;
}

Lagrangian orientation_twist(const Lagrangian& beta) {
    Lagrangian out{beta.degree, {}};
    for (const LagMonomial& m : beta.monomials) {
        const int j = m.aexp;
        for (int a = 0; a <= j; ++a) {
            // C(j, a) mod 2 by Lucas: nonzero iff bits(a) subset of bits(j)
            if ((a & j) != a) continue;
            LagMonomial t = m;
            t.aexp = a;
            if (j - a > 0) t.wexp[1] += j - a;
            out.toggle(t);
        }
    }
    return out;
}

Lagrangian parse_lagrangian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error("BadDegree", "empty Lagrangian expression");
    if (s == "0") return Lagrangian{0, {}};

    Lagrangian out{-1, {}};
    std::size_t pos = 0;
    auto parse_int = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw Error("BadDegree", "expected a number in Lagrangian");
        return std::stoi(s.substr(start, pos - start));
    };
    while (pos < s.size()) {
        LagMonomial m;
        bool factor_expected = true;
        while (factor_expected) {
            if (pos >= s.size()) throw Error("BadDegree", "dangling operator in Lagrangian");
            int sym_w = 0;
            if (s[pos] == 'a') {
                ++pos;
            } else if (s[pos] == 'w') {
                ++pos;
                sym_w = parse_int();
                if (sym_w < 1 || sym_w > 9)
                    throw Error("BadDegree", "w-symbols range over w1..w9");
            } else {
                throw Error("BadDegree", std::string("unexpected character '") + s[pos] +
                                             "' in Lagrangian");
            }
            int e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_int();
            }
            if (sym_w) m.wexp[sym_w] += e;
            else m.aexp += e;
            factor_expected = pos < s.size() && s[pos] == '*';
            if (factor_expected) ++pos;
        }
        out.toggle(m);
        if (out.degree < 0) out.degree = m.degree();
        else if (m.degree() != out.degree)
            throw Error("BadDegree", "Lagrangian is not homogeneous");
        if (pos < s.size()) {
            if (s[pos] != '+')
                throw Error("BadDegree", std::string("unexpected character '") + s[pos] + "'");
            ++pos;
        }
    }
    return out;
}

std::string to_string(const Lagrangian& beta) {
    if (beta.monomials.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const LagMonomial& m : beta.monomials) {
        if (!first) os << " + ";
        first = false;
        bool lead = true;
        for (auto [i, e] : m.wexp) {
            if (!lead) os << "*";
            lead = false;
            os << "w" << i;
            if (e > 1) os << "^" << e;
        }
        if (m.aexp) {
            if (!lead) os << "*";
            lead = false;
            os << "a";
            if (m.aexp > 1) os << "^" << m.aexp;
        }
        if (lead) os << "1";
    }
    return os.str();
}

int lagrangian_value(const Lagrangian& beta, const CohomologyRing& ring,
                     const GradedClass& a) {
    if (beta.degree != ring.dim())
        throw Error("DegreeMismatch", "Lagrangian degree " + std::to_string(beta.degree) +
                                          " on a manifold of dimension " +
                                          std::to_string(ring.dim()));
    const auto& sw = cached_stiefel_whitney(ring);
    int acc = 0;
    for (const LagMonomial& m : beta.monomials) {
        GradedClass cls = ring.unit();
        bool dead = false;
        for (auto [i, e] : m.wexp) {
            if (i > ring.dim()) { dead = true; break; }
            GradedClass wi = ring.homogeneous(i, sw[i]);
            for (int t = 0; t < e; ++t) cls = ring.mul(cls, wi);
        }
        if (dead) continue;
        cls = ring.mul(cls, ring.power(a, m.aexp));
        acc ^= ring.pair_top(cls);
    }
    return acc;
}

MappingTorusElement mt_mul(const CohomologyRing& ring, const MappingTorusElement& a,
                           const MappingTorusElement& b) {
    // (u + x u')(s + x s') = us + x(us' + u's), since x^2 = 0
    MappingTorusElement out;
    out.u = ring.mul(a.u, b.u);
    out.ux = ring.mul(a.u, b.ux);
    out.ux ^= ring.mul(a.ux, b.u);
    return out;
}

int mt_pair(const CohomologyRing& ring, const MappingTorusElement& e) {
    return ring.pair_top(e.ux);
}

int mapping_torus_character(const Lagrangian& beta, const CohomologyRing& ring,
                            const GradedClass& a, const GradedClass& t) {
    if (beta.degree != ring.dim() + 1)
        throw Error("DegreeMismatch", "mapping-torus character needs degree dim(M)+1");
    if (!(ring.mul(t, t) == t))
        throw Error("NotIdempotent", "H^0 argument must be a component indicator class");
    const auto& sw = cached_stiefel_whitney(ring);

    const MappingTorusElement alpha{a, t};  // alpha(P_phi) = a + x t
    const MappingTorusElement one{ring.unit(), ring.zero()};
    int acc = 0;
    for (const LagMonomial& m : beta.monomials) {
        MappingTorusElement cls = one;
        bool dead = false;
        for (auto [i, e] : m.wexp) {
            if (i > ring.dim()) { dead = true; break; }
            MappingTorusElement wi{ring.homogeneous(i, sw[i]), ring.zero()};
            for (int tt = 0; tt < e; ++tt) cls = mt_mul(ring, cls, wi);
        }
        if (dead) continue;
        for (int tt = 0; tt < m.aexp; ++tt) cls = mt_mul(ring, cls, alpha);
        acc ^= mt_pair(ring, cls);
    }
    return acc;
}

}  // namespace z2gg
