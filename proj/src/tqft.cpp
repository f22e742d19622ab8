#include "z2gg/tqft.hpp"

#include "z2gg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace z2gg {

Dyadic Dyadic::make(long long num, int log2den) {
    while (log2den > 0 && num % 2 == 0) {
        num /= 2;
        --log2den;
    }
    if (num == 0) log2den = 0;
    return Dyadic{num, log2den};
}

std::string Dyadic::to_string() const {
    if (log2den == 0) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(1ll << log2den);
}

TheoryHandle make_theory(const std::string& raw, int n) {
    std::string spec;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) spec.push_back(c);
    if (spec == "gds") return {spec, gds_lagrangian(n), n};
    if (spec == "dw0" || spec == "tc") return {"dw0", zero_lagrangian(n), n};
    if (spec == "beta2") return {spec, beta2_lagrangian(n), n};
    if (spec == "dw^n" || spec == "dw") return {"dw^" + std::to_string(n), dw_lagrangian(n), n};
    if (spec.rfind("dw^", 0) == 0) {
        int e = std::stoi(spec.substr(3));
        if (e != n)
            throw Error("DegreeMismatch", "theory " + spec + " in ambient dimension " +
                                              std::to_string(n));
        return {spec, dw_lagrangian(n), n};
    }
    Lagrangian beta = parse_lagrangian(spec);
    if (beta.monomials.empty()) beta.degree = n;  // "0" takes its degree from context
    if (beta.degree != n)
        throw Error("DegreeMismatch", "Lagrangian " + spec + " has degree " +
                                          std::to_string(beta.degree) + ", expected " +
                                          std::to_string(n));
    return {to_string(beta), beta, n};
}

int classical_partition(const TheoryHandle& t, const CohomologyRing& ring,
                        const GradedClass& a) {
    if (t.n != ring.dim())
        throw Error("DegreeMismatch", "classical partition needs an n-manifold");
    return lagrangian_value(t.beta, ring, a) ? -1 : 1;
}

Dyadic quantum_partition(const TheoryHandle& t, const CohomologyRing& ring) {
    if (t.n != ring.dim())
        throw Error("DegreeMismatch", "quantum partition needs an n-manifold");
    const int b1 = ring.betti(1);
    long long sum = 0;
    const unsigned long n_classes = 1ul << b1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : sum)
#endif
    for (unsigned long idx = 0; idx < n_classes; ++idx)
        sum += classical_partition(t, ring, ring.h1_class(idx));
    return Dyadic::make(sum, ring.num_components());
}

std::vector<std::vector<int>> theory_characters(const TheoryHandle& t,
                                                const CohomologyRing& m) {
    if (t.n != m.dim() + 1)
        throw Error("DegreeMismatch", "state-space characters need an (n-1)-manifold");
    const int b1 = m.betti(1);
    const int nc = m.num_components();
    const unsigned long n_classes = 1ul << b1;
    std::vector<std::vector<int>> chars(n_classes);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (unsigned long idx = 0; idx < n_classes; ++idx) {
        GradedClass a = m.h1_class(idx);
        std::vector<int> row(nc);
        for (int c = 0; c < nc; ++c)
            row[c] = mapping_torus_character(t.beta, m, a, m.component_indicator(c)) ? -1 : 1;
        chars[idx] = std::move(row);
    }
    return chars;
}

StateSpaceResult state_dim(const TheoryHandle& t, const CohomologyRing& m,
                           const std::string& manifold_name) {
    StateSpaceResult out;
    out.manifold = manifold_name;
    out.theory = t.name;
    auto chars = theory_characters(t, m);
    for (long idx = 0; idx < long(chars.size()); ++idx)
        if (std::all_of(chars[idx].begin(), chars[idx].end(), [](int c) { return c == 1; }))
            out.permitted.push_back(idx);
    out.dim = long(out.permitted.size());
    return out;
}

ComparisonTable compare_theories(const std::vector<TheoryHandle>& theories,
                                 const std::vector<const CohomologyRing*>& rings,
                                 const std::vector<std::string>& names) {
    ComparisonTable table;
    for (const auto& t : theories) table.theories.push_back(t.name);
    for (std::size_t mi = 0; mi < rings.size(); ++mi) {
        ComparisonRow row;
        row.manifold = names[mi];
        for (const auto& t : theories) {
            TheoryColumn col;
            col.theory = t.name;
            col.characters = theory_characters(t, *rings[mi]);
            col.dim = 0;
            for (const auto& ch : col.characters)
                if (std::all_of(ch.begin(), ch.end(), [](int c) { return c == 1; }))
                    ++col.dim;
            row.columns.push_back(std::move(col));
        }
        table.rows.push_back(std::move(row));
    }
    const std::size_t nt = theories.size();
    table.equal.assign(nt, std::vector<bool>(nt, true));
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            bool eq = true;
            for (const auto& row : table.rows) {
                auto a = row.columns[i].characters;
                auto b = row.columns[j].characters;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b || row.columns[i].dim != row.columns[j].dim) {
                    eq = false;
                    break;
                }
            }
            table.equal[i][j] = eq;
        }
    }
    return table;
}

namespace {

std::string char_string(const std::vector<std::vector<int>>& chars) {
    std::ostringstream os;
    for (std::size_t c = 0; c < chars.size(); ++c) {
        if (c) os << " ";
        for (int v : chars[c]) os << (v > 0 ? '+' : '-');
    }
    return os.str();
}

}  // namespace

std::string ComparisonTable::to_text() const {
    std::ostringstream os;
    std::size_t wide = 10;
    for (const auto& row : rows)
        for (const auto& col : row.columns)
            wide = std::max(wide, char_string(col.characters).size() + 4);
    os << std::left << std::setw(28) << "manifold";
    for (const auto& t : theories) os << std::setw(int(wide)) << t;
    os << '\n';
    for (const auto& row : rows) {
        os << std::setw(28) << row.manifold;
        for (const auto& col : row.columns) {
            std::string cell = std::to_string(col.dim) + " [" + char_string(col.characters) + "]";
            os << std::setw(int(wide)) << cell;
        }
        os << '\n';
    }
    for (std::size_t i = 0; i < theories.size(); ++i)
        for (std::size_t j = i + 1; j < theories.size(); ++j)
            os << theories[i] << (equal[i][j] ? " == " : " != ") << theories[j]
               << " on this corpus\n";
    return os.str();
}

std::string ComparisonTable::to_json() const {
    nlohmann::ordered_json j;
    j["theories"] = theories;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["manifold"] = row.manifold;
        r["columns"] = nlohmann::ordered_json::array();
        for (const auto& col : row.columns) {
            nlohmann::ordered_json c;
            c["theory"] = col.theory;
            c["dim"] = col.dim;
            c["characters"] = col.characters;
            r["columns"].push_back(c);
        }
        j["rows"].push_back(r);
    }
    j["equal"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < theories.size(); ++i)
        for (std::size_t ji = i + 1; ji < theories.size(); ++ji) {
            nlohmann::ordered_json e;
            e["pair"] = {theories[i], theories[ji]};
            e["equal"] = bool(equal[i][ji]);
            j["equal"].push_back(e);
        }
    return j.dump();
}

bool trace_identity_check(const TheoryHandle& t, const ManifoldRecord& m) {
    if (t.n != m.complex.dim() + 1)
        throw Error("DegreeMismatch", "trace identity needs an (n-1)-manifold");
    ManifoldRecord circle = builtin("circle(3)");
    SimplicialComplex product = simplicial_product(circle.complex, m.complex);
    CohomologyRing pring = CohomologyRing::build(product);
    CohomologyRing mring = CohomologyRing::build(m.complex);
    Dyadic z = quantum_partition(t, pring);
    long dim = state_dim(t, mring, m.name).dim;
    return z == Dyadic::make(dim, 0);
}

bool w1_twist_check(const Lagrangian& beta, const std::vector<ManifoldRecord>& manifolds) {
    Lagrangian twisted = orientation_twist(beta);
    TheoryHandle tb{"beta", beta, beta.degree};
    TheoryHandle tw{"beta_w1", twisted, beta.degree};
    for (const auto& rec : manifolds) {
        CohomologyRing ring = CohomologyRing::build(rec.complex);
        if (ring.dim() == beta.degree) {
            if (!(quantum_partition(tb, ring) == quantum_partition(tw, ring))) return false;
        } else if (ring.dim() == beta.degree - 1) {
            if (state_dim(tb, ring).dim != state_dim(tw, ring).dim) return false;
        } else {
            throw Error("DegreeMismatch", rec.name + " fits neither n nor n-1");
        }
    }
    return true;
}

const CohomologyRing& RingCache::get(const ManifoldRecord& rec) {
    auto it = cache_.find(rec.name);
    if (it == cache_.end()) {
        auto ring = std::make_shared<CohomologyRing>(CohomologyRing::build(rec.complex));
        it = cache_.emplace(rec.name, std::move(ring)).first;
    }
    return *it->second;
}

}  // namespace z2gg
