#include "z2gg/cli.hpp"

#include "z2gg/charclasses.hpp"
#include "z2gg/errors.hpp"
#include "z2gg/lattice.hpp"
#include "z2gg/tqft.hpp"
#include "z2gg/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <sstream>

namespace z2gg {

namespace {

using nlohmann::ordered_json;

std::string coords_str(const gf2::Vec& v) {
    std::string s = "[";
    for (int i = 0; i < v.size(); ++i) s += v.get(i) ? "1" : "0";
    return s + "]";
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<long> betti_vector(const SimplicialComplex& k) {
    std::vector<long> b;
    for (int d = 0; d <= k.dim(); ++d) b.push_back(cohomology_basis(k, d).rank());
    return b;
}

int run_manifolds(bool json, std::ostream& out) {
    const std::vector<std::string> catalog = {"circle(3)", "circle(4)", "circle(5)",
                                              "sphere(2)", "sphere(3)", "rp2_6",
                                              "torus_7",   "klein_8",   "rp3_11",
                                              "cp2_9"};
    ordered_json doc = ordered_json::array();
    for (const auto& name : catalog) {
        ManifoldRecord rec = builtin(name);
        auto f = rec.complex.f_vector();
        auto b = betti_vector(rec.complex);
        if (json) {
            ordered_json j;
            j["name"] = name;
            j["f_vector"] = f;
            j["betti_gf2"] = b;
            j["chi"] = rec.complex.euler_characteristic();
            doc.push_back(j);
        } else {
            out << name << "  f=(";
            for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
            out << ")  b=(";
            for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
            out << ")  chi=" << rec.complex.euler_characteristic() << "\n";
        }
    }
    if (json) out << doc.dump() << "\n";
    return 0;
}

int run_homology(const std::string& manifold, bool json, std::ostream& out) {
    ManifoldRecord rec = builtin(manifold);
    auto f = rec.complex.f_vector();
    auto b = betti_vector(rec.complex);
    if (json) {
        ordered_json j;
        j["manifold"] = rec.name;
        j["f_vector"] = f;
        j["betti_gf2"] = b;
        j["chi"] = rec.complex.euler_characteristic();
        out << j.dump() << "\n";
    } else {
        out << rec.name << "\n  f-vector: (";
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
        out << ")\n  GF(2) Betti: (";
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
        out << ")\n  chi: " << rec.complex.euler_characteristic() << "\n";
    }
    return 0;
}

int run_sw(const std::string& manifold, bool json, std::ostream& out) {
    ManifoldRecord rec = builtin(manifold);
    CohomologyRing ring = CohomologyRing::build(rec.complex);
    WuProfile wu = wu_classes(ring);
    SWProfile sw = stiefel_whitney(ring);
    if (json) {
        ordered_json j;
        j["manifold"] = rec.name;
        for (int d = 0; d <= ring.dim(); ++d) {
            j["wu"].push_back(coords_str(wu.v[d]));
            j["sw"].push_back(coords_str(sw.w[d]));
        }
        out << j.dump() << "\n";
    } else {
        out << rec.name << " (coordinates per degree in the H^* basis)\n";
        for (int d = 0; d <= ring.dim(); ++d)
            out << "  v" << d << " = " << coords_str(wu.v[d]) << "   w" << d << " = "
                << coords_str(sw.w[d]) << "\n";
    }
    return 0;
}

int run_ground(const std::string& manifold, const std::string& model_str,
               const std::string& method_str, const LatticeBudget& budget, bool json,
               std::ostream& out) {
    ManifoldRecord rec = builtin(manifold);
    Model model;
    if (model_str == "tc") model = Model::TC;
    else if (model_str == "gds") model = Model::GDS;
    else throw Error("UnknownManifold", "model must be tc or gds");
    GroundMethod method = GroundMethod::Fast;
    if (method_str == "flat_oracle") method = GroundMethod::FlatOracle;
    else if (method_str == "full_oracle") method = GroundMethod::FullOracle;
    else if (method_str != "fast") throw Error("TooLarge", "unknown method " + method_str);
    GroundStateReport rep = ground_dim(rec.complex, model, rec.name, method, budget);
    if (json) out << report_to_json(rep) << "\n";
    else
        out << rec.name << " " << model_name(model) << " ground dimension = " << rep.dim
            << " (" << rep.method << ")\n";
    return 0;
}

int run_statedim(const std::string& manifold, const std::string& theory, bool json,
                 std::ostream& out) {
    ManifoldRecord rec = builtin(manifold);
    CohomologyRing ring = CohomologyRing::build(rec.complex);
    TheoryHandle t = make_theory(theory, ring.dim() + 1);
    StateSpaceResult res = state_dim(t, ring, rec.name);
    if (json) {
        ordered_json j;
        j["manifold"] = res.manifold;
        j["theory"] = res.theory;
        j["dim"] = res.dim;
        j["permitted"] = res.permitted;
        out << j.dump() << "\n";
    } else {
        out << res.dim << "\n";
    }
    return 0;
}

int run_partition(const std::string& manifold, const std::string& theory, bool json,
                  std::ostream& out) {
    ManifoldRecord rec = builtin(manifold);
    CohomologyRing ring = CohomologyRing::build(rec.complex);
    TheoryHandle t = make_theory(theory, ring.dim());
    Dyadic z = quantum_partition(t, ring);
    if (json) {
        ordered_json j;
        j["manifold"] = rec.name;
        j["theory"] = t.name;
        j["value"] = z.to_string();
        j["num"] = z.num;
        j["log2den"] = z.log2den;
        out << j.dump() << "\n";
    } else {
        out << z.to_string() << "\n";
    }
    return 0;
}

int run_compare(const std::string& theories_str, const std::string& manifolds_str,
                bool json, std::ostream& out) {
    auto mnames = split_list(manifolds_str);
    std::vector<ManifoldRecord> recs;
    std::vector<const CohomologyRing*> rings;
    std::vector<std::shared_ptr<CohomologyRing>> owned;
    std::vector<std::string> names;
    int n = -1;
    for (const auto& m : mnames) {
        recs.push_back(builtin(m));
        owned.push_back(std::make_shared<CohomologyRing>(CohomologyRing::build(recs.back().complex)));
        rings.push_back(owned.back().get());
        names.push_back(recs.back().name);
        if (n < 0) n = recs.back().complex.dim() + 1;
        else if (n != recs.back().complex.dim() + 1)
            throw Error("DegreeMismatch", "compare needs manifolds of one dimension");
    }
    std::vector<TheoryHandle> theories;
    for (const auto& t : split_list(theories_str)) theories.push_back(make_theory(t, n));
    ComparisonTable table = compare_theories(theories, rings, names);
    out << (json ? table.to_json() + "\n" : table.to_text());
    return 0;
}

int run_validate(const LatticeBudget& budget, bool json, std::ostream& out) {
    AcceptanceOptions opts;
    opts.budget = budget;
    auto results = run_acceptance(opts);
    bool all = true;
    ordered_json doc = ordered_json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (json) {
            ordered_json j;
            j["id"] = r.id;
            j["pass"] = r.pass;
            j["description"] = r.description;
            j["detail"] = r.detail;
            doc.push_back(j);
        } else {
            out << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.description << "\n";
            if (!r.pass) out << "      " << r.detail << "\n";
        }
    }
    if (json) out << doc.dump() << "\n";
    else out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for the toric-code / generalized-double-semion lattice "
                 "models and their Z/2 gauge-gravity TQFTs"};
    app.require_subcommand(1);

    bool json = false;
    int threads = 0;
    LatticeBudget budget;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--threads", threads, "cap OpenMP worker count");
    app.add_option("--max-edges", budget.max_edges, "full-oracle edge budget");
    app.add_option("--max-flat-bits", budget.max_flat_bits, "flat-oracle 2^bits budget");

    std::string manifold, model = "gds", method = "fast", theory = "gds";
    std::string theories_str, manifolds_str;

    auto* mans = app.add_subcommand("manifolds", "list the built-in manifold catalog");
    auto* hom = app.add_subcommand("homology", "f-vector and GF(2) Betti numbers");
    hom->add_option("--manifold", manifold)->required();
    auto* sw = app.add_subcommand("sw", "Wu and Stiefel-Whitney profiles");
    sw->add_option("--manifold", manifold)->required();
    auto* ground = app.add_subcommand("ground", "lattice ground-state dimension");
    ground->add_option("--manifold", manifold)->required();
    ground->add_option("--model", model, "tc|gds");
    ground->add_option("--method", method, "fast|flat_oracle|full_oracle");
    auto* sdim = app.add_subcommand("statedim", "TQFT state-space dimension");
    sdim->add_option("--manifold", manifold)->required();
    sdim->add_option("--theory", theory, "gds|dw0|dw^n|beta2|tc|<lagrangian>");
    auto* part = app.add_subcommand("partition", "quantum partition function");
    part->add_option("--manifold", manifold)->required();
    part->add_option("--theory", theory);
    auto* cmp = app.add_subcommand("compare", "state dims and characters across theories");
    cmp->add_option("--theories", theories_str)->required();
    cmp->add_option("--manifolds", manifolds_str)->required();
    auto* val = app.add_subcommand("validate", "run the full cross-validation suite");
    for (CLI::App* sc : {mans, hom, sw, ground, sdim, part, cmp, val}) sc->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (app.got_subcommand("manifolds")) return run_manifolds(json, out);
        if (app.got_subcommand("homology")) return run_homology(manifold, json, out);
        if (app.got_subcommand("sw")) return run_sw(manifold, json, out);
        if (app.got_subcommand("ground"))
            return run_ground(manifold, model, method, budget, json, out);
        if (app.got_subcommand("statedim")) return run_statedim(manifold, theory, json, out);
        if (app.got_subcommand("partition")) return run_partition(manifold, theory, json, out);
        if (app.got_subcommand("compare")) return run_compare(theories_str, manifolds_str, json, out);
        if (app.got_subcommand("validate")) return run_validate(budget, json, out);
    } catch (const Error& e) {
        err << e.what() << "\n";  // what() already carries the error name
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 2;
}

}  // namespace z2gg
