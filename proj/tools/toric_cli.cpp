// toric-cli: layers, face category, Salvetti complex, cohomology and arithmetic matroids of a
// complexified real toric arrangement.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on bad input.

#include "toric/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

using namespace toric;

namespace {

struct Options {
    std::string out;
    std::string choices_file;
    std::string spec_file;
    unsigned seed = 1;
    bool parallel = false;
    bool paper_example = false;
    bool boundaries = false;
    bool chambers = false;
    std::vector<std::string> matrix_files;
    std::vector<int> subset;
    std::vector<int> basis;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ArrangementSpec load_spec(const Options& o) {
    ArrangementSpec s;
    if (o.paper_example) {
        s = paper_example();
    } else {
        if (o.spec_file.empty()) throw ParseError("no spec file given (or use --paper-example)");
        try {
            s = parse_spec(slurp(o.spec_file));
        } catch (const ParseError& e) {
            throw ParseError(o.spec_file + ": " + e.what());
        }
    }
    if (!o.choices_file.empty()) {
        auto j = json::parse(slurp(o.choices_file));
        s.choices = parse_choices(j.contains("choices") ? j["choices"] : j);
    }
    return s;
}

std::shared_ptr<const SalvettiModel> load_model(const ArrangementSpec& s) {
    if (!s.arr.is_essential()) throw ParseError("the arrangement is not essential");
    return build_model(s.arr);
}

std::string format(const Options& o, const std::string& fallback) { return o.out.empty() ? fallback : o.out; }

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (auto a : allowed)
        if (f == a) return;
    throw ParseError("output format '" + f + "' is not available for this command");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_layers(const Options& o) {
    auto s = load_spec(o);
    auto P = build_layer_poset(s.arr);
    auto f = format(o, "json");
    require_format(f, {"json", "dot"});
    if (f == "dot")
        std::cout << layers_dot(P);
    else
        print(layers_json(s.arr, P));
    return 0;
}

int cmd_faces(const Options& o) {
    auto s = load_spec(o);
    auto m = load_model(s);
    auto f = format(o, "json");
    require_format(f, {"json", "dot"});
    if (f == "dot")
        std::cout << (o.chambers ? chamber_graph_dot(m->a0faces) : face_category_dot(m->faces()));
    else
        print(faces_json(m->faces()));
    return 0;
}

int cmd_salvetti(const Options& o) {
    auto s = load_spec(o);
    require_format(format(o, "json"), {"json"});
    print(salvetti_json(*load_model(s), o.boundaries));
    return 0;
}

int cmd_betti(const Options& o) {
    auto s = load_spec(o);
    require_format(format(o, "json"), {"json"});
    if (!s.arr.is_essential()) {
        print(betti_json(s.arr, nullptr));
        std::cerr << json{{"error", "the arrangement is not essential: SNF route unavailable"}}.dump() << "\n";
        return 2;
    }
    auto m = load_model(s);
    auto j = betti_json(s.arr, m.get());
    print(j);
    return j["match"].get<bool>() ? 0 : 1;
}

int cmd_generators(const Options& o) {
    auto s = load_spec(o);
    require_format(format(o, "json"), {"json"});
    auto m = load_model(s);
    RingPresentation R(m, resolve_choices(*m, s.choices));
    auto j = generators_json(R);
    print(j);
    bool ok = j["spans"].get<bool>();
    for (auto& w : j["omega_SL"]) ok = ok && w["integral"].get<bool>() && w["validated"].get<bool>();
    return ok ? 0 : 1;
}

int cmd_table(const Options& o) {
    auto s = load_spec(o);
    auto f = format(o, "csv");
    require_format(f, {"csv", "json"});
    auto m = load_model(s);
    RingPresentation R(m, resolve_choices(*m, s.choices));
    auto t = R.restriction_table();
    if (f == "csv")
        std::cout << t.csv();
    else
        print(table_json(t));
    return 0;
}

// base change checks on all chamber pairs, or on 64 seeded samples when there are more
json base_change_report(const SalvettiModel& m, unsigned seed) {
    std::vector<SignVector> cs;
    for (int c : m.a0faces.chambers) cs.push_back(m.a0faces.faces[c]);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < (int)cs.size(); ++a)
        for (int b = 0; b < (int)cs.size(); ++b) pairs.emplace_back(a, b);
    std::mt19937 rng(seed);
    if (pairs.size() > 64) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(64);
    }
    int checked = 0, failed = 0;
    for (int M : m.one_layers()) {
        auto g = choice_gallery(m, M);
        for (auto [a, b] : pairs) {
            ++checked;
            if (!verify_base_change(m, cs[a], cs[b], g).holds) ++failed;
        }
    }
    return {{"checked", checked}, {"failed", failed}, {"ok", failed == 0}};
}

int cmd_verify(const Options& o) {
    auto s = load_spec(o);
    require_format(format(o, "json"), {"json"});
    if (!s.arr.is_essential()) throw ParseError("the arrangement is not essential");

    // in parallel mode these checks get their own model so that nothing is shared across threads
    auto side = [&](std::shared_ptr<const SalvettiModel> m) {
        if (!m) m = build_model(s.arr);
        json j;
        j["betti"] = betti_json(s.arr, m.get());
        j["base_change"] = base_change_report(*m, o.seed);
        return j;
    };
    std::future<json> side_future;
    if (o.parallel) side_future = std::async(std::launch::async, side, nullptr);

    auto m = build_model(s.arr);
    json r;
    r["euler_characteristic"] = m->faces().euler_characteristic();
    bool dd = true;
    const auto& C = m->nerve.complex;
    for (int k = 2; k <= C.top(); ++k)
        for (std::size_t j = 0; j < C.dims[k]; ++j) {
            Chain c{{(int)j, 1}};
            if (!boundary(C, k - 1, boundary(C, k, c)).empty()) dd = false;
        }
    r["boundary_squared_zero"] = dd;

    RingPresentation R(m, resolve_choices(*m, s.choices));
    auto inj = R.verify_injectivity();
    r["injectivity"] = {{"betti", inj.betti}, {"rank", inj.rank}, {"kernel", inj.kernel}, {"ok", inj.injective()}};
    auto gens = R.module_generators();
    bool integral = true, validated = true;
    for (auto& w : gens.omegas) {
        integral = integral && w.integral;
        validated = validated && w.validated;
    }
    r["generation"] = {{"omegas", gens.omegas.size()},
                       {"span_rank", gens.span_rank},
                       {"integral", integral},
                       {"validated", validated},
                       {"ok", gens.spans()}};
    auto cc = check_common_chamber(s.arr);
    r["common_chamber"] = cc.exists;

    json sj = o.parallel ? side_future.get() : side(m);
    r["betti"] = sj["betti"];
    r["base_change"] = sj["base_change"];

    bool ok = r["euler_characteristic"] == 0 && dd && inj.injective() && gens.spans() && integral && validated &&
              r["betti"]["match"].get<bool>() && r["base_change"]["ok"].get<bool>();
    r["ok"] = ok;
    print(r);
    return ok ? 0 : 1;
}

IntMatrix load_matrix(const std::string& path) {
    try {
        return parse_matrix(slurp(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

int cmd_matroid_mult(const Options& o) {
    auto A = load_matrix(o.matrix_files.at(0));
    json j;
    if (o.subset.empty()) {
        j = matroid_data_json(A);
    } else {
        j["subset"] = o.subset;
        j["rank"] = column_rank(A, o.subset);
        j["multiplicity"] = multiplicity(A, o.subset).get_str();
    }
    print(j);
    return 0;
}

std::vector<int> default_basis(const IntMatrix& A) {
    std::vector<int> B(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) B[i] = (int)i;
    return B;
}

int cmd_matroid_canon(const Options& o) {
    auto A = load_matrix(o.matrix_files.at(0));
    auto B = o.basis.empty() ? default_basis(A) : o.basis;
    try {
        print({{"basis", B}, {"canonical", to_json(canonical_form(A, B))}});
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return 0;
}

int cmd_matroid_equiv(const Options& o) {
    if (o.matrix_files.size() != 2) throw ParseError("equiv needs two matrix files");
    auto A = load_matrix(o.matrix_files[0]), Ap = load_matrix(o.matrix_files[1]);
    auto B = o.basis.empty() ? default_basis(A) : o.basis;
    bool eq = false;
    try {
        eq = equivalent(A, Ap, B);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    bool same_data = A.rows == Ap.rows && A.cols == Ap.cols && matroid_data(A) == matroid_data(Ap);
    print({{"basis", B}, {"equivalent", eq}, {"same_matroid_data", same_data}});
    return eq ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric arrangements: layers, Salvetti complexes, cohomology rings, arithmetic matroids"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
    app.add_option("--choices", o.choices_file, "JSON file with choice overrides");
    app.add_option("--seed", o.seed, "Seed for sampled checks");
    app.add_flag("--parallel", o.parallel, "Run independent checks concurrently");
    app.add_flag("--paper-example", o.paper_example, "Use the built-in worked example and its choices");

    auto spec_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("spec", o.spec_file, "Arrangement JSON ('-' for stdin)");
        return c;
    };
    auto* layers = spec_cmd("layers", "Layer poset");
    auto* faces = spec_cmd("faces", "Face category of the compact torus");
    faces->add_flag("--chambers", o.chambers, "With --out dot: chamber adjacency graph of A_0");
    auto* salvetti = spec_cmd("salvetti", "Toric Salvetti complex");
    salvetti->add_flag("--boundaries", o.boundaries, "Include nerve boundary matrices");
    auto* betti = spec_cmd("betti", "Betti numbers by the layer formula and by Smith normal form");
    auto* generators = spec_cmd("generators", "H_1 basis cycles and the classes omega_{S,L}");
    auto* table = spec_cmd("table", "Restriction table");
    auto* verify = spec_cmd("verify", "Run the invariant checks");

    auto* matroid = app.add_subcommand("matroid", "Arithmetic matroid of an integer matrix");
    matroid->require_subcommand(1);
    auto* mult = matroid->add_subcommand("mult", "Multiplicities (all subsets, or --subset)");
    mult->add_option("matrix", o.matrix_files, "Matrix file")->required()->expected(1);
    mult->add_option("--subset", o.subset, "Column subset")->delimiter(',');
    auto* canon = matroid->add_subcommand("canon", "Canonical form relative to a basis");
    canon->add_option("matrix", o.matrix_files, "Matrix file")->required()->expected(1);
    canon->add_option("--basis", o.basis, "Basis columns (default: the first columns)")->delimiter(',');
    auto* equiv = matroid->add_subcommand("equiv", "Equivalence of two representations");
    equiv->add_option("matrices", o.matrix_files, "Two matrix files")->required()->expected(2);
    equiv->add_option("--basis", o.basis, "Basis columns (default: the first columns)")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (layers->parsed()) return cmd_layers(o);
        if (faces->parsed()) return cmd_faces(o);
        if (salvetti->parsed()) return cmd_salvetti(o);
        if (betti->parsed()) return cmd_betti(o);
        if (generators->parsed()) return cmd_generators(o);
        if (table->parsed()) return cmd_table(o);
        if (verify->parsed()) return cmd_verify(o);
        if (mult->parsed()) return cmd_matroid_mult(o);
        if (canon->parsed()) return cmd_matroid_canon(o);
        if (equiv->parsed()) return cmd_matroid_equiv(o);
    } catch (const ParseError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", std::string("internal: ") + e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
