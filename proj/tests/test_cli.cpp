#include "support.hpp"
#include "toric/io.hpp"

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace toric;
using namespace toric::testing;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(TORIC_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "toric_cli_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / name).string();
    std::ofstream(path) << content;
    return path;
}

std::string ex_spec_text() {
    return R"({"dimension": 2, "hypertori": [
  {"character": [1, 0], "offset": "0"},
  {"character": [1, 2], "offset": "0"},
  {"character": [0, 1], "offset": "0"}]})";
}

void check_same_poset(const LayerPoset& a, const LayerPoset& b) {
    REQUIRE(a.layers.size() == b.layers.size());
    for (std::size_t i = 0; i < a.layers.size(); ++i) {
        const auto &x = a.layers[i], &y = b.layers[i];
        CHECK(x.normal == y.normal);
        CHECK(x.tangent.rows == y.tangent.rows);
        CHECK(x.tangent == y.tangent);
        CHECK(x.base_point == y.base_point);
        CHECK(x.key == y.key);
        CHECK(x.rank == y.rank);
        CHECK(x.defining_set == y.defining_set);
    }
    CHECK(a.by_rank == b.by_rank);
    CHECK(a.hasse == b.hasse);
    CHECK(a.flats == b.flats);
    CHECK(a.contains == b.contains);
}

}  // namespace

TEST_CASE("spec round trip") {
    auto s = paper_example();
    auto j = to_json(s);
    auto back = parse_spec(j.dump());
    CHECK(back.arr == s.arr);
    CHECK(back.choices == s.choices);
    CHECK(to_json(back).dump() == j.dump());

    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        ArrangementSpec r;
        r.arr = random_arrangement(rng, 3, 4);
        if (it % 2) {
            r.choices.B["T"] = ChamberRef{"+-+", {}};
            r.choices.M = {"H0"};
            r.choices.N["L3"] = {"H1", "H2"};
            r.choices.HC[1] = ChamberRef{"", {Rat(1, 3), Rat(-2)}};
            r.choices.MC_from_B = true;
            r.choices.order = "reversed";
        }
        auto t = to_json(r).dump();
        auto b = parse_spec(t);
        CHECK(b.arr == r.arr);
        CHECK(b.choices == r.choices);
        CHECK(to_json(b).dump() == t);
    }

    // large entries travel as strings
    IntMatrix big(1, 2);
    big(0, 0) = Int("123456789012345678901234567890");
    big(0, 1) = -3;
    CHECK(matrix_from_json(to_json(big)) == big);
    CHECK(parse_matrix(to_json(big).dump()) == big);
    CHECK(parse_matrix("1 0 2 # comment\n\n0 1 -1\n") == IntMatrix{{1, 0, 2}, {0, 1, -1}});
    CHECK(parse_matrix(R"({"matrix": [[1, 2]]})") == IntMatrix{{1, 2}});
    CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 x\n"), ParseError);
}

TEST_CASE("spec diagnostics") {
    auto msg = [](const std::string& text) {
        try {
            parse_spec(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK_THAT(msg(R"({"dimension": 2, "hypertori": [{"character": [1,0]}, {"character": [2,4]}]})"),
               Catch::Matchers::ContainsSubstring("hypertori[1].character") &&
                   Catch::Matchers::ContainsSubstring("not primitive"));
    CHECK_THAT(msg(R"({"hypertori": []})"), Catch::Matchers::ContainsSubstring("dimension"));
    CHECK_THAT(msg(R"({"dimension": 2, "hypertori": [{"character": [1]}]})"),
               Catch::Matchers::ContainsSubstring("hypertori[0].character"));
    CHECK_THAT(msg(R"({"dimension": 1, "hypertori": [{"character": [1], "offset": "1/0"}]})"),
               Catch::Matchers::ContainsSubstring("hypertori[0].offset"));
    CHECK_THAT(msg("{\"dimension\": 1,\n \"hypertori\": [}"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THAT(msg(R"({"dimension": 1, "hypertori": [], "choices": {"Q": 1}})"),
               Catch::Matchers::ContainsSubstring("choices.Q"));
    CHECK_THAT(msg(R"({"dimension": 1, "hypertori": [], "choices": {"order": "lex"}})"),
               Catch::Matchers::ContainsSubstring("choices.order"));
    CHECK_THAT(msg(R"({"dimension": 1, "hypertori": [], "choices": {"B": {"T": "+0"}}})"),
               Catch::Matchers::ContainsSubstring("choices.B.T"));
    CHECK_THAT(msg(R"({"dimension": 1, "hypertori": [{"character": [1]}, {"character": [-1]}]})"),
               Catch::Matchers::ContainsSubstring("hypertori"));
}

TEST_CASE("choice resolution") {
    auto s = paper_example();
    auto m = build_model(s.arr);
    auto o = resolve_choices(*m, s.choices);
    // B0 contains (-1,1), B1 contains (-3,1); A_0 normals (1,0), (1,2), (0,1)
    SignVector B0{-1, 1, 1}, B1{-1, -1, 1};
    int H2 = m->layer_of_torus(2);
    for (int L = 0; L < (int)m->cat->poset.layers.size(); ++L) CHECK(o.B.at(L) == (L == H2 ? B1 : B0));
    CHECK(o.M == std::vector<int>{m->layer_of_torus(0), H2});
    for (int h = 0; h < 3; ++h) CHECK(o.HC.at(h) == o.B.at(m->layer_of_torus(h)));
    for (int M : m->one_layers()) CHECK(o.MC.at(M) == o.B.at(M));
    CHECK(o.order == NbcOrder::reversed);

    CHECK(resolve_layer(*m, "T") == 0);
    CHECK(resolve_layer(*m, "H1") == m->layer_of_torus(1));
    CHECK(resolve_layer(*m, "L4") == 4);
    CHECK_THROWS_AS(resolve_layer(*m, "H7"), ParseError);
    CHECK_THROWS_AS(resolve_layer(*m, "L"), ParseError);
    CHECK(resolve_chamber(*m, ChamberRef{"-++", {}}) == B0);
    CHECK_THROWS_AS(resolve_chamber(*m, ChamberRef{"", {Rat(0), Rat(1)}}), ParseError);  // on H0
    CHECK_THROWS_AS(resolve_chamber(*m, ChamberRef{"+-+", {}}), ParseError);             // empty cell
    CHECK_THROWS_AS(resolve_chamber(*m, ChamberRef{"++", {}}), ParseError);
}

TEST_CASE("layer dump round trip") {
    auto check = [](const ToricArrangement& a) {
        auto P = build_layer_poset(a);
        auto j = layers_json(a, P);
        check_same_poset(layers_from_json(json::parse(j.dump())), P);
    };
    check(ex_arrangement());
    check(circle_one());
    check(ToricArrangement::make(2, {}));
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) check(random_arrangement(rng, 3, 4));
}

TEST_CASE("cli layers") {
    auto ex = write_temp("ex.json", ex_spec_text());
    auto r = run("layers " + ex);
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    REQUIRE(j["layers"].size() == 6);
    int P = -1, Q = -1;
    for (auto& L : j["layers"]) {
        if (L["defining_set"] == std::vector<int>{0, 1, 2}) P = L["index"];
        if (L["defining_set"] == std::vector<int>{0, 1}) Q = L["index"];
    }
    REQUIRE(P >= 0);
    REQUIRE(Q >= 0);
    CHECK(j["layers"][P]["multiplicity"] == 1);
    CHECK(j["layers"][Q]["multiplicity"] == 2);  // H0 and H1 meet in P and Q
    int below = 0;
    for (auto& e : j["hasse"])
        if (e[1] == P && j["layers"][e[0].get<int>()]["rank"] == 1) ++below;
    CHECK(below == 3);
    CHECK(run("layers " + ex).out == r.out);  // byte-identical

    auto empty = write_temp("empty.json", R"({"dimension": 2, "hypertori": []})");
    auto e = run("layers " + empty);
    REQUIRE(e.status == 0);
    CHECK(json::parse(e.out)["layers"].size() == 1);

    auto bad = write_temp("bad.json", R"({"dimension": 2, "hypertori": [{"character": [2, 4], "offset": "0"}]})");
    auto b = run("layers " + bad, true);
    CHECK(b.status == 2);
    CHECK_THAT(b.out, Catch::Matchers::ContainsSubstring("not primitive"));
    CHECK(run("layers /nonexistent/spec.json").status == 2);

    auto dot = run("layers --out dot " + ex);
    CHECK(dot.status == 0);
    CHECK_THAT(dot.out, Catch::Matchers::StartsWith("digraph layers"));
}

TEST_CASE("cli betti") {
    auto ex = write_temp("ex.json", ex_spec_text());
    auto r = run("betti " + ex);
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["formula"] == std::vector<int>{1, 5, 7});
    CHECK(j["snf"] == std::vector<int>{1, 5, 7});
    CHECK(j["match"] == true);

    auto c = write_temp("c1.json", R"({"dimension": 1, "hypertori": [{"character": [1], "offset": "1/3"}]})");
    auto rc = run("betti " + c);
    REQUIRE(rc.status == 0);
    CHECK(json::parse(rc.out)["snf"] == std::vector<int>{1, 2});

    // torus only: formula route, SNF route unavailable
    auto empty = write_temp("empty.json", R"({"dimension": 2, "hypertori": []})");
    auto re = run("betti " + empty);
    CHECK(re.status == 2);
    auto je = json::parse(re.out);
    CHECK(je["formula"] == std::vector<int>{1, 2, 1});
    CHECK(je["snf"].is_null());
}

TEST_CASE("cli table, generators, verify") {
    auto t = run("--paper-example table");
    REQUIRE(t.status == 0);
    auto s = paper_example();
    auto m = build_model(s.arr);
    RingPresentation R(m, resolve_choices(*m, s.choices));
    CHECK(t.out == R.restriction_table().csv());
    CHECK(run("table --paper-example").out == t.out);

    auto tj = run("--paper-example table --out json");
    REQUIRE(tj.status == 0);
    auto j = json::parse(tj.out);
    CHECK(j["columns"].size() == 6);
    CHECK(j["rows"].size() == 8);

    // a choices file replaces the spec's choices
    auto ex = write_temp("ex.json", ex_spec_text());
    auto ch = write_temp("choices.json", to_json(s.choices).dump());
    CHECK(run("table " + ex + " --choices " + ch).out == t.out);
    CHECK(run("table " + ex).out != t.out);

    auto g = run("--paper-example generators");
    REQUIRE(g.status == 0);
    auto jg = json::parse(g.out);
    CHECK(jg["H1_basis"].size() == 5);
    CHECK(jg["omega_SL"].size() == 7);
    CHECK(jg["spans"] == true);

    auto v = run("--paper-example verify");
    CHECK(v.status == 0);
    auto jv = json::parse(v.out);
    CHECK(jv["ok"] == true);
    CHECK(jv["injectivity"]["ok"] == true);
    CHECK(jv["generation"]["ok"] == true);
    CHECK(jv["betti"]["match"] == true);
    auto vp = run("--paper-example --parallel verify");
    CHECK(vp.status == 0);
    CHECK(vp.out == v.out);

    auto f = run("--paper-example faces");
    REQUIRE(f.status == 0);
    auto jf = json::parse(f.out);
    CHECK(jf["cells_by_dimension"] == std::vector<int>{2, 5, 3});
    CHECK(jf["euler_characteristic"] == 0);
    auto sal = run("--paper-example salvetti");
    REQUIRE(sal.status == 0);
    CHECK(json::parse(sal.out)["objects"].size() == 63);
    CHECK(run("--paper-example salvetti --out csv").status == 2);
}

TEST_CASE("cli matroid") {
    auto lenz = write_temp("lenz.txt", "1 0 0 1 0 1\n0 1 0 1 1 0\n0 0 1 0 1 -1\n");
    auto c = run("matroid canon " + lenz);
    REQUIRE(c.status == 0);
    CHECK(matrix_from_json(json::parse(c.out)["canonical"]) == canonical_form(lenz_matrix(), {0, 1, 2}));

    auto X6 = lenz_matrix();
    for (std::size_t i = 0; i < 3; ++i) X6(i, 5) = -X6(i, 5);
    auto l6 = write_temp("lenz6.json", to_json(X6).dump());
    auto e = run("matroid equiv " + lenz + " " + l6 + " --basis 0,1,2");
    CHECK(e.status == 0);
    CHECK(json::parse(e.out)["equivalent"] == true);

    auto a = write_temp("r2.json", "[[1, 2]]"), b = write_temp("r3.json", "[[1, 3]]");
    auto ne = run("matroid equiv " + a + " " + b);
    CHECK(ne.status == 1);
    CHECK(json::parse(ne.out)["equivalent"] == false);

    auto ex = write_temp("exchars.txt", "1 1 0\n0 2 1\n");
    auto m = run("matroid mult " + ex + " --subset 0,1");
    REQUIRE(m.status == 0);
    CHECK(json::parse(m.out)["multiplicity"] == "2");
    auto all = run("matroid mult " + ex);
    REQUIRE(all.status == 0);
    CHECK(json::parse(all.out)["multiplicity"].size() == 8);
    CHECK(run("matroid canon " + ex + " --basis 0,1").status == 2);  // m(B) = 2
}
