#include "toric/real_geometry.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace toric;

namespace {

Hypertorus ht(std::initializer_list<long> a, Rat off = 0) {
    IntVec v;
    for (long x : a) v.emplace_back(x);
    return {v, off};
}

ToricArrangement ex_arrangement() { return ToricArrangement::make(2, {ht({1, 0}), ht({1, 2}), ht({0, 1})}); }

LinearArrangement ex_a0() { return LinearArrangement{2, {{1, 0}, {1, 2}, {0, 1}}}; }

std::vector<int> all_planes(const LinearArrangement& A) {
    std::vector<int> p(A.normals.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = (int)i;
    return p;
}

// sign vectors of all integer points in a cube
std::set<SignVector> grid_signs(const LinearArrangement& A, int N) {
    std::set<SignVector> out;
    std::vector<long> x(A.dim, -N);
    for (;;) {
        SignVector s(A.normals.size());
        for (std::size_t h = 0; h < A.normals.size(); ++h) {
            Int v = 0;
            for (int j = 0; j < A.dim; ++j) v += A.normals[h][j] * x[j];
            s[h] = (std::int8_t)sgn(v);
        }
        out.insert(s);
        int j = 0;
        while (j < A.dim && x[j] == N) x[j++] = -N;
        if (j == A.dim) break;
        ++x[j];
    }
    return out;
}

SignVector sv(std::initializer_list<int> v) {
    SignVector s;
    for (int x : v) s.push_back((std::int8_t)x);
    return s;
}

LinearArrangement random_central(std::mt19937& rng, int dim, int n) {
    LinearArrangement A{dim, {}};
    while ((int)A.normals.size() < n) {
        IntVec v(dim);
        bool nz = false;
        for (auto& x : v) {
            x = (long)(rng() % 3) - 1;
            nz = nz || x != 0;
        }
        if (!nz) continue;
        v = normalize_sign(v);
        if (std::find(A.normals.begin(), A.normals.end(), v) == A.normals.end()) A.normals.push_back(v);
    }
    return A;
}

}  // namespace

TEST_CASE("faces of linear arrangements") {
    auto A = ex_a0();
    auto F = faces_of_linear(A);
    CHECK(F.faces.size() == 13);
    CHECK(std::count(F.dims.begin(), F.dims.end(), 0) == 1);
    CHECK(std::count(F.dims.begin(), F.dims.end(), 1) == 6);
    CHECK(F.chambers.size() == 6);
    auto brute = grid_signs(A, 4);
    CHECK(brute == std::set<SignVector>(F.faces.begin(), F.faces.end()));

    LinearArrangement E{3, {}};
    CHECK(faces_of_linear(E).faces.size() == 1);
    LinearArrangement one{3, {{0, 1, 0}}};
    CHECK(faces_of_linear(one).faces.size() == 3);

    // affine: two parallel lines in the plane
    LinearArrangement par{2, {{1, 0}, {1, 0}}};
    auto Fa = faces_of_linear(par, {0, 1}, {Rat(0), Rat(1)});
    CHECK(Fa.faces.size() == 5);
    CHECK(Fa.chambers.size() == 3);
}

TEST_CASE("faces of random central arrangements match grid enumeration") {
    std::mt19937 rng(21);
    for (int it = 0; it < 12; ++it) {
        int dim = 2 + (int)(rng() % 2);
        auto A = random_central(rng, dim, 2 + (int)(rng() % 3));
        auto F = faces_of_linear(A);
        CHECK(grid_signs(A, 6) == std::set<SignVector>(F.faces.begin(), F.faces.end()));
        for (std::size_t i = 0; i < F.faces.size(); ++i) {
            auto w = realize(A, F.planes, F.faces[i]);
            REQUIRE(w);
        }
    }
}

TEST_CASE("closest chamber") {
    auto A = ex_a0();
    auto P = all_planes(A);
    auto F = faces_of_linear(A);
    for (int g = 0; g < (int)F.faces.size(); ++g)
        for (int c : F.chambers) {
            const auto& G = F.faces[g];
            const auto& C = F.faces[c];
            // brute force: chamber above G closest to C
            int best = -1;
            std::size_t bd = 99;
            for (int k : F.chambers)
                if (F.leq(g, k)) {
                    auto d = separating_set(F.faces[k], C, P).size();
                    if (d < bd) {
                        bd = d;
                        best = k;
                    }
                }
            CHECK(closest_chamber(G, C) == F.faces[best]);
        }
    for (int c : F.chambers) {
        CHECK(closest_chamber(F.faces[c], F.faces[F.chambers[0]]) == F.faces[c]);
        CHECK(closest_chamber(F.faces[0], F.faces[c]) == F.faces[c]);
    }
}

TEST_CASE("separating sets and opposite chambers") {
    auto A = ex_a0();
    auto P = all_planes(A);
    SignVector B0 = sv({-1, 1, 1}), B1 = sv({-1, -1, 1});
    CHECK(separating_set(B0, B0, P).empty());
    CHECK(separating_set(B0, negate(B0), P) == std::vector<int>{0, 1, 2});
    CHECK(separating_set(B0, B1, P) == std::vector<int>{1});

    CHECK(opposite_chamber(A, P, B0, {}) == B0);
    CHECK(opposite_chamber(A, P, B0, {0, 1, 2}) == negate(B0));
    CHECK(opposite_chamber(A, P, B0, {0}) == sv({1, 1, 1}));
    // B0 has no wall on W2
    CHECK_THROWS(opposite_chamber(A, P, B0, {2}));
}

TEST_CASE("minimal galleries are minimal and lexicographically least") {
    std::mt19937 rng(4);
    std::vector<LinearArrangement> cases{ex_a0()};
    for (int i = 0; i < 6; ++i) cases.push_back(random_central(rng, 3, 4));
    for (auto& A : cases) {
        auto P = all_planes(A);
        auto F = faces_of_linear(A);
        std::set<SignVector> chambers;
        for (int c : F.chambers) chambers.insert(F.faces[c]);
        for (int a : F.chambers)
            for (int b : F.chambers) {
                const auto& C = F.faces[a];
                const auto& D = F.faces[b];
                auto g = minimal_gallery(A, P, C, D);
                auto S = separating_set(C, D, P);
                CHECK(g.length() == S.size());
                auto cr = g.crossed;
                std::sort(cr.begin(), cr.end());
                CHECK(cr == S);
                CHECK(g.chambers.back() == D);
                for (std::size_t i = 0; i < g.walls.size(); ++i) {
                    CHECK(face_leq(g.walls[i], g.chambers[i], P));
                    CHECK(face_leq(g.walls[i], g.chambers[i + 1], P));
                    CHECK(zero_set(g.walls[i], P).size() == 1);
                }
                // exhaustive: all minimal galleries, least crossing sequence
                std::vector<int> best, cur;
                bool have = false;
                std::function<void(const SignVector&)> dfs = [&](const SignVector& X) {
                    if (X == D) {
                        if (!have || cur < best) best = cur;
                        have = true;
                        return;
                    }
                    for (int h : separating_set(X, D, P)) {
                        SignVector Y = X;
                        Y[h] = (std::int8_t)-Y[h];
                        SignVector W = X;
                        W[h] = 0;
                        if (!chambers.count(Y) || !F.index.count(W)) continue;
                        cur.push_back(h);
                        dfs(Y);
                        cur.pop_back();
                    }
                };
                dfs(C);
                CHECK(have);
                CHECK(best == g.crossed);
            }
    }
}

TEST_CASE("gallery from the example") {
    auto A = ex_a0();
    auto P = all_planes(A);
    SignVector B0 = sv({-1, 1, 1});
    // op_{W0}(-B0): the chamber opposite to B0 reflected back across W0
    SignVector target = opposite_chamber(A, P, negate(B0), {0});
    auto g = minimal_gallery(A, P, B0, target);
    CHECK(g.length() == 2);
    CHECK(g.crossed == std::vector<int>{1, 2});
    CHECK(minimal_gallery(A, P, B0, B0).length() == 0);
    CHECK(minimal_gallery(A, P, B0, sv({1, 1, 1})).length() == 1);
}

TEST_CASE("composition identity on flats") {
    std::mt19937 rng(8);
    std::vector<LinearArrangement> cases{ex_a0()};
    for (int i = 0; i < 4; ++i) cases.push_back(random_central(rng, 3, 4));
    for (auto& A : cases) {
        auto P = all_planes(A);
        auto F = faces_of_linear(A);
        std::set<Flat> flats;
        for (auto& f : F.faces) flats.insert(zero_set(f, P));
        for (auto& X : flats)
            for (auto& G : F.faces)
                for (auto& K : F.faces) {
                    auto lhs = compose(restrict_signs(G, X), restrict_signs(K, X));
                    auto rhs = restrict_signs(compose(G, K), X);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("face category of the example") {
    auto cat = face_category(ex_arrangement());
    std::vector<int> count(3, 0);
    for (auto& f : cat.faces) ++count[f.dim];
    CHECK(count == std::vector<int>{2, 5, 3});
    CHECK(cat.euler_characteristic() == 0);
    // vertices are P and Q
    for (int i = 0; i < 2; ++i) CHECK(cat.poset.layers[cat.faces[i].support].rank == 2);
    for (auto& f : cat.faces) {
        CHECK(f.dim <= 2 - cat.poset.layers[f.support].rank);
        CHECK(cat.poset.layers[f.support].contains_point(f.witness));
    }
    auto a0 = cat.a0;
    CHECK(a0.arr.normals.size() == 3);
    // fiber sizes of the Salvetti complex are determined by the local arrangements
    for (auto& f : cat.faces) {
        if (f.dim == 0) CHECK((f.planes.size() == 3 || f.planes.size() == 2));
        if (f.dim == 1) CHECK(f.planes.size() == 1);
        if (f.dim == 2) CHECK(f.planes.empty());
    }
}

TEST_CASE("face categories in dimension one") {
    auto one = face_category(ToricArrangement::make(1, {ht({1})}));
    REQUIRE(one.faces.size() == 2);
    CHECK(one.faces[0].dim == 0);
    CHECK(one.faces[1].dim == 1);
    CHECK(one.out[0].size() == 2);
    std::set<int> signs;
    for (int m : one.out[0]) {
        CHECK(one.morphisms[m].target == 1);
        signs.insert(one.morphisms[m].attach[0]);
    }
    CHECK(signs == std::set<int>{-1, 1});

    auto two = face_category(ToricArrangement::make(1, {ht({1}), ht({1}, Rat(1, 2))}));
    CHECK(two.faces.size() == 4);
    CHECK(two.euler_characteristic() == 0);
    CHECK_THROWS(face_category(ToricArrangement::make(2, {ht({1, 0})})));
}

TEST_CASE("face category structure on random inputs") {
    std::mt19937 rng(13);
    std::vector<ToricArrangement> cases{ex_arrangement()};
    while (cases.size() < 8) {
        std::vector<Hypertorus> t;
        int n = 2 + (int)(rng() % 2);
        for (int i = 0; i < n; ++i) {
            long a = (long)(rng() % 5) - 2, b = (long)(rng() % 5) - 2;
            if (a == 0 && b == 0) continue;
            long g = std::gcd(std::abs(a), std::abs(b));
            t.push_back(ht({a / g, b / g}, Rat((long)(rng() % 3), 3)));
        }
        try {
            auto arr = ToricArrangement::make(2, t);
            if (arr.is_essential()) cases.push_back(arr);
        } catch (const std::invalid_argument&) {
        }
    }
    for (auto& arr : cases) {
        auto cat = face_category(arr);
        CHECK(cat.euler_characteristic() == 0);
        for (std::size_t g = 0; g < cat.faces.size(); ++g) {
            // closure of a cell is a closed ball: alternating count over attachments is 1
            int chi = cat.faces[g].dim % 2 == 0 ? 1 : -1;  // the cell itself
            for (int m : cat.in[g]) chi += cat.faces[cat.morphisms[m].source].dim % 2 == 0 ? 1 : -1;
            CHECK(chi == 1);
        }
        for (auto& m : cat.morphisms) {
            if (m.identity) continue;
            CHECK(cat.faces[m.source].dim < cat.faces[m.target].dim);
            // the attachment is a face of A[source] whose zero set is A[target]
            auto z = zero_set(m.attach, cat.faces[m.source].planes);
            CHECK(z == cat.faces[m.target].planes);
        }
        // composition is defined for every composable pair and associative
        for (std::size_t a = 0; a < cat.morphisms.size(); ++a)
            for (int b : cat.out[cat.morphisms[a].target]) {
                int ab = cat.compose((int)a, b);
                REQUIRE(ab >= 0);
                for (int c : cat.out[cat.morphisms[b].target])
                    CHECK(cat.compose(ab, c) == cat.compose((int)a, cat.compose(b, c)));
            }
        // locate round trip
        for (std::size_t f = 0; f < cat.faces.size(); ++f) {
            std::vector<long long> t{1, -2};
            auto [g, s] = cat.locate(cat.lift((int)f, t));
            CHECK(g == (int)f);
            CHECK(s == t);
        }
    }
}
