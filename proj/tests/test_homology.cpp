#include "toric/homology.hpp"
#include "toric/salvetti.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <memory>
#include <random>

using namespace toric;
using namespace toric::testing;

namespace {

// rank of a boundary matrix over Q (p = 0) or F_p, by plain Gaussian elimination
std::size_t rank_mod(const ChainComplex& C, int k, long p) {
    if (k <= 0 || k > C.top()) return 0;
    const std::size_t rows = C.dims[k - 1], cols = C.dims[k];
    std::size_t r = 0;
    if (p == 0) {
        std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(cols, 0));
        for (std::size_t j = 0; j < cols; ++j)
            for (auto& [i, v] : C.bd[k][j]) M[i][j] = Rat((long)v);
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = r;
            while (piv < rows && M[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(M[piv], M[r]);
            for (std::size_t i = r + 1; i < rows; ++i)
                if (M[i][c] != 0) {
                    Rat f = M[i][c] / M[r][c];
                    for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
                }
            ++r;
        }
        return r;
    }
    std::vector<std::vector<long>> M(rows, std::vector<long>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (auto& [i, v] : C.bd[k][j]) M[i][j] = ((v % p) + p) % p;
    auto inv = [p](long a) {
        long r = 1, e = p - 2;
        for (long b = a; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        long iv = inv(M[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (M[i][c] != 0) {
                long f = M[i][c] * iv % p;
                for (std::size_t j = c; j < cols; ++j) M[i][j] = ((M[i][j] - f * M[r][j]) % p + p) % p;
            }
        ++r;
    }
    return r;
}

int oracle_betti(const ChainComplex& C, int k, long p = 0) {
    return (int)(C.dims[k] - rank_mod(C, k, p) - rank_mod(C, k + 1, p));
}

Category from_poset(int n, const std::vector<std::vector<char>>& less) {
    auto idx = std::make_shared<std::map<std::pair<int, int>, int>>();
    Category c;
    c.num_objects = n;
    c.out.assign(n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (less[x][y]) {
                (*idx)[{x, y}] = (int)c.src.size();
                c.out[x].push_back((int)c.src.size());
                c.src.push_back(x);
                c.tgt.push_back(y);
            }
    auto s = c.src;
    auto t = c.tgt;
    c.compose = [idx, s, t](int a, int b) { return idx->at({s[a], t[b]}); };
    return c;
}

Category random_poset(std::mt19937& rng, int n, int percent) {
    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) less[x][y] = (int)(rng() % 100) < percent;
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (less[x][k] && less[k][y]) less[x][y] = 1;
    return from_poset(n, less);
}

// two objects joined by two parallel arrows
Category circle_category() {
    Category c;
    c.num_objects = 2;
    c.src = {0, 0};
    c.tgt = {1, 1};
    c.out = {{0, 1}, {}};
    c.compose = [](int, int) { return -1; };
    return c;
}

Chain random_chain(std::mt19937& rng, std::size_t n, int terms) {
    Chain c;
    for (int i = 0; i < terms && n > 0; ++i) {
        long long v = (long long)(rng() % 5) - 2;
        if (v == 0) continue;
        c[(int)(rng() % n)] += v;
    }
    for (auto it = c.begin(); it != c.end();)
        it = it->second == 0 ? c.erase(it) : std::next(it);
    return c;
}

Cochain random_cochain(std::mt19937& rng, std::size_t n) {
    Cochain c(n);
    for (auto& x : c) x = Rat((long)(rng() % 5) - 2);
    return c;
}

Chain add(const Chain& a, const Chain& b, long long s = 1) {
    Chain r = a;
    for (auto& [i, v] : b) {
        r[i] += s * v;
        if (r[i] == 0) r.erase(i);
    }
    return r;
}

bool is_zero(const Cochain& c) {
    for (auto& x : c)
        if (x != 0) return false;
    return true;
}

Cochain sum(const Cochain& a, const Cochain& b, int s = 1) {
    Cochain r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

std::vector<Category> sample_categories() {
    std::vector<Category> cs;
    std::mt19937 rng(17);
    for (int i = 0; i < 8; ++i) cs.push_back(random_poset(rng, 5 + (int)(rng() % 5), 35));
    cs.push_back(circle_category());
    cs.push_back(poset_category(salvetti_poset(LinearArrangement{2, {{1, 0}, {1, 2}, {0, 1}}})));
    return cs;
}

}  // namespace

TEST_CASE("small nerves") {
    auto N = nerve(circle_category(), 3);
    HomologyEngine H(N.complex);
    CHECK(H.betti_numbers(1) == std::vector<int>{1, 1});

    Category point;
    point.num_objects = 1;
    point.out = {{}};
    point.compose = [](int, int) { return -1; };
    auto P = nerve(point, 3);
    CHECK(P.degree() == 0);
    CHECK(HomologyEngine(P.complex).betti_numbers(0) == std::vector<int>{1});
}

TEST_CASE("boundary squares to zero on nerves") {
    for (auto& c : sample_categories()) {
        auto N = nerve(c, 4);
        for (int k = 2; k <= N.degree(); ++k)
            for (std::size_t j = 0; j < N.count(k); ++j) {
                Chain s{{(int)j, 1}};
                CHECK(boundary(N.complex, k - 1, boundary(N.complex, k, s)).empty());
            }
    }
}

TEST_CASE("homology agrees with elimination over Q and F_p") {
    auto cs = sample_categories();
    std::vector<ToricSalvetti> keep;
    keep.reserve(4);
    keep.push_back(toric_salvetti(ex_arrangement()));
    std::mt19937 rng(3);
    for (int i = 0; i < 3; ++i) keep.push_back(toric_salvetti(random_arrangement(rng, 2, 3)));
    for (auto& S : keep) cs.push_back(S.category());
    for (auto& c : cs) {
        auto N = nerve(c, 4);
        HomologyEngine H(N.complex);
        for (int k = 0; k < N.degree(); ++k) {
            const auto& G = H.group(k);
            CHECK(G.rank == oracle_betti(N.complex, k));
            bool torsion_free = oracle_betti(N.complex, k, 2) == G.rank && oracle_betti(N.complex, k, 3) == G.rank;
            // F_p Betti numbers exceed the rational ones exactly when p-torsion appears in H_k or H_{k-1}
            if (G.torsion.empty() && (k == 0 || H.group(k - 1).torsion.empty())) CHECK(torsion_free);
        }
    }
}

TEST_CASE("torsion is detected") {
    // RP^2: one cell in each degree, the 2-cell attached with degree 2
    ChainComplex C;
    C.dims = {1, 1, 1};
    C.bd = {{}, {{}}, {{{0, 2}}}};
    HomologyEngine H(C);
    CHECK(H.group(0).rank == 1);
    CHECK(H.group(1).rank == 0);
    CHECK(H.group(1).torsion == std::vector<Int>{2});
    CHECK(H.is_boundary(1, Chain{{0, 2}}));
    CHECK_FALSE(H.is_boundary(1, Chain{{0, 1}}));
}

TEST_CASE("basis cycles, dual cocycles, coordinates and witnesses") {
    std::mt19937 rng(11);
    auto S = toric_salvetti(ex_arrangement());
    std::vector<NerveComplex> nerves;
    nerves.push_back(nerve(S.category(), 3));
    for (auto& c : sample_categories()) nerves.push_back(nerve(c, 4));
    for (auto& N : nerves) {
        HomologyEngine H(N.complex);
        for (int k = 0; k < N.degree(); ++k) {
            const auto& G = H.group(k);
            REQUIRE(G.basis.size() == (std::size_t)G.rank);
            REQUIRE(G.dual.size() == (std::size_t)G.rank);
            for (int i = 0; i < G.rank; ++i) {
                CHECK(H.is_cycle(k, G.basis[i]));
                CHECK(H.is_cocycle(k, G.dual[i]));
                for (int j = 0; j < G.rank; ++j) CHECK(pair(G.basis[i], G.dual[j]) == (i == j ? 1 : 0));
            }
            // the dual cocycles vanish on boundaries
            for (int t = 0; t < 5 && k + 1 <= N.degree(); ++t) {
                Chain b = boundary(N.complex, k + 1, random_chain(rng, N.count(k + 1), 4));
                for (auto& d : G.dual) CHECK(pair(b, d) == 0);
                Chain w;
                CHECK(H.is_boundary(k, b, &w));
                CHECK(boundary(N.complex, k + 1, w) == b);
            }
            // coordinates of a combination of basis cycles plus a boundary
            for (int t = 0; t < 5; ++t) {
                Chain z;
                std::vector<Int> expect;
                for (int i = 0; i < G.rank; ++i) {
                    long long a = (long long)(rng() % 7) - 3;
                    expect.emplace_back((long)a);
                    z = add(z, G.basis[i], a);
                }
                if (k + 1 <= N.degree()) z = add(z, boundary(N.complex, k + 1, random_chain(rng, N.count(k + 1), 3)));
                CHECK(H.coordinates(k, z) == expect);
                bool zero = std::all_of(expect.begin(), expect.end(), [](const Int& x) { return x == 0; });
                CHECK(H.is_boundary(k, z) == zero);
            }
            if (N.count(k) > 0 && k >= 1) {
                Chain nc{{0, 1}};
                if (!H.is_cycle(k, nc)) CHECK_THROWS(H.coordinates(k, nc));
            }
        }
    }
}

TEST_CASE("coboundary is adjoint to boundary") {
    std::mt19937 rng(2);
    for (auto& c : sample_categories()) {
        auto N = nerve(c, 4);
        for (int k = 0; k < N.degree(); ++k) {
            auto phi = random_cochain(rng, N.count(k));
            auto dphi = coboundary(N.complex, k, phi);
            CHECK(is_zero(coboundary(N.complex, k + 1, dphi)) == true);
            auto ch = random_chain(rng, N.count(k + 1), 4);
            CHECK(pair(boundary(N.complex, k + 1, ch), phi) == pair(ch, dphi));
        }
    }
}

TEST_CASE("cup product laws") {
    std::mt19937 rng(9);
    auto S = toric_salvetti(ex_arrangement());
    std::vector<NerveComplex> nerves;
    nerves.push_back(nerve(S.category(), 3));
    for (auto& c : sample_categories()) nerves.push_back(nerve(c, 3));
    for (auto& N : nerves) {
        const auto& C = N.complex;
        auto one = unit_cochain(N);
        for (int p = 0; p <= N.degree(); ++p) {
            auto a = random_cochain(rng, N.count(p));
            CHECK(cup_product(N, p, a, 0, one) == a);
            CHECK(cup_product(N, 0, one, p, a) == a);
            for (int q = 0; p + q <= N.degree(); ++q) {
                auto b = random_cochain(rng, N.count(q));
                for (int r = 0; p + q + r <= N.degree(); ++r) {
                    auto c = random_cochain(rng, N.count(r));
                    CHECK(cup_product(N, p + q, cup_product(N, p, a, q, b), r, c) ==
                          cup_product(N, p, a, q + r, cup_product(N, q, b, r, c)));
                }
                // Leibniz rule
                if (p + q + 1 <= N.degree()) {
                    auto lhs = coboundary(C, p + q, cup_product(N, p, a, q, b));
                    auto rhs = sum(cup_product(N, p + 1, coboundary(C, p, a), q, b),
                                   cup_product(N, p, a, q + 1, coboundary(C, q, b)), p % 2 == 0 ? 1 : -1);
                    CHECK(lhs == rhs);
                }
            }
        }
        CHECK(cup_product(N, N.degree(), Cochain(N.count(N.degree())), 1, Cochain(N.count(1))) == Cochain{});
    }
}

TEST_CASE("cohomology ring of three concurrent lines") {
    auto P = salvetti_poset(LinearArrangement{2, {{1, 0}, {1, 2}, {0, 1}}});
    auto N = nerve(poset_category(P), 3);
    HomologyEngine H(N.complex);
    const auto& H1 = H.group(1);
    REQUIRE(H1.rank == 3);
    REQUIRE(H.group(2).rank == 2);
    std::vector<RatVec> products;
    for (int i = 0; i < 3; ++i) {
        // odd classes square to zero and anticommute in cohomology
        auto sq = cup_product(N, 1, H1.dual[i], 1, H1.dual[i]);
        CHECK(H.is_cocycle(2, sq));
        CHECK(H.cocycle_coordinates(2, sq) == std::vector<Rat>{0, 0});
        for (int j = 0; j < 3; ++j) {
            auto ab = H.cocycle_coordinates(2, cup_product(N, 1, H1.dual[i], 1, H1.dual[j]));
            auto ba = H.cocycle_coordinates(2, cup_product(N, 1, H1.dual[j], 1, H1.dual[i]));
            CHECK(ab == std::vector<Rat>{-ba[0], -ba[1]});
            products.push_back(RatVec(ab.begin(), ab.end()));
        }
    }
    // degree-one generation: the products span H^2, with one relation among the three pairs
    RatMatrix M(products.size(), 2);
    for (std::size_t i = 0; i < products.size(); ++i)
        for (int j = 0; j < 2; ++j) M(i, j) = products[i][j];
    CHECK(rank(M) == 2);
}

TEST_CASE("compact torus stratum has the cohomology ring of a torus") {
    auto S = toric_salvetti(ex_arrangement());
    auto N = nerve(S.category(), 3);
    std::vector<std::vector<int>> to_full;
    auto mask = subcomplex_S(S, 0, SignVector{-1, 1, 1});
    auto sub = sub_nerve(N, mask, &to_full);
    HomologyEngine H(sub.complex);
    REQUIRE(H.betti_numbers(2) == std::vector<int>{1, 2, 1});
    const auto& d1 = H.group(1).dual;
    auto prod = H.cocycle_coordinates(2, cup_product(sub, 1, d1[0], 1, d1[1]));
    CHECK((prod[0] == 1 || prod[0] == -1));

    // restriction from the full nerve is a cochain map; chain inclusion commutes with boundaries
    std::mt19937 rng(1);
    for (int k = 0; k + 1 <= sub.degree(); ++k) {
        auto phi = random_cochain(rng, N.count(k));
        CHECK(coboundary(sub.complex, k, pull_back(inclusion_map(to_full, k), phi)) ==
              pull_back(inclusion_map(to_full, k + 1), coboundary(N.complex, k, phi)));
        auto c = random_chain(rng, sub.count(k + 1), 4);
        CHECK(push_forward(inclusion_map(to_full, k), boundary(sub.complex, k + 1, c)) ==
              boundary(N.complex, k + 1, push_forward(inclusion_map(to_full, k + 1), c)));
    }
}

TEST_CASE("dual bases") {
    auto S = toric_salvetti(ex_arrangement());
    auto N = nerve(S.category(), 3);
    HomologyEngine H(N.complex);
    const auto& G = H.group(1);
    std::vector<Chain> cyc = G.basis;
    // a unimodular change of basis
    cyc[0] = add(cyc[0], cyc[1], 2);
    auto duals = dual_basis_cochains(H, 1, cyc);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        for (std::size_t j = 0; j < cyc.size(); ++j) CHECK(pair(cyc[i], duals[j]) == (i == j ? 1 : 0));
    for (auto& d : duals) CHECK(H.is_cocycle(1, d));
    std::vector<Chain> dep{G.basis[0], add(G.basis[0], G.basis[0])};
    CHECK_THROWS(dual_basis_cochains(H, 1, dep));
}

TEST_CASE("nerve maps") {
    auto c = poset_category(salvetti_poset(LinearArrangement{2, {{1, 0}, {0, 1}}}));
    auto N = nerve(c, 3);
    Functor id;
    for (int o = 0; o < c.num_objects; ++o) id.on_objects.push_back(o);
    for (std::size_t m = 0; m < c.src.size(); ++m) id.on_morphisms.push_back((int)m);
    for (int k = 0; k <= N.degree(); ++k) {
        auto f = nerve_map(N, N, id, k);
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == (int)i);
    }
    // collapsing every morphism to an identity makes all positive-degree simplices degenerate
    Functor collapse{std::vector<int>(c.num_objects, 0), std::vector<int>(c.src.size(), -1)};
    auto f1 = nerve_map(N, N, collapse, 1);
    CHECK(std::all_of(f1.begin(), f1.end(), [](int x) { return x == -1; }));
    CHECK(push_forward(f1, Chain{{0, 3}}).empty());
    // sending composable arrows to non-composable ones is rejected
    Functor bad = id;
    int a = -1, b = -1;
    for (std::size_t m = 0; m < c.src.size() && a < 0; ++m)
        for (int n : c.out[c.tgt[m]]) {
            a = (int)m;
            b = n;
            break;
        }
    REQUIRE(a >= 0);
    bad.on_morphisms[b] = a;
    CHECK_THROWS(nerve_map(N, N, bad, 2));
}
