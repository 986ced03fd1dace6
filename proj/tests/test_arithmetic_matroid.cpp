#include "toric/arithmetic_matroid.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>

using namespace toric;

namespace {

// EX characters as columns
IntMatrix ex_characters() { return IntMatrix{{1, 1, 0}, {0, 2, 1}}; }

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    IntMatrix U = IntMatrix::identity(n);
    if (n < 2) {
        if (rng() & 1) U(0, 0) = -1;
        return U;
    }
    for (int step = 0; step < 12; ++step) {
        std::size_t a = rng() % n, b = rng() % n;
        if (a == b) continue;
        long t = (long)(rng() % 5) - 2;
        switch (rng() % 3) {
            case 0:
                for (std::size_t j = 0; j < n; ++j) U(a, j) += t * U(b, j);
                break;
            case 1:
                for (std::size_t j = 0; j < n; ++j) std::swap(U(a, j), U(b, j));
                break;
            default:
                for (std::size_t j = 0; j < n; ++j) U(a, j) = -U(a, j);
        }
    }
    return U;
}

IntMatrix random_signs(std::mt19937& rng, const IntMatrix& A) {
    IntMatrix R = A;
    for (std::size_t j = 0; j < A.cols; ++j)
        if (rng() & 1)
            for (std::size_t i = 0; i < A.rows; ++i) R(i, j) = -R(i, j);
    return R;
}

// gcd of the k x k minors of the columns S, k = their rank
Int minors_gcd(const IntMatrix& A, const std::vector<int>& S) {
    if (S.empty()) return 1;
    int k = column_rank(A, S);
    Int g = 0;
    std::vector<int> rows(A.rows), cols(S.size());
    for (unsigned rm = 0; rm < (1u << A.rows); ++rm) {
        if (__builtin_popcount(rm) != k) continue;
        for (unsigned cm = 0; cm < (1u << S.size()); ++cm) {
            if (__builtin_popcount(cm) != k) continue;
            IntMatrix M(k, k);
            int a = 0;
            for (std::size_t i = 0; i < A.rows; ++i) {
                if (!(rm >> i & 1)) continue;
                int b = 0;
                for (std::size_t j = 0; j < S.size(); ++j)
                    if (cm >> j & 1) M(a, b++) = A(i, S[j]);
                ++a;
            }
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), determinant(M).get_mpz_t());
        }
    }
    return g;
}

}  // namespace

TEST_CASE("multiplicities") {
    CHECK(multiplicity(ex_characters(), {0, 1}) == 2);
    CHECK(multiplicity(ex_characters(), {}) == 1);
    CHECK(multiplicity(ex_characters(), {0, 2}) == 1);
    CHECK(multiplicity(lenz_matrix(), {0, 1, 2}) == 1);
    CHECK(multiplicity(IntMatrix{{2, 4}}, {0, 1}) == 2);
    CHECK(multiplicity(IntMatrix{{0, 0}}, {0}) == 1);
    CHECK_THROWS(multiplicity(ex_characters(), {5}));

    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        IntMatrix A(2 + rng() % 2, 4);
        for (auto& x : A.a) x = (long)(rng() % 7) - 3;
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::vector<int> S;
            for (int j = 0; j < 4; ++j)
                if (mask >> j & 1) S.push_back(j);
            Int g = minors_gcd(A, S);
            CHECK(multiplicity(A, S) == (g == 0 ? Int(1) : Int(abs(g))));
        }
        // invariant under the equivalence moves
        auto U = random_unimodular(rng, A.rows);
        CHECK(matroid_data(U * random_signs(rng, A)) == matroid_data(A));
    }
}

TEST_CASE("canonical form") {
    IntMatrix fixed{{1, 0, 1, 1}, {0, 1, 1, 2}};
    CHECK(canonical_form(fixed, {0, 1}) == fixed);

    auto X = lenz_matrix();
    auto cX = canonical_form(X, {0, 1, 2});
    // the six entries of N form a cycle whose sign product is -1: exactly one stays negative
    int neg = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) neg += cX(i, j) < 0;
    CHECK(neg == 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(cX(i, j) == (i == j ? 1 : 0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) CHECK(abs(cX(i, j)) == abs(X(i, j)));

    std::mt19937 rng(7);
    for (int it = 0; it < 1000; ++it) {
        auto U = random_unimodular(rng, 3);
        CHECK(canonical_form(U * random_signs(rng, X), {0, 1, 2}) == cX);
        auto V = random_unimodular(rng, 2);
        auto A = ex_characters();
        CHECK(canonical_form(V * random_signs(rng, A), {0, 2}) == canonical_form(A, {0, 2}));
    }

    CHECK_THROWS_AS(canonical_form(ex_characters(), {0, 1}), std::invalid_argument);  // m = 2
    CHECK_THROWS_AS(canonical_form(IntMatrix{{1, 2}, {2, 4}}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_form(X, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("equivalence") {
    auto X = lenz_matrix();
    auto X6 = X;
    for (std::size_t i = 0; i < 3; ++i) X6(i, 5) = -X6(i, 5);
    CHECK(equivalent(X, X6, {0, 1, 2}));
    // one entry flipped: columns 3,4,5 become dependent, so even the matroids differ
    auto Xe = X;
    Xe(2, 5) = 1;
    CHECK_FALSE(equivalent(X, Xe, {0, 1, 2}));
    CHECK_FALSE(matroid_data(X) == matroid_data(Xe));
    CHECK_FALSE(equivalent(IntMatrix{{1, 2}}, IntMatrix{{1, 3}}, {0}));
    CHECK_FALSE(equivalent(IntMatrix{{1, 2}}, IntMatrix{{1, 2, 0}}, {0}));
    CHECK_THROWS(equivalent(ex_characters(), ex_characters(), {0, 1}));
}

TEST_CASE("rank 2 catalog: same data implies equivalent") {
    // all 2 x 3 matrices with entries in [-2, 2] whose first two columns have determinant +-1
    std::map<std::pair<std::vector<int>, std::vector<std::string>>, IntMatrix> seen;
    int classes = 0, matrices = 0;
    for (int code = 0; code < 15625; ++code) {
        IntMatrix A(2, 3);
        int c = code;
        for (auto& x : A.a) {
            x = c % 5 - 2;
            c /= 5;
        }
        if (abs(A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0)) != 1) continue;
        ++matrices;
        auto md = matroid_data(A);
        std::vector<std::string> mult;
        for (auto& x : md.mult) mult.push_back(x.get_str());
        auto key = std::make_pair(md.rank, mult);
        auto canon = canonical_form(A, {0, 1});
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, canon);
            ++classes;
        } else {
            CHECK(it->second == canon);
        }
    }
    CHECK(matrices > 0);
    CHECK(classes > 1);
}
