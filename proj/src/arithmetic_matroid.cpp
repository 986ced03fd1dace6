#include "toric/arithmetic_matroid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace toric {

namespace {

IntMatrix columns(const IntMatrix& A, const std::vector<int>& S) {
    IntMatrix M(A.rows, S.size());
    for (std::size_t j = 0; j < S.size(); ++j) {
        if (S[j] < 0 || S[j] >= (int)A.cols) throw std::out_of_range("column index out of range");
        for (std::size_t i = 0; i < A.rows; ++i) M(i, j) = A(i, S[j]);
    }
    return M;
}

}  // namespace

Int multiplicity(const IntMatrix& A, const std::vector<int>& S) {
    if (S.empty()) return 1;
    Int p = 1;
    for (auto& d : smith_normal_form(columns(A, S)).diagonal()) p *= abs(d);
    return p;
}

int column_rank(const IntMatrix& A, const std::vector<int>& S) {
    if (S.empty()) return 0;
    return (int)rank(columns(A, S));
}

MatroidData matroid_data(const IntMatrix& A) {
    if (A.cols > 20) throw std::invalid_argument("matroid_data: too many columns");
    MatroidData m;
    m.n = (int)A.cols;
    const std::size_t N = std::size_t(1) << A.cols;
    m.rank.resize(N);
    m.mult.resize(N);
    for (std::size_t mask = 0; mask < N; ++mask) {
        std::vector<int> S;
        for (int j = 0; j < m.n; ++j)
            if (mask >> j & 1) S.push_back(j);
        m.rank[mask] = column_rank(A, S);
        m.mult[mask] = multiplicity(A, S);
    }
    return m;
}

IntMatrix canonical_form(const IntMatrix& A, const std::vector<int>& B) {
    const std::size_t r = A.rows, n = A.cols;
    if (rank(A) != r) throw std::invalid_argument("canonical_form: rows are dependent");
    std::vector<int> sb = B;
    std::sort(sb.begin(), sb.end());
    if (B.size() != r || std::adjacent_find(sb.begin(), sb.end()) != sb.end())
        throw std::invalid_argument("canonical_form: B is not a basis");
    IntMatrix AB = columns(A, B);
    Int det = determinant(AB);
    if (det == 0) throw std::invalid_argument("canonical_form: B is not a basis");
    if (abs(det) != 1) throw std::invalid_argument("canonical_form: basis of multiplicity != 1");
    IntMatrix C = inverse_unimodular(AB) * A;

    std::vector<int> rest;
    for (std::size_t j = 0; j < n; ++j)
        if (!std::binary_search(sb.begin(), sb.end(), (int)j)) rest.push_back((int)j);
    // vertices 0..r-1 are rows, r..r+k-1 the non-basis columns
    const std::size_t k = rest.size();
    std::vector<int> sign(r + k, 0);
    auto entry = [&](std::size_t i, std::size_t j) -> const Int& { return C(i, rest[j]); };
    for (std::size_t root = 0; root < r + k; ++root) {
        if (sign[root]) continue;
        sign[root] = 1;
        std::deque<std::size_t> q{root};
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            if (u < r) {
                for (std::size_t j = 0; j < k; ++j)
                    if (entry(u, j) != 0 && !sign[r + j]) {
                        sign[r + j] = sign[u] * sgn(entry(u, j));
                        q.push_back(r + j);
                    }
            } else {
                for (std::size_t i = 0; i < r; ++i)
                    if (entry(i, u - r) != 0 && !sign[i]) {
                        sign[i] = sign[u] * sgn(entry(i, u - r));
                        q.push_back(i);
                    }
            }
        }
    }
    // row i scaled by s_i, basis column B[i] by s_i again, non-basis column j by t_j
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) C(i, rest[j]) *= sign[i] * sign[r + j];
    return C;
}

bool equivalent(const IntMatrix& A, const IntMatrix& Ap, const std::vector<int>& B) {
    if (A.rows != Ap.rows || A.cols != Ap.cols) return false;
    return canonical_form(A, B) == canonical_form(Ap, B);
}

IntMatrix lenz_matrix() {
    return IntMatrix{{1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 1, -1}};
}

}  // namespace toric
