#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toric {

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols; ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw std::invalid_argument("not a rational: '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    if (den[0] == '+') den = den.substr(1);
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

Rat frac(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rat(f);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int gcd_all(const std::vector<Int>& v) {
    Int g = 0;
    for (auto& x : v) g = gcd(g, x);
    return g;
}

std::vector<Int> SnfDecomposition::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(D.rows, D.cols); ++i) {
        if (D(i, i) == 0) break;
        d.push_back(D(i, i));
    }
    return d;
}

namespace {

struct SnfWork {
    IntMatrix D, U, V;
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < D.cols; ++k) std::swap(D(i, k), D(j, k));
        for (std::size_t k = 0; k < U.cols; ++k) std::swap(U(i, k), U(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < D.rows; ++k) std::swap(D(k, i), D(k, j));
        for (std::size_t k = 0; k < V.rows; ++k) std::swap(V(k, i), V(k, j));
    }
    void add_row(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t k = 0; k < D.cols; ++k) D(dst, k) += q * D(src, k);
        for (std::size_t k = 0; k < U.cols; ++k) U(dst, k) += q * U(src, k);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t k = 0; k < D.rows; ++k) D(k, dst) += q * D(k, src);
        for (std::size_t k = 0; k < V.rows; ++k) V(k, dst) += q * V(k, src);
    }
    void neg_row(std::size_t i) {
        for (std::size_t k = 0; k < D.cols; ++k) D(i, k) = -D(i, k);
        for (std::size_t k = 0; k < U.cols; ++k) U(i, k) = -U(i, k);
    }
};

Int tdiv(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows, n = A.cols;
    SnfWork w{A, IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& D = w.D;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest |entry|, first in row-major order
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (D(i, j) == 0) continue;
                    if (pi == m || abs(D(i, j)) < abs(D(pi, pj))) pi = i, pj = j;
                }
            if (pi == m) return {w.U, w.D, w.V};
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                w.add_row(i, t, -tdiv(D(i, t), D(t, t)));
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                w.add_col(j, t, -tdiv(D(t, j), D(t, t)));
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (!divides) continue;
            if (D(t, t) < 0) w.neg_row(t);
            break;
        }
    }
    return {w.U, w.D, w.V};
}

HnfDecomposition hermite_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows, n = A.cols;
    IntMatrix H = A, U = IntMatrix::identity(n);
    std::vector<std::size_t> piv;
    auto colop = [&](std::size_t c, std::size_t j, const Int& x, const Int& y, const Int& p, const Int& q) {
        // (col_c, col_j) <- (x col_c + y col_j, p col_c + q col_j)
        for (IntMatrix* M : {&H, &U})
            for (std::size_t r = 0; r < M->rows; ++r) {
                Int a = (*M)(r, c), b = (*M)(r, j);
                (*M)(r, c) = x * a + y * b;
                (*M)(r, j) = p * a + q * b;
            }
    };
    std::size_t c = 0;
    for (std::size_t i = 0; i < m && c < n; ++i) {
        for (std::size_t j = c + 1; j < n; ++j) {
            if (H(i, j) == 0) continue;
            Int a = H(i, c), b = H(i, j), g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            colop(c, j, x, y, Int(-b / g), Int(a / g));
        }
        if (H(i, c) == 0) continue;
        if (H(i, c) < 0) colop(c, c, Int(-1), Int(0), Int(-1), Int(0));
        for (std::size_t k = 0; k < c; ++k) {
            Int q = floor_div(H(i, k), H(i, c));
            if (q == 0) continue;
            for (IntMatrix* M : {&H, &U})
                for (std::size_t r = 0; r < M->rows; ++r) (*M)(r, k) -= q * (*M)(r, c);
        }
        piv.push_back(i);
        ++c;
    }
    return {H, U, piv};
}

Int determinant(const IntMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = A.rows;
    if (n == 0) return 1;
    IntMatrix M = A;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && M(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j));
                mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

std::vector<std::size_t> rref(RatMatrix& A) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
        std::size_t p = r;
        while (p < A.rows && A(p, c) == 0) ++p;
        if (p == A.rows) continue;
        for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(r, j), A(p, j));
        Rat inv = 1 / A(r, c);
        for (std::size_t j = c; j < A.cols; ++j) A(r, j) *= inv;
        for (std::size_t i = 0; i < A.rows; ++i) {
            if (i == r || A(i, c) == 0) continue;
            Rat f = A(i, c);
            for (std::size_t j = c; j < A.cols; ++j) A(i, j) -= f * A(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(const RatMatrix& A) {
    RatMatrix B = A;
    return rref(B).size();
}

std::size_t rank(const IntMatrix& A) { return rank(to_rat(A)); }

std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b) {
    RatMatrix M(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) M(i, j) = A(i, j);
        M(i, A.cols) = b[i];
    }
    auto piv = rref(M);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
    RatVec x(A.cols);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M(r, A.cols);
    return x;
}

RatMatrix kernel(const RatMatrix& A) {
    RatMatrix M = A;
    auto piv = rref(M);
    std::vector<bool> is_piv(A.cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < A.cols; ++j)
        if (!is_piv[j]) free.push_back(j);
    RatMatrix K(A.cols, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        K(free[f], f) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) K(piv[r], f) = -M(r, free[f]);
    }
    return K;
}

IntMatrix integer_kernel(const IntMatrix& A) {
    auto h = hermite_normal_form(A);
    std::size_t r = h.pivot_rows.size();
    std::vector<std::size_t> idx;
    for (std::size_t j = r; j < A.cols; ++j) idx.push_back(j);
    return h.U.select_cols(idx);
}

IntMatrix row_hnf(const IntMatrix& A) {
    auto h = hermite_normal_form(A.transpose());
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < h.pivot_rows.size(); ++j) idx.push_back(j);
    return h.H.select_cols(idx).transpose();
}

IntMatrix saturate_rows(const IntMatrix& A) {
    IntMatrix K = integer_kernel(A);
    IntMatrix S = integer_kernel(K.transpose());
    return row_hnf(S.transpose());
}

std::optional<RatMatrix> inverse(const RatMatrix& A) {
    if (A.rows != A.cols) return std::nullopt;
    const std::size_t n = A.rows;
    if (n == 0) return RatMatrix(0, 0);
    RatMatrix M(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n + i) = 1;
    }
    auto piv = rref(M);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    RatMatrix R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R(i, j) = M(i, n + j);
    return R;
}

IntMatrix inverse_unimodular(const IntMatrix& A) {
    auto inv = inverse(to_rat(A));
    if (!inv) throw std::invalid_argument("matrix not invertible");
    IntMatrix R(A.rows, A.cols);
    for (std::size_t i = 0; i < R.a.size(); ++i) {
        if (inv->a[i].get_den() != 1) throw std::invalid_argument("matrix not unimodular");
        R.a[i] = inv->a[i].get_num();
    }
    return R;
}

Int lattice_index(const IntMatrix& A) {
    if (rank(A) < A.rows) throw std::invalid_argument("lattice_index: matrix is not of full row rank");
    Int p = 1;
    for (auto& d : smith_normal_form(A).diagonal()) p *= d;
    return p;
}

bool is_unimodular(const IntMatrix& A) {
    if (A.rows != A.cols) return false;
    return abs(determinant(A)) == 1;
}

std::vector<RatVec> solve_congruence(const IntMatrix& A, const RatVec& b) {
    const std::size_t d = A.cols;
    if (A.rows == 0) return {RatVec(d, Rat(0))};
    auto s = smith_normal_form(A);
    RatVec c = to_rat(s.U) * b;
    auto diag = s.diagonal();
    const std::size_t r = diag.size();
    for (std::size_t i = r; i < A.rows; ++i)
        if (frac(c[i]) != 0) return {};
    std::vector<RatVec> out;
    std::vector<Int> j(r, 0);
    RatMatrix V = to_rat(s.V);
    for (;;) {
        RatVec y(d, Rat(0));
        for (std::size_t i = 0; i < r; ++i) y[i] = (c[i] + Rat(j[i])) / Rat(diag[i]);
        RatVec x = V * y;
        for (auto& xi : x) xi = frac(xi);
        out.push_back(x);
        std::size_t k = 0;
        while (k < r) {
            if (++j[k] < diag[k]) break;
            j[k] = 0;
            ++k;
        }
        if (k == r) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace toric
