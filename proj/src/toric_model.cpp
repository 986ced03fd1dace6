#include "toric/toric_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toric {

ToricArrangement ToricArrangement::make(int dim, std::vector<Hypertorus> tori) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    for (std::size_t i = 0; i < tori.size(); ++i) {
        auto& t = tori[i];
        if ((int)t.character.size() != dim)
            throw std::invalid_argument("hypertorus " + std::to_string(i) + ": character has wrong length");
        Int g = gcd_all(t.character);
        if (g == 0) throw std::invalid_argument("hypertorus " + std::to_string(i) + ": zero character");
        if (g != 1)
            throw std::invalid_argument("hypertorus " + std::to_string(i) +
                                        ": character is not primitive (gcd " + g.get_str() + ")");
        t.offset.canonicalize();
        t.offset = frac(t.offset);
    }
    for (std::size_t i = 0; i < tori.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            IntVec neg = tori[j].character;
            for (auto& x : neg) x = -x;
            bool same = tori[i].character == tori[j].character && tori[i].offset == tori[j].offset;
            bool opp = tori[i].character == neg && frac(-tori[j].offset) == tori[i].offset;
            if (same || opp)
                throw std::invalid_argument("hypertori " + std::to_string(j) + " and " + std::to_string(i) +
                                            " coincide");
        }
    ToricArrangement a;
    a.dim = dim;
    a.tori = std::move(tori);
    return a;
}

IntMatrix ToricArrangement::character_matrix() const {
    IntMatrix m(tori.size(), dim);
    for (std::size_t i = 0; i < tori.size(); ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = tori[i].character[j];
    return m;
}

bool ToricArrangement::is_essential() const { return (int)rank(character_matrix()) == dim; }

IntVec normalize_sign(const IntVec& v, int* sign) {
    int s = 1;
    for (auto& x : v)
        if (x != 0) {
            s = x > 0 ? 1 : -1;
            break;
        }
    if (sign) *sign = s;
    IntVec r = v;
    if (s < 0)
        for (auto& x : r) x = -x;
    return r;
}

A0Data arrangement_A0(const ToricArrangement& arr) {
    A0Data d;
    d.arr.dim = arr.dim;
    for (auto& t : arr.tori) {
        int s;
        IntVec n = normalize_sign(t.character, &s);
        auto it = std::find(d.arr.normals.begin(), d.arr.normals.end(), n);
        int idx = (int)(it - d.arr.normals.begin());
        if (it == d.arr.normals.end()) d.arr.normals.push_back(n);
        d.plane_of.push_back(idx);
        d.sign_of.push_back(s);
    }
    return d;
}

namespace {

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows + b.rows, a.cols ? a.cols : b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) m(a.rows + i, j) = b(i, j);
    return m;
}

IntMatrix row_matrix(const IntVec& v) {
    IntMatrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
}

RatVec mul_frac(const IntMatrix& M, const RatVec& x) {
    RatVec r(M.rows);
    for (std::size_t i = 0; i < M.rows; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < M.cols; ++j) s += Rat(M(i, j)) * x[j];
        r[i] = frac(s);
    }
    return r;
}

bool in_row_span(const IntMatrix& M, const IntVec& v) {
    return rank(stack(M, row_matrix(v))) == rank(M);
}

}  // namespace

bool Layer::contains_point(const RatVec& x) const { return mul_frac(normal, x) == key; }

Layer make_layer(const IntMatrix& equations, const RatVec& point, const ToricArrangement& arr) {
    Layer L;
    const std::size_t d = arr.dim;
    IntMatrix E = equations;
    if (E.rows == 0) E = IntMatrix(0, d);
    L.normal = saturate_rows(E);
    if (L.normal.rows == 0) L.normal = IntMatrix(0, d);
    L.rank = (int)L.normal.rows;
    IntMatrix K = integer_kernel(L.normal);
    L.tangent = K.cols ? row_hnf(K.transpose()) : IntMatrix(0, d);
    L.base_point.resize(d);
    for (std::size_t j = 0; j < d; ++j) L.base_point[j] = frac(point[j]);
    L.key = mul_frac(L.normal, L.base_point);
    for (std::size_t i = 0; i < arr.tori.size(); ++i) {
        auto& t = arr.tori[i];
        if (!in_row_span(L.normal, t.character)) continue;
        Rat s = -t.offset;
        for (std::size_t j = 0; j < d; ++j) s += Rat(t.character[j]) * L.base_point[j];
        if (frac(s) == 0) L.defining_set.push_back((int)i);
    }
    return L;
}

int LayerPoset::find(const Layer& L) const {
    for (std::size_t i = 0; i < layers.size(); ++i)
        if (layers[i] == L) return (int)i;
    return -1;
}

int LayerPoset::find_containing_point(const std::vector<int>& defining, const RatVec& x) const {
    for (std::size_t i = 0; i < layers.size(); ++i)
        if (layers[i].defining_set == defining && layers[i].contains_point(x)) return (int)i;
    return -1;
}

Flat flat_closure(const LinearArrangement& A, const std::vector<int>& planes) {
    IntMatrix N(planes.size(), A.dim);
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (int j = 0; j < A.dim; ++j) N(i, j) = A.normals[planes[i]][j];
    std::size_t r = rank(N);
    Flat f;
    for (std::size_t h = 0; h < A.normals.size(); ++h)
        if (rank(stack(N, row_matrix(A.normals[h]))) == r) f.push_back((int)h);
    return f;
}

LayerPoset build_layer_poset(const ToricArrangement& arr) {
    const std::size_t n = arr.size();
    if (n > 20) throw std::invalid_argument("too many hypertori for subset enumeration");
    IntMatrix A = arr.character_matrix();
    std::vector<Layer> found;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::size_t> S;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) S.push_back(i);
        IntMatrix AS = A.select_rows(S);
        if (S.empty()) AS = IntMatrix(0, arr.dim);
        RatVec b;
        for (auto i : S) b.push_back(arr.tori[i].offset);
        for (auto& x : solve_congruence(AS, b)) {
            Layer L = make_layer(AS, x, arr);
            if (std::find(found.begin(), found.end(), L) == found.end()) found.push_back(L);
        }
    }
    std::sort(found.begin(), found.end(), [](const Layer& x, const Layer& y) {
        if (x.rank != y.rank) return x.rank < y.rank;
        if (x.normal.a != y.normal.a) return x.normal.a < y.normal.a;
        return x.key < y.key;
    });
    LayerPoset P;
    P.layers = found;
    P.by_rank.assign(arr.dim + 1, {});
    for (std::size_t i = 0; i < found.size(); ++i) P.by_rank[found[i].rank].push_back((int)i);
    const std::size_t m = found.size();
    P.contains.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto& Li = found[i];
            auto& Lj = found[j];
            if (Lj.rank < Li.rank) continue;
            if (rank(stack(Lj.normal, Li.normal)) != (std::size_t)Lj.rank) continue;
            if (Li.contains_point(Lj.base_point)) P.contains[i][j] = 1;
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (P.contains[i][j] && found[j].rank == found[i].rank + 1) P.hasse.push_back({(int)i, (int)j});
    A0Data a0 = arrangement_A0(arr);
    for (auto& L : found) {
        std::vector<int> planes;
        for (int h : L.defining_set) planes.push_back(a0.plane_of[h]);
        P.flats.push_back(flat_closure(a0.arr, planes));
    }
    return P;
}

std::vector<int> local_arrangement(const ToricArrangement& arr, const Layer& L) {
    A0Data a0 = arrangement_A0(arr);
    std::vector<int> r;
    for (int h : L.defining_set) r.push_back(a0.plane_of[h]);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

LinearArrangement restrict_linear(const LinearArrangement& A, const std::vector<int>& idx) {
    LinearArrangement r;
    r.dim = A.dim;
    for (int i : idx) r.normals.push_back(A.normals[i]);
    return r;
}

Quotient quotient_arrangement(const ToricArrangement& arr, const Layer& L) {
    Quotient q;
    q.proj = L.normal;
    RatMatrix QT = to_rat(L.normal.transpose());
    std::vector<Hypertorus> tori;
    q.torus_map.assign(arr.size(), -1);
    for (int i : L.defining_set) {
        RatVec a(arr.tori[i].character.begin(), arr.tori[i].character.end());
        auto c = solve(QT, a);
        if (!c) throw std::logic_error("quotient: character outside the annihilator lattice");
        IntVec ci;
        for (auto& x : *c) {
            if (x.get_den() != 1) throw std::logic_error("quotient: non-integral character image");
            ci.push_back(x.get_num());
        }
        q.torus_map[i] = (int)tori.size();
        q.torus_source.push_back(i);
        tori.push_back({ci, arr.tori[i].offset});
    }
    q.arr = ToricArrangement::make(L.rank, tori);
    return q;
}

ToricArrangement subarrangement(const ToricArrangement& arr, const std::vector<int>& S) {
    std::vector<Hypertorus> t;
    for (int i : S) {
        if (i < 0 || i >= (int)arr.size()) throw std::out_of_range("subarrangement index");
        t.push_back(arr.tori[i]);
    }
    return ToricArrangement::make(arr.dim, t);
}

RatVec translate(const RatVec& x, const RatVec& g) {
    RatVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = frac(x[i] + g[i]);
    return r;
}

StabilizerGroup essential_stabilizer(const ToricArrangement& arr) {
    StabilizerGroup g;
    g.dim = arr.dim;
    IntMatrix A = arr.character_matrix();
    if (A.rows == 0) A = IntMatrix(0, arr.dim);
    g.elements = solve_congruence(A, RatVec(arr.size(), Rat(0)));
    return g;
}

StabilizerGroup stab_of_layer(const StabilizerGroup& g, const Layer& Y) {
    StabilizerGroup s;
    s.dim = g.dim;
    s.generated_from = g.generated_from;
    for (auto& h : g.elements)
        if (Y.contains_point(translate(Y.base_point, h))) s.elements.push_back(h);
    return s;
}

std::vector<std::vector<int>> nbc_sets(const LinearArrangement& A, const std::vector<int>& order, int size) {
    const int n = (int)order.size();
    std::vector<std::vector<int>> out;
    if (size == 0) return {{}};
    if (size > n) return out;
    auto mat = [&](const std::vector<int>& planes) {
        IntMatrix M(planes.size(), A.dim);
        for (std::size_t i = 0; i < planes.size(); ++i)
            for (int j = 0; j < A.dim; ++j) M(i, j) = A.normals[planes[i]][j];
        return M;
    };
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::vector<int> S;
        for (int p : pick) S.push_back(order[p]);
        bool ok = (int)rank(mat(S)) == size;
        for (int i = 0; ok && i < size; ++i) {
            // order[pick[i]] must be the least element of cl{S_i, ..., S_k}
            std::vector<int> tail(S.begin() + i, S.end());
            IntMatrix T = mat(tail);
            std::size_t r = rank(T);
            for (int p = 0; p < pick[i]; ++p) {
                IntMatrix T2 = mat(tail);
                T2.rows += 1;
                for (int j = 0; j < A.dim; ++j) T2.a.push_back(A.normals[order[p]][j]);
                if (rank(T2) == r) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(S);
        int k = size - 1;
        while (k >= 0 && pick[k] == n - size + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int j = k + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<Int> poincare_polynomial(const ToricArrangement& arr) {
    const int d = arr.dim;
    LayerPoset P = build_layer_poset(arr);
    A0Data a0 = arrangement_A0(arr);
    std::vector<Int> c(d + 1, Int(0));
    for (auto& L : P.layers) {
        std::vector<int> planes = local_arrangement(arr, L);
        std::size_t count = nbc_sets(a0.arr, planes, L.rank).size();
        // t^rk (1+t)^(d-rk)
        Int binom = 1;
        for (int k = 0; k <= d - L.rank; ++k) {
            c[L.rank + k] += binom * Int((unsigned long)count);
            binom = binom * (d - L.rank - k) / (k + 1);
        }
    }
    return c;
}

}  // namespace toric
