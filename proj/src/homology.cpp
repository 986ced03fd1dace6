#include "toric/homology.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace toric {

namespace {

long long mul_checked(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("chain coefficient overflow");
    return r;
}

long long add_checked(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("chain coefficient overflow");
    return r;
}

long long entry(const SparseVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(i, LLONG_MIN));
    return (it != v.end() && it->first == i) ? it->second : 0;
}

// x - t*y
SparseVec axpy(const SparseVec& x, long long t, const SparseVec& y) {
    SparseVec r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.emplace_back(y[j].first, -mul_checked(t, y[j].second));
            ++j;
        } else {
            long long v = add_checked(x[i].second, -mul_checked(t, y[j].second));
            if (v != 0) r.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return r;
}

void chain_axpy(Chain& x, long long t, const SparseVec& y) {
    for (auto& [i, v] : y) {
        long long nv = add_checked(x.count(i) ? x[i] : 0, -mul_checked(t, v));
        if (nv == 0)
            x.erase(i);
        else
            x[i] = nv;
    }
}

}  // namespace

Chain boundary(const ChainComplex& C, int k, const Chain& c) {
    Chain r;
    if (k <= 0) return r;
    for (auto& [j, v] : c) chain_axpy(r, -v, C.bd[k][j]);
    return r;
}

struct HomologyEngine::Impl {
    ChainComplex C;
    struct Step {
        int k;          // a in C_k, b in C_{k-1}
        int a, b;
        long long u;    // <da, b> = +-1
        SparseVec da;   // boundary of a at elimination time
        std::vector<std::pair<int, long long>> row;  // (c, <dc,b>) for the other columns hit
    };
    std::vector<Step> steps;
    std::vector<std::vector<int>> steps_touching;  // degree p -> steps with k == p or k-1 == p
    std::vector<std::vector<char>> alive;
    std::vector<std::vector<SparseVec>> cols;      // current boundaries

    // residual data per degree
    std::vector<std::vector<int>> res_cells;       // residual position -> cell
    std::vector<std::vector<int>> res_pos;         // cell -> residual position or -1
    struct DegreeData {
        bool computed = false;
        std::size_t rp = 0, s = 0;
        IntMatrix Vinv_low;  // rows r_p.. of V_p^{-1}
        IntMatrix Uq, Vq;    // SNF transforms of M
        std::vector<Int> t;  // invariants of M
        HomologyGroup group;
    };
    mutable std::vector<DegreeData> deg;

    void reduce();
    IntMatrix residual_matrix(int k) const;
    void compute(int p) const;
    Chain f_forward(int p, Chain z, std::vector<std::pair<int, long long>>* q) const;
    Chain g_lift(int p, Chain y) const;
    Cochain f_pullback(int p, const std::vector<Int>& psi_res) const;
};

void HomologyEngine::Impl::reduce() {
    const int top = C.top();
    alive.resize(top + 1);
    cols.resize(top + 1);
    std::vector<std::vector<std::vector<int>>> rows(top + 1);
    std::vector<std::vector<int>> rowcnt(top + 1);
    for (int k = 0; k <= top; ++k) alive[k].assign(C.dims[k], 1);
    for (int k = 1; k <= top; ++k) {
        cols[k] = C.bd[k];
        rows[k].assign(C.dims[k - 1], {});
        rowcnt[k].assign(C.dims[k - 1], 0);
        for (std::size_t j = 0; j < cols[k].size(); ++j)
            for (auto& [i, v] : cols[k][j]) {
                rows[k][i].push_back((int)j);
                ++rowcnt[k][i];
            }
    }
    auto eliminate = [&](int k, int a, int b, long long u) {
        Step st;
        st.k = k;
        st.a = a;
        st.b = b;
        st.u = u;
        st.da = cols[k][a];
        std::vector<int> hit;
        for (int c : rows[k][b])
            if (c != a && alive[k][c]) hit.push_back(c);
        std::sort(hit.begin(), hit.end());
        hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
        for (int c : hit) {
            long long e = entry(cols[k][c], b);
            if (e == 0) continue;
            st.row.emplace_back(c, e);
            SparseVec nc = axpy(cols[k][c], mul_checked(e, u), st.da);
            // update row lists and counts
            std::size_t i = 0, j = 0;
            const SparseVec& oc = cols[k][c];
            while (i < oc.size() || j < nc.size()) {
                if (j == nc.size() || (i < oc.size() && oc[i].first < nc[j].first)) {
                    --rowcnt[k][oc[i].first];
                    ++i;
                } else if (i == oc.size() || nc[j].first < oc[i].first) {
                    ++rowcnt[k][nc[j].first];
                    rows[k][nc[j].first].push_back(c);
                    ++j;
                } else {
                    ++i;
                    ++j;
                }
            }
            cols[k][c] = std::move(nc);
        }
        // remove column a
        for (auto& [r, v] : cols[k][a]) --rowcnt[k][r];
        cols[k][a].clear();
        alive[k][a] = 0;
        // remove row a from the boundaries of (k+1)-cells
        if (k + 1 <= top) {
            for (int c : rows[k + 1][a]) {
                if (!alive[k + 1][c]) continue;
                auto& col = cols[k + 1][c];
                auto it = std::lower_bound(col.begin(), col.end(), std::make_pair(a, LLONG_MIN));
                if (it != col.end() && it->first == a) col.erase(it);
            }
            rows[k + 1][a].clear();
            rowcnt[k + 1][a] = 0;
        }
        // remove cell b from degree k-1
        alive[k - 1][b] = 0;
        rows[k][b].clear();
        rowcnt[k][b] = 0;
        if (k - 1 >= 1) {
            for (auto& [r, v] : cols[k - 1][b]) --rowcnt[k - 1][r];
            cols[k - 1][b].clear();
        }
        steps.push_back(std::move(st));
    };
    for (int k = top; k >= 1; --k) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t a = 0; a < cols[k].size(); ++a) {
                if (!alive[k][a] || cols[k][a].empty()) continue;
                int best = -1;
                long long bu = 0;
                int bc = 0;
                for (auto& [i, v] : cols[k][a]) {
                    if (v != 1 && v != -1) continue;
                    if (best < 0 || rowcnt[k][i] < bc) {
                        best = i;
                        bu = v;
                        bc = rowcnt[k][i];
                    }
                }
                if (best < 0) continue;
                eliminate(k, (int)a, best, bu);
                progress = true;
            }
        }
    }
    steps_touching.assign(top + 1, {});
    for (std::size_t s = 0; s < steps.size(); ++s) {
        steps_touching[steps[s].k].push_back((int)s);
        steps_touching[steps[s].k - 1].push_back((int)s);
    }
    for (auto& v : steps_touching) std::sort(v.begin(), v.end());
    res_cells.assign(top + 1, {});
    res_pos.assign(top + 1, {});
    for (int k = 0; k <= top; ++k) {
        res_pos[k].assign(C.dims[k], -1);
        for (std::size_t j = 0; j < C.dims[k]; ++j)
            if (alive[k][j]) {
                res_pos[k][j] = (int)res_cells[k].size();
                res_cells[k].push_back((int)j);
            }
    }
    deg.assign(top + 1, {});
}

IntMatrix HomologyEngine::Impl::residual_matrix(int k) const {
    if (k <= 0 || k > C.top()) {
        std::size_t r = k <= 0 ? 0 : res_cells[k - 1].size();
        std::size_t c = (k < 0 || k > C.top()) ? 0 : res_cells[k].size();
        return IntMatrix(r, c);
    }
    IntMatrix M(res_cells[k - 1].size(), res_cells[k].size());
    for (std::size_t j = 0; j < res_cells[k].size(); ++j)
        for (auto& [i, v] : cols[k][res_cells[k][j]]) {
            int p = res_pos[k - 1][i];
            if (p < 0) throw std::logic_error("residual boundary touches an eliminated cell");
            M(p, j) = Int((long)v);
        }
    return M;
}

Chain HomologyEngine::Impl::f_forward(int p, Chain z, std::vector<std::pair<int, long long>>* q) const {
    for (int s : steps_touching[p]) {
        const Step& st = steps[s];
        if (st.k - 1 == p) {
            auto it = z.find(st.b);
            if (it == z.end()) continue;
            long long t = mul_checked(it->second, st.u);
            chain_axpy(z, t, st.da);
            if (q) q->emplace_back(s, t);
        } else if (st.k == p) {
            z.erase(st.a);
        }
    }
    return z;
}

Chain HomologyEngine::Impl::g_lift(int p, Chain y) const {
    const auto& ts = steps_touching[p];
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const Step& st = steps[*it];
        if (st.k != p) continue;
        long long t = 0;
        for (auto& [c, e] : st.row) {
            auto f = y.find(c);
            if (f != y.end()) t = add_checked(t, mul_checked(f->second, mul_checked(e, st.u)));
        }
        if (t != 0) {
            long long nv = add_checked(y.count(st.a) ? y[st.a] : 0, -t);
            if (nv == 0)
                y.erase(st.a);
            else
                y[st.a] = nv;
        }
    }
    return y;
}

Cochain HomologyEngine::Impl::f_pullback(int p, const std::vector<Int>& psi_res) const {
    Cochain psi(C.dims[p], Rat(0));
    for (std::size_t i = 0; i < res_cells[p].size(); ++i) psi[res_cells[p][i]] = Rat(psi_res[i]);
    const auto& ts = steps_touching[p];
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const Step& st = steps[*it];
        if (st.k - 1 == p) {
            Rat v = 0;
            for (auto& [c, e] : st.da)
                if (c != st.b) v += Rat((long)e) * psi[c];
            psi[st.b] = -Rat((long)st.u) * v;
        } else if (st.k == p) {
            psi[st.a] = 0;
        }
    }
    return psi;
}

void HomologyEngine::Impl::compute(int p) const {
    DegreeData& D = deg[p];
    if (D.computed) return;
    IntMatrix Dp = residual_matrix(p);
    IntMatrix Dq = residual_matrix(p + 1);
    const std::size_t np = res_cells[p].size();
    auto s1 = smith_normal_form(Dp);
    std::size_t rp = s1.diagonal().size();
    IntMatrix Vinv = inverse_unimodular(s1.V);
    std::vector<std::size_t> low;
    for (std::size_t i = rp; i < np; ++i) low.push_back(i);
    D.Vinv_low = Vinv.select_rows(low);
    IntMatrix Z = s1.V.select_cols(low);
    IntMatrix M = D.Vinv_low * Dq;
    auto s2 = smith_normal_form(M);
    D.t = s2.diagonal();
    D.s = D.t.size();
    D.rp = rp;
    D.Uq = s2.U;
    D.Vq = s2.V;
    IntMatrix G = Z * inverse_unimodular(s2.U);
    IntMatrix Psi = s2.U * D.Vinv_low;
    HomologyGroup& H = D.group;
    H.degree = p;
    for (auto& t : D.t)
        if (t > 1) H.torsion.push_back(t);
    const std::size_t z = low.size();
    H.rank = (int)(z - D.s);
    for (std::size_t j = D.s; j < z; ++j) {
        Chain y;
        for (std::size_t i = 0; i < np; ++i)
            if (G(i, j) != 0) {
                if (!G(i, j).fits_slong_p()) throw std::overflow_error("basis cycle coefficient overflow");
                y[res_cells[p][i]] = G(i, j).get_si();
            }
        H.basis.push_back(g_lift(p, y));
        std::vector<Int> row(np);
        for (std::size_t i = 0; i < np; ++i) row[i] = Psi(j, i);
        H.dual.push_back(f_pullback(p, row));
    }
    D.computed = true;
}

HomologyEngine::HomologyEngine(const ChainComplex& C) : impl_(new Impl) {
    impl_->C = C;
    impl_->reduce();
}

HomologyEngine::~HomologyEngine() = default;

const ChainComplex& HomologyEngine::complex() const { return impl_->C; }

const HomologyGroup& HomologyEngine::group(int k) const {
    if (k < 0 || k > impl_->C.top()) throw std::out_of_range("homology degree out of range");
    impl_->compute(k);
    return impl_->deg[k].group;
}

std::vector<int> HomologyEngine::betti_numbers(int kmax) const {
    std::vector<int> b;
    for (int k = 0; k <= kmax; ++k) b.push_back(betti(k));
    return b;
}

std::size_t HomologyEngine::residual_size(int k) const { return impl_->res_cells[k].size(); }

bool HomologyEngine::is_cycle(int k, const Chain& z) const { return boundary(impl_->C, k, z).empty(); }

std::vector<Int> HomologyEngine::coordinates(int k, const Chain& z) const {
    if (!is_cycle(k, z)) throw std::invalid_argument("coordinates requested for a non-cycle");
    const auto& H = group(k);
    std::vector<Int> c;
    for (auto& d : H.dual) {
        Rat v = pair(z, d);
        if (v.get_den() != 1) throw std::logic_error("non-integral coordinate");
        c.push_back(v.get_num());
    }
    return c;
}

bool HomologyEngine::is_boundary(int k, const Chain& z, Chain* witness) const {
    if (!is_cycle(k, z)) return false;
    if (k + 1 > impl_->C.top()) return z.empty();
    group(k);
    const auto& D = impl_->deg[k];
    std::vector<std::pair<int, long long>> q;
    Chain zr = impl_->f_forward(k, z, &q);
    const std::size_t np = impl_->res_cells[k].size();
    std::vector<Int> zv(np);
    for (auto& [c, v] : zr) {
        int pos = impl_->res_pos[k][c];
        if (pos < 0) throw std::logic_error("reduced chain touches an eliminated cell");
        zv[pos] = Int((long)v);
    }
    std::vector<Int> cvec = D.Vinv_low * zv;
    std::vector<Int> y = D.Uq * cvec;
    std::vector<Int> qv(D.s);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < D.s) {
            if (y[i] % D.t[i] != 0) return false;
            qv[i] = y[i] / D.t[i];
        } else if (y[i] != 0) {
            return false;
        }
    }
    if (!witness) return true;
    // residual witness
    const auto& cells1 = impl_->res_cells[k + 1];
    Chain w;
    for (std::size_t j = 0; j < cells1.size(); ++j) {
        Int v = 0;
        for (std::size_t i = 0; i < D.s; ++i) v += D.Vq(j, i) * qv[i];
        if (v != 0) {
            if (!v.fits_slong_p()) throw std::overflow_error("witness overflow");
            w[cells1[j]] = v.get_si();
        }
    }
    // undo the eliminations: w <- g_j(w) + q_j a_j, newest first
    std::map<int, long long> qmap(q.begin(), q.end());
    const auto& ts = impl_->steps_touching[k + 1];
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const auto& st = impl_->steps[*it];
        if (st.k != k + 1) continue;
        long long t = 0;
        for (auto& [c, e] : st.row) {
            auto f = w.find(c);
            if (f != w.end()) t = add_checked(t, mul_checked(f->second, mul_checked(e, st.u)));
        }
        auto qi = qmap.find(*it);
        long long add = -t + (qi == qmap.end() ? 0 : qi->second);
        if (add != 0) {
            long long nv = add_checked(w.count(st.a) ? w[st.a] : 0, add);
            if (nv == 0)
                w.erase(st.a);
            else
                w[st.a] = nv;
        }
    }
    *witness = w;
    return true;
}

std::vector<Rat> HomologyEngine::cocycle_coordinates(int k, const Cochain& phi) const {
    const auto& H = group(k);
    std::vector<Rat> c;
    for (auto& b : H.basis) c.push_back(pair(b, phi));
    return c;
}

bool HomologyEngine::is_cocycle(int k, const Cochain& phi) const {
    if (k + 1 > impl_->C.top()) return true;
    Cochain d = coboundary(impl_->C, k, phi);
    return std::all_of(d.begin(), d.end(), [](const Rat& x) { return x == 0; });
}

Rat pair(const Chain& z, const Cochain& phi) {
    Rat s = 0;
    for (auto& [i, v] : z) s += Rat((long)v) * phi[i];
    return s;
}

Cochain coboundary(const ChainComplex& C, int k, const Cochain& phi) {
    if (k + 1 > C.top()) return Cochain{};
    Cochain r(C.dims[k + 1], Rat(0));
    for (std::size_t j = 0; j < C.dims[k + 1]; ++j)
        for (auto& [i, v] : C.bd[k + 1][j]) r[j] += Rat((long)v) * phi[i];
    return r;
}

Cochain cup_product(const NerveComplex& N, int p, const Cochain& a, int q, const Cochain& b) {
    const int n = p + q;
    if (n > N.degree()) return Cochain{};
    Cochain r(N.count(n), Rat(0));
    for (std::size_t id = 0; id < N.count(n); ++id) {
        const auto& s = N.simplices[n][id];
        int fi, bi;
        if (n == 0) {
            fi = bi = (int)id;
        } else {
            if (p == 0)
                fi = N.find(0, {N.first_vertex(n, (int)id)});
            else
                fi = N.find(p, std::vector<int>(s.begin(), s.begin() + p));
            if (q == 0)
                bi = N.find(0, {N.last_vertex(n, (int)id)});
            else
                bi = N.find(q, std::vector<int>(s.begin() + p, s.end()));
        }
        if (a[fi] == 0 || b[bi] == 0) continue;
        r[id] = a[fi] * b[bi];
    }
    return r;
}

Cochain unit_cochain(const NerveComplex& N) { return Cochain(N.count(0), Rat(1)); }

std::optional<RatVec> solve_in_span(const std::vector<RatVec>& v, const RatVec& w) {
    RatMatrix A(w.size(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t i = 0; i < w.size(); ++i) A(i, j) = v[j][i];
    return solve(A, w);
}

std::vector<Cochain> dual_basis_cochains(const HomologyEngine& H, int k, const std::vector<Chain>& cycles) {
    const auto& G = H.group(k);
    const std::size_t r = G.basis.size();
    if (cycles.size() != r) throw std::invalid_argument("dual basis needs exactly rank-many cycles");
    // rows: coordinates of the given cycles
    RatMatrix M(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        auto c = H.coordinates(k, cycles[i]);
        for (std::size_t j = 0; j < r; ++j) M(i, j) = Rat(c[j]);
    }
    auto Minv = inverse(M);
    if (!Minv) throw std::invalid_argument("cycles are dependent in homology");
    // phi_j = sum_l Minv(l, j) dual_l gives phi_j(cycle_i) = (M Minv)_{ij}
    std::vector<Cochain> out;
    const std::size_t n = H.complex().dims[k];
    for (std::size_t j = 0; j < r; ++j) {
        Cochain phi(n, Rat(0));
        for (std::size_t l = 0; l < r; ++l) {
            if ((*Minv)(l, j) == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (G.dual[l][i] != 0) phi[i] += (*Minv)(l, j) * G.dual[l][i];
        }
        out.push_back(phi);
    }
    return out;
}

Cochain pull_back(const std::vector<int>& simplex_map, const Cochain& phi) {
    Cochain r(simplex_map.size(), Rat(0));
    for (std::size_t i = 0; i < simplex_map.size(); ++i)
        if (simplex_map[i] >= 0) r[i] = phi[simplex_map[i]];
    return r;
}

Chain push_forward(const std::vector<int>& simplex_map, const Chain& c) {
    Chain r;
    for (auto& [i, v] : c) {
        int j = simplex_map[i];
        if (j < 0) continue;
        long long nv = add_checked(r.count(j) ? r[j] : 0, v);
        if (nv == 0)
            r.erase(j);
        else
            r[j] = nv;
    }
    return r;
}

}  // namespace toric
