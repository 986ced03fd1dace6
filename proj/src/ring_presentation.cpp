#include "toric/ring_presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

bool is_chamber(const SignVector& s) {
    return std::all_of(s.begin(), s.end(), [](std::int8_t x) { return x != 0; });
}

RatVec to_rat(const std::vector<Int>& v) {
    RatVec r;
    r.reserve(v.size());
    for (auto& x : v) r.emplace_back(x);
    return r;
}

RatVec winding(const SalvettiModel& m, const Chain& c) {
    RatVec r;
    for (long long x : torus_winding(m, c)) r.emplace_back((long)x);
    return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    RatMatrix M(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
    return M;
}

bool extends_rank(const std::vector<RatVec>& rows, const RatVec& v) {
    auto all = rows;
    all.push_back(v);
    return rank(from_rows(all, v.size())) == all.size();
}

// classes dual to cycles with the given homology coordinates
std::vector<RatVec> dual_rows(const std::vector<RatVec>& coords, std::size_t n) {
    if (coords.size() != n) throw std::logic_error("dual basis: wrong number of cycles");
    auto inv = inverse(from_rows(coords, n).transpose());
    if (!inv) throw std::logic_error("dual basis: cycles are dependent");
    std::vector<RatVec> r;
    for (std::size_t a = 0; a < n; ++a) r.push_back(inv->row(a));
    return r;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    for (;;) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> nbc_of(const SalvettiModel& m, int L, NbcOrder order, int size) {
    const auto& a0 = m.cat->a0;
    auto def = m.cat->poset.layers.at(L).defining_set;
    std::sort(def.begin(), def.end());
    std::vector<int> planes;
    for (int h : def) planes.push_back(a0.plane_of[h]);
    if (order == NbcOrder::reversed) std::reverse(planes.begin(), planes.end());
    std::vector<std::vector<int>> out;
    for (auto& s : nbc_sets(a0.arr, planes, size)) {
        std::vector<int> t;
        for (int p : s)
            for (int h : def)
                if (a0.plane_of[h] == p) t.push_back(h);
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string r;
    for (std::size_t i = 0; i < parts.size(); ++i) r += (i ? sep : "") + parts[i];
    return r;
}

}  // namespace

ChoiceData make_choices(const SalvettiModel& m, const ChoiceOverrides& o) {
    const auto& cat = *m.cat;
    const auto& P = cat.poset;
    const auto& A = cat.a0.arr;
    auto planes = m.all_planes();
    const int d = m.dim();
    const std::size_t nL = P.layers.size();
    ChoiceData c;
    c.order = o.order;
    c.B.resize(nL);
    c.F.resize(nL);
    c.N.resize(nL);
    for (std::size_t L = 0; L < nL; ++L) {
        SignVector B;
        if (auto it = o.B.find((int)L); it != o.B.end()) {
            B = it->second;
            if (B.size() != A.normals.size() || !is_chamber(B) || !adjacent_to_flat(A, planes, B, P.flats[L]))
                throw std::invalid_argument("B(L): closure(B) cap X_L does not span X_L for layer " +
                                            std::to_string(L));
        } else {
            auto adj = adjacent_chambers(m, P.flats[L]);
            if (adj.empty()) throw std::logic_error("no chamber adjacent to X_L");
            B = adj.front();
        }
        c.B[L] = B;
        for (int p : P.flats[L]) B[p] = 0;
        c.F[L] = B;
    }
    for (int M : m.one_layers()) {
        auto it = o.MC.find(M);
        c.gallery.emplace(M, it == o.MC.end() ? choice_gallery(m, M) : choice_gallery(m, M, it->second));
    }
    for (auto& [M, C] : o.MC)
        if (!c.gallery.count(M)) throw std::invalid_argument("MC override for a layer that is not of rank d-1");
    c.HC.resize(m.arr.size());
    for (std::size_t h = 0; h < m.arr.size(); ++h) {
        Flat X{cat.a0.plane_of[h]};
        if (auto it = o.HC.find((int)h); it != o.HC.end()) {
            if (it->second.size() != A.normals.size() || !is_chamber(it->second) ||
                !adjacent_to_flat(A, planes, it->second, X))
                throw std::invalid_argument("HC: chamber not adjacent to the hyperplane of H" + std::to_string(h));
            c.HC[h] = it->second;
        } else {
            c.HC[h] = adjacent_chambers(m, X).front();
        }
    }

    // greedy (or validated) independent lambda classes for each layer
    auto pick = [&](int L, const std::vector<int>* forced) {
        const int need = d - P.layers[L].rank;
        std::vector<int> cand = forced ? *forced : m.one_layers();
        std::vector<int> chosen;
        std::vector<RatVec> rows;
        for (int M : cand) {
            if ((int)chosen.size() == need) break;
            bool ok = c.gallery.count(M) && P.contains[L][M];
            RatVec w;
            if (ok) {
                w = winding(m, build_lambda(m, c.B[L], c.gallery.at(M)).chain);
                ok = extends_rank(rows, w);
            }
            if (!ok) {
                if (forced) throw std::invalid_argument("N/M override: dependent or not contained in the layer");
                continue;
            }
            rows.push_back(w);
            chosen.push_back(M);
        }
        if ((int)chosen.size() != need || (forced && forced->size() != chosen.size()))
            throw std::invalid_argument("not enough independent lambda classes for layer " + std::to_string(L));
        return chosen;
    };
    for (std::size_t L = 0; L < nL; ++L) {
        const std::vector<int>* forced = nullptr;
        if (L == (std::size_t)P.top() && !o.M.empty()) forced = &o.M;
        if (auto it = o.N.find((int)L); it != o.N.end() && L != (std::size_t)P.top()) forced = &it->second;
        c.N[L] = pick((int)L, forced);
    }
    c.M = c.N[P.top()];
    return c;
}

CommonChamberReport check_common_chamber(const ToricArrangement& arr) {
    auto P = build_layer_poset(arr);
    auto a0 = arrangement_A0(arr);
    auto faces = faces_of_linear(a0.arr);
    std::vector<int> planes(a0.arr.normals.size());
    for (std::size_t i = 0; i < planes.size(); ++i) planes[i] = (int)i;
    CommonChamberReport r;
    for (int ch : faces.chambers) {
        const auto& C = faces.faces[ch];
        std::vector<int> bad;
        for (std::size_t L = 0; L < P.layers.size(); ++L)
            if (!adjacent_to_flat(a0.arr, planes, C, P.flats[L])) bad.push_back((int)L);
        if (bad.empty())
            r.exists = true;
        else
            r.failing.emplace_back(C, bad);
    }
    return r;
}

std::vector<NbcSet> nbc_basis(const SalvettiModel& m, int L, NbcOrder order) {
    std::vector<NbcSet> r;
    for (auto& t : nbc_of(m, L, order, m.cat->poset.layers.at(L).rank)) r.push_back({L, t});
    return r;
}

std::string layer_label(const SalvettiModel& m, int L) { return layer_label(m.cat->poset, L); }

std::string layer_label(const LayerPoset& P, int L) {
    const auto& layer = P.layers.at(L);
    if (layer.rank == 0) return "T";
    if (layer.rank == 1 && layer.defining_set.size() == 1) return "H" + std::to_string(layer.defining_set[0]);
    return "L" + std::to_string(L);
}

bool InjectivityReport::injective() const {
    return std::all_of(kernel.begin(), kernel.end(), [](int k) { return k == 0; });
}

bool ModuleGenerators::spans() const {
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (span_rank[k] != betti[k]) return false;
        for (auto& x : invariants[k])
            if (abs(x) != 1) return false;
    }
    return true;
}

std::string RestrictionTable::cell_text(std::size_t r, std::size_t c) const {
    const auto& v = cells[r][c];
    const auto& labels = monomials[c].at(row_degree[r]);
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string coef = v[i] == 1 ? "" : (v[i] == -1 ? "-" : to_string(v[i]) + "*");
        if (labels[i] == "1") coef = to_string(v[i]);
        else
            coef += labels[i];
        terms.push_back(coef);
    }
    return join(terms, " + ");
}

std::string RestrictionTable::csv() const {
    std::ostringstream os;
    os << "class";
    for (auto& c : columns) os << ",\"S_" << c << '"';
    os << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << '"' << rows[r] << '"';
        for (std::size_t c = 0; c < columns.size(); ++c) os << ",\"" << cell_text(r, c) << '"';
        os << '\n';
    }
    return os.str();
}

RingPresentation::RingPresentation(std::shared_ptr<const SalvettiModel> m, ChoiceData c)
    : m_(std::move(m)), c_(std::move(c)) {
    init();
}

RingPresentation::RingPresentation(std::shared_ptr<const SalvettiModel> m, const ChoiceOverrides& o)
    : m_(std::move(m)) {
    c_ = make_choices(*m_, o);
    init();
}

void RingPresentation::init() {
    for (int M : c_.M) bhat_.push_back(lambda_cycle(M, c_.B[m_->cat->poset.top()]));
    for (std::size_t h = 0; h < m_->arr.size(); ++h) bhat_.push_back(omega_cycle((int)h));
    std::vector<RatVec> coords;
    for (auto& z : bhat_) coords.push_back(homology_coords(1, z));
    b_ = dual_rows(coords, betti(1));
}

int RingPresentation::betti(int k) const {
    if (k < 0 || k > m_->dim()) return 0;
    return m_->homology().betti(k);
}

RatVec RingPresentation::homology_coords(int k, const Chain& z) const {
    return to_rat(m_->homology().coordinates(k, z));
}

Rat RingPresentation::evaluate(int k, const RatVec& cls, const Chain& z) const {
    return dot(cls, homology_coords(k, z));
}

Cochain RingPresentation::cocycle(int k, const RatVec& cls) const {
    const auto& g = m_->homology().group(k);
    Cochain phi(m_->nerve.count(k), Rat(0));
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (cls[i] == 0) continue;
        for (std::size_t s = 0; s < phi.size(); ++s)
            if (g.dual[i][s] != 0) phi[s] += cls[i] * g.dual[i][s];
    }
    return phi;
}

RatVec RingPresentation::class_of(int k, const Cochain& phi) const {
    return m_->homology().cocycle_coordinates(k, phi);
}

RatVec RingPresentation::cup(int p, const RatVec& a, int q, const RatVec& b) const {
    if (p + q > m_->dim()) return {};
    return class_of(p + q, cup_product(m_->nerve, p, cocycle(p, a), q, cocycle(q, b)));
}

RatVec RingPresentation::unit() const { return class_of(0, unit_cochain(m_->nerve)); }

const Subcomplex& RingPresentation::sub(int Y, const SignVector& F0) const {
    auto key = std::make_pair(Y, F0);
    auto it = subs_.find(key);
    if (it != subs_.end()) return *it->second;
    auto s = std::make_unique<Subcomplex>();
    s->layer = Y;
    s->F0 = F0;
    auto mask = subcomplex_S(m_->sal, Y, F0);
    s->nerve = sub_nerve(m_->nerve, mask, &s->to_full);
    if (s->to_full.size() > 1)
        for (std::size_t i = 0; i < s->to_full[1].size(); ++i) s->edge_from_full[s->to_full[1][i]] = (int)i;
    s->H = std::make_unique<HomologyEngine>(s->nerve.complex);
    return *subs_.emplace(key, std::move(s)).first->second;
}

const std::vector<RatVec>& RingPresentation::pushes(const Subcomplex& S, int k) const {
    auto it = S.push.find(k);
    if (it != S.push.end()) return it->second;
    std::vector<RatVec> rows;
    if (k <= m_->dim()) {
        auto inc = inclusion_map(S.to_full, k);
        for (auto& z : S.H->group(k).basis) rows.push_back(homology_coords(k, push_forward(inc, z)));
    }
    return S.push.emplace(k, std::move(rows)).first->second;
}

RatVec RingPresentation::restrict_to(int k, const RatVec& cls, const Subcomplex& S) const {
    RatVec r;
    for (auto& row : pushes(S, k)) r.push_back(dot(cls, row));
    return r;
}

RatVec RingPresentation::sub_cup(const Subcomplex& S, int p, const RatVec& a, int q, const RatVec& b) const {
    if (p + q > m_->dim()) return {};
    auto cocyc = [&](int k, const RatVec& cls) {
        const auto& g = S.H->group(k);
        Cochain phi(S.nerve.count(k), Rat(0));
        for (std::size_t i = 0; i < cls.size(); ++i)
            if (cls[i] != 0)
                for (std::size_t s = 0; s < phi.size(); ++s)
                    if (g.dual[i][s] != 0) phi[s] += cls[i] * g.dual[i][s];
        return phi;
    };
    return S.H->cocycle_coordinates(p + q, cup_product(S.nerve, p, cocyc(p, a), q, cocyc(q, b)));
}

Chain RingPresentation::lambda_cycle(int M, const SignVector& B) const {
    return build_lambda(*m_, B, c_.gallery.at(M)).chain;
}

Chain RingPresentation::omega_cycle(int h, const Subcomplex* inside) const {
    if (!inside) return build_omega_torus(*m_, h, c_.HC.at(h)).chain;
    const auto& cat = *m_->cat;
    const int Hl = m_->layer_of_torus(h);
    const int L = inside->layer;
    for (std::size_t a = 0; a < cat.morphisms.size(); ++a) {
        const auto& fm = cat.morphisms[a];
        if (!cat.poset.contains[L][cat.faces[fm.source].support] || cat.faces[fm.target].support != Hl) continue;
        auto sq = build_omega(*m_, (int)a, c_.HC.at(h));
        bool ok = std::all_of(sq.chain.begin(), sq.chain.end(),
                              [&](const auto& e) { return inside->edge_from_full.count(e.first) > 0; });
        if (ok) return sq.chain;
    }
    throw std::logic_error("no Omega representative of H" + std::to_string(h) + " inside S_L");
}

const LayerBasis& RingPresentation::layer_basis(int L) const {
    auto it = layer_bases_.find(L);
    if (it != layer_bases_.end()) return it->second;
    const auto& layer = m_->cat->poset.layers.at(L);
    LayerBasis b;
    b.layer = L;
    b.N = c_.N.at(L);
    b.tori = layer.defining_set;
    std::sort(b.tori.begin(), b.tori.end());
    const auto& S = S_L(L);
    for (int N : b.N) {
        b.cycles.push_back(lambda_cycle(N, c_.B[L]));
        b.labels.push_back("lambda^{" + layer_label(*m_, N) + "}_{" + chamber_label(c_.B[L]) + "}");
    }
    for (int h : b.tori) {
        b.cycles.push_back(omega_cycle(h, &S));
        b.labels.push_back("omega_{H" + std::to_string(h) + "}");
    }
    std::vector<RatVec> coords;
    for (auto& z : b.cycles) {
        Chain local;
        for (auto& [id, v] : z) {
            auto e = S.edge_from_full.find(id);
            if (e == S.edge_from_full.end()) throw std::logic_error("basis cycle leaves S_L");
            local[e->second] = v;
        }
        coords.push_back(to_rat(S.H->coordinates(1, local)));
    }
    b.duals = dual_rows(coords, S.H->betti(1));
    return layer_bases_.emplace(L, std::move(b)).first->second;
}

RatVec RingPresentation::torus_coefficients(int N) const {
    std::vector<RatVec> ws;
    for (std::size_t i = 0; i < c_.M.size(); ++i) ws.push_back(winding(*m_, bhat_[i]));
    auto a = solve_in_span(ws, winding(*m_, lambda_cycle(N, c_.B[m_->cat->poset.top()])));
    if (!a) throw std::logic_error("torus classes do not span H_1(T)");
    return *a;
}

RatMatrix RingPresentation::phi_star(int L) const {
    const auto& lb = layer_basis(L);
    RatMatrix R(lb.cycles.size(), b_.size());
    for (std::size_t e = 0; e < lb.cycles.size(); ++e) {
        auto y = homology_coords(1, lb.cycles[e]);
        for (std::size_t c = 0; c < b_.size(); ++c) R(e, c) = dot(b_[c], y);
    }
    if (!(R == phi_star_formula(L))) throw std::logic_error("phi_L^*: pullback and closed formula disagree");
    return R;
}

RatMatrix RingPresentation::phi_star_formula(int L, bool literal) const {
    const auto& cat = *m_->cat;
    const auto& lb = layer_basis(L);
    const std::size_t nl = lb.N.size(), r = c_.M.size();
    RatMatrix R(lb.cycles.size(), b_.size());
    const auto& BL = c_.B[L];
    const auto& FT = c_.B[cat.poset.top()];
    for (std::size_t h = 0; h < nl; ++h) {
        auto a = torus_coefficients(lb.N[h]);
        for (std::size_t i = 0; i < r; ++i) R(h, i) = a[i];
        const int N = lb.N[h];
        const auto& g = c_.gallery.at(N);
        const auto& defN = cat.poset.layers[N].defining_set;
        for (std::size_t F = 0; F < cat.faces.size(); ++F) {
            if (cat.faces[F].dim != 0 || !cat.poset.contains[N][cat.faces[F].support]) continue;
            for (int H : separating_set_F(cat, (int)F, BL, FT)) {
                if (std::find(defN.begin(), defN.end(), H) != defN.end()) continue;
                int p = cat.a0.plane_of[H];
                int sigma = literal || c_.HC[H][p] == g.chamber[p] ? 1 : -1;
                R(h, r + H) += epsilon(*m_, H, BL, c_.HC[H]) * sigma;
            }
        }
    }
    for (std::size_t j = 0; j < lb.tori.size(); ++j) R(nl + j, r + lb.tori[j]) = 1;
    return R;
}

RatVec RingPresentation::omega_product(const std::vector<int>& S) const {
    RatVec cur = unit();
    int deg = 0;
    for (int h : S) {
        cur = cup(deg, cur, 1, omega(h));
        ++deg;
    }
    return cur;
}

std::pair<Int, bool> RingPresentation::stabilizer_condition(const NbcSet& S, int Y) const {
    const auto& P = m_->cat->poset;
    const auto& arr = m_->arr;
    const int d = arr.dim;
    const auto& Yl = P.layers.at(Y);
    const auto& Ll = P.layers.at(S.layer);
    std::vector<int> SY, rest;
    for (int h : S.tori) {
        bool in = std::find(Yl.defining_set.begin(), Yl.defining_set.end(), h) != Yl.defining_set.end();
        (in ? SY : rest).push_back(h);
    }
    IntMatrix AY(SY.size(), d);
    for (std::size_t i = 0; i < SY.size(); ++i)
        for (int j = 0; j < d; ++j) AY(i, j) = arr.tori[SY[i]].character[j];
    bool inside = true;
    if (!SY.empty()) inside = make_layer(AY, Yl.base_point, arr) == make_layer(AY, Ll.base_point, arr);
    if (rest.empty()) return {Int(1), inside};
    IntMatrix K = SY.empty() ? IntMatrix::identity(d) : integer_kernel(AY);
    IntMatrix Bm(rest.size(), K.cols);
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = 0; j < K.cols; ++j)
            for (int c = 0; c < d; ++c) Bm(i, j) += arr.tori[rest[i]].character[c] * K(c, j);
    auto diag = smith_normal_form(Bm).diagonal();
    if (diag.size() != rest.size()) throw std::logic_error("stabilizer: characters of S are dependent");
    Int prod = 1;
    for (auto& x : diag) prod *= abs(x);
    return {prod, inside};
}

OmegaSL RingPresentation::build_omega_SL(const NbcSet& S) const {
    const auto& P = m_->cat->poset;
    const int r = P.layers.at(S.layer).rank;
    if ((int)S.tori.size() != r) throw std::invalid_argument("omega_SL: |S| != rk L");
    for (int h : S.tori) {
        const auto& def = P.layers[S.layer].defining_set;
        if (std::find(def.begin(), def.end(), h) == def.end())
            throw std::invalid_argument("omega_SL: S contains a hypertorus not through L");
    }
    const auto wS = omega_product(S.tori);
    const std::size_t n = betti(r);
    std::vector<RatVec> rows;
    RatVec rhs;
    for (std::size_t Y = 0; Y < P.layers.size(); ++Y) {
        const auto& sc = sub((int)Y, c_.F[Y]);
        auto [st, inside] = stabilizer_condition(S, (int)Y);
        for (auto& row : pushes(sc, r)) {
            rows.push_back(row);
            rhs.push_back(inside ? dot(wS, row) / Rat(st) : Rat(0));
        }
    }
    auto A = from_rows(rows, n);
    auto x = solve(A, rhs);
    std::ostringstream tag;
    tag << "S={";
    for (std::size_t i = 0; i < S.tori.size(); ++i) tag << (i ? "," : "") << S.tori[i];
    tag << "} L=" << layer_label(*m_, S.layer);
    if (!x) throw std::runtime_error("omega_SL: constraint system infeasible for " + tag.str());
    if (rank(A) != n) throw std::logic_error("omega_SL: restrictions do not determine the class for " + tag.str());
    OmegaSL o;
    o.S = S;
    o.cls = *x;
    o.integral = std::all_of(o.cls.begin(), o.cls.end(), [](const Rat& q) { return q.get_den() == 1; });
    o.validated = check_omega_SL(S, o.cls).empty();
    return o;
}

std::vector<std::pair<int, SignVector>> RingPresentation::check_omega_SL(const NbcSet& S, const RatVec& cls) const {
    const auto& P = m_->cat->poset;
    const int r = P.layers.at(S.layer).rank;
    const auto wS = omega_product(S.tori);
    auto planes = m_->all_planes();
    std::vector<std::pair<int, SignVector>> bad;
    for (std::size_t Y = 0; Y < P.layers.size(); ++Y) {
        auto [st, inside] = stabilizer_condition(S, (int)Y);
        for (auto& F0 : m_->a0faces.faces) {
            if (zero_set(F0, planes) != P.flats[Y]) continue;
            const auto& sc = sub((int)Y, F0);
            for (auto& row : pushes(sc, r)) {
                Rat want = inside ? dot(wS, row) / Rat(st) : Rat(0);
                if (dot(cls, row) != want) {
                    bad.emplace_back((int)Y, F0);
                    break;
                }
            }
        }
    }
    return bad;
}

InjectivityReport RingPresentation::verify_injectivity() const {
    const auto& P = m_->cat->poset;
    InjectivityReport rep;
    for (int k = 0; k <= m_->dim(); ++k) {
        const int b = betti(k);
        std::vector<RatVec> rows;
        for (std::size_t L = 0; L < P.layers.size(); ++L)
            for (auto& row : pushes(S_L((int)L), k)) rows.push_back(row);
        int rk = rows.empty() ? 0 : (int)rank(from_rows(rows, b));
        rep.betti.push_back(b);
        rep.rank.push_back(rk);
        rep.kernel.push_back(b - rk);
    }
    return rep;
}

ModuleGenerators RingPresentation::module_generators() const {
    const auto& P = m_->cat->poset;
    const int d = m_->dim();
    ModuleGenerators g;
    const auto& H1 = m_->homology().group(1);
    for (int j = 0; j < d; ++j) {
        RatVec t;
        for (auto& z : H1.basis) t.push_back(winding(*m_, z)[j]);
        g.forms.push_back(t);
    }
    for (std::size_t L = 0; L < P.layers.size(); ++L)
        for (auto& S : nbc((int)L)) g.omegas.push_back(build_omega_SL(S));
    for (int k = 0; k <= d; ++k) {
        const int b = betti(k);
        std::vector<RatVec> fam;
        for (auto& om : g.omegas) {
            const int r = (int)om.S.tori.size();
            for (auto& J : subsets(d, k - r)) {
                RatVec cur = unit();
                int deg = 0;
                for (int j : J) cur = cup(deg++, cur, 1, g.forms[j]);
                fam.push_back(cup(deg, cur, r, om.cls));
            }
        }
        g.betti.push_back(b);
        bool integral = true;
        IntMatrix M(fam.size(), b);
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (int j = 0; j < b; ++j) {
                if (fam[i][j].get_den() != 1) integral = false;
                M(i, j) = fam[i][j].get_num();
            }
        g.span_rank.push_back(fam.empty() ? 0 : (int)rank(M));
        auto inv = fam.empty() ? std::vector<Int>{} : smith_normal_form(M).diagonal();
        if (!integral) inv.push_back(0);  // family not integral: never a lattice basis
        g.invariants.push_back(inv);
    }
    return g;
}

std::vector<RatVec> RingPresentation::layer_monomials(int L, int k, std::vector<std::string>* labels) const {
    auto key = std::make_pair(L, k);
    auto it = monomials_.find(key);
    if (it == monomials_.end()) {
        const auto& lb = layer_basis(L);
        const auto& S = S_L(L);
        const int nl = (int)lb.N.size();
        const RatVec one = S.H->cocycle_coordinates(0, unit_cochain(S.nerve));
        std::vector<RatVec> mons;
        std::vector<std::string> names;
        for (int i = 0; i <= std::min(k, nl); ++i)
            for (auto& I : subsets(nl, i))
                for (auto& Tset : nbc_of(*m_, L, c_.order, k - i)) {
                    RatVec cur = one;
                    int deg = 0;
                    std::vector<std::string> parts;
                    for (int h : I) {
                        cur = sub_cup(S, deg++, cur, 1, lb.duals[h]);
                        parts.push_back(lb.labels[h]);
                    }
                    for (int t : Tset) {
                        int pos = (int)(std::find(lb.tori.begin(), lb.tori.end(), t) - lb.tori.begin());
                        cur = sub_cup(S, deg++, cur, 1, lb.duals[nl + pos]);
                        parts.push_back(lb.labels[nl + pos]);
                    }
                    mons.push_back(cur);
                    names.push_back(parts.empty() ? "1" : join(parts, "*"));
                }
        it = monomials_.emplace(key, std::make_pair(mons, names)).first;
    }
    if (labels) *labels = it->second.second;
    return it->second.first;
}

RatVec RingPresentation::in_layer_monomials(int L, int k, const RatVec& restricted) const {
    auto mons = layer_monomials(L, k);
    if (mons.empty()) {
        if (std::any_of(restricted.begin(), restricted.end(), [](const Rat& q) { return q != 0; }))
            throw std::logic_error("restricted class outside the monomial span");
        return {};
    }
    auto x = solve_in_span(mons, restricted);
    if (!x) throw std::logic_error("restricted class outside the monomial span");
    return *x;
}

RestrictionTable RingPresentation::restriction_table() const {
    const auto& P = m_->cat->poset;
    RestrictionTable t;
    std::vector<int> cols;
    for (auto& rk : P.by_rank) {
        auto v = rk;
        if (!v.empty() && P.layers[v[0]].rank == 1)
            std::stable_sort(v.begin(), v.end(),
                             [&](int a, int b) { return P.layers[a].defining_set < P.layers[b].defining_set; });
        cols.insert(cols.end(), v.begin(), v.end());
    }
    std::vector<RatVec> classes;
    for (std::size_t i = 0; i < c_.M.size(); ++i) {
        t.rows.push_back("lambda^{" + layer_label(*m_, c_.M[i]) + "}_{" + chamber_label(c_.B[P.top()]) + "}");
        t.row_degree.push_back(1);
        classes.push_back(b_[i]);
    }
    for (int L : cols) {
        if (P.layers[L].rank == 0) continue;
        for (auto& S : nbc(L)) {
            std::string name;
            if (S.tori.size() == 1 && layer_label(*m_, L)[0] == 'H') {
                name = "omega_{H" + std::to_string(S.tori[0]) + "}";
            } else {
                std::vector<std::string> ix;
                for (int h : S.tori) ix.push_back(std::to_string(h));
                name = "omega_{{" + join(ix, ",") + "}," + layer_label(*m_, L) + "}";
            }
            t.rows.push_back(name);
            t.row_degree.push_back((int)S.tori.size());
            classes.push_back(build_omega_SL(S).cls);
        }
    }
    t.monomials.resize(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        t.columns.push_back(layer_label(*m_, cols[c]));
        t.column_layer.push_back(cols[c]);
        for (int k = 0; k <= m_->dim(); ++k) {
            std::vector<std::string> labels;
            layer_monomials(cols[c], k, &labels);
            t.monomials[c][k] = labels;
        }
    }
    for (std::size_t r = 0; r < classes.size(); ++r) {
        std::vector<RatVec> row;
        for (int L : cols) row.push_back(in_layer_monomials(L, t.row_degree[r], restrict_to(t.row_degree[r], classes[r], S_L(L))));
        t.cells.push_back(row);
    }
    return t;
}

std::string RingPresentation::chamber_label(const SignVector& C) const { return sign_string(C, m_->all_planes()); }

RatVec pull_class(const CellularMap& f, const RingPresentation& src, const RingPresentation& tgt, int k,
                  const RatVec& cls) {
    if (f.source != src.model_ptr() || f.target != tgt.model_ptr())
        throw std::invalid_argument("pull_class: presentations do not match the map");
    return src.class_of(k, f.pull(k, tgt.cocycle(k, cls)));
}

}  // namespace toric
