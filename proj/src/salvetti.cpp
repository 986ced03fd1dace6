#include "toric/salvetti.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

int SalvettiPoset::find(const SignVector& G, const SignVector& C) const {
    int g = faces.find(G), c = faces.find(C);
    if (g < 0 || c < 0) return -1;
    auto it = index.find({g, c});
    return it == index.end() ? -1 : it->second;
}

bool SalvettiPoset::geq(int x, int y) const {
    const auto& G = face(x);
    const auto& Gp = face(y);
    if (!face_leq(G, Gp, faces.planes)) return false;
    return compose(Gp, chamber(x)) == chamber(y);
}

SalvettiPoset salvetti_poset(const LinearArrangement& A, const std::vector<int>& planes) {
    SalvettiPoset S;
    S.faces = faces_of_linear(A, planes);
    for (int g = 0; g < (int)S.faces.faces.size(); ++g)
        for (int c : S.faces.chambers)
            if (S.faces.leq(g, c)) S.elems.emplace_back(g, c);
    std::sort(S.elems.begin(), S.elems.end());
    for (std::size_t i = 0; i < S.elems.size(); ++i) S.index[S.elems[i]] = (int)i;
    return S;
}

SalvettiPoset salvetti_poset(const LinearArrangement& A) {
    std::vector<int> all(A.normals.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    return salvetti_poset(A, all);
}

std::vector<int> stratum(const SalvettiPoset& S, const SignVector& C) {
    std::vector<int> r;
    for (std::size_t x = 0; x < S.size(); ++x)
        if (S.chamber((int)x) == compose(S.face((int)x), C)) r.push_back((int)x);
    return r;
}

std::vector<int> strata_subposet(const SalvettiPoset& S, const SignVector& G) {
    std::vector<char> in(S.size(), 0);
    int g = S.faces.find(G);
    if (g < 0) throw std::invalid_argument("not a face of the arrangement");
    for (int c : S.faces.chambers)
        if (S.faces.leq(g, c))
            for (int x : stratum(S, S.faces.faces[c])) in[x] = 1;
    std::vector<int> r;
    for (std::size_t x = 0; x < S.size(); ++x)
        if (in[x]) r.push_back((int)x);
    return r;
}

Category poset_category(const SalvettiPoset& S) {
    auto idx = std::make_shared<std::map<std::pair<int, int>, int>>();
    Category c;
    c.num_objects = (int)S.size();
    c.out.assign(S.size(), {});
    for (int x = 0; x < (int)S.size(); ++x)
        for (int y = 0; y < (int)S.size(); ++y)
            if (x != y && S.leq(x, y)) {
                int id = (int)c.src.size();
                c.src.push_back(x);
                c.tgt.push_back(y);
                c.out[x].push_back(id);
                (*idx)[{x, y}] = id;
            }
    auto src = c.src;
    auto tgt = c.tgt;
    c.compose = [idx, src, tgt](int a, int b) {
        auto it = idx->find({src[a], tgt[b]});
        return it == idx->end() ? -1 : it->second;
    };
    return c;
}

// ---------------------------------------------------------------------------------------------

int ToricSalvetti::find_object(int F, const SignVector& G, const SignVector& C) const {
    int e = fiber(F).find(G, C);
    return e < 0 ? -1 : object(F, e);
}

SignVector ToricSalvetti::i_m(int fm, const SignVector& K) const {
    const auto& m = cat->morphisms[fm];
    return restrict_signs(toric::compose(m.attach, K), cat->faces[m.source].planes);
}

int ToricSalvetti::diagram_map(int fm, int elem) const {
    const auto& m = cat->morphisms[fm];
    const auto& SG = fiber(m.target);
    int r = fiber(m.source).find(i_m(fm, SG.face(elem)), i_m(fm, SG.chamber(elem)));
    if (r < 0) throw std::logic_error("diagram map leaves the fiber");
    return r;
}

int ToricSalvetti::find_morphism(int source, int target, int fm) const {
    auto it = index.find({source, target, fm});
    return it == index.end() ? -1 : it->second;
}

int ToricSalvetti::compose(int a, int b) const {
    const auto& x = morphisms[a];
    const auto& y = morphisms[b];
    if (x.target != y.source) return -1;
    int fm = cat->compose(x.fm, y.fm);
    if (fm < 0) return -1;
    return find_morphism(x.source, y.target, fm);
}

Category ToricSalvetti::category() const {
    Category c;
    c.num_objects = (int)objects.size();
    for (auto& m : morphisms) {
        c.src.push_back(m.source);
        c.tgt.push_back(m.target);
    }
    c.out = out;
    c.compose = [this](int a, int b) { return compose(a, b); };
    return c;
}

ToricSalvetti toric_salvetti(std::shared_ptr<const FaceCategory> cat) {
    ToricSalvetti S;
    S.cat = cat;
    std::map<std::vector<int>, int> by_planes;
    for (auto& f : cat->faces) {
        auto it = by_planes.find(f.planes);
        if (it == by_planes.end()) {
            it = by_planes.emplace(f.planes, (int)S.fibers.size()).first;
            S.fibers.push_back(salvetti_poset(cat->a0.arr, f.planes));
        }
        S.fiber_of.push_back(it->second);
    }
    for (std::size_t F = 0; F < cat->faces.size(); ++F) {
        S.base.push_back((int)S.objects.size());
        for (std::size_t e = 0; e < S.fiber((int)F).size(); ++e) S.objects.push_back({(int)F, (int)e});
    }
    for (std::size_t fm = 0; fm < cat->morphisms.size(); ++fm) {
        const auto& m = cat->morphisms[fm];
        const auto& SF = S.fiber(m.source);
        const auto& SG = S.fiber(m.target);
        for (int x = 0; x < (int)SG.size(); ++x) {
            int z = m.identity ? x : S.diagram_map((int)fm, x);
            for (int y = 0; y < (int)SF.size(); ++y) {
                if (m.identity && y == x) continue;
                if (!SF.leq(y, z)) continue;
                S.morphisms.push_back({S.object(m.source, y), S.object(m.target, x), (int)fm});
            }
        }
    }
    std::sort(S.morphisms.begin(), S.morphisms.end(), [](const SalvettiMorphism& a, const SalvettiMorphism& b) {
        return std::tie(a.source, a.target, a.fm) < std::tie(b.source, b.target, b.fm);
    });
    S.out.assign(S.objects.size(), {});
    for (std::size_t i = 0; i < S.morphisms.size(); ++i) {
        const auto& m = S.morphisms[i];
        S.index[{m.source, m.target, m.fm}] = (int)i;
        S.out[m.source].push_back((int)i);
    }
    return S;
}

ToricSalvetti toric_salvetti(const ToricArrangement& arr) {
    return toric_salvetti(std::make_shared<const FaceCategory>(face_category(arr)));
}

std::vector<char> subcomplex_S(const ToricSalvetti& S, int Y, const SignVector& F0) {
    const auto& cat = *S.cat;
    std::vector<int> all(cat.a0.arr.normals.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    if (zero_set(F0, all) != cat.poset.flats[Y]) throw std::invalid_argument("linear hull of F0 is not X_Y");
    if (!realize(cat.a0.arr, all, F0)) throw std::invalid_argument("F0 is not a face of A_0");
    std::vector<char> mask(S.objects.size(), 0);
    for (std::size_t F = 0; F < cat.faces.size(); ++F) {
        if (!cat.poset.contains[Y][cat.faces[F].support]) continue;
        const auto& P = S.fiber((int)F);
        SignVector f0 = restrict_signs(F0, cat.faces[F].planes);
        int g0 = P.faces.find(f0);
        for (int b : P.faces.chambers) {
            if (!P.faces.leq(g0, b)) continue;
            const auto& B = P.faces.faces[b];
            for (int g = 0; g < (int)P.faces.faces.size(); ++g) {
                const auto& G = P.faces.faces[g];
                int e = P.find(G, compose(G, B));
                mask[S.object((int)F, e)] = 1;
            }
        }
    }
    return mask;
}

// ---------------------------------------------------------------------------------------------

int NerveComplex::find(int k, const std::vector<int>& s) const {
    if (k < 0 || k >= (int)index.size()) return -1;
    auto it = index[k].find(s);
    return it == index[k].end() ? -1 : it->second;
}

int NerveComplex::first_vertex(int k, int id) const {
    return k == 0 ? simplices[0][id][0] : mor_src[simplices[k][id][0]];
}

int NerveComplex::last_vertex(int k, int id) const {
    return k == 0 ? simplices[0][id][0] : mor_tgt[simplices[k][id].back()];
}

std::vector<int> NerveComplex::vertices(int k, int id) const {
    if (k == 0) return {simplices[0][id][0]};
    std::vector<int> v{mor_src[simplices[k][id][0]]};
    for (int m : simplices[k][id]) v.push_back(mor_tgt[m]);
    return v;
}

namespace {

void add_entry(std::map<int, long long>& col, int i, long long v) {
    long long& x = col[i];
    x += v;
    if (x == 0) col.erase(i);
}

}  // namespace

NerveComplex nerve(const Category& c, int max_degree) {
    NerveComplex N;
    N.num_objects = c.num_objects;
    N.mor_src = c.src;
    N.mor_tgt = c.tgt;
    N.simplices.push_back({});
    N.index.emplace_back();
    for (int o = 0; o < c.num_objects; ++o) {
        N.index[0][{o}] = o;
        N.simplices[0].push_back({o});
    }
    if (max_degree >= 1 && !c.src.empty()) {
        N.simplices.push_back({});
        N.index.emplace_back();
        for (int m = 0; m < (int)c.src.size(); ++m) {
            N.index[1][{m}] = m;
            N.simplices[1].push_back({m});
        }
    }
    for (int k = 2; k <= max_degree && (int)N.simplices.size() == k && !N.simplices[k - 1].empty(); ++k) {
        std::vector<std::vector<int>> next;
        for (auto& s : N.simplices[k - 1])
            for (int m : c.out[c.tgt[s.back()]]) {
                auto t = s;
                t.push_back(m);
                next.push_back(std::move(t));
            }
        if (next.empty()) break;
        N.simplices.push_back(std::move(next));
        N.index.emplace_back();
        auto& idx = N.index.back();
        idx.reserve(N.simplices.back().size());
        for (std::size_t i = 0; i < N.simplices.back().size(); ++i) idx[N.simplices.back()[i]] = (int)i;
    }
    const int top = N.degree();
    N.complex.dims.resize(top + 1);
    N.complex.bd.resize(top + 1);
    for (int k = 0; k <= top; ++k) N.complex.dims[k] = N.simplices[k].size();
    for (int k = 1; k <= top; ++k) {
        auto& cols = N.complex.bd[k];
        cols.resize(N.simplices[k].size());
        for (std::size_t id = 0; id < N.simplices[k].size(); ++id) {
            const auto& s = N.simplices[k][id];
            std::map<int, long long> col;
            if (k == 1) {
                add_entry(col, c.tgt[s[0]], 1);
                add_entry(col, c.src[s[0]], -1);
            } else {
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> f;
                    if (i == 0) {
                        f.assign(s.begin() + 1, s.end());
                    } else if (i == k) {
                        f.assign(s.begin(), s.end() - 1);
                    } else {
                        f.assign(s.begin(), s.begin() + (i - 1));
                        int cm = c.compose(s[i - 1], s[i]);
                        if (cm < 0) throw std::logic_error("missing composite in nerve");
                        f.push_back(cm);
                        f.insert(f.end(), s.begin() + i + 1, s.end());
                    }
                    int fid = N.find(k - 1, f);
                    if (fid < 0) throw std::logic_error("face of a nerve simplex not found");
                    add_entry(col, fid, i % 2 == 0 ? 1 : -1);
                }
            }
            cols[id].assign(col.begin(), col.end());
        }
    }
    return N;
}

NerveComplex sub_nerve(const NerveComplex& full, const std::vector<char>& mask, std::vector<std::vector<int>>* to_full) {
    NerveComplex N;
    N.num_objects = full.num_objects;
    N.mor_src = full.mor_src;
    N.mor_tgt = full.mor_tgt;
    const int top = full.degree();
    std::vector<std::vector<int>> from_full(top + 1), tf(top + 1);
    for (int k = 0; k <= top; ++k) {
        from_full[k].assign(full.count(k), -1);
        std::vector<std::vector<int>> list;
        for (std::size_t id = 0; id < full.count(k); ++id) {
            bool ok = true;
            for (int v : full.vertices(k, (int)id))
                if (!mask[v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            from_full[k][id] = (int)list.size();
            tf[k].push_back((int)id);
            list.push_back(full.simplices[k][id]);
        }
        if (list.empty() && k > 0) break;
        N.simplices.push_back(std::move(list));
        N.index.emplace_back();
        for (std::size_t i = 0; i < N.simplices[k].size(); ++i) N.index[k][N.simplices[k][i]] = (int)i;
    }
    const int ntop = N.degree();
    tf.resize(ntop + 1);
    N.complex.dims.resize(ntop + 1);
    N.complex.bd.resize(ntop + 1);
    for (int k = 0; k <= ntop; ++k) N.complex.dims[k] = N.simplices[k].size();
    for (int k = 1; k <= ntop; ++k) {
        N.complex.bd[k].resize(N.simplices[k].size());
        for (std::size_t i = 0; i < N.simplices[k].size(); ++i) {
            SparseVec col;
            for (auto& [r, v] : full.complex.bd[k][tf[k][i]]) col.emplace_back(from_full[k - 1][r], v);
            std::sort(col.begin(), col.end());
            N.complex.bd[k][i] = col;
        }
    }
    if (to_full) *to_full = tf;
    return N;
}

std::vector<int> nerve_map(const NerveComplex& src, const NerveComplex& tgt, const Functor& f, int k) {
    std::vector<int> out(src.count(k), -1);
    for (std::size_t id = 0; id < src.count(k); ++id) {
        std::vector<int> img;
        if (k == 0) {
            img.push_back(f.on_objects[src.simplices[0][id][0]]);
        } else {
            bool degenerate = false;
            for (int m : src.simplices[k][id]) {
                int fm = f.on_morphisms[m];
                if (fm < 0) {
                    degenerate = true;
                    break;
                }
                img.push_back(fm);
            }
            if (degenerate) continue;
            for (std::size_t i = 0; i + 1 < img.size(); ++i)
                if (tgt.mor_tgt[img[i]] != tgt.mor_src[img[i + 1]])
                    throw std::invalid_argument("map is not functorial: image chain not composable");
        }
        int t = tgt.find(k, img);
        if (t < 0) throw std::invalid_argument("image simplex missing from the target nerve");
        out[id] = t;
    }
    return out;
}

std::vector<int> inclusion_map(const std::vector<std::vector<int>>& to_full, int k) {
    return k < (int)to_full.size() ? to_full[k] : std::vector<int>{};
}

}  // namespace toric
