#include "toric/generators.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toric {

namespace {

long long to_ll(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("label entry out of range");
    return x.get_si();
}

void add(Chain& c, int id, long long v) {
    if (id < 0) throw std::logic_error("cycle uses a missing morphism");
    long long nv = c[id] + v;
    if (nv == 0)
        c.erase(id);
    else
        c[id] = nv;
}

// fiber arrow (F,x) -> (F,y), x < y
int fiber_arrow(const ToricSalvetti& S, int F, int x, int y) {
    return S.find_morphism(S.object(F, x), S.object(F, y), S.cat->identity_of[F]);
}

bool is_chamber(const SignVector& s) {
    return std::all_of(s.begin(), s.end(), [](std::int8_t x) { return x != 0; });
}

bool in_layer(const FaceCategory& cat, int M, int F) { return cat.poset.contains[M][cat.faces[F].support]; }

// +1 if the attaching face of P -> G lies on the C side off the flat, -1 on the -C side, 0 otherwise
int ray_side(const FaceMorphism& m, const std::vector<int>& planes, const Flat& X, const SignVector& C) {
    bool pos = true, neg = true;
    for (int p : planes) {
        bool in_flat = std::binary_search(X.begin(), X.end(), p);
        if (in_flat) {
            if (m.attach[p] != 0) return 0;
            continue;
        }
        if (m.attach[p] != C[p]) pos = false;
        if (m.attach[p] != -C[p]) neg = false;
    }
    return pos ? 1 : (neg ? -1 : 0);
}

}  // namespace

const HomologyEngine& SalvettiModel::homology() const {
    if (!engine_) engine_ = std::make_shared<HomologyEngine>(nerve.complex);
    return *engine_;
}

std::vector<int> SalvettiModel::one_layers() const {
    if (arr.dim < 1) return {};
    return cat->poset.by_rank[arr.dim - 1];
}

int SalvettiModel::layer_of_torus(int h) const {
    const auto& P = cat->poset;
    for (int L : P.by_rank[1])
        if (P.layers[L].defining_set == std::vector<int>{h}) return L;
    throw std::out_of_range("no layer for hypertorus " + std::to_string(h));
}

std::vector<int> SalvettiModel::all_planes() const {
    std::vector<int> r(cat->a0.arr.normals.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (int)i;
    return r;
}

std::shared_ptr<const SalvettiModel> build_model(const ToricArrangement& arr) {
    auto m = std::make_shared<SalvettiModel>();
    m->arr = arr;
    m->cat = std::make_shared<FaceCategory>(face_category(arr));
    m->sal = toric_salvetti(m->cat);
    m->nerve = nerve(m->sal.category(), arr.dim + 1);
    m->a0faces = faces_of_linear(m->cat->a0.arr);
    return m;
}

std::vector<SignVector> adjacent_chambers(const SalvettiModel& m, const Flat& X) {
    std::vector<SignVector> r;
    auto planes = m.all_planes();
    for (int c : m.a0faces.chambers) {
        const auto& C = m.a0faces.faces[c];
        if (adjacent_to_flat(m.cat->a0.arr, planes, C, X)) r.push_back(C);
    }
    std::sort(r.begin(), r.end());
    return r;
}

ChoiceGallery choice_gallery(const SalvettiModel& m, int M) {
    auto adj = adjacent_chambers(m, m.cat->poset.flats.at(M));
    if (adj.empty()) throw std::logic_error("no chamber adjacent to X_M");
    return choice_gallery(m, M, adj.front());
}

ChoiceGallery choice_gallery(const SalvettiModel& m, int M, const SignVector& MC) {
    const auto& P = m.cat->poset;
    if (M < 0 || M >= (int)P.layers.size() || P.layers[M].rank != m.dim() - 1)
        throw std::invalid_argument("choice_gallery: not a layer of rank d-1");
    const auto& A = m.cat->a0.arr;
    auto planes = m.all_planes();
    const Flat& X = P.flats[M];
    if (!is_chamber(MC) || !adjacent_to_flat(A, planes, MC, X))
        throw std::invalid_argument("choice_gallery: chamber not adjacent to X_M");
    ChoiceGallery g;
    g.layer = M;
    g.chamber = MC;
    g.gallery = minimal_gallery(A, planes, MC, opposite_chamber(A, planes, negate(MC), X));
    return g;
}

PathData build_path(const SalvettiModel& m, const SignVector& B, int F, const ChoiceGallery& g) {
    const auto& cat = *m.cat;
    if (!in_layer(cat, g.layer, F)) throw std::invalid_argument("build_path: face not contained in M");
    if (!is_chamber(B)) throw std::invalid_argument("build_path: B is not a chamber");
    const auto& planes = cat.faces[F].planes;
    const auto& fib = m.sal.fiber(F);
    PathData p;
    p.face = F;
    for (auto& C : g.gallery.chambers) {
        auto r = restrict_signs(C, planes);
        if (p.chambers.empty() || p.chambers.back() != r) p.chambers.push_back(r);
    }
    auto BF = restrict_signs(B, planes);
    auto nBF = negate(BF);
    for (std::size_t j = 0; j < p.chambers.size(); ++j) {
        const auto& C = p.chambers[j];
        p.v.push_back(fib.find(C, C));
        if (j + 1 == p.chambers.size()) break;
        auto diff = separating_set(C, p.chambers[j + 1], planes);
        if (diff.size() != 1) throw std::logic_error("restricted gallery is not a gallery");
        SignVector W = C;
        W[diff[0]] = 0;
        p.walls.push_back(W);
        p.crossed.push_back(diff[0]);
        p.e.push_back(fib.find(W, compose(W, BF)));
        p.ebar.push_back(fib.find(W, compose(W, nBF)));
    }
    for (auto* l : {&p.v, &p.e, &p.ebar})
        for (int x : *l)
            if (x < 0) throw std::logic_error("path element missing from the fiber");
    return p;
}

LambdaCycle build_lambda(const SalvettiModel& m, const SignVector& B, const ChoiceGallery& g) {
    const auto& cat = *m.cat;
    const auto& S = m.sal;
    const int M = g.layer;
    const Flat& X = cat.poset.flats[M];
    const SignVector& MC = g.chamber;

    int P0 = -1;
    for (std::size_t F = 0; F < cat.faces.size() && P0 < 0; ++F)
        if (cat.faces[F].dim == 0 && in_layer(cat, M, (int)F)) P0 = (int)F;
    if (P0 < 0) throw std::logic_error("layer without vertices");

    LambdaCycle L;
    L.layer = M;
    L.B = B;
    int P = P0;
    for (std::size_t step = 0;; ++step) {
        if (step > cat.faces.size()) throw std::logic_error("Lambda does not close up");
        auto path = build_path(m, B, P, g);
        L.vertices.push_back(P);
        for (int i = 0; i < path.k(); ++i) {
            L.objects.push_back(S.object(P, path.v[i]));
            L.objects.push_back(S.object(P, path.e[i]));
            add(L.chain, fiber_arrow(S, P, path.v[i], path.e[i]), 1);
            add(L.chain, fiber_arrow(S, P, path.v[i + 1], path.e[i]), -1);
        }
        L.objects.push_back(S.object(P, path.v.back()));

        // P -> G along the ray of -^M C, then G <- P' along the ray of ^M C
        int out = -1;
        for (int fm : cat.out[P]) {
            const auto& mm = cat.morphisms[fm];
            if (cat.faces[mm.target].dim != 1 || !in_layer(cat, M, mm.target)) continue;
            if (ray_side(mm, cat.faces[P].planes, X, MC) == -1) {
                if (out >= 0) throw std::logic_error("two edges of M on the same side");
                out = fm;
            }
        }
        if (out < 0) throw std::logic_error("no edge of M leaving the vertex");
        const int G = cat.morphisms[out].target;
        int back = -1;
        for (int fm : cat.in[G]) {
            const auto& mm = cat.morphisms[fm];
            if (cat.faces[mm.source].dim != 0) continue;
            if (ray_side(mm, cat.faces[mm.source].planes, X, MC) == 1) {
                if (back >= 0) throw std::logic_error("edge of M with two far endpoints");
                back = fm;
            }
        }
        if (back < 0) throw std::logic_error("edge of M without far endpoint");
        const int Pn = cat.morphisms[back].source;

        auto pg = build_path(m, B, G, g);
        const int vG = pg.v.front();
        auto pn = build_path(m, B, Pn, g);
        if (S.diagram_map(out, vG) != path.v.back() || S.diagram_map(back, vG) != pn.v.front())
            throw std::logic_error("Lambda gluing does not match the diagram");
        L.edges.push_back(G);
        L.objects.push_back(S.object(G, vG));
        add(L.chain, S.find_morphism(S.object(P, path.v.back()), S.object(G, vG), out), 1);
        add(L.chain, S.find_morphism(S.object(Pn, pn.v.front()), S.object(G, vG), back), -1);
        P = Pn;
        if (P == P0) break;
    }
    return L;
}

SquareCycle build_omega(const SalvettiModel& m, int fm, const SignVector& HC) {
    const auto& cat = *m.cat;
    const auto& mm = cat.morphisms.at(fm);
    if (cat.poset.layers[cat.faces[mm.target].support].rank != 1)
        throw std::invalid_argument("build_omega: target face does not span a hypertorus");
    if (!is_chamber(HC)) throw std::invalid_argument("build_omega: not a chamber");
    const int F = mm.source;
    const auto& planes = cat.faces[F].planes;
    const auto& fib = m.sal.fiber(F);
    SignVector Fm = restrict_signs(mm.attach, planes);
    auto C1 = compose(Fm, restrict_signs(HC, planes));
    auto C2 = compose(Fm, restrict_signs(negate(HC), planes));
    int x1 = fib.find(C1, C1), x2 = fib.find(C2, C2), y1 = fib.find(Fm, C1), y2 = fib.find(Fm, C2);
    if (x1 < 0 || x2 < 0 || y1 < 0 || y2 < 0) throw std::logic_error("Omega square missing from the fiber");
    const auto& S = m.sal;
    SquareCycle q;
    q.objects = {S.object(F, x1), S.object(F, y1), S.object(F, x2), S.object(F, y2)};
    add(q.chain, fiber_arrow(S, F, x1, y1), 1);
    add(q.chain, fiber_arrow(S, F, x2, y1), -1);
    add(q.chain, fiber_arrow(S, F, x2, y2), 1);
    add(q.chain, fiber_arrow(S, F, x1, y2), -1);
    return q;
}

SquareCycle build_omega_torus(const SalvettiModel& m, int h, const SignVector& HC) {
    const auto& cat = *m.cat;
    int H = m.layer_of_torus(h);
    for (std::size_t G = 0; G < cat.faces.size(); ++G)
        if (cat.faces[G].support == H && cat.faces[G].dim == m.dim() - 1)
            return build_omega(m, cat.identity_of[G], HC);
    throw std::logic_error("hypertorus without top-dimensional face");
}

SquareCycle build_xi(const SalvettiModel& m, int h, const SignVector& B, int F, const ChoiceGallery& g) {
    const auto& cat = *m.cat;
    const auto& defF = cat.poset.layers[cat.faces[F].support].defining_set;
    const auto& defM = cat.poset.layers[g.layer].defining_set;
    if (!std::binary_search(defF.begin(), defF.end(), h) || std::binary_search(defM.begin(), defM.end(), h))
        throw std::invalid_argument("build_xi: hypertorus not in A_F minus A_M");
    auto p = build_path(m, B, F, g);
    const int plane = cat.a0.plane_of[h];
    int i = -1;
    for (int j = 0; j < p.k(); ++j)
        if (p.crossed[j] == plane) {
            if (i >= 0) throw std::logic_error("build_xi: two walls over the same hyperplane");
            i = j;
        }
    if (i < 0) throw std::invalid_argument("build_xi: no wall over the hypertorus");
    const auto& S = m.sal;
    SquareCycle q;
    q.objects = {S.object(F, p.v[i]), S.object(F, p.e[i]), S.object(F, p.v[i + 1]), S.object(F, p.ebar[i])};
    add(q.chain, fiber_arrow(S, F, p.v[i], p.e[i]), 1);
    add(q.chain, fiber_arrow(S, F, p.v[i + 1], p.e[i]), -1);
    add(q.chain, fiber_arrow(S, F, p.v[i + 1], p.ebar[i]), 1);
    add(q.chain, fiber_arrow(S, F, p.v[i], p.ebar[i]), -1);
    return q;
}

int epsilon(const SalvettiModel& m, int h, const SignVector& B, const SignVector& HC) {
    int p = m.cat->a0.plane_of.at(h);
    return B[p] == HC[p] ? 1 : -1;
}

BaseChange verify_base_change(const SalvettiModel& m, const SignVector& B, const SignVector& Bp,
                              const ChoiceGallery& g) {
    const auto& cat = *m.cat;
    BaseChange r;
    auto LB = build_lambda(m, B, g);
    auto LBp = build_lambda(m, Bp, g);
    r.difference = LB.chain;
    for (auto& [id, v] : LBp.chain) add(r.difference, id, -v);
    const auto& defM = cat.poset.layers[g.layer].defining_set;
    for (int P : LB.vertices)
        for (int h : separating_set_F(cat, P, B, Bp)) {
            if (std::binary_search(defM.begin(), defM.end(), h)) continue;
            r.terms.push_back({P, h});
            for (auto& [id, v] : build_xi(m, h, B, P, g).chain) add(r.difference, id, -v);
        }
    r.holds = m.homology().is_boundary(1, r.difference, &r.witness);
    return r;
}

// ---------------------------------------------------------------------------------------------

std::vector<int> CellularMap::simplex_map(int k) const { return nerve_map(source->nerve, target->nerve, functor, k); }

Chain CellularMap::push(int k, const Chain& c) const { return push_forward(simplex_map(k), c); }

Cochain CellularMap::pull(int k, const Cochain& phi) const { return pull_back(simplex_map(k), phi); }

Label point_label(const ToricArrangement& arr, const RatVec& x) {
    Label s(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        Rat v = -arr.tori[i].offset;
        for (int j = 0; j < arr.dim; ++j) v += Rat(arr.tori[i].character[j]) * x[j];
        v.canonicalize();
        Int f = floor_div(v.get_num(), v.get_den());
        s[i] = to_ll(v.get_den() == 1 ? Int(2 * f) : Int(2 * f + 1));
    }
    return s;
}

namespace {

// For a target hypertorus j through the image face: the A_0 hyperplane of the source and the sign
// relating the two normals.
using PlaneTransfer = std::function<std::pair<int, int>(int)>;

CellularMap make_map(std::shared_ptr<const SalvettiModel> src, std::shared_ptr<const SalvettiModel> tgt,
                     const std::function<RatVec(const RatVec&)>& point_map, const IntMatrix& lin,
                     const PlaneTransfer& transfer) {
    const auto& cs = *src->cat;
    const auto& ct = *tgt->cat;
    CellularMap f;
    f.source = src;
    f.target = tgt;
    const std::size_t nf = cs.faces.size();
    std::vector<std::vector<long long>> off(nf);
    std::vector<std::vector<std::tuple<int, int, int>>> moves(nf);  // (target plane, source plane, sign)
    f.face_map.resize(nf);
    for (std::size_t F = 0; F < nf; ++F) {
        auto [fb, t] = ct.locate(point_label(tgt->arr, point_map(cs.faces[F].witness)));
        if (fb < 0) throw std::logic_error("image face not found");
        f.face_map[F] = fb;
        off[F] = t;
        const auto& srcp = cs.faces[F].planes;
        for (int j : ct.poset.layers[ct.faces[fb].support].defining_set) {
            auto [p, tau] = transfer(j);
            if (!std::binary_search(srcp.begin(), srcp.end(), p))
                throw std::logic_error("image hypertorus does not contain the face");
            moves[F].emplace_back(ct.a0.plane_of[j], p, tau);
        }
    }
    const std::size_t mt = ct.a0.arr.normals.size();
    auto push_signs = [&](int F, const SignVector& s) {
        SignVector r(mt, 0);
        for (auto& [pt, ps, tau] : moves[F]) r[pt] = (std::int8_t)(tau * s[ps]);
        return r;
    };
    const auto& S = src->sal;
    const auto& T = tgt->sal;
    f.functor.on_objects.resize(S.objects.size());
    for (std::size_t o = 0; o < S.objects.size(); ++o) {
        const auto& ob = S.objects[o];
        const auto& fib = S.fiber(ob.face);
        int img = T.find_object(f.face_map[ob.face], push_signs(ob.face, fib.face(ob.elem)),
                                push_signs(ob.face, fib.chamber(ob.elem)));
        if (img < 0) throw std::logic_error("image object not found");
        f.functor.on_objects[o] = img;
    }
    f.functor.on_morphisms.resize(S.morphisms.size());
    for (std::size_t a = 0; a < S.morphisms.size(); ++a) {
        const auto& sm = S.morphisms[a];
        const auto& fm = cs.morphisms[sm.fm];
        std::vector<long long> sh = off[fm.source];
        for (std::size_t r = 0; r < sh.size(); ++r) {
            Int v = 0;
            for (std::size_t c = 0; c < fm.shift.size(); ++c) v += lin(r, c) * Int((long)fm.shift[c]);
            sh[r] += to_ll(v) - off[fm.target][r];
        }
        int mb = ct.find_morphism(f.face_map[fm.source], f.face_map[fm.target], sh);
        if (mb < 0) throw std::logic_error("image face morphism not found");
        int os = f.functor.on_objects[sm.source], ot = f.functor.on_objects[sm.target];
        if (os == ot && ct.morphisms[mb].identity) {
            f.functor.on_morphisms[a] = -1;
            continue;
        }
        int img = T.find_morphism(os, ot, mb);
        if (img < 0) throw std::logic_error("image morphism not found");
        f.functor.on_morphisms[a] = img;
    }
    return f;
}

IntMatrix identity_matrix(int d) {
    IntMatrix I(d, d);
    for (int i = 0; i < d; ++i) I(i, i) = 1;
    return I;
}

}  // namespace

CellularMap map_phi(std::shared_ptr<const SalvettiModel> m, int L) {
    const auto& layer = m->cat->poset.layers.at(L);
    if (layer.rank == 0) throw std::invalid_argument("map_phi: the quotient by T is a point");
    auto q = quotient_arrangement(m->arr, layer);
    auto tgt = build_model(q.arr);
    for (std::size_t j = 0; j < q.arr.size(); ++j) {
        IntVec a(m->dim(), Int(0));
        for (int c = 0; c < m->dim(); ++c)
            for (int r = 0; r < layer.rank; ++r) a[c] += q.arr.tori[j].character[r] * q.proj(r, c);
        if (a != m->arr.tori[q.torus_source[j]].character) throw std::logic_error("quotient character mismatch");
    }
    IntMatrix P = q.proj;
    auto point_map = [P](const RatVec& x) {
        RatVec y(P.rows, Rat(0));
        for (std::size_t r = 0; r < P.rows; ++r)
            for (std::size_t c = 0; c < P.cols; ++c) y[r] += Rat(P(r, c)) * x[c];
        return y;
    };
    const auto& sa = m->cat->a0;
    const auto& ta = tgt->cat->a0;
    auto src_torus = q.torus_source;
    return make_map(m, tgt, point_map, P, [&, src_torus](int j) {
        int h = src_torus[j];
        return std::make_pair(sa.plane_of[h], ta.sign_of[j] * sa.sign_of[h]);
    });
}

CellularMap map_psi(std::shared_ptr<const SalvettiModel> m, const std::vector<int>& S) {
    auto sub = subarrangement(m->arr, S);
    if (!sub.is_essential()) throw std::invalid_argument("map_psi: sub-arrangement drops rank");
    auto tgt = build_model(sub);
    const auto& sa = m->cat->a0;
    const auto& ta = tgt->cat->a0;
    return make_map(
        m, tgt, [](const RatVec& x) { return x; }, identity_matrix(m->dim()), [&](int j) {
            int h = S[j];
            return std::make_pair(sa.plane_of[h], ta.sign_of[j] * sa.sign_of[h]);
        });
}

CellularMap map_mu(std::shared_ptr<const SalvettiModel> m, const RatVec& g) {
    const auto& arr = m->arr;
    if ((int)g.size() != arr.dim) throw std::invalid_argument("map_mu: wrong dimension");
    for (auto& t : arr.tori) {
        Rat s = t.offset;
        for (int j = 0; j < arr.dim; ++j) s += Rat(t.character[j]) * g[j];
        s = frac(s);
        bool found = false;
        for (auto& u : arr.tori) {
            if (u.character == t.character && u.offset == s) found = true;
            IntVec neg = u.character;
            for (auto& x : neg) x = -x;
            if (neg == t.character && frac(-u.offset) == s) found = true;
        }
        if (!found) throw std::invalid_argument("map_mu: translation does not stabilize the arrangement");
    }
    const auto& a0 = m->cat->a0;
    auto point_map = [g](const RatVec& x) {
        RatVec y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += g[i];
        return y;
    };
    return make_map(m, m, point_map, identity_matrix(arr.dim),
                    [&](int j) { return std::make_pair(a0.plane_of[j], 1); });
}

std::vector<long long> torus_winding(const SalvettiModel& m, const Chain& c) {
    std::vector<long long> w(m.dim(), 0);
    for (auto& [id, v] : c) {
        const auto& sh = m.cat->morphisms[m.sal.morphisms[m.nerve.simplices[1][id][0]].fm].shift;
        for (int i = 0; i < m.dim(); ++i) w[i] -= v * sh[i];
    }
    return w;
}

}  // namespace toric
