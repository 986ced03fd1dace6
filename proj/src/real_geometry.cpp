#include "toric/real_geometry.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace toric {

SignVector compose(const SignVector& G, const SignVector& C) {
    SignVector r(G.size());
    for (std::size_t h = 0; h < G.size(); ++h) r[h] = G[h] != 0 ? G[h] : C[h];
    return r;
}

SignVector restrict_signs(const SignVector& s, const std::vector<int>& planes) {
    SignVector r(s.size(), 0);
    for (int h : planes) r[h] = s[h];
    return r;
}

SignVector negate(const SignVector& s) {
    SignVector r(s.size());
    for (std::size_t h = 0; h < s.size(); ++h) r[h] = (std::int8_t)-s[h];
    return r;
}

bool face_leq(const SignVector& G, const SignVector& K, const std::vector<int>& planes) {
    for (int h : planes)
        if (G[h] != 0 && G[h] != K[h]) return false;
    return true;
}

std::vector<int> zero_set(const SignVector& s, const std::vector<int>& planes) {
    std::vector<int> z;
    for (int h : planes)
        if (s[h] == 0) z.push_back(h);
    return z;
}

std::string sign_string(const SignVector& s, const std::vector<int>& planes) {
    std::string r;
    for (int h : planes) r += s[h] > 0 ? '+' : (s[h] < 0 ? '-' : '0');
    return r;
}

int LinearFaces::find(const SignVector& s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
}

namespace {

LinConstraint plane_constraint(const LinearArrangement& A, int h, int sign, const RatVec& offsets) {
    LinConstraint c;
    c.c.resize(A.dim);
    for (int j = 0; j < A.dim; ++j) c.c[j] = Rat(A.normals[h][j]) * sign;
    c.e = offsets.empty() ? Rat(0) : Rat(-offsets[h] * sign);
    c.kind = sign == 0 ? LinConstraint::Eq : LinConstraint::Gt;
    if (sign == 0) {
        for (int j = 0; j < A.dim; ++j) c.c[j] = Rat(A.normals[h][j]);
        c.e = offsets.empty() ? Rat(0) : Rat(-offsets[h]);
    }
    return c;
}

int face_dim(const LinearArrangement& A, const std::vector<int>& zeros) {
    IntMatrix N(zeros.size(), A.dim);
    for (std::size_t i = 0; i < zeros.size(); ++i)
        for (int j = 0; j < A.dim; ++j) N(i, j) = A.normals[zeros[i]][j];
    return A.dim - (int)rank(N);
}

}  // namespace

std::optional<RatVec> realize(const LinearArrangement& A, const std::vector<int>& planes, const SignVector& s,
                              const RatVec& offsets) {
    std::vector<LinConstraint> cons;
    for (int h : planes) cons.push_back(plane_constraint(A, h, s[h], offsets));
    return feasible_point(A.dim, cons);
}

LinearFaces faces_of_linear(const LinearArrangement& A, const std::vector<int>& planes, const RatVec& offsets) {
    LinearFaces out;
    out.dim = A.dim;
    out.planes = planes;
    std::sort(out.planes.begin(), out.planes.end());
    const std::size_t m = A.normals.size();
    struct Found {
        int dim;
        SignVector s;
        RatVec w;
    };
    std::vector<Found> found;
    SignVector cur(m, 0);
    std::vector<LinConstraint> cons;
    std::function<void(std::size_t, const RatVec&)> rec = [&](std::size_t i, const RatVec& w) {
        if (i == out.planes.size()) {
            found.push_back({face_dim(A, zero_set(cur, out.planes)), cur, w});
            return;
        }
        int h = out.planes[i];
        for (int sg : {-1, 0, 1}) {
            cons.push_back(plane_constraint(A, h, sg, offsets));
            auto p = feasible_point(A.dim, cons);
            if (p) {
                cur[h] = (std::int8_t)sg;
                rec(i + 1, *p);
                cur[h] = 0;
            }
            cons.pop_back();
        }
    };
    auto p0 = feasible_point(A.dim, {});
    rec(0, *p0);
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.s < b.s;
    });
    for (auto& f : found) {
        out.index[f.s] = (int)out.faces.size();
        if (f.dim == A.dim) out.chambers.push_back((int)out.faces.size());
        out.faces.push_back(f.s);
        out.dims.push_back(f.dim);
        out.witness.push_back(f.w);
    }
    return out;
}

LinearFaces faces_of_linear(const LinearArrangement& A) {
    std::vector<int> all(A.normals.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    return faces_of_linear(A, all);
}

SignVector closest_chamber(const SignVector& G, const SignVector& C) { return compose(G, C); }

std::vector<int> separating_set(const SignVector& C, const SignVector& Cp, const std::vector<int>& planes) {
    std::vector<int> s;
    for (int h : planes)
        if (C[h] != 0 && C[h] == -Cp[h]) s.push_back(h);
    return s;
}

bool adjacent_to_flat(const LinearArrangement& A, const std::vector<int>& planes, const SignVector& C,
                      const Flat& X) {
    SignVector G = C;
    for (int h : X) G[h] = 0;
    return (bool)realize(A, planes, G);
}

SignVector opposite_chamber(const LinearArrangement& A, const std::vector<int>& planes, const SignVector& C,
                            const Flat& X) {
    if (!adjacent_to_flat(A, planes, C, X)) throw std::invalid_argument("chamber is not adjacent to the flat");
    SignVector r = C;
    for (int h : X)
        if (std::find(planes.begin(), planes.end(), h) != planes.end()) r[h] = (std::int8_t)-r[h];
    return r;
}

Gallery minimal_gallery(const LinearArrangement& A, const std::vector<int>& planes, const SignVector& C,
                        const SignVector& Cp) {
    Gallery g;
    g.chambers.push_back(C);
    SignVector cur = C;
    for (;;) {
        auto S = separating_set(cur, Cp, planes);
        if (S.empty()) break;
        bool moved = false;
        for (int h : S) {  // S is sorted: the first crossable wall gives the lex-least sequence
            SignVector wall = cur;
            wall[h] = 0;
            if (!realize(A, planes, wall)) continue;
            SignVector next = cur;
            next[h] = (std::int8_t)-next[h];
            if (!realize(A, planes, next)) continue;
            g.walls.push_back(wall);
            g.crossed.push_back(h);
            g.chambers.push_back(next);
            cur = next;
            moved = true;
            break;
        }
        if (!moved) throw std::logic_error("no wall to cross towards the target chamber");
    }
    return g;
}

// ---------------------------------------------------------------------------------------------

namespace {

long long floor_half(long long s) { return s >= 0 ? s / 2 : -((-s + 1) / 2); }

long long to_ll(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("label overflow");
    return x.get_si();
}

}  // namespace

std::vector<LinConstraint> FaceCategory::constraints(const Label& s) const {
    std::vector<LinConstraint> cons;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& t = arr.tori[i];
        long long k = floor_half(s[i]);
        LinConstraint c;
        c.c.resize(arr.dim);
        for (int j = 0; j < arr.dim; ++j) c.c[j] = Rat(t.character[j]);
        c.e = -t.offset - Rat((long)k);
        if (s[i] % 2 == 0) {
            c.kind = LinConstraint::Eq;
            cons.push_back(c);
        } else {
            c.kind = LinConstraint::Gt;
            cons.push_back(c);
            LinConstraint u;
            u.c.resize(arr.dim);
            for (int j = 0; j < arr.dim; ++j) u.c[j] = -c.c[j];
            u.e = t.offset + Rat((long)(k + 1));
            u.kind = LinConstraint::Gt;
            cons.push_back(u);
        }
    }
    return cons;
}

std::pair<int, std::vector<long long>> FaceCategory::locate(const Label& label) const {
    std::vector<Int> s;
    for (long long x : label) s.emplace_back((long)x);
    const std::size_t d = arr.dim;
    std::vector<Int> q(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::size_t p = hnf_pivots[j];
        Int h = hnf_H(p, j);
        q[j] = floor_div(s[p], h);
        if (q[j] != 0)
            for (std::size_t i = 0; i < s.size(); ++i) s[i] -= q[j] * hnf_H(i, j);
    }
    Label rep(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) rep[i] = to_ll(s[i]);
    std::vector<long long> t(d);
    for (std::size_t a = 0; a < d; ++a) {
        Int v = 0;
        for (std::size_t j = 0; j < d; ++j) v += hnf_U(a, j) * q[j];
        t[a] = to_ll(v);
    }
    auto it = label_index.find(rep);
    if (it != label_index.end()) return {it->second, t};
    return {-1, t};
}

Label FaceCategory::lift(int face, const std::vector<long long>& shift) const {
    Label s = faces[face].label;
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (int j = 0; j < arr.dim; ++j) s[i] += 2 * arr.tori[i].character[j].get_si() * shift[j];
    return s;
}

int FaceCategory::find_morphism(int source, int target, const std::vector<long long>& shift) const {
    auto it = morphism_index.find({{source, target}, shift});
    return it == morphism_index.end() ? -1 : it->second;
}

int FaceCategory::compose(int m, int n) const {
    const auto& a = morphisms[m];
    const auto& b = morphisms[n];
    if (a.target != b.source) return -1;
    std::vector<long long> t(a.shift.size());
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = a.shift[j] + b.shift[j];
    return find_morphism(a.source, b.target, t);
}

int FaceCategory::euler_characteristic() const {
    int chi = 0;
    for (auto& f : faces) chi += f.dim % 2 == 0 ? 1 : -1;
    return chi;
}

FaceCategory face_category(const ToricArrangement& arr) {
    if (!arr.is_essential()) throw std::invalid_argument("face category requires an essential arrangement");
    FaceCategory cat;
    cat.arr = arr;
    cat.a0 = arrangement_A0(arr);
    cat.poset = build_layer_poset(arr);
    const int d = arr.dim;
    const std::size_t n = arr.size();

    IntMatrix A2 = arr.character_matrix();
    for (auto& x : A2.a) x *= 2;
    auto hnf = hermite_normal_form(A2);
    cat.hnf_H = hnf.H;
    cat.hnf_U = hnf.U;
    cat.hnf_pivots = hnf.pivot_rows;

    // cells of the lifted arrangement meeting [0,1]^d
    std::vector<LinConstraint> box;
    for (int j = 0; j < d; ++j) {
        LinConstraint lo, hi;
        lo.c.assign(d, Rat(0));
        hi.c.assign(d, Rat(0));
        lo.c[j] = 1;
        lo.e = 0;
        lo.kind = LinConstraint::Ge;
        hi.c[j] = -1;
        hi.e = 1;
        hi.kind = LinConstraint::Ge;
        box.push_back(lo);
        box.push_back(hi);
    }
    std::vector<Label> cells;
    Label cur(n);
    std::function<void(std::size_t, std::vector<LinConstraint>&)> rec = [&](std::size_t i,
                                                                            std::vector<LinConstraint>& cons) {
        if (i == n) {
            cells.push_back(cur);
            return;
        }
        const auto& t = arr.tori[i];
        Rat lo = -t.offset, hi = -t.offset;
        for (int j = 0; j < d; ++j) {
            if (t.character[j] < 0) lo += Rat(t.character[j]);
            if (t.character[j] > 0) hi += Rat(t.character[j]);
        }
        Int klo = floor_div(lo.get_num(), lo.get_den());
        Int khi = floor_div(hi.get_num(), hi.get_den()) + 1;
        for (Int k = klo; k <= khi; ++k) {
            for (int odd = 0; odd < 2; ++odd) {
                long long kk = k.get_si();
                Label one(n, 0);
                one[i] = 2 * kk + odd;
                // constraints for torus i alone
                LinConstraint c;
                c.c.resize(d);
                for (int j = 0; j < d; ++j) c.c[j] = Rat(t.character[j]);
                c.e = -t.offset - Rat((long)kk);
                std::size_t added = 0;
                if (!odd) {
                    c.kind = LinConstraint::Eq;
                    cons.push_back(c);
                    added = 1;
                } else {
                    c.kind = LinConstraint::Gt;
                    LinConstraint u;
                    u.c.resize(d);
                    for (int j = 0; j < d; ++j) u.c[j] = -c.c[j];
                    u.e = t.offset + Rat((long)(kk + 1));
                    u.kind = LinConstraint::Gt;
                    cons.push_back(c);
                    cons.push_back(u);
                    added = 2;
                }
                if (feasible_point(d, cons)) {
                    cur[i] = 2 * kk + odd;
                    rec(i + 1, cons);
                }
                cons.resize(cons.size() - added);
            }
        }
    };
    std::vector<LinConstraint> cons = box;
    rec(0, cons);

    // canonical representatives; the face list is needed by locate so reduce directly here
    std::vector<Label> reps;
    for (auto& s : cells) {
        std::vector<Int> v;
        for (long long x : s) v.emplace_back((long)x);
        for (int j = 0; j < d; ++j) {
            std::size_t p = cat.hnf_pivots[j];
            Int q = floor_div(v[p], cat.hnf_H(p, j));
            if (q != 0)
                for (std::size_t i = 0; i < n; ++i) v[i] -= q * cat.hnf_H(i, j);
        }
        Label r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = to_ll(v[i]);
        reps.push_back(r);
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    for (auto& r : reps) {
        ToricFace f;
        f.label = r;
        auto w = feasible_point(d, cat.constraints(r));
        if (!w) throw std::logic_error("empty cell in face enumeration");
        f.witness = *w;
        std::vector<int> defining;
        std::vector<std::size_t> even;
        for (std::size_t i = 0; i < n; ++i)
            if (r[i] % 2 == 0) {
                defining.push_back((int)i);
                even.push_back(i);
            }
        f.dim = d - (int)rank(arr.character_matrix().select_rows(even));
        f.support = cat.poset.find_containing_point(defining, f.witness);
        if (f.support < 0) throw std::logic_error("face support not found among layers");
        for (int i : defining) f.planes.push_back(cat.a0.plane_of[i]);
        std::sort(f.planes.begin(), f.planes.end());
        f.planes.erase(std::unique(f.planes.begin(), f.planes.end()), f.planes.end());
        cat.faces.push_back(f);
    }
    std::stable_sort(cat.faces.begin(), cat.faces.end(), [](const ToricFace& a, const ToricFace& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.label < b.label;
    });

    for (std::size_t i = 0; i < cat.faces.size(); ++i) cat.label_index[cat.faces[i].label] = (int)i;

    // morphisms F -> G: faces of closure(lift(G))
    const std::size_t m0 = cat.a0.arr.normals.size();
    struct Raw {
        int src, tgt;
        std::vector<long long> shift;
        SignVector attach;
    };
    std::vector<Raw> raw;
    for (std::size_t gi = 0; gi < cat.faces.size(); ++gi) {
        const Label& g = cat.faces[gi].label;
        std::vector<std::size_t> odd;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] % 2 != 0) odd.push_back(i);
        Label f = g;
        std::function<void(std::size_t)> pick = [&](std::size_t k) {
            if (k == odd.size()) {
                if (!feasible_point(d, cat.constraints(f))) return;
                auto [fi, t] = cat.locate(f);
                if (fi < 0) throw std::logic_error("closure face not found");
                SignVector att(m0, 0);
                for (std::size_t i = 0; i < n; ++i)
                    if (f[i] % 2 == 0) att[cat.a0.plane_of[i]] = (std::int8_t)(cat.a0.sign_of[i] * (g[i] - f[i]));
                raw.push_back({fi, (int)gi, t, att});
                return;
            }
            std::size_t i = odd[k];
            for (long long delta : {-1LL, 0LL, 1LL}) {
                f[i] = g[i] + delta;
                pick(k + 1);
            }
            f[i] = g[i];
        };
        pick(0);
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.tgt != b.tgt) return a.tgt < b.tgt;
        return a.shift < b.shift;
    });
    cat.identity_of.assign(cat.faces.size(), -1);
    cat.out.assign(cat.faces.size(), {});
    cat.in.assign(cat.faces.size(), {});
    for (auto& r : raw) {
        FaceMorphism mo;
        mo.source = r.src;
        mo.target = r.tgt;
        mo.shift = r.shift;
        mo.attach = r.attach;
        mo.identity = r.src == r.tgt && std::all_of(r.shift.begin(), r.shift.end(), [](long long x) { return x == 0; });
        int id = (int)cat.morphisms.size();
        cat.morphism_index[{{r.src, r.tgt}, r.shift}] = id;
        if (mo.identity)
            cat.identity_of[r.src] = id;
        else {
            cat.out[r.src].push_back(id);
            cat.in[r.tgt].push_back(id);
        }
        cat.morphisms.push_back(mo);
    }
    return cat;
}

SignVector chamber_extension(const SignVector& C, const FaceCategory& cat, int F) {
    return restrict_signs(C, cat.faces[F].planes);
}

std::vector<int> separating_set_F(const FaceCategory& cat, int F, const SignVector& B, const SignVector& Bp) {
    std::vector<int> r;
    const auto& L = cat.poset.layers[cat.faces[F].support];
    for (int i : L.defining_set) {
        int h = cat.a0.plane_of[i];
        if (B[h] != 0 && B[h] == -Bp[h]) r.push_back(i);
    }
    return r;
}

std::string face_category_dot(const FaceCategory& cat) {
    std::ostringstream o;
    o << "digraph faces {\n";
    for (std::size_t i = 0; i < cat.faces.size(); ++i) {
        o << "  f" << i << " [label=\"" << i << " dim " << cat.faces[i].dim << "\"];\n";
    }
    for (auto& m : cat.morphisms) {
        if (m.identity) continue;
        o << "  f" << m.source << " -> f" << m.target << " [label=\""
          << sign_string(m.attach, cat.faces[m.source].planes) << "\"];\n";
    }
    o << "}\n";
    return o.str();
}

}  // namespace toric
