#include "toric/polyhedra.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

struct Ineq {
    RatVec g;  // g.z + h  > 0 (strict) or >= 0
    Rat h;
    bool strict;
    bool operator<(const Ineq& o) const {
        if (g != o.g) return g < o.g;
        if (h != o.h) return h < o.h;
        return strict < o.strict;
    }
};

// scale by a positive factor so the first nonzero coefficient has absolute value 1
void normalize(Ineq& q) {
    for (auto& x : q.g)
        if (x != 0) {
            Rat s = abs(x);
            for (auto& y : q.g) y /= s;
            q.h /= s;
            return;
        }
}

}  // namespace

std::optional<RatVec> feasible_point(int dim, const std::vector<LinConstraint>& cons) {
    // equalities: x = x0 + N z
    std::vector<const LinConstraint*> eqs;
    for (auto& c : cons)
        if (c.kind == LinConstraint::Eq) eqs.push_back(&c);
    RatMatrix E(eqs.size(), dim);
    RatVec rhs(eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        for (int j = 0; j < dim; ++j) E(i, j) = eqs[i]->c[j];
        rhs[i] = -eqs[i]->e;
    }
    RatVec x0(dim, Rat(0));
    RatMatrix N = RatMatrix::identity(dim);
    if (!eqs.empty()) {
        auto s = solve(E, rhs);
        if (!s) return std::nullopt;
        x0 = *s;
        N = kernel(E);
    }
    const int k = (int)N.cols;

    std::vector<Ineq> sys;
    for (auto& c : cons) {
        if (c.kind == LinConstraint::Eq) continue;
        Ineq q;
        q.g.assign(k, Rat(0));
        q.h = c.e;
        for (int j = 0; j < dim; ++j) q.h += c.c[j] * x0[j];
        for (int t = 0; t < k; ++t)
            for (int j = 0; j < dim; ++j) q.g[t] += c.c[j] * N(j, t);
        q.strict = c.kind == LinConstraint::Gt;
        sys.push_back(q);
    }

    // levels[v]: constraints involving only z_0..z_{v-1}
    std::vector<std::vector<Ineq>> levels(k + 1);
    auto clean = [](std::vector<Ineq> in, bool& bad) {
        std::set<Ineq> out;
        for (auto& q : in) {
            bool zero = std::all_of(q.g.begin(), q.g.end(), [](const Rat& x) { return x == 0; });
            if (zero) {
                if (q.h < 0 || (q.strict && q.h == 0)) bad = true;
                continue;
            }
            normalize(q);
            out.insert(q);
        }
        // drop a non-strict copy when the strict one with the same data is present
        std::vector<Ineq> v(out.begin(), out.end());
        std::vector<Ineq> r;
        for (auto& q : v) {
            if (!q.strict) {
                Ineq s = q;
                s.strict = true;
                if (out.count(s)) continue;
            }
            r.push_back(q);
        }
        return r;
    };
    bool bad = false;
    levels[k] = clean(sys, bad);
    if (bad) return std::nullopt;
    for (int v = k - 1; v >= 0; --v) {
        std::vector<Ineq> pos, neg, next;
        for (auto& q : levels[v + 1]) {
            if (q.g[v] > 0)
                pos.push_back(q);
            else if (q.g[v] < 0)
                neg.push_back(q);
            else
                next.push_back(q);
        }
        for (auto& p : pos)
            for (auto& n : neg) {
                Ineq c;
                Rat a = -n.g[v], b = p.g[v];
                c.g.resize(k);
                for (int t = 0; t < k; ++t) c.g[t] = a * p.g[t] + b * n.g[t];
                c.g[v] = 0;
                c.h = a * p.h + b * n.h;
                c.strict = p.strict || n.strict;
                next.push_back(c);
            }
        levels[v] = clean(next, bad);
        if (bad) return std::nullopt;
    }

    RatVec z(k, Rat(0));
    for (int v = 0; v < k; ++v) {
        // bounds for z_v from levels[v+1]
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rat lo, hi;
        for (auto& q : levels[v + 1]) {
            if (q.g[v] == 0) continue;
            Rat rest = q.h;
            for (int t = 0; t < v; ++t) rest += q.g[t] * z[t];
            Rat bnd = -rest / q.g[v];
            if (q.g[v] > 0) {
                if (!has_lo || bnd > lo || (bnd == lo && q.strict)) {
                    lo_strict = (has_lo && bnd == lo) ? (lo_strict || q.strict) : q.strict;
                    lo = bnd;
                }
                has_lo = true;
            } else {
                if (!has_hi || bnd < hi || (bnd == hi && q.strict)) {
                    hi_strict = (has_hi && bnd == hi) ? (hi_strict || q.strict) : q.strict;
                    hi = bnd;
                }
                has_hi = true;
            }
        }
        if (has_lo && has_hi) {
            if (lo == hi) {
                if (lo_strict || hi_strict) return std::nullopt;
                z[v] = lo;
            } else {
                if (lo > hi) return std::nullopt;
                z[v] = (lo + hi) / 2;
            }
        } else if (has_lo) {
            z[v] = lo + 1;
        } else if (has_hi) {
            z[v] = hi - 1;
        }
    }
    RatVec x = x0;
    for (int j = 0; j < dim; ++j)
        for (int t = 0; t < k; ++t) x[j] += N(j, t) * z[t];
    return x;
}

}  // namespace toric
