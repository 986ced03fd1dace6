#pragma once
// Salvetti posets of real arrangements and the toric Salvetti category.

#include "toric/chain_complex.hpp"
#include "toric/real_geometry.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace toric {

struct SalvettiPoset {
    LinearFaces faces;
    std::vector<std::pair<int, int>> elems;  // (face, chamber) as indices into faces, sorted
    std::map<std::pair<int, int>, int> index;

    std::size_t size() const { return elems.size(); }
    const SignVector& face(int x) const { return faces.faces[elems[x].first]; }
    const SignVector& chamber(int x) const { return faces.faces[elems[x].second]; }
    int find(const SignVector& G, const SignVector& C) const;
    // [G,C] >= [G',C'] iff G <= G' and C_{G'} = C'
    bool geq(int x, int y) const;
    bool leq(int x, int y) const { return geq(y, x); }
};

SalvettiPoset salvetti_poset(const LinearArrangement& A, const std::vector<int>& planes);
SalvettiPoset salvetti_poset(const LinearArrangement& A);

// S_C: the elements [G, C_G]
std::vector<int> stratum(const SalvettiPoset& S, const SignVector& C);
// S^G = union of S_C over chambers C >= G
std::vector<int> strata_subposet(const SalvettiPoset& S, const SignVector& G);

// Poset as a category: one morphism x -> y for each x < y.
Category poset_category(const SalvettiPoset& S);

struct SalvettiObject {
    int face = 0;  // object of F(A)
    int elem = 0;  // element of S(A[face])
};

struct SalvettiMorphism {
    int source = 0, target = 0;  // objects (F,y) -> (G,x)
    int fm = 0;                  // morphism F -> G of the face category
};

// The Grothendieck construction: (F,y) -> (G,x) for m: F -> G in F(A) and y <= D(m)(x).
struct ToricSalvetti {
    std::shared_ptr<const FaceCategory> cat;
    std::vector<SalvettiPoset> fibers;
    std::vector<int> fiber_of;  // face -> fibers index
    std::vector<int> base;      // face -> first object over it
    std::vector<SalvettiObject> objects;
    std::vector<SalvettiMorphism> morphisms;
    std::vector<std::vector<int>> out;
    std::map<std::tuple<int, int, int>, int> index;  // (source, target, fm)

    const SalvettiPoset& fiber(int F) const { return fibers[fiber_of[F]]; }
    int object(int F, int elem) const { return base[F] + elem; }
    int find_object(int F, const SignVector& G, const SignVector& C) const;
    // D(m): S(A[G]) -> S(A[F]) for m: F -> G
    int diagram_map(int fm, int elem) const;
    SignVector i_m(int fm, const SignVector& K) const;
    int find_morphism(int source, int target, int fm) const;
    int compose(int a, int b) const;
    Category category() const;
};

ToricSalvetti toric_salvetti(const ToricArrangement& arr);
ToricSalvetti toric_salvetti(std::shared_ptr<const FaceCategory> cat);

// Objects of S_{Y,F0}: F in F(A^Y) and [G,K] in S^{F0(F)}(A[F]); F0 is a face of A_0 with |F0| = X_Y.
std::vector<char> subcomplex_S(const ToricSalvetti& S, int Y, const SignVector& F0);

// F -> F' functor between categories given on objects and non-identity morphisms (-1 = identity).
struct Functor {
    std::vector<int> on_objects;
    std::vector<int> on_morphisms;
};

// Image of every k-simplex (-1 when degenerate); rejects maps that are not functorial on the nerve.
std::vector<int> nerve_map(const NerveComplex& src, const NerveComplex& tgt, const Functor& f, int k);

// Simplex maps for an inclusion of a sub-nerve
std::vector<int> inclusion_map(const std::vector<std::vector<int>>& to_full, int k);

}  // namespace toric
