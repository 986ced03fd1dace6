#pragma once
// Sign vectors, faces of real arrangements, the face category of the compact torus, galleries.

#include "toric/polyhedra.hpp"
#include "toric/toric_model.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace toric {

// Indexed by the hyperplanes of an ambient central arrangement (usually A_0). Entries outside
// the active hyperplane subset are 0.
using SignVector = std::vector<std::int8_t>;

SignVector compose(const SignVector& G, const SignVector& C);  // (G C)(H) = G(H) if nonzero else C(H)
SignVector restrict_signs(const SignVector& s, const std::vector<int>& planes);
SignVector negate(const SignVector& s);
// G <= K as faces of the arrangement on `planes`
bool face_leq(const SignVector& G, const SignVector& K, const std::vector<int>& planes);
std::vector<int> zero_set(const SignVector& s, const std::vector<int>& planes);
std::string sign_string(const SignVector& s, const std::vector<int>& planes);

struct LinearFaces {
    int dim = 0;
    std::vector<int> planes;           // active hyperplanes
    std::vector<SignVector> faces;     // sorted by dimension, then sign vector
    std::vector<int> dims;
    std::vector<RatVec> witness;
    std::vector<int> chambers;         // indices into faces
    std::map<SignVector, int> index;

    int find(const SignVector& s) const;
    bool leq(int g, int k) const { return face_leq(faces[g], faces[k], planes); }
    int minimal() const { return 0; }  // only meaningful for central arrangements
};

// Faces of the arrangement {n_h . x = off_h : h in planes}; offsets empty means central.
LinearFaces faces_of_linear(const LinearArrangement& A, const std::vector<int>& planes,
                            const RatVec& offsets = {});
LinearFaces faces_of_linear(const LinearArrangement& A);
std::optional<RatVec> realize(const LinearArrangement& A, const std::vector<int>& planes,
                              const SignVector& s, const RatVec& offsets = {});

SignVector closest_chamber(const SignVector& G, const SignVector& C);
std::vector<int> separating_set(const SignVector& C, const SignVector& Cp, const std::vector<int>& planes);
// Flips the signs of the hyperplanes containing X (given as the set of those hyperplanes).
SignVector opposite_chamber(const LinearArrangement& A, const std::vector<int>& planes, const SignVector& C,
                            const Flat& X);
bool adjacent_to_flat(const LinearArrangement& A, const std::vector<int>& planes, const SignVector& C,
                      const Flat& X);

struct Gallery {
    std::vector<SignVector> chambers;  // C_0..C_k
    std::vector<SignVector> walls;     // W_1..W_k
    std::vector<int> crossed;          // hyperplane crossed at each step
    std::size_t length() const { return walls.size(); }
};

// Lexicographically least sequence of crossed hyperplanes among minimal galleries.
Gallery minimal_gallery(const LinearArrangement& A, const std::vector<int>& planes, const SignVector& C,
                        const SignVector& Cp);

// ---------------------------------------------------------------------------------------------
// Face category of the compact torus.
//
// A face is stored through a lift to the periodic arrangement in R^d, labelled by s in Z^n:
// s_i = 2k means a_i.x - theta_i = k, s_i = 2k+1 means k < a_i.x - theta_i < k+1. Translating the
// lift by v in Z^d changes the label by 2 A v.

using Label = std::vector<long long>;

struct ToricFace {
    Label label;              // canonical lift
    int dim = 0;
    int support = 0;          // layer index
    std::vector<int> planes;  // A[F] as sorted A_0 hyperplane indices
    RatVec witness;           // relative interior point of the canonical lift
};

struct FaceMorphism {
    int source = 0, target = 0;
    std::vector<long long> shift;  // lift(source) + 2 A shift lies in closure(lift(target))
    SignVector attach;             // F_m in F(A[source])
    bool identity = false;
};

struct FaceCategory {
    ToricArrangement arr;
    A0Data a0;
    LayerPoset poset;
    std::vector<ToricFace> faces;          // sorted by dimension, then label
    std::vector<FaceMorphism> morphisms;   // identities included
    std::vector<int> identity_of;          // face -> its identity morphism
    std::vector<std::vector<int>> out, in; // non-identity morphisms by source / target

    // Canonical face and shift t with label = lift(face) + 2 A t.
    std::pair<int, std::vector<long long>> locate(const Label& label) const;
    int find_morphism(int source, int target, const std::vector<long long>& shift) const;
    int compose(int m, int n) const;  // m: F->G then n: G->K
    Label lift(int face, const std::vector<long long>& shift) const;
    std::vector<LinConstraint> constraints(const Label& label) const;
    int euler_characteristic() const;

    std::map<Label, int> label_index;
    std::map<std::pair<std::pair<int, int>, std::vector<long long>>, int> morphism_index;
    IntMatrix hnf_H, hnf_U;  // 2A U = H
    std::vector<std::size_t> hnf_pivots;
};

FaceCategory face_category(const ToricArrangement& arr);

// C(F): the chamber of A[F] containing the chamber C of A_0.
SignVector chamber_extension(const SignVector& C, const FaceCategory& cat, int F);

// S_F(B,B'): hypertori H through F (i.e. with supp(F) in H) whose hyperplane separates B and B'.
std::vector<int> separating_set_F(const FaceCategory& cat, int F, const SignVector& B, const SignVector& Bp);

std::string face_category_dot(const FaceCategory& cat);

}  // namespace toric
