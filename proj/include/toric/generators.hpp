#pragma once
// Explicit 1-cycles of the toric Salvetti complex and the cellular functors between complexes.

#include "toric/homology.hpp"
#include "toric/salvetti.hpp"

#include <memory>

namespace toric {

// Everything needed to compute with Sal(A): face category, the Grothendieck construction and its
// nerve (degree d+1). Held by shared_ptr because the category closure points into `sal`.
struct SalvettiModel {
    ToricArrangement arr;
    std::shared_ptr<const FaceCategory> cat;
    ToricSalvetti sal;
    NerveComplex nerve;
    LinearFaces a0faces;

    const FaceCategory& faces() const { return *cat; }
    int dim() const { return arr.dim; }
    const HomologyEngine& homology() const;
    // layers of rank d-1
    std::vector<int> one_layers() const;
    // layer of each hypertorus (rank 1, defining set {h})
    int layer_of_torus(int h) const;
    std::vector<int> all_planes() const;

    mutable std::shared_ptr<HomologyEngine> engine_;
};

std::shared_ptr<const SalvettiModel> build_model(const ToricArrangement& arr);

// ^M C, C_1, ..., C_k = op_{X_M}(-^M C) in A_0
struct ChoiceGallery {
    int layer = 0;
    SignVector chamber;
    Gallery gallery;
    int k() const { return (int)gallery.length(); }
};

std::vector<SignVector> adjacent_chambers(const SalvettiModel& m, const Flat& X);
// default ^M C: least adjacent chamber by sign vector
ChoiceGallery choice_gallery(const SalvettiModel& m, int M);
ChoiceGallery choice_gallery(const SalvettiModel& m, int M, const SignVector& MC);

struct PathData {
    int face = 0;
    std::vector<SignVector> chambers;  // C_0^F .. C_k^F (restricted, repeats removed)
    std::vector<SignVector> walls;     // W_1^F .. W_k^F
    std::vector<int> crossed;          // A_0 hyperplane of each wall
    std::vector<int> v, e, ebar;       // fiber elements: v_0..v_k, e_0..e_{k-1}, ebar_0..ebar_{k-1}
    int k() const { return (int)walls.size(); }
};

PathData build_path(const SalvettiModel& m, const SignVector& B, int F, const ChoiceGallery& g);

struct LambdaCycle {
    int layer = 0;
    SignVector B;
    std::vector<int> vertices;  // P_0, P_1, ... (faces of dimension 0 in M, in cycle order)
    std::vector<int> edges;     // G_0, G_1, ... with P_j -> G_j <- P_{j+1}
    std::vector<int> objects;   // objects of the support, in cycle order
    Chain chain;                // 1-chain on nerve morphisms; (v_0 -> e_0) at P_0 has coefficient 1
};

LambdaCycle build_lambda(const SalvettiModel& m, const SignVector& B, const ChoiceGallery& g);

struct SquareCycle {
    std::vector<int> objects;  // 4 objects
    Chain chain;
};

// Omega^(m) for m: F -> G with supp(G) a hypertorus, built from the chamber HC of A_0.
SquareCycle build_omega(const SalvettiModel& m, int fm, const SignVector& HC);
// Omega^(id_G) for the first codimension-1 face G of the hypertorus h
SquareCycle build_omega_torus(const SalvettiModel& m, int h, const SignVector& HC);
SquareCycle build_xi(const SalvettiModel& m, int h, const SignVector& B, int F, const ChoiceGallery& g);

// +1 if the hyperplane of h does not separate HC and B, else -1
int epsilon(const SalvettiModel& m, int h, const SignVector& B, const SignVector& HC);

struct BaseChange {
    bool holds = false;
    Chain difference;  // Lambda_B - Lambda_B' - sum Xi
    Chain witness;     // 2-chain with boundary = difference
    std::vector<std::pair<int, int>> terms;  // (vertex P, hypertorus H) of the Xi summands
};

BaseChange verify_base_change(const SalvettiModel& m, const SignVector& B, const SignVector& Bp,
                              const ChoiceGallery& g);

// Cellular functor between two models, with the simplex maps it induces.
struct CellularMap {
    std::shared_ptr<const SalvettiModel> source, target;
    Functor functor;
    std::vector<int> face_map;  // face of the source -> face of the target

    std::vector<int> simplex_map(int k) const;
    Chain push(int k, const Chain& c) const;
    Cochain pull(int k, const Cochain& phi) const;
};

// Phi_L: Sal(A) -> Sal(A_L / L_0); rejects L = T.
CellularMap map_phi(std::shared_ptr<const SalvettiModel> m, int L);
// Psi: Sal(A) -> Sal(A') for A' = {H_i : i in S}, of the same rank
CellularMap map_psi(std::shared_ptr<const SalvettiModel> m, const std::vector<int>& S);
// mu_g: (F,[G,C]) -> (gF,[G,C]); rejects g not stabilizing A
CellularMap map_mu(std::shared_ptr<const SalvettiModel> m, const RatVec& g);

// Image in H_1(T_c) = Z^d of a 1-chain under Sal(A) -> F(A) -> T_c.
std::vector<long long> torus_winding(const SalvettiModel& m, const Chain& c);

// Label of the face containing x in the periodic lift of arr.
Label point_label(const ToricArrangement& arr, const RatVec& x);

}  // namespace toric
