#pragma once
// Toric arrangements, layers and their poset.

#include "toric/exact_linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace toric {

struct Hypertorus {
    IntVec character;  // primitive
    Rat offset;        // in [0,1)
};

struct ToricArrangement {
    int dim = 0;
    std::vector<Hypertorus> tori;

    // Validates primitivity, normalizes offsets into [0,1), rejects duplicate hypertori.
    static ToricArrangement make(int dim, std::vector<Hypertorus> tori);
    std::size_t size() const { return tori.size(); }
    IntMatrix character_matrix() const;  // one row per hypertorus
    bool is_essential() const;
};

// Central arrangement of linear hyperplanes n.x = 0 in R^dim.
struct LinearArrangement {
    int dim = 0;
    std::vector<IntVec> normals;
};

// Flat of a central arrangement, identified by the hyperplanes containing it.
using Flat = std::vector<int>;

struct Layer {
    IntMatrix normal;   // row-HNF basis of the saturated annihilator lattice of L_0 (rank rows)
    IntMatrix tangent;  // row-HNF basis of the tangent lattice of L_0 (d - rank rows)
    RatVec base_point;  // some point of L, coordinates in [0,1)
    RatVec key;         // frac(normal * base_point); identifies L among translates of L_0
    int rank = 0;
    std::vector<int> defining_set;  // hypertori containing L

    bool contains_point(const RatVec& x) const;
    bool operator==(const Layer& o) const { return normal == o.normal && key == o.key; }
};

Layer make_layer(const IntMatrix& equations, const RatVec& point, const ToricArrangement& arr);

struct LayerPoset {
    std::vector<Layer> layers;  // sorted by rank, then (normal, key)
    std::vector<std::vector<int>> by_rank;
    std::vector<std::vector<char>> contains;  // contains[i][j]: L_j is a subset of L_i  (i <= j)
    std::vector<std::pair<int, int>> hasse;   // (i, j) with j covering i
    std::vector<Flat> flats;                  // X_L as the set of A_0 hyperplanes containing it
    int top() const { return 0; }
    int find(const Layer& L) const;
    int find_containing_point(const std::vector<int>& defining, const RatVec& x) const;
    bool leq(int i, int j) const { return contains[i][j]; }
};

// A_0 together with the map hypertorus -> (hyperplane, sign): character = sign * normal.
struct A0Data {
    LinearArrangement arr;
    std::vector<int> plane_of;
    std::vector<int> sign_of;
};

A0Data arrangement_A0(const ToricArrangement& arr);
IntVec normalize_sign(const IntVec& v, int* sign = nullptr);

LayerPoset build_layer_poset(const ToricArrangement& arr);

// Hyperplanes of A_0 in A[L] (one per hypertorus containing L), sorted.
std::vector<int> local_arrangement(const ToricArrangement& arr, const Layer& L);
LinearArrangement restrict_linear(const LinearArrangement& A, const std::vector<int>& idx);

// All hyperplanes of A that contain the common zero set of the given ones.
Flat flat_closure(const LinearArrangement& A, const std::vector<int>& planes);

struct Quotient {
    ToricArrangement arr;     // arrangement A_L / L_0 in T / L_0
    IntMatrix proj;           // rank x d, x -> proj * x realizes T -> T/L_0
    std::vector<int> torus_map;    // hypertorus of A -> hypertorus of the quotient or -1
    std::vector<int> torus_source; // hypertorus of the quotient -> hypertorus of A
};

Quotient quotient_arrangement(const ToricArrangement& arr, const Layer& L);
ToricArrangement subarrangement(const ToricArrangement& arr, const std::vector<int>& S);

struct StabilizerGroup {
    int dim = 0;
    std::vector<RatVec> elements;  // coset representatives in [0,1)^d, identity first
    std::vector<int> generated_from;
    std::size_t order() const { return elements.size(); }
};

RatVec translate(const RatVec& x, const RatVec& g);
StabilizerGroup essential_stabilizer(const ToricArrangement& arr);
StabilizerGroup stab_of_layer(const StabilizerGroup& g, const Layer& Y);

// Top-degree nbc sets of a central arrangement in the given total order (positions into A.normals).
std::vector<std::vector<int>> nbc_sets(const LinearArrangement& A, const std::vector<int>& order, int size);

// Coefficients c_0..c_d.
std::vector<Int> poincare_polynomial(const ToricArrangement& arr);

}  // namespace toric
