#pragma once
// Integral homology of sparse chain complexes, cochains and cup products on nerves.

#include "toric/chain_complex.hpp"
#include "toric/exact_linalg.hpp"

#include <memory>
#include <optional>

namespace toric {

using Cochain = RatVec;  // dense, indexed by cells of one degree

struct HomologyGroup {
    int degree = 0;
    int rank = 0;
    std::vector<Int> torsion;        // invariants > 1
    std::vector<Chain> basis;        // free generators (integral cycles)
    std::vector<Cochain> dual;       // integral cocycles with dual[j](basis[i]) = delta_ij, killing boundaries
};

// Reduces the complex once by unit-pivot elimination, then answers homology queries in any degree
// below complex.top(); degree top() is exact only if the complex is not truncated there.
class HomologyEngine {
public:
    explicit HomologyEngine(const ChainComplex& C);
    ~HomologyEngine();
    HomologyEngine(const HomologyEngine&) = delete;
    HomologyEngine& operator=(const HomologyEngine&) = delete;

    const ChainComplex& complex() const;
    const HomologyGroup& group(int k) const;
    int betti(int k) const { return group(k).rank; }
    std::vector<int> betti_numbers(int kmax) const;

    bool is_cycle(int k, const Chain& z) const;
    // coordinates of the class of a cycle in the free basis
    std::vector<Int> coordinates(int k, const Chain& z) const;
    // z = boundary(w) for some w?
    bool is_boundary(int k, const Chain& z, Chain* witness = nullptr) const;
    // values of a cocycle on the basis cycles = coordinates of its class in the dual basis
    std::vector<Rat> cocycle_coordinates(int k, const Cochain& phi) const;
    bool is_cocycle(int k, const Cochain& phi) const;

    std::size_t residual_size(int k) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Rat pair(const Chain& z, const Cochain& phi);
Cochain coboundary(const ChainComplex& C, int k, const Cochain& phi);  // degree k -> k+1, empty above top()

// Alexander-Whitney cup product on the nerve; zero cochain when p+q exceeds the nerve degree.
Cochain cup_product(const NerveComplex& N, int p, const Cochain& a, int q, const Cochain& b);
Cochain unit_cochain(const NerveComplex& N);

// Cocycles dual to the given cycles in H_k over Q (rejects dependent input).
std::vector<Cochain> dual_basis_cochains(const HomologyEngine& H, int k, const std::vector<Chain>& cycles);

// Pullback of a degree-k cochain along an injective simplex map (target ids of each source simplex).
Cochain pull_back(const std::vector<int>& simplex_map, const Cochain& phi);
Chain push_forward(const std::vector<int>& simplex_map, const Chain& c);

// Solve sum_j x_j v_j = w over Q; nothing if w is not in the span.
std::optional<RatVec> solve_in_span(const std::vector<RatVec>& v, const RatVec& w);

}  // namespace toric
