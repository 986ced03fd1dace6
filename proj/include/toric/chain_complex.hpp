#pragma once
// Sparse integer chain complexes and nerves of finite acyclic categories.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

namespace toric {

// sorted by cell index, no zero entries
using SparseVec = std::vector<std::pair<int, long long>>;
// integer chain: cell index -> coefficient
using Chain = std::map<int, long long>;

struct ChainComplex {
    std::vector<std::size_t> dims;            // number of cells per degree
    std::vector<std::vector<SparseVec>> bd;   // bd[k][j] = boundary of the j-th k-cell (bd[0] empty)
    int top() const { return (int)dims.size() - 1; }
};

Chain boundary(const ChainComplex& C, int k, const Chain& c);

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h ^= (std::size_t)x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// A finite acyclic category given by its non-identity morphisms.
struct Category {
    int num_objects = 0;
    std::vector<int> src, tgt;
    std::vector<std::vector<int>> out;  // sorted
    // composite of a followed by b (tgt a == src b); never an identity in an acyclic category
    std::function<int(int, int)> compose;
};

struct NerveComplex {
    int num_objects = 0;
    // simplices[0][i] = {object}; simplices[k][i] = chain of k composable morphisms
    std::vector<std::vector<std::vector<int>>> simplices;
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index;
    std::vector<int> mor_src, mor_tgt;
    ChainComplex complex;

    int degree() const { return (int)simplices.size() - 1; }
    std::size_t count(int k) const { return k < (int)simplices.size() ? simplices[k].size() : 0; }
    int find(int k, const std::vector<int>& s) const;
    std::vector<int> vertices(int k, int id) const;
    int first_vertex(int k, int id) const;
    int last_vertex(int k, int id) const;
};

NerveComplex nerve(const Category& c, int max_degree);
// The nerve of the full subcategory on the objects with mask[o] set. to_full[k][i] is the id of
// the i-th k-simplex in `full`.
NerveComplex sub_nerve(const NerveComplex& full, const std::vector<char>& mask,
                       std::vector<std::vector<int>>* to_full = nullptr);

}  // namespace toric
