#pragma once
// Cohomology ring of Sal(A) through its restrictions to the subcomplexes S_L.
//
// A class in H^k(Sal) (or of a subcomplex) is stored as its vector of values on the integral
// homology basis of that complex, i.e. as coordinates in the dual basis. Torsion-freeness makes
// this faithful.

#include "toric/generators.hpp"

#include <map>
#include <memory>
#include <string>

namespace toric {

enum class NbcOrder { by_index, reversed };

struct ChoiceOverrides {
    std::map<int, SignVector> B;             // layer -> chamber of A_0
    std::vector<int> M;                      // 1-layers spanning H_1(S_T)
    std::map<int, std::vector<int>> N;       // layer -> 1-layers contained in it
    std::map<int, SignVector> HC;            // hypertorus -> chamber adjacent to its hyperplane
    std::map<int, SignVector> MC;            // 1-layer -> chamber adjacent to X_M
    NbcOrder order = NbcOrder::by_index;
};

struct ChoiceData {
    std::vector<SignVector> B, F;             // per layer; F(L) = closure(B(L)) cap X_L
    std::vector<int> M;                       // M_1..M_r
    std::vector<std::vector<int>> N;          // N_1(L)..N_{dim L}(L); N[top] = M
    std::vector<SignVector> HC;               // per hypertorus
    std::map<int, ChoiceGallery> gallery;     // per 1-layer
    NbcOrder order = NbcOrder::by_index;
};

ChoiceData make_choices(const SalvettiModel& m, const ChoiceOverrides& o = {});

struct CommonChamberReport {
    bool exists = false;
    std::vector<std::pair<SignVector, std::vector<int>>> failing;  // chamber -> layers it misses
};

CommonChamberReport check_common_chamber(const ToricArrangement& arr);

struct NbcSet {
    int layer = 0;
    std::vector<int> tori;  // ascending hypertorus indices
    bool operator==(const NbcSet& o) const { return layer == o.layer && tori == o.tori; }
};

std::vector<NbcSet> nbc_basis(const SalvettiModel& m, int L, NbcOrder order = NbcOrder::by_index);

// S_{Y,F0} with its own homology
struct Subcomplex {
    int layer = 0;
    SignVector F0;
    NerveComplex nerve;
    std::vector<std::vector<int>> to_full;
    std::map<int, int> edge_from_full;  // full 1-simplex -> 1-simplex of S
    std::unique_ptr<HomologyEngine> H;
    // push[k]: full homology coordinates of each basis cycle of H_k(S)
    mutable std::map<int, std::vector<RatVec>> push;
};

struct LayerBasis {
    int layer = 0;
    std::vector<int> N;                // lambda part
    std::vector<int> tori;             // omega part: hypertori containing L, ascending
    std::vector<Chain> cycles;         // B^_L on the full nerve: lambdas then omegas
    std::vector<RatVec> duals;         // B_L as classes of S_L
    std::vector<std::string> labels;
};

struct OmegaSL {
    NbcSet S;
    RatVec cls;           // H^{rk L}(Sal; Q)
    bool integral = false;
    bool validated = false;  // conditions hold against every S_{Y,F}
};

struct InjectivityReport {
    std::vector<int> betti, rank, kernel;  // per degree 0..d
    bool injective() const;
};

struct ModuleGenerators {
    std::vector<OmegaSL> omegas;
    std::vector<RatVec> forms;              // dx_1..dx_d pulled back to H^1(Sal)
    std::vector<int> betti;
    std::vector<int> span_rank;             // rank of the spanning family per degree
    std::vector<std::vector<Int>> invariants;  // SNF of the family in each degree
    bool spans() const;
};

struct RestrictionTable {
    std::vector<std::string> rows, columns;
    std::vector<int> row_degree, column_layer;
    // monomial basis of H^k(S_L) for each column and degree
    std::vector<std::map<int, std::vector<std::string>>> monomials;
    std::vector<std::vector<RatVec>> cells;  // [row][column], coefficients on the monomials
    std::string cell_text(std::size_t r, std::size_t c) const;
    std::string csv() const;
};

std::string layer_label(const SalvettiModel& m, int L);
std::string layer_label(const LayerPoset& P, int L);

class RingPresentation {
public:
    RingPresentation(std::shared_ptr<const SalvettiModel> m, ChoiceData c);
    explicit RingPresentation(std::shared_ptr<const SalvettiModel> m, const ChoiceOverrides& o = {});

    const SalvettiModel& model() const { return *m_; }
    std::shared_ptr<const SalvettiModel> model_ptr() const { return m_; }
    const ChoiceData& choices() const { return c_; }
    int degree_max() const { return m_->dim(); }
    int betti(int k) const;

    // classes on Sal
    RatVec homology_coords(int k, const Chain& z) const;
    Rat evaluate(int k, const RatVec& cls, const Chain& z) const;
    Cochain cocycle(int k, const RatVec& cls) const;
    RatVec class_of(int k, const Cochain& phi) const;
    RatVec cup(int p, const RatVec& a, int q, const RatVec& b) const;
    RatVec unit() const;

    const Subcomplex& sub(int Y, const SignVector& F0) const;
    const Subcomplex& S_L(int L) const { return sub(L, c_.F.at(L)); }
    RatVec restrict_to(int k, const RatVec& cls, const Subcomplex& S) const;
    RatVec sub_cup(const Subcomplex& S, int p, const RatVec& a, int q, const RatVec& b) const;

    // B^(A) = lambda^{M_i}_{F(T)} then omega_H; B(A) its dual
    const std::vector<Chain>& basis_cycles() const { return bhat_; }
    const std::vector<RatVec>& basis_classes() const { return b_; }
    const RatVec& lambda(int i) const { return b_.at(i); }
    const RatVec& omega(int h) const { return b_.at(c_.M.size() + h); }
    Chain lambda_cycle(int M, const SignVector& B) const;
    Chain omega_cycle(int h, const Subcomplex* inside = nullptr) const;

    const LayerBasis& layer_basis(int L) const;
    // a_{hi}: lambda^N_{F(T)} = sum_i a_i lambda^{M_i}_{F(T)}
    RatVec torus_coefficients(int N) const;

    // rows: B_L(A) elements, columns: B(A) elements
    RatMatrix phi_star(int L) const;
    RatMatrix phi_star_formula(int L, bool literal = false) const;

    std::vector<NbcSet> nbc(int L) const { return nbc_basis(*m_, L, c_.order); }
    RatVec omega_product(const std::vector<int>& S) const;
    OmegaSL build_omega_SL(const NbcSet& S) const;
    // For Ybar the smallest layer of C(A_S) containing Y: |Stab_{G_S}(Ybar)| and whether L lies in Ybar.
    std::pair<Int, bool> stabilizer_condition(const NbcSet& S, int Y) const;
    // failing (Y, F0) pairs of conditions i)/ii)
    std::vector<std::pair<int, SignVector>> check_omega_SL(const NbcSet& S, const RatVec& cls) const;

    InjectivityReport verify_injectivity() const;
    ModuleGenerators module_generators() const;
    // monomial basis of H^k(S_L): lambda^{N_h} products times omega_S for S in nbc(A[L])
    std::vector<RatVec> layer_monomials(int L, int k, std::vector<std::string>* labels = nullptr) const;
    RatVec in_layer_monomials(int L, int k, const RatVec& restricted) const;
    RestrictionTable restriction_table() const;

    std::string chamber_label(const SignVector& C) const;

private:
    std::shared_ptr<const SalvettiModel> m_;
    ChoiceData c_;
    std::vector<Chain> bhat_;
    std::vector<RatVec> b_;
    mutable std::map<std::pair<int, SignVector>, std::unique_ptr<Subcomplex>> subs_;
    mutable std::map<int, LayerBasis> layer_bases_;
    mutable std::map<std::pair<int, int>, std::pair<std::vector<RatVec>, std::vector<std::string>>> monomials_;
    void init();
    const std::vector<RatVec>& pushes(const Subcomplex& S, int k) const;
};

// Pull back a class of the target of f to a class of the source model.
RatVec pull_class(const CellularMap& f, const RingPresentation& src, const RingPresentation& tgt, int k,
                  const RatVec& cls);

}  // namespace toric
