#pragma once
// Input specs and JSON / CSV / DOT emission.

#include "toric/arithmetic_matroid.hpp"
#include "toric/ring_presentation.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace toric {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A chamber of A_0, given either by its sign string over the A_0 hyperplanes or by a point.
struct ChamberRef {
    std::string signs;
    RatVec point;
    bool operator==(const ChamberRef&) const = default;
};

// Choice overrides in model-independent form: layers are named by layer_label ("T", "H<h>",
// "L<index>"), chambers by ChamberRef. B_default applies to every layer without its own entry.
struct ChoiceSpec {
    std::optional<ChamberRef> B_default;
    std::map<std::string, ChamberRef> B;
    std::vector<std::string> M;
    std::map<std::string, std::vector<std::string>> N;
    std::map<int, ChamberRef> HC;
    std::map<std::string, ChamberRef> MC;
    bool HC_from_B = false;  // HC(h) = B(H_h) when not given
    bool MC_from_B = false;  // MC(M) = B(M) when not given
    std::string order = "by_index";
    bool empty() const;
    bool operator==(const ChoiceSpec&) const = default;
};

struct ArrangementSpec {
    ToricArrangement arr;
    ChoiceSpec choices;
};

bool operator==(const ToricArrangement& a, const ToricArrangement& b);

// Diagnostics name the offending field ("hypertori[1].character") or the line of a syntax error.
ArrangementSpec parse_spec(const std::string& text);
ArrangementSpec parse_spec(const json& j);
ChoiceSpec parse_choices(const json& j);
json to_json(const ArrangementSpec& s);
json to_json(const ChoiceSpec& c);

ChoiceOverrides resolve_choices(const SalvettiModel& m, const ChoiceSpec& c);
SignVector resolve_chamber(const SalvettiModel& m, const ChamberRef& r);
int resolve_layer(const SalvettiModel& m, const std::string& label);

// The worked example: characters (1,0), (1,2), (0,1), offsets 0, with B(H2) = B1 (at (-3,1)),
// B(L) = B0 (at (-1,1)) otherwise, M = {H0, H2} and reversed nbc order.
ArrangementSpec paper_example();

// matrices as row lists; either a JSON array of rows, {"matrix": rows}, or whitespace text
IntMatrix parse_matrix(const std::string& text);
json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);
json to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);

json layers_json(const ToricArrangement& arr, const LayerPoset& P);
// Rebuilds the layers (and Hasse edges) of a layers_json dump.
LayerPoset layers_from_json(const json& j);
std::string layers_dot(const LayerPoset& P);

json faces_json(const FaceCategory& cat);
std::string chamber_graph_dot(const LinearFaces& F);

json salvetti_json(const SalvettiModel& m, bool with_boundaries);

// formula route always; SNF route (built when m is null) only for essential arrangements
json betti_json(const ToricArrangement& arr, const SalvettiModel* m);
json generators_json(const RingPresentation& R);
json table_json(const RestrictionTable& t);
json matroid_data_json(const IntMatrix& A);

}  // namespace toric
