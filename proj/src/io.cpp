#include "toric/io.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ParseError(field + ": " + what);
}

json int_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Int int_from(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Int((long)j.get<long long>());
    if (j.is_string()) {
        Int x;
        if (x.set_str(j.get<std::string>(), 10) != 0) fail(field, "not an integer: '" + j.get<std::string>() + "'");
        return x;
    }
    fail(field, "expected an integer");
}

Rat rat_from(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rat((long)j.get<long long>());
    if (!j.is_string()) fail(field, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(field, e.what());
    }
}

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

std::string label_field(const std::string& base, const std::string& key) { return base + "." + key; }

ChamberRef chamber_from(const json& j, const std::string& field) {
    ChamberRef r;
    if (j.is_string()) {
        r.signs = j.get<std::string>();
        if (r.signs.empty() || r.signs.find_first_not_of("+-") != std::string::npos)
            fail(field, "sign string must consist of '+' and '-'");
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) r.point.push_back(rat_from(j[i], field + "[" + std::to_string(i) + "]"));
        if (r.point.empty()) fail(field, "empty point");
    } else {
        fail(field, "expected a sign string or a point");
    }
    return r;
}

json chamber_json(const ChamberRef& r) {
    if (!r.signs.empty()) return r.signs;
    return toric::to_json(r.point);
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());  // carries line and column
    }
}

json chain_json(const Chain& c) {
    json a = json::array();
    for (auto& [id, v] : c) a.push_back({id, v});
    return a;
}

std::string poincare_text(const std::vector<int>& b) {
    std::string s;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] == 0) continue;
        if (!s.empty()) s += " + ";
        if (k == 0 || b[k] != 1) s += std::to_string(b[k]);
        if (k >= 1) s += "t";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

bool operator==(const ToricArrangement& a, const ToricArrangement& b) {
    if (a.dim != b.dim || a.tori.size() != b.tori.size()) return false;
    for (std::size_t i = 0; i < a.tori.size(); ++i)
        if (a.tori[i].character != b.tori[i].character || a.tori[i].offset != b.tori[i].offset) return false;
    return true;
}

bool ChoiceSpec::empty() const {
    return !B_default && B.empty() && M.empty() && N.empty() && HC.empty() && MC.empty() && !HC_from_B &&
           !MC_from_B && order == "by_index";
}

ArrangementSpec parse_spec(const std::string& text) { return parse_spec(parse_json_text(text)); }

ArrangementSpec parse_spec(const json& j) {
    if (!j.is_object()) fail("spec", "expected an object");
    const json& jd = member(j, "dimension", "");
    if (!jd.is_number_integer() || jd.get<long long>() < 1) fail("dimension", "expected a positive integer");
    const int d = (int)jd.get<long long>();
    const json& jt = member(j, "hypertori", "");
    if (!jt.is_array()) fail("hypertori", "expected an array");
    std::vector<Hypertorus> tori;
    for (std::size_t i = 0; i < jt.size(); ++i) {
        std::string f = "hypertori[" + std::to_string(i) + "]";
        const json& jc = member(jt[i], "character", f);
        if (!jc.is_array() || jc.size() != (std::size_t)d)
            fail(f + ".character", "expected " + std::to_string(d) + " integers");
        Hypertorus h;
        for (std::size_t k = 0; k < jc.size(); ++k)
            h.character.push_back(int_from(jc[k], f + ".character[" + std::to_string(k) + "]"));
        Int g = gcd_all(h.character);
        if (g == 0) fail(f + ".character", "zero character");
        if (g != 1) fail(f + ".character", "not primitive (gcd " + g.get_str() + "); the hypertorus would be disconnected");
        auto off = jt[i].find("offset");
        h.offset = off == jt[i].end() ? Rat(0) : rat_from(*off, f + ".offset");
        tori.push_back(h);
    }
    ArrangementSpec s;
    try {
        s.arr = ToricArrangement::make(d, tori);
    } catch (const std::invalid_argument& e) {
        fail("hypertori", e.what());
    }
    if (auto c = j.find("choices"); c != j.end()) s.choices = parse_choices(*c);
    return s;
}

ChoiceSpec parse_choices(const json& j) {
    const std::string base = "choices";
    if (!j.is_object()) fail(base, "expected an object");
    static const std::vector<std::string> known = {"B_default", "B", "M", "N", "HC", "MC", "HC_from_B", "MC_from_B", "order"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) fail(label_field(base, it.key()), "unknown key");
    ChoiceSpec c;
    if (auto it = j.find("B_default"); it != j.end()) c.B_default = chamber_from(*it, base + ".B_default");
    auto chamber_map = [&](const char* key, auto& out) {
        auto it = j.find(key);
        if (it == j.end()) return;
        std::string f = label_field(base, key);
        if (!it->is_object()) fail(f, "expected an object");
        for (auto e = it->begin(); e != it->end(); ++e) {
            std::string fe = f + "." + e.key();
            if constexpr (std::is_same_v<std::decay_t<decltype(out)>, std::map<int, ChamberRef>>) {
                std::size_t pos = 0;
                int h = -1;
                try {
                    h = std::stoi(e.key(), &pos);
                } catch (const std::exception&) {
                    pos = 0;
                }
                if (pos != e.key().size() || h < 0) fail(fe, "expected a hypertorus index");
                out[h] = chamber_from(e.value(), fe);
            } else {
                out[e.key()] = chamber_from(e.value(), fe);
            }
        }
    };
    chamber_map("B", c.B);
    chamber_map("HC", c.HC);
    chamber_map("MC", c.MC);
    auto labels = [&](const json& a, const std::string& f) {
        if (!a.is_array()) fail(f, "expected an array of layer labels");
        std::vector<std::string> r;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_string()) fail(f + "[" + std::to_string(i) + "]", "expected a layer label");
            r.push_back(a[i].get<std::string>());
        }
        return r;
    };
    if (auto it = j.find("M"); it != j.end()) c.M = labels(*it, base + ".M");
    if (auto it = j.find("N"); it != j.end()) {
        if (!it->is_object()) fail(base + ".N", "expected an object");
        for (auto e = it->begin(); e != it->end(); ++e) c.N[e.key()] = labels(e.value(), base + ".N." + e.key());
    }
    for (auto [key, flag] : {std::pair{"HC_from_B", &c.HC_from_B}, std::pair{"MC_from_B", &c.MC_from_B}}) {
        auto it = j.find(key);
        if (it == j.end()) continue;
        if (!it->is_boolean()) fail(label_field(base, key), "expected a boolean");
        *flag = it->get<bool>();
    }
    if (auto it = j.find("order"); it != j.end()) {
        if (!it->is_string() || (*it != "by_index" && *it != "reversed"))
            fail(base + ".order", "expected \"by_index\" or \"reversed\"");
        c.order = it->get<std::string>();
    }
    return c;
}

json to_json(const ChoiceSpec& c) {
    json j = json::object();
    if (c.B_default) j["B_default"] = chamber_json(*c.B_default);
    if (!c.B.empty()) {
        json b = json::object();
        for (auto& [k, v] : c.B) b[k] = chamber_json(v);
        j["B"] = b;
    }
    if (!c.M.empty()) j["M"] = c.M;
    if (!c.N.empty()) j["N"] = c.N;
    if (!c.HC.empty()) {
        json b = json::object();
        for (auto& [k, v] : c.HC) b[std::to_string(k)] = chamber_json(v);
        j["HC"] = b;
    }
    if (!c.MC.empty()) {
        json b = json::object();
        for (auto& [k, v] : c.MC) b[k] = chamber_json(v);
        j["MC"] = b;
    }
    if (c.HC_from_B) j["HC_from_B"] = true;
    if (c.MC_from_B) j["MC_from_B"] = true;
    if (c.order != "by_index") j["order"] = c.order;
    return j;
}

json to_json(const ArrangementSpec& s) {
    json j;
    j["dimension"] = s.arr.dim;
    j["hypertori"] = json::array();
    for (auto& h : s.arr.tori) {
        json c = json::array();
        for (auto& x : h.character) c.push_back(int_json(x));
        j["hypertori"].push_back({{"character", c}, {"offset", to_string(h.offset)}});
    }
    if (!s.choices.empty()) j["choices"] = to_json(s.choices);
    return j;
}

SignVector resolve_chamber(const SalvettiModel& m, const ChamberRef& r) {
    const auto& normals = m.cat->a0.arr.normals;
    SignVector s;
    if (!r.signs.empty()) {
        if (r.signs.size() != normals.size())
            throw ParseError("chamber '" + r.signs + "': expected " + std::to_string(normals.size()) + " signs");
        for (char ch : r.signs) s.push_back(ch == '+' ? 1 : -1);
    } else {
        if (r.point.size() != (std::size_t)m.dim()) throw ParseError("chamber point has the wrong dimension");
        for (auto& n : normals) {
            Rat v = 0;
            for (std::size_t j = 0; j < n.size(); ++j) v += Rat(n[j]) * r.point[j];
            if (v == 0) throw ParseError("chamber point lies on a hyperplane of A_0");
            s.push_back(v > 0 ? 1 : -1);
        }
    }
    int f = m.a0faces.find(s);
    if (f < 0 || m.a0faces.dims[f] != m.dim()) throw ParseError("not a chamber of A_0: " + sign_string(s, m.all_planes()));
    return s;
}

int resolve_layer(const SalvettiModel& m, const std::string& label) {
    const auto& P = m.cat->poset;
    auto number = [&](std::size_t from) {
        std::size_t pos = 0;
        int v = -1;
        try {
            v = std::stoi(label.substr(from), &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (from + pos != label.size() || v < 0) throw ParseError("bad layer label '" + label + "'");
        return v;
    };
    if (label == "T") return P.top();
    if (!label.empty() && label[0] == 'H') {
        int h = number(1);
        if (h >= (int)m.arr.size()) throw ParseError("no hypertorus " + label);
        return m.layer_of_torus(h);
    }
    if (!label.empty() && label[0] == 'L') {
        int L = number(1);
        if (L >= (int)P.layers.size()) throw ParseError("no layer " + label);
        return L;
    }
    throw ParseError("bad layer label '" + label + "'");
}

ChoiceOverrides resolve_choices(const SalvettiModel& m, const ChoiceSpec& c) {
    ChoiceOverrides o;
    const int nl = (int)m.cat->poset.layers.size();
    if (c.B_default) {
        auto B = resolve_chamber(m, *c.B_default);
        for (int L = 0; L < nl; ++L) o.B[L] = B;
    }
    for (auto& [k, v] : c.B) o.B[resolve_layer(m, k)] = resolve_chamber(m, v);
    for (auto& k : c.M) o.M.push_back(resolve_layer(m, k));
    for (auto& [k, v] : c.N) {
        auto& dst = o.N[resolve_layer(m, k)];
        for (auto& x : v) dst.push_back(resolve_layer(m, x));
    }
    for (auto& [h, v] : c.HC) {
        if (h >= (int)m.arr.size()) throw ParseError("choices.HC: no hypertorus " + std::to_string(h));
        o.HC[h] = resolve_chamber(m, v);
    }
    if (c.HC_from_B)
        for (int h = 0; h < (int)m.arr.size(); ++h)
            if (!o.HC.count(h) && o.B.count(m.layer_of_torus(h))) o.HC[h] = o.B[m.layer_of_torus(h)];
    for (auto& [k, v] : c.MC) o.MC[resolve_layer(m, k)] = resolve_chamber(m, v);
    if (c.MC_from_B)
        for (int M : m.one_layers())
            if (!o.MC.count(M) && o.B.count(M)) o.MC[M] = o.B[M];
    o.order = c.order == "reversed" ? NbcOrder::reversed : NbcOrder::by_index;
    return o;
}

ArrangementSpec paper_example() {
    auto h = [](long a, long b) { return Hypertorus{IntVec{Int(a), Int(b)}, Rat(0)}; };
    ArrangementSpec s;
    s.arr = ToricArrangement::make(2, {h(1, 0), h(1, 2), h(0, 1)});
    s.choices.B_default = ChamberRef{"", {Rat(-1), Rat(1)}};
    s.choices.B["H2"] = ChamberRef{"", {Rat(-3), Rat(1)}};
    s.choices.M = {"H0", "H2"};
    s.choices.HC_from_B = true;
    s.choices.MC_from_B = true;
    s.choices.order = "reversed";
    return s;
}

json to_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) r.push_back(int_json(m(i, j)));
        a.push_back(r);
    }
    return a;
}

IntMatrix matrix_from_json(const json& j0) {
    const json& j = j0.is_object() ? member(j0, "matrix", "") : j0;
    if (!j.is_array()) fail("matrix", "expected an array of rows");
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string f = "matrix[" + std::to_string(i) + "]";
        if (!j[i].is_array()) fail(f, "expected a row");
        IntVec r;
        for (std::size_t k = 0; k < j[i].size(); ++k) r.push_back(int_from(j[i][k], f + "[" + std::to_string(k) + "]"));
        if (!rows.empty() && r.size() != rows[0].size()) fail(f, "row length differs from row 0");
        rows.push_back(r);
    }
    return IntMatrix::from_rows(rows);
}

IntMatrix parse_matrix(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{'))
        return matrix_from_json(parse_json_text(text));
    std::vector<IntVec> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string tok;
        IntVec r;
        while (ls >> tok) {
            Int x;
            if (x.set_str(tok, 10) != 0) throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
            r.push_back(x);
        }
        if (r.empty()) continue;
        if (!rows.empty() && r.size() != rows[0].size())
            throw ParseError("line " + std::to_string(lineno) + ": row length differs from the first row");
        rows.push_back(r);
    }
    if (rows.empty()) throw ParseError("empty matrix");
    return IntMatrix::from_rows(rows);
}

json to_json(const RatVec& v) {
    json a = json::array();
    for (auto& q : v) a.push_back(to_string(q));
    return a;
}

RatVec ratvec_from_json(const json& j) {
    if (!j.is_array()) fail("vector", "expected an array");
    RatVec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rat_from(j[i], "vector[" + std::to_string(i) + "]"));
    return v;
}

json layers_json(const ToricArrangement& arr, const LayerPoset& P) {
    IntMatrix chars = arr.character_matrix().transpose();
    json j;
    j["dimension"] = arr.dim;
    j["layers"] = json::array();
    for (std::size_t i = 0; i < P.layers.size(); ++i) {
        const auto& L = P.layers[i];
        j["layers"].push_back({{"index", i},
                               {"label", layer_label(P, (int)i)},
                               {"rank", L.rank},
                               {"defining_set", L.defining_set},
                               {"multiplicity", int_json(multiplicity(chars, L.defining_set))},
                               {"base_point", to_json(L.base_point)},
                               {"key", to_json(L.key)},
                               {"normal", to_json(L.normal)},
                               {"tangent", to_json(L.tangent)},
                               {"flat", P.flats[i]}});
    }
    json h = json::array();
    for (auto& [a, b] : P.hasse) h.push_back({a, b});
    j["hasse"] = h;
    return j;
}

LayerPoset layers_from_json(const json& j) {
    LayerPoset P;
    const json& jl = member(j, "layers", "");
    const int d = member(j, "dimension", "").get<int>();
    int maxrank = 0;
    for (std::size_t i = 0; i < jl.size(); ++i) {
        std::string f = "layers[" + std::to_string(i) + "]";
        Layer L;
        L.rank = member(jl[i], "rank", f).get<int>();
        L.defining_set = member(jl[i], "defining_set", f).get<std::vector<int>>();
        L.base_point = ratvec_from_json(member(jl[i], "base_point", f));
        L.key = ratvec_from_json(member(jl[i], "key", f));
        L.normal = matrix_from_json(member(jl[i], "normal", f));
        L.tangent = matrix_from_json(member(jl[i], "tangent", f));
        // empty row lists lose their width
        if (L.normal.rows == 0) L.normal = IntMatrix(0, d);
        if (L.tangent.rows == 0) L.tangent = IntMatrix(0, d);
        P.flats.push_back(member(jl[i], "flat", f).get<Flat>());
        maxrank = std::max(maxrank, L.rank);
        P.layers.push_back(L);
    }
    P.by_rank.assign(std::max(maxrank, d) + 1, {});
    for (std::size_t i = 0; i < P.layers.size(); ++i) P.by_rank[P.layers[i].rank].push_back((int)i);
    const std::size_t n = P.layers.size();
    P.contains.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) P.contains[i][i] = 1;
    for (auto& e : member(j, "hasse", "")) {
        auto ab = e.get<std::pair<int, int>>();
        P.hasse.push_back(ab);
        P.contains[ab.first][ab.second] = 1;
    }
    // layers are sorted by rank, so a single pass in reverse closes transitively
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t k = i + 1; k < n; ++k)
            if (P.contains[i][k])
                for (std::size_t l = k; l < n; ++l)
                    if (P.contains[k][l]) P.contains[i][l] = 1;
    return P;
}

std::string layers_dot(const LayerPoset& P) {
    std::ostringstream o;
    o << "digraph layers {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < P.layers.size(); ++i) {
        std::string ds;
        for (int h : P.layers[i].defining_set) ds += (ds.empty() ? "" : ",") + std::to_string(h);
        o << "  l" << i << " [label=\"" << layer_label(P, (int)i) << "\\n{" << ds << "}\"];\n";
    }
    for (auto& [a, b] : P.hasse) o << "  l" << b << " -> l" << a << ";\n";
    o << "}\n";
    return o.str();
}

json faces_json(const FaceCategory& cat) {
    json j;
    std::vector<int> by_dim(cat.arr.dim + 1, 0);
    j["faces"] = json::array();
    for (std::size_t i = 0; i < cat.faces.size(); ++i) {
        const auto& f = cat.faces[i];
        ++by_dim[f.dim];
        j["faces"].push_back({{"index", i},
                              {"dim", f.dim},
                              {"label", f.label},
                              {"support", f.support},
                              {"planes", f.planes},
                              {"witness", to_json(f.witness)}});
    }
    j["morphisms"] = json::array();
    for (auto& m : cat.morphisms) {
        if (m.identity) continue;
        j["morphisms"].push_back({{"source", m.source},
                                  {"target", m.target},
                                  {"shift", m.shift},
                                  {"attach", sign_string(m.attach, cat.faces[m.source].planes)}});
    }
    j["cells_by_dimension"] = by_dim;
    j["euler_characteristic"] = cat.euler_characteristic();
    return j;
}

std::string chamber_graph_dot(const LinearFaces& F) {
    std::ostringstream o;
    o << "graph chambers {\n";
    for (int c : F.chambers) o << "  c" << c << " [label=\"" << sign_string(F.faces[c], F.planes) << "\"];\n";
    for (std::size_t a = 0; a < F.chambers.size(); ++a)
        for (std::size_t b = a + 1; b < F.chambers.size(); ++b) {
            auto sep = separating_set(F.faces[F.chambers[a]], F.faces[F.chambers[b]], F.planes);
            if (sep.size() == 1) o << "  c" << F.chambers[a] << " -- c" << F.chambers[b] << " [label=\"" << sep[0] << "\"];\n";
        }
    o << "}\n";
    return o.str();
}

json salvetti_json(const SalvettiModel& m, bool with_boundaries) {
    const auto& S = m.sal;
    json j;
    j["objects"] = json::array();
    for (std::size_t i = 0; i < S.objects.size(); ++i) {
        const auto& ob = S.objects[i];
        const auto& fib = S.fiber(ob.face);
        j["objects"].push_back({{"index", i},
                                {"face", ob.face},
                                {"G", sign_string(fib.face(ob.elem), fib.faces.planes)},
                                {"C", sign_string(fib.chamber(ob.elem), fib.faces.planes)}});
    }
    j["morphisms"] = json::array();
    for (auto& mo : S.morphisms) j["morphisms"].push_back({mo.source, mo.target, mo.fm});
    std::vector<std::size_t> counts;
    for (int k = 0; k <= m.nerve.degree(); ++k) counts.push_back(m.nerve.count(k));
    j["nerve_simplices"] = counts;
    if (with_boundaries) {
        json b = json::array();
        for (int k = 1; k <= m.nerve.complex.top(); ++k) {
            json col = json::array();
            for (auto& v : m.nerve.complex.bd[k]) {
                json e = json::array();
                for (auto& [r, c] : v) e.push_back({r, c});
                col.push_back(e);
            }
            b.push_back(col);
        }
        j["boundary"] = b;
    }
    return j;
}

json betti_json(const ToricArrangement& arr, const SalvettiModel* m) {
    std::vector<int> formula;
    for (auto& c : poincare_polynomial(arr)) formula.push_back((int)c.get_si());
    json j;
    j["formula"] = formula;
    j["poincare"] = poincare_text(formula);
    if (!arr.is_essential()) {
        // the Salvetti model needs an essential arrangement
        j["snf"] = nullptr;
        j["match"] = nullptr;
        return j;
    }
    std::shared_ptr<const SalvettiModel> own;
    if (!m) {
        own = build_model(arr);
        m = own.get();
    }
    auto snf = m->homology().betti_numbers(arr.dim);
    j["snf"] = snf;
    j["match"] = formula == snf;
    return j;
}

json generators_json(const RingPresentation& R) {
    const auto& m = R.model();
    const auto& c = R.choices();
    json j;
    j["H1_basis"] = json::array();
    const auto& cyc = R.basis_cycles();
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        json e;
        if (i < c.M.size()) {
            e["label"] = "lambda^{" + layer_label(m, c.M[i]) + "}_{" + R.chamber_label(c.F[m.cat->poset.top()]) + "}";
            e["layer"] = layer_label(m, c.M[i]);
        } else {
            e["label"] = "omega_{H" + std::to_string(i - c.M.size()) + "}";
        }
        e["chain"] = chain_json(cyc[i]);
        e["homology"] = to_json(R.homology_coords(1, cyc[i]));
        j["H1_basis"].push_back(e);
    }
    auto gens = R.module_generators();
    j["omega_SL"] = json::array();
    for (auto& w : gens.omegas) {
        j["omega_SL"].push_back({{"layer", layer_label(m, w.S.layer)},
                                 {"S", w.S.tori},
                                 {"degree", (int)w.S.tori.size()},
                                 {"class", to_json(w.cls)},
                                 {"integral", w.integral},
                                 {"validated", w.validated}});
    }
    j["betti"] = gens.betti;
    j["span_rank"] = gens.span_rank;
    j["spans"] = gens.spans();
    return j;
}

json table_json(const RestrictionTable& t) {
    json j;
    j["columns"] = t.columns;
    j["rows"] = json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        json cells = json::array(), coeffs = json::array();
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            cells.push_back(t.cell_text(r, c));
            coeffs.push_back(to_json(t.cells[r][c]));
        }
        j["rows"].push_back({{"class", t.rows[r]}, {"degree", t.row_degree[r]}, {"cells", cells}, {"coefficients", coeffs}});
    }
    json mono = json::array();
    for (auto& col : t.monomials) {
        json mc = json::object();
        for (auto& [k, v] : col) mc[std::to_string(k)] = v;
        mono.push_back(mc);
    }
    j["monomials"] = mono;
    return j;
}

json matroid_data_json(const IntMatrix& A) {
    auto md = matroid_data(A);
    json j;
    j["n"] = md.n;
    j["rank"] = md.rank;
    json mult = json::array();
    for (auto& x : md.mult) mult.push_back(int_json(x));
    j["multiplicity"] = mult;
    return j;
}

}  // namespace toric
