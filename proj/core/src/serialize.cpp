#include "vkdim/serialize.hpp"

#include <set>

#include "vkdim/homology.hpp"
#include "vkdim/octa.hpp"

namespace vkdim {

using nlohmann::json;

namespace {

json labels_json(const SimplicialComplex& k, const Simplex& s) { return k.labels_of(s); }

std::string octa_label(const SimplicialComplex& l, VertexRank r)
{
    return l.label(r / 2) + ((r & 1U) ? "+" : "-");
}

json octa_simplex_json(const SimplicialComplex& l, const Simplex& s)
{
    json out = json::array();
    for (VertexRank r : s) out.push_back(octa_label(l, r));
    return out;
}

void expect(bool ok, const std::string& what)
{
    if (!ok) throw FormatError(what);
}

Simplex simplex_from_labels(const SimplicialComplex& l, const json& j)
{
    expect(j.is_array(), "simplex must be an array of vertex labels");
    std::vector<VertexRank> v;
    for (const auto& x : j) {
        expect(x.is_string(), "vertex labels must be strings");
        auto r = l.rank_of(x.get<std::string>());
        expect(r.has_value(), "unknown vertex label '" + x.get<std::string>() + "'");
        v.push_back(*r);
    }
    try {
        return Simplex(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Simplex octa_simplex_from_labels(const SimplicialComplex& l, const json& j)
{
    expect(j.is_array(), "simplex of OL must be an array of labels");
    std::vector<VertexRank> v;
    for (const auto& x : j) {
        expect(x.is_string(), "vertex labels must be strings");
        const auto s = x.get<std::string>();
        expect(s.size() >= 2 && (s.back() == '+' || s.back() == '-'), "OL label '" + s + "' lacks a sign");
        auto r = l.rank_of(std::string_view(s).substr(0, s.size() - 1));
        expect(r.has_value(), "unknown vertex label '" + s + "'");
        v.push_back(2 * *r + (s.back() == '+' ? 1 : 0));
    }
    try {
        return Simplex(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

json to_json(const SimplicialComplex& k)
{
    json simplices = json::array();
    for (const Simplex& s : k.maximal_faces()) simplices.push_back(labels_json(k, s));
    return {{"schema", schema::complex}, {"vertices", k.labels()}, {"simplices", simplices}};
}

namespace {

std::string label_from_json(const json& x)
{
    expect(x.is_string() || x.is_number_integer(), "vertex labels must be strings or integers");
    return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>());
}

std::vector<std::string> label_list(const json& j, const char* field)
{
    expect(j.is_array(), std::string("'") + field + "' must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(label_from_json(x));
    return out;
}

}  // namespace

SimplicialComplex complex_from_json(const json& j)
{
    expect(j.is_object(), "complex document must be a JSON object");
    if (j.contains("schema")) {
        expect(j["schema"] == schema::complex, "unsupported schema " + j["schema"].dump());
    }
    std::vector<std::string> extra;
    if (j.contains("vertices")) extra = label_list(j["vertices"], "vertices");
    std::optional<std::vector<std::string>> order;
    if (j.contains("vertex_order")) {
        order = label_list(j["vertex_order"], "vertex_order");
    } else if (j.contains("vertices")) {
        order = extra;
    }

    std::vector<std::vector<std::string>> tuples;
    if (j.contains("graph")) {
        const json& g = j["graph"];
        expect(g.is_object() && g.contains("edges"), "'graph' needs an 'edges' array");
        if (g.contains("vertices")) {
            for (auto& v : label_list(g["vertices"], "graph.vertices")) extra.push_back(std::move(v));
        }
        for (const auto& e : g["edges"]) {
            auto pair = label_list(e, "edge");
            expect(pair.size() == 2, "each edge must have two endpoints");
            tuples.push_back(std::move(pair));
        }
    } else {
        const char* field = j.contains("maximal_simplices") ? "maximal_simplices" : "simplices";
        expect(j.contains(field) && j[field].is_array(), "missing array field 'simplices'");
        for (const auto& s : j[field]) {
            auto t = label_list(s, "simplex");
            expect(!t.empty(), "empty simplex in input");
            tuples.push_back(std::move(t));
        }
    }
    SimplicialComplex k = SimplicialComplex::from_maximal_simplices(tuples, extra, order);
    if (j.contains("graph") && j.value("flag", false)) k = flag_completion(k);
    return k;
}

json to_json(const SimplicialComplex& l, const CycleCertificate& cert)
{
    json m = json::array();
    for (const Simplex& s : cert.cycle.simplices) m.push_back(labels_json(l, s));
    json d = json::array();
    for (VertexRank r : cert.doubled.octa_rank) d.push_back(octa_label(l, r));
    json omega = json::array();
    for (const auto& [cell, c] : cert.omega) {
        if (c % 2 == 0) continue;
        omega.push_back(json::array({octa_simplex_json(l, cell.first), octa_simplex_json(l, cell.second)}));
    }
    return {{"schema", schema::certificate},
            {"degree", cert.degree},
            {"M", m},
            {"Delta", labels_json(l, cert.delta)},
            {"D", {{"vertices", d}}},
            {"omega_support", omega},
            {"star_condition", cert.star_condition},
            {"evaluation", cert.evaluation}};
}

CycleCertificate certificate_from_json(const SimplicialComplex& l, const json& j)
{
    expect(j.is_object(), "certificate must be a JSON object");
    expect(j.value("schema", "") == schema::certificate, "certificate schema must be " + std::string(schema::certificate));
    for (const char* key : {"degree", "M", "Delta", "omega_support", "star_condition", "evaluation"}) {
        expect(j.contains(key), std::string("certificate lacks field '") + key + "'");
    }
    CycleCertificate cert;
    expect(j["degree"].is_number_integer(), "'degree' must be an integer");
    cert.degree = j["degree"].get<int>();
    std::set<Simplex> m;
    expect(j["M"].is_array(), "'M' must be an array");
    for (const auto& s : j["M"]) m.insert(simplex_from_labels(l, s));
    cert.cycle = Gf2Cycle{cert.degree, std::vector<Simplex>(m.begin(), m.end())};
    cert.delta = simplex_from_labels(l, j["Delta"]);
    expect(j["omega_support"].is_array(), "'omega_support' must be an array");
    for (const auto& cell : j["omega_support"]) {
        expect(cell.is_array() && cell.size() == 2, "omega cells are pairs of simplices");
        const Simplex a = octa_simplex_from_labels(l, cell[0]);
        const Simplex b = octa_simplex_from_labels(l, cell[1]);
        expect(!a.empty() && !b.empty() && a.disjoint_from(b), "omega cell has meeting simplices");
        const auto sc = canonical_cell(a, b);
        accumulate(cert.omega, sc.cell, 1);
    }
    cert.omega = reduce_mod2(cert.omega);
    expect(j["star_condition"].is_boolean(), "'star_condition' must be a boolean");
    cert.star_condition = j["star_condition"].get<bool>();
    expect(j["evaluation"].is_number_integer(), "'evaluation' must be 0 or 1");
    cert.evaluation = j["evaluation"].get<int>();
    if (cert.degree >= 0 && cert.degree <= l.dim() && cert.cycle.contains(cert.delta)) {
        bool inside = true;
        for (const Simplex& s : cert.cycle.simplices) inside = inside && l.contains(s);
        if (inside) cert.doubled = double_over(octahedralize(skeleton(l, cert.degree)), cert.cycle, cert.delta);
    }
    return cert;
}

json to_json(const BoundRecord& r)
{
    return {{"quantity", r.quantity}, {"kind", to_string(r.kind)}, {"value", r.value},
            {"rule", r.rule},         {"paper_citation", r.citation}, {"caveats", r.caveats}};
}

json to_json(const Interval& i)
{
    return {{"lower", i.lower}, {"upper", i.upper}, {"status", describe(i)}};
}

json to_json(const SimplicialComplex& l, const DimensionReport& r)
{
    json bounds = json::array();
    for (const auto& b : r.provenance) bounds.push_back(to_json(b));
    json out = {{"schema", schema::report},
                {"complex", {{"vertices", r.vertices}, {"dim", r.dim}, {"flag", r.flag}}},
                {"mod2_betti", r.mod2_betti},
                {"rational_reduced_betti", r.rational_reduced_betti},
                {"gd", r.gd},
                {"l2dim", r.l2dim ? json(*r.l2dim) : json("undefined")},
                {"vkdim_OL", to_json(r.vkdim_ol)},
                {"embdim_OL", {{"certified", to_json(r.embdim_ol)}, {"with_caveats", to_json(r.embdim_ol_with_caveats)}}},
                {"actdim_AL", r.actdim ? json{{"certified", to_json(*r.actdim)},
                                              {"with_caveats", to_json(*r.actdim_with_caveats)}}
                                       : json(nullptr)},
                {"conjecture_status", to_string(r.conjecture)},
                {"certified_degrees", r.certified_degrees},
                {"vanishing", r.vanishing ? json(*r.vanishing) : json("undetermined")},
                {"bounds", bounds},
                {"warnings", r.warnings},
                {"certificate", r.certificate ? to_json(l, *r.certificate) : json(nullptr)}};
    if (r.integral_vanishing) out["integral_vanishing"] = *r.integral_vanishing;
    return out;
}

json homology_json(const SimplicialComplex& k)
{
    json cycles = json::array();
    if (!k.empty()) {
        for (const auto& z : gf2_cycle_basis(k, k.dim())) {
            json c = json::array();
            for (const Simplex& s : z.simplices) c.push_back(labels_json(k, s));
            cycles.push_back(c);
        }
    }
    return {{"schema", schema::homology},
            {"dim", k.dim()},
            {"f_vector", k.f_vector()},
            {"reduced_mod2_betti", mod2_betti(k, true)},
            {"reduced_rational_betti", rational_betti(k, true)},
            {"top_cycle_basis", cycles}};
}

}  // namespace vkdim
