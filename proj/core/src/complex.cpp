#include "vkdim/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace vkdim {

namespace {

const std::vector<Simplex> kNoFaces;

std::string join_labels(const std::vector<std::string>& labels)
{
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ',';
        out += labels[i];
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels,
                                     const std::vector<Simplex>& generators)
    : labels_(std::move(labels))
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!rank_by_label_.emplace(labels_[i], static_cast<VertexRank>(i)).second) {
            throw ComplexError("duplicate vertex label '" + labels_[i] + "'");
        }
    }
    build(generators);
}

void SimplicialComplex::build(const std::vector<Simplex>& generators)
{
    std::unordered_set<Simplex, SimplexHash> all;
    for (VertexRank v = 0; v < labels_.size(); ++v) all.insert(Simplex::from_sorted({v}));
    for (const Simplex& g : generators) {
        if (g.empty()) continue;
        if (g.back() >= labels_.size()) {
            throw ComplexError("simplex refers to a vertex outside the complex");
        }
        if (all.contains(g)) continue;
        for (Simplex& f : g.nonempty_faces()) all.insert(std::move(f));
    }
    int top = -1;
    for (const Simplex& s : all) top = std::max(top, s.dim());
    faces_.assign(static_cast<std::size_t>(top + 1), {});
    for (const Simplex& s : all) faces_[static_cast<std::size_t>(s.dim())].push_back(s);
    for (auto& layer : faces_) {
        std::sort(layer.begin(), layer.end());
        for (std::size_t i = 0; i < layer.size(); ++i) index_.emplace(layer[i], i);
    }
}

SimplicialComplex SimplicialComplex::from_maximal_simplices(
    const std::vector<std::vector<std::string>>& tuples,
    const std::vector<std::string>& extra_vertices,
    const std::optional<std::vector<std::string>>& vertex_order)
{
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexRank> seen;
    auto note = [&](const std::string& l) {
        if (seen.emplace(l, static_cast<VertexRank>(labels.size())).second) labels.push_back(l);
    };
    for (const auto& v : extra_vertices) note(v);
    for (const auto& t : tuples) {
        std::set<std::string> in_tuple;
        for (const auto& v : t) {
            if (!in_tuple.insert(v).second) {
                throw ComplexError("duplicate vertex '" + v + "' within a simplex");
            }
            note(v);
        }
    }
    if (vertex_order) {
        std::vector<std::string> a = *vertex_order;
        std::vector<std::string> b = labels;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw ComplexError("vertex_order is not a permutation of the vertices");
        labels = *vertex_order;
        seen.clear();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            seen[labels[i]] = static_cast<VertexRank>(i);
        }
    }
    std::vector<Simplex> generators;
    generators.reserve(tuples.size());
    for (const auto& t : tuples) {
        std::vector<VertexRank> ranks;
        for (const auto& v : t) ranks.push_back(seen.at(v));
        if (!ranks.empty()) generators.emplace_back(std::move(ranks));
    }
    return SimplicialComplex(std::move(labels), generators);
}

std::optional<VertexRank> SimplicialComplex::rank_of(std::string_view label) const
{
    auto it = rank_by_label_.find(std::string(label));
    if (it == rank_by_label_.end()) return std::nullopt;
    return it->second;
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const
{
    if (d < 0 || d >= static_cast<int>(faces_.size())) return kNoFaces;
    return faces_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& layer : faces_) f.push_back(layer.size());
    return f;
}

std::size_t SimplicialComplex::face_count() const { return index_.size(); }

bool SimplicialComplex::contains(const Simplex& s) const { return index_.contains(s); }

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const
{
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
        for (const Simplex& s : faces(d)) {
            bool maximal = true;
            for (VertexRank v = 0; v < num_vertices() && maximal; ++v) {
                if (!s.contains(v) && contains(s.with_vertex(v))) maximal = false;
            }
            if (maximal) out.push_back(s);
        }
    }
    return out;
}

Simplex SimplicialComplex::simplex(const std::vector<std::string>& labels) const
{
    std::vector<VertexRank> ranks;
    ranks.reserve(labels.size());
    for (const auto& l : labels) {
        auto r = rank_of(l);
        if (!r) throw ComplexError("unknown vertex '" + l + "'");
        ranks.push_back(*r);
    }
    return Simplex(std::move(ranks));
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexRank v : s) out.push_back(labels_.at(v));
    return out;
}

bool SimplicialComplex::adjacent(VertexRank a, VertexRank b) const
{
    return a != b && contains(Simplex({a, b}));
}

SimplicialComplex flag_completion(const Graph& graph)
{
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexRank> rank;
    auto note = [&](const std::string& l) {
        if (rank.emplace(l, static_cast<VertexRank>(labels.size())).second) labels.push_back(l);
    };
    for (const auto& v : graph.vertices) note(v);
    for (const auto& [u, v] : graph.edges) {
        if (u == v) throw ComplexError("graph has a loop at '" + u + "'");
        note(u);
        note(v);
    }
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : graph.edges) {
        adj[rank[u]][rank[v]] = adj[rank[v]][rank[u]] = true;
    }

    std::vector<Simplex> cliques;
    std::vector<Simplex> frontier;
    for (VertexRank v = 0; v < n; ++v) frontier.push_back(Simplex::from_sorted({v}));
    while (!frontier.empty()) {
        std::vector<Simplex> next;
        for (const Simplex& c : frontier) {
            for (VertexRank v = c.back() + 1; v < n; ++v) {
                bool all = true;
                for (VertexRank u : c) {
                    if (!adj[u][v]) {
                        all = false;
                        break;
                    }
                }
                if (all) next.push_back(c.with_vertex(v));
            }
        }
        cliques.insert(cliques.end(), frontier.begin(), frontier.end());
        frontier = std::move(next);
    }
    return SimplicialComplex(std::move(labels), cliques);
}

SimplicialComplex flag_completion(const SimplicialComplex& k)
{
    Graph g{k.labels(), {}};
    for (const Simplex& e : k.faces(1)) g.edges.emplace_back(k.label(e[0]), k.label(e[1]));
    return flag_completion(g);
}

FlagWitness is_flag(const SimplicialComplex& k)
{
    // If every clique of size <= d+1 is a face, then every clique of size d+2
    // extends a face by one larger vertex, so scanning sizes upward finds a
    // minimal missing clique first.
    for (int d = 1; d <= k.dim(); ++d) {
        for (const Simplex& f : k.faces(d)) {
            for (VertexRank v = f.back() + 1; v < k.num_vertices(); ++v) {
                bool clique = true;
                for (VertexRank u : f) {
                    if (!k.adjacent(u, v)) {
                        clique = false;
                        break;
                    }
                }
                if (clique) {
                    Simplex c = f.with_vertex(v);
                    if (!k.contains(c)) return FlagWitness{c};
                }
            }
        }
    }
    return FlagWitness{};
}

SimplicialComplex subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& faces)
{
    std::set<VertexRank> used;
    for (const Simplex& f : faces) used.insert(f.begin(), f.end());
    std::vector<VertexRank> old_to_new(k.num_vertices(), 0);
    std::vector<std::string> labels;
    for (VertexRank v : used) {
        old_to_new[v] = static_cast<VertexRank>(labels.size());
        labels.push_back(k.label(v));
    }
    std::vector<Simplex> mapped;
    mapped.reserve(faces.size());
    for (const Simplex& f : faces) {
        std::vector<VertexRank> r;
        for (VertexRank v : f) r.push_back(old_to_new[v]);
        mapped.push_back(Simplex::from_sorted(std::move(r)));
    }
    return SimplicialComplex(std::move(labels), mapped);
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma)
{
    if (!k.contains(sigma)) throw ComplexError("simplex is not in the complex");
    std::vector<Simplex> faces;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& t : k.faces(d)) {
            if (t.disjoint_from(sigma) && k.contains(t.united_with(sigma))) faces.push_back(t);
        }
    }
    return subcomplex(k, faces);
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma)
{
    if (!k.contains(sigma)) throw ComplexError("simplex is not in the complex");
    std::vector<Simplex> faces;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& t : k.faces(d)) {
            if (k.contains(t.united_with(sigma))) faces.push_back(t);
        }
    }
    return subcomplex(k, faces);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) {
        if (a.rank_of(l)) throw ComplexError("join factors share the vertex '" + l + "'");
        labels.push_back(l);
    }
    const auto offset = static_cast<VertexRank>(a.num_vertices());
    std::vector<Simplex> ma = a.maximal_faces();
    std::vector<Simplex> mb;
    for (const Simplex& s : b.maximal_faces()) {
        std::vector<VertexRank> r;
        for (VertexRank v : s) r.push_back(v + offset);
        mb.push_back(Simplex::from_sorted(std::move(r)));
    }
    std::vector<Simplex> generators;
    if (ma.empty()) generators = mb;
    if (mb.empty()) generators = ma;
    for (const Simplex& x : ma) {
        for (const Simplex& y : mb) generators.push_back(x.united_with(y));
    }
    return SimplicialComplex(std::move(labels), generators);
}

SimplicialComplex skeleton(const SimplicialComplex& k, int dim)
{
    if (dim < 0) return {};
    std::vector<Simplex> faces;
    for (int d = 0; d <= std::min(dim, k.dim()); ++d) {
        faces.insert(faces.end(), k.faces(d).begin(), k.faces(d).end());
    }
    return SimplicialComplex(k.labels(), faces);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<VertexRank>& vertices)
{
    std::vector<bool> keep(k.num_vertices(), false);
    for (VertexRank v : vertices) keep.at(v) = true;
    std::vector<Simplex> faces;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.faces(d)) {
            if (std::all_of(s.begin(), s.end(), [&](VertexRank v) { return keep[v]; })) {
                faces.push_back(s);
            }
        }
    }
    return subcomplex(k, faces);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<std::string>& labels)
{
    std::vector<VertexRank> ranks;
    for (const auto& l : labels) {
        auto r = k.rank_of(l);
        if (!r) throw ComplexError("unknown vertex '" + l + "'");
        ranks.push_back(*r);
    }
    return full_subcomplex(k, ranks);
}

SimplicialComplex reorder(const SimplicialComplex& k, const std::vector<std::string>& order)
{
    std::vector<std::vector<std::string>> tuples;
    for (const Simplex& s : k.maximal_faces()) tuples.push_back(k.labels_of(s));
    return SimplicialComplex::from_maximal_simplices(tuples, k.labels(), order);
}

SimplicialComplex prefix_labels(const SimplicialComplex& k, const std::string& prefix)
{
    std::vector<std::string> labels;
    for (const auto& l : k.labels()) labels.push_back(prefix + l);
    return SimplicialComplex(std::move(labels), k.maximal_faces());
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex)
{
    return join(k, SimplicialComplex({apex}, {}));
}

SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north,
                             const std::string& south)
{
    return join(k, SimplicialComplex({north, south}, {}));
}

SimplicialComplex partial_barycentric_subdivision(const SimplicialComplex& k,
                                                  const SimplicialComplex& l)
{
    std::unordered_set<Simplex, SimplexHash> in_l;
    for (int d = 0; d <= l.dim(); ++d) {
        for (const Simplex& s : l.faces(d)) {
            std::vector<VertexRank> r;
            for (VertexRank v : s) {
                auto kr = k.rank_of(l.label(v));
                if (!kr) throw ComplexError("L is not a subcomplex of K: unknown vertex '" + l.label(v) + "'");
                r.push_back(*kr);
            }
            Simplex mapped(std::move(r));
            if (!k.contains(mapped)) throw ComplexError("L is not a subcomplex of K");
            in_l.insert(std::move(mapped));
        }
    }
    if (!is_flag(l).is_flag()) throw ComplexError("L is not a flag complex");

    std::vector<std::string> labels = k.labels();
    std::unordered_set<std::string> taken(labels.begin(), labels.end());
    std::unordered_map<Simplex, VertexRank, SimplexHash> centre;
    for (int d = 1; d <= k.dim(); ++d) {
        for (const Simplex& s : k.faces(d)) {
            if (in_l.contains(s)) continue;
            std::string name = "b{" + join_labels(k.labels_of(s)) + "}";
            while (taken.contains(name)) name += "'";
            taken.insert(name);
            centre.emplace(s, static_cast<VertexRank>(labels.size()));
            labels.push_back(std::move(name));
        }
    }

    // Top simplices of the subdivided closed simplex, built up by skeleta.
    std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> tops;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.faces(d)) {
            auto c = centre.find(s);
            if (c == centre.end()) {
                tops.emplace(s, std::vector<Simplex>{s});
                continue;
            }
            std::vector<Simplex> out;
            for (std::size_t i = 0; i < s.size(); ++i) {
                for (const Simplex& t : tops.at(s.without(i))) out.push_back(t.with_vertex(c->second));
            }
            tops.emplace(s, std::move(out));
        }
    }
    std::vector<Simplex> generators;
    for (const Simplex& m : k.maximal_faces()) {
        const auto& t = tops.at(m);
        generators.insert(generators.end(), t.begin(), t.end());
    }
    return SimplicialComplex(std::move(labels), generators);
}

}  // namespace vkdim
