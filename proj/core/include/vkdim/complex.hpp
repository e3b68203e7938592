#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vkdim/simplex.hpp"

namespace vkdim {

class ComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A simple graph given by vertex labels and label pairs.
struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

/// Finite abstract simplicial complex with a fixed total vertex order.
///
/// Vertex ranks are 0..n-1 and follow the order of `labels()`. Every vertex
/// is a 0-face and the full face set is stored, grouped by dimension and
/// sorted, with a hash index for membership.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of `generators`. Ranks follow `labels`; each label is a vertex.
    SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& generators);

    /// Face closure of labelled tuples. Vertex order is first appearance in
    /// `extra_vertices` then in `tuples`, unless `vertex_order` is given, in
    /// which case it must be a permutation of the vertex labels.
    static SimplicialComplex from_maximal_simplices(
        const std::vector<std::vector<std::string>>& tuples,
        const std::vector<std::string>& extra_vertices = {},
        const std::optional<std::vector<std::string>>& vertex_order = std::nullopt);

    std::size_t num_vertices() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(faces_.size()) - 1; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexRank v) const { return labels_.at(v); }
    std::optional<VertexRank> rank_of(std::string_view label) const;

    /// Faces of dimension d in sorted order; empty for d outside [0, dim].
    const std::vector<Simplex>& faces(int d) const;
    std::vector<std::size_t> f_vector() const;
    std::size_t face_count() const;

    bool contains(const Simplex& s) const;
    /// Position of `s` within faces(s.dim()).
    std::optional<std::size_t> index_of(const Simplex& s) const;
    std::vector<Simplex> maximal_faces() const;

    /// Looks up a simplex by labels. Throws ComplexError on an unknown label.
    Simplex simplex(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const Simplex& s) const;

    bool adjacent(VertexRank a, VertexRank b) const;

    /// Same labels in the same order and the same faces.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.labels_ == b.labels_ && a.faces_ == b.faces_;
    }

private:
    void build(const std::vector<Simplex>& generators);

    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexRank> rank_by_label_;
    std::vector<std::vector<Simplex>> faces_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

/// Result of the flagness test.
struct FlagWitness {
    /// A minimal non-face whose 1-skeleton is complete; absent iff flag.
    std::optional<Simplex> missing_clique;

    bool is_flag() const { return !missing_clique.has_value(); }
};

/// The flag complex whose simplices are the cliques of `graph`.
SimplicialComplex flag_completion(const Graph& graph);
/// The flag complex determined by the 1-skeleton of `k`.
SimplicialComplex flag_completion(const SimplicialComplex& k);

FlagWitness is_flag(const SimplicialComplex& k);

/// Subcomplex spanned by `faces`, which must be faces of `k`. Keeps the
/// labels and relative order of the vertices that occur.
SimplicialComplex subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& faces);

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);
/// Closed star.
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);
/// Vertex order is a's order followed by b's. Labels must be disjoint.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex skeleton(const SimplicialComplex& k, int dim);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<VertexRank>& vertices);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<std::string>& labels);

/// Same complex with the vertex order replaced by `order` (a permutation of the labels).
SimplicialComplex reorder(const SimplicialComplex& k, const std::vector<std::string>& order);
/// Same complex with every label prefixed.
SimplicialComplex prefix_labels(const SimplicialComplex& k, const std::string& prefix);
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);
SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north,
                             const std::string& south);

/// Subdivision K' of K in which the flag subcomplex L is full and K' is flag.
///
/// L is matched to K by labels. Each simplex of K of positive dimension that
/// is not in L receives a new vertex labelled "b{...}" and is replaced by the
/// cone on its subdivided boundary. New vertices follow the original ones,
/// ordered by (dimension, position) of their simplex.
SimplicialComplex partial_barycentric_subdivision(const SimplicialComplex& k,
                                                  const SimplicialComplex& l);

}  // namespace vkdim
