#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace vkdim {

/// Position of a vertex in the total order of its complex.
using VertexRank = std::uint32_t;

/// A simplex as a strictly increasing tuple of vertex ranks.
///
/// Simplices compare first by size, then lexicographically, so sorted
/// containers list them by (dimension, position).
class Simplex {
public:
    Simplex() = default;

    /// Sorts the input. Throws std::invalid_argument on a repeated vertex.
    explicit Simplex(std::vector<VertexRank> vertices);
    Simplex(std::initializer_list<VertexRank> vertices);

    /// Trusts the caller that `vertices` is already strictly increasing.
    static Simplex from_sorted(std::vector<VertexRank> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    std::span<const VertexRank> vertices() const { return vertices_; }
    VertexRank operator[](std::size_t i) const { return vertices_[i]; }
    VertexRank front() const { return vertices_.front(); }
    VertexRank back() const { return vertices_.back(); }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool contains(VertexRank v) const;
    bool is_face_of(const Simplex& other) const;
    bool disjoint_from(const Simplex& other) const;

    /// The facet obtained by deleting the i-th vertex.
    Simplex without(std::size_t i) const;
    Simplex united_with(const Simplex& other) const;
    Simplex intersected_with(const Simplex& other) const;
    Simplex with_vertex(VertexRank v) const;

    /// Every nonempty subset, in (size, lexicographic) order.
    std::vector<Simplex> nonempty_faces() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

private:
    std::vector<VertexRank> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace vkdim
