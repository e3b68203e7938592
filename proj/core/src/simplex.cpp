#include "vkdim/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace vkdim {

Simplex::Simplex(std::vector<VertexRank> vertices) : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw std::invalid_argument("simplex has a repeated vertex");
    }
}

Simplex::Simplex(std::initializer_list<VertexRank> vertices)
    : Simplex(std::vector<VertexRank>(vertices))
{
}

Simplex Simplex::from_sorted(std::vector<VertexRank> vertices)
{
    Simplex s;
    s.vertices_ = std::move(vertices);
    return s;
}

bool Simplex::contains(VertexRank v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const
{
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

Simplex Simplex::without(std::size_t i) const
{
    std::vector<VertexRank> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
        if (j != i) out.push_back(vertices_[j]);
    }
    return from_sorted(std::move(out));
}

Simplex Simplex::united_with(const Simplex& other) const
{
    std::vector<VertexRank> out;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

Simplex Simplex::intersected_with(const Simplex& other) const
{
    std::vector<VertexRank> out;
    std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                          other.vertices_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

Simplex Simplex::with_vertex(VertexRank v) const
{
    std::vector<VertexRank> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return Simplex(std::move(out));
}

std::vector<Simplex> Simplex::nonempty_faces() const
{
    const std::size_t n = vertices_.size();
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<VertexRank> face;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) face.push_back(vertices_[i]);
        }
        out.push_back(from_sorted(std::move(face)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b)
{
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    std::size_t h = s.size();
    for (VertexRank v : s) {
        h ^= std::hash<VertexRank>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace vkdim
