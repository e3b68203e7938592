#include "vkdim/octa.hpp"

#include <algorithm>
#include <set>

namespace vkdim {

namespace {

SimplicialComplex build_octa(const SimplicialComplex& l)
{
    std::vector<std::string> labels;
    labels.reserve(2 * l.num_vertices());
    for (const auto& name : l.labels()) {
        labels.push_back(name + "-");
        labels.push_back(name + "+");
    }
    std::vector<Simplex> generators;
    for (const Simplex& m : l.maximal_faces()) {
        auto lifted = OctaComplex::lifts(m);
        generators.insert(generators.end(), lifted.begin(), lifted.end());
    }
    return SimplicialComplex(std::move(labels), generators);
}

}  // namespace

OctaComplex::OctaComplex(SimplicialComplex base)
    : base_(std::move(base)), complex_(build_octa(base_))
{
}

Simplex OctaComplex::project(const Simplex& sigma)
{
    std::vector<VertexRank> out;
    out.reserve(sigma.size());
    for (VertexRank r : sigma) out.push_back(r / 2);
    return Simplex(std::move(out));
}

Simplex OctaComplex::to_minus(const Simplex& sigma)
{
    std::vector<VertexRank> out;
    out.reserve(sigma.size());
    for (VertexRank r : sigma) out.push_back(r & ~VertexRank{1});
    return Simplex(std::move(out));
}

Simplex OctaComplex::minus_lift(const Simplex& b)
{
    std::vector<VertexRank> out;
    out.reserve(b.size());
    for (VertexRank v : b) out.push_back(2 * v);
    return Simplex::from_sorted(std::move(out));
}

bool OctaComplex::in_minus_copy(const Simplex& sigma)
{
    return std::all_of(sigma.begin(), sigma.end(), [](VertexRank r) { return (r & 1U) == 0; });
}

std::vector<Simplex> OctaComplex::lifts(const Simplex& b)
{
    std::vector<Simplex> out;
    const std::size_t n = b.size();
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<VertexRank> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(2 * b[i] + ((mask >> i) & 1U));
        out.push_back(Simplex::from_sorted(std::move(v)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

OctaComplex octahedralize(const SimplicialComplex& l) { return OctaComplex(l); }

SimplicialComplex minus_copy(const OctaComplex& ol)
{
    std::vector<VertexRank> minus;
    for (VertexRank v = 0; v < ol.base().num_vertices(); ++v) minus.push_back(2 * v);
    return full_subcomplex(ol.complex(), minus);
}

bool DoubledComplex::contains_octa_vertex(VertexRank r) const
{
    return std::binary_search(octa_rank.begin(), octa_rank.end(), r);
}

DoubledComplex double_over(const OctaComplex& ol, const Gf2Cycle& m, const Simplex& delta)
{
    if (!m.contains(delta)) throw ComplexError("delta is not a simplex of the cycle");
    std::set<VertexRank> vertices;
    for (const Simplex& s : m.simplices) {
        for (VertexRank v : s) vertices.insert(2 * v);
    }
    for (VertexRank v : delta) vertices.insert(2 * v + 1);
    std::vector<VertexRank> ranks(vertices.begin(), vertices.end());
    return DoubledComplex{full_subcomplex(ol.complex(), ranks), ranks, m, delta};
}

}  // namespace vkdim
