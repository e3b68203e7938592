#pragma once

#include <vector>

#include "vkdim/complex.hpp"
#include "vkdim/homology.hpp"

namespace vkdim {

enum class Sign { minus, plus };

/// Vertex v^+ or v^- of OL. Ranks interleave as v0- < v0+ < v1- < v1+ < ...
struct SignedVertex {
    VertexRank base;
    Sign sign;

    VertexRank rank() const { return 2 * base + (sign == Sign::plus ? 1 : 0); }
    static SignedVertex from_rank(VertexRank r) { return {r / 2, (r & 1U) ? Sign::plus : Sign::minus}; }
};

/// Octahedralization of a base complex L together with the projection p: OL -> L.
///
/// Vertex labels of OL are the base label followed by '-' or '+'.
class OctaComplex {
public:
    explicit OctaComplex(SimplicialComplex base);

    const SimplicialComplex& base() const { return base_; }
    const SimplicialComplex& complex() const { return complex_; }

    static VertexRank project(VertexRank r) { return r / 2; }
    /// p(sigma), a simplex of L of the same dimension.
    static Simplex project(const Simplex& sigma);
    /// p(sigma) re-lifted into the minus copy, in OL ranks.
    static Simplex to_minus(const Simplex& sigma);
    /// The lift of a simplex of L with every vertex signed minus.
    static Simplex minus_lift(const Simplex& b);
    static bool in_minus_copy(const Simplex& sigma);

    /// All 2^(k+1) lifts of a k-simplex of L, in sorted order.
    static std::vector<Simplex> lifts(const Simplex& b);

private:
    SimplicialComplex base_;
    SimplicialComplex complex_;
};

OctaComplex octahedralize(const SimplicialComplex& l);

/// The full subcomplex of OL on the minus vertices; isomorphic to L via p.
SimplicialComplex minus_copy(const OctaComplex& ol);

/// A mod-2 cycle M on L doubled over one of its simplices.
struct DoubledComplex {
    /// D as a complex in its own ranks (relative order inherited from OL).
    SimplicialComplex complex;
    /// OL rank of each vertex of D.
    std::vector<VertexRank> octa_rank;
    Gf2Cycle cycle;
    Simplex delta;

    bool contains_octa_vertex(VertexRank r) const;
};

/// D is the full subcomplex of OL on the minus lifts of the vertices of M
/// together with both lifts of each vertex of delta. Throws ComplexError
/// when delta is not a simplex of M.
DoubledComplex double_over(const OctaComplex& ol, const Gf2Cycle& m, const Simplex& delta);

}  // namespace vkdim
