#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vkdim/cell_complex.hpp"
#include "vkdim/complex.hpp"

namespace vkdim {

enum class Coefficients { gf2, integer };

/// A mod-2 k-chain on a simplicial complex, stored as its sorted support.
struct Gf2Cycle {
    int degree = 0;
    std::vector<Simplex> simplices;

    bool contains(const Simplex& s) const;
    /// The subcomplex spanned by the support simplices.
    SimplicialComplex support(const SimplicialComplex& k) const;
    Gf2Cycle operator+(const Gf2Cycle& other) const;
};

/// A cycle with integer coefficients (all 1 for GF(2)) and its support.
struct Cycle {
    int degree = 0;
    std::vector<std::pair<Simplex, long long>> terms;
    SimplicialComplex support;
};

struct HomologyProfile {
    std::vector<std::size_t> mod2_betti;
    std::vector<std::size_t> rational_reduced_betti;
    /// Basis of Z_k(K; Z/2) for k = dim K.
    std::vector<Gf2Cycle> top_cycle_basis;
};

/// Betti numbers in degrees 0..dim K. Reduced by default: degree 0 uses the
/// augmentation, so a connected complex has b0 = 0.
std::vector<std::size_t> mod2_betti(const SimplicialComplex& k, bool reduced = true);
std::vector<std::size_t> rational_betti(const SimplicialComplex& k, bool reduced = true);

HomologyProfile mod2_homology(const SimplicialComplex& k, bool reduced = true);

/// Basis of reduced k-cycles (for k = 0, chains with even augmentation).
std::vector<Gf2Cycle> gf2_cycle_basis(const SimplicialComplex& k, int degree);
std::vector<Cycle> cycle_space(const SimplicialComplex& k, int degree, Coefficients coefficients);

/// Some (m-1)-cochain x with coboundary(x) = phi on the m-cells, or nullopt.
///
/// With `augmented` the degree-0 problem is posed against the augmentation
/// (x is a single value); otherwise a nonzero 0-cochain is never a coboundary.
std::optional<std::vector<long long>> solve_coboundary(const std::vector<long long>& phi, int m,
                                                       const CellComplex& cells,
                                                       Coefficients coefficients,
                                                       bool augmented = false);

/// Mod-2 pairing of a cochain with a chain, both indexed by cells of one dimension.
int gf2_pairing(const std::vector<long long>& cochain, const BitVector& chain);

}  // namespace vkdim
