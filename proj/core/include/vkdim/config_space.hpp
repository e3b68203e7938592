#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vkdim/cell_complex.hpp"
#include "vkdim/complex.hpp"

namespace vkdim {

/// Ordered product cell first x second of K x K (or of K x L).
struct ProductCell {
    Simplex first;
    Simplex second;

    int dim() const { return first.dim() + second.dim(); }

    friend bool operator==(const ProductCell&, const ProductCell&) = default;
    friend std::strong_ordering operator<=>(const ProductCell& a, const ProductCell& b);
};

/// Unordered pair {sigma, tau} of disjoint simplices, held by its canonical
/// representative (the simplex with the lower least vertex comes first).
/// The oriented cell [sigma, tau] is +1 times this representative.
struct ConfigCell {
    Simplex first;
    Simplex second;

    int dim() const { return first.dim() + second.dim(); }

    friend bool operator==(const ConfigCell&, const ConfigCell&) = default;
    friend std::strong_ordering operator<=>(const ConfigCell& a, const ConfigCell& b);
};

struct SignedCell {
    ConfigCell cell;
    int sign;
};

/// (a, b) = sign * [canonical]. Swapping the factors costs (-1)^(dim a * dim b).
/// Throws std::invalid_argument when a and b meet.
SignedCell canonical_cell(const Simplex& a, const Simplex& b);

/// (-1)^(p*q)
inline int swap_sign(int p, int q) { return ((p * q) % 2 == 0) ? 1 : -1; }

using ConfigChain = std::map<ConfigCell, long long>;
using ProductChain = std::map<ProductCell, long long>;

template <typename Chain, typename Cell>
void accumulate(Chain& chain, const Cell& cell, long long coefficient)
{
    if (coefficient == 0) return;
    auto [it, inserted] = chain.try_emplace(cell, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) chain.erase(it);
    }
}

template <typename Chain>
Chain reduce_mod2(const Chain& chain)
{
    Chain out;
    for (const auto& [cell, c] : chain) {
        if (c % 2 != 0) out.emplace(cell, 1);
    }
    return out;
}

/// d(sigma x tau) = d(sigma) x tau + (-1)^dim(sigma) sigma x d(tau). Vertices have zero boundary.
ProductChain boundary(const ProductChain& chain);
/// Boundary on C(K), induced from the deleted product through the quotient.
ConfigChain boundary(const ConfigChain& chain);

/// t[sigma, tau] = (sigma, tau) + (-1)^(dim sigma dim tau) (tau, sigma)
ProductChain transfer(const ConfigChain& chain);

/// Quotient map (sigma, tau) -> [sigma, tau] from the deleted product.
ConfigChain quotient(const ProductChain& chain);

/// The simplicial deleted product (K x K) - diagonal: every ordered pair of
/// disjoint closed simplices, restricted to cell dimensions in
/// [lowest, highest].
class DeletedProduct {
public:
    explicit DeletedProduct(const SimplicialComplex& k, int lowest = 0,
                            int highest = std::numeric_limits<int>::max());

    const std::vector<ProductCell>& cells(int d) const;
    std::optional<std::size_t> index_of(const ProductCell& c) const;
    const CellComplex& cell_complex() const { return cells_complex_; }
    std::size_t size() const;

private:
    std::vector<std::vector<ProductCell>> cells_;
    std::map<ProductCell, std::size_t> index_;
    CellComplex cells_complex_;
};

/// The configuration space C(K): one cell per unordered disjoint pair,
/// restricted to cell dimensions in [lowest, highest].
class ConfigurationSpace {
public:
    explicit ConfigurationSpace(const SimplicialComplex& k, int lowest = 0,
                                int highest = std::numeric_limits<int>::max());

    int dim() const { return static_cast<int>(cells_.size()) - 1; }
    const std::vector<ConfigCell>& cells(int d) const;
    std::optional<std::size_t> index_of(const ConfigCell& c) const;
    const CellComplex& cell_complex() const { return cells_complex_; }
    std::size_t size() const;

private:
    std::vector<std::vector<ConfigCell>> cells_;
    std::map<ConfigCell, std::size_t> index_;
    CellComplex cells_complex_;
};

/// Upper bound on the number of cells of C(K) in dimension d, from face counts.
std::size_t estimate_config_cells(const SimplicialComplex& k, int d);

}  // namespace vkdim
