#include "vkdim/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace vkdim {

bool Gf2Cycle::contains(const Simplex& s) const
{
    return std::binary_search(simplices.begin(), simplices.end(), s);
}

SimplicialComplex Gf2Cycle::support(const SimplicialComplex& k) const
{
    return subcomplex(k, simplices);
}

Gf2Cycle Gf2Cycle::operator+(const Gf2Cycle& other) const
{
    if (degree != other.degree) throw std::invalid_argument("adding cycles of different degree");
    Gf2Cycle out{degree, {}};
    std::set_symmetric_difference(simplices.begin(), simplices.end(), other.simplices.begin(),
                                  other.simplices.end(), std::back_inserter(out.simplices));
    return out;
}

namespace {

template <typename RankFn>
std::vector<std::size_t> betti_from_ranks(const SimplicialComplex& k, RankFn rank_of_boundary)
{
    std::vector<std::size_t> ranks(static_cast<std::size_t>(k.dim() + 2), 0);
    for (int d = 0; d <= k.dim(); ++d) ranks[static_cast<std::size_t>(d)] = rank_of_boundary(d);
    std::vector<std::size_t> betti;
    for (int d = 0; d <= k.dim(); ++d) {
        const std::size_t n = k.faces(d).size();
        betti.push_back(n - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)]);
    }
    return betti;
}

}  // namespace

std::vector<std::size_t> mod2_betti(const SimplicialComplex& k, bool reduced)
{
    const CellComplex cc = to_cell_complex(k);
    return betti_from_ranks(k, [&](int d) { return cc.boundary_gf2(d, reduced).rank(); });
}

std::vector<std::size_t> rational_betti(const SimplicialComplex& k, bool reduced)
{
    const CellComplex cc = to_cell_complex(k);
    return betti_from_ranks(k, [&](int d) { return rational_rank(cc.boundary_int(d, reduced)); });
}

std::vector<Gf2Cycle> gf2_cycle_basis(const SimplicialComplex& k, int degree)
{
    if (degree < 0 || degree > k.dim()) return {};
    const CellComplex cc = to_cell_complex(k);
    std::vector<Gf2Cycle> out;
    for (const BitVector& z : cc.boundary_gf2(degree, true).kernel_basis()) {
        Gf2Cycle c{degree, {}};
        for (auto i : z.ones()) c.simplices.push_back(k.faces(degree)[i]);
        out.push_back(std::move(c));
    }
    return out;
}

HomologyProfile mod2_homology(const SimplicialComplex& k, bool reduced)
{
    return {mod2_betti(k, reduced), rational_betti(k, true), gf2_cycle_basis(k, k.dim())};
}

std::vector<Cycle> cycle_space(const SimplicialComplex& k, int degree, Coefficients coefficients)
{
    std::vector<Cycle> out;
    if (coefficients == Coefficients::gf2) {
        for (auto& z : gf2_cycle_basis(k, degree)) {
            Cycle c{degree, {}, z.support(k)};
            for (auto& s : z.simplices) c.terms.emplace_back(s, 1);
            out.push_back(std::move(c));
        }
        return out;
    }
    if (degree < 0 || degree > k.dim()) return out;
    const CellComplex cc = to_cell_complex(k);
    for (const auto& z : rational_kernel_basis(cc.boundary_int(degree, true))) {
        Cycle c{degree, {}, {}};
        std::vector<Simplex> support;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i].is_zero()) continue;
            c.terms.emplace_back(k.faces(degree)[i], static_cast<long long>(z[i]));
            support.push_back(k.faces(degree)[i]);
        }
        c.support = subcomplex(k, support);
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<std::vector<long long>> solve_coboundary(const std::vector<long long>& phi, int m,
                                                       const CellComplex& cells,
                                                       Coefficients coefficients, bool augmented)
{
    if (phi.size() != cells.count(m)) throw std::invalid_argument("cochain has the wrong length");
    if (coefficients == Coefficients::gf2) {
        const Gf2Matrix delta = cells.boundary_gf2(m, augmented).transposed();
        BitVector b(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) {
            if (phi[i] % 2 != 0) b.set(i);
        }
        if (delta.cols() == 0) {
            if (b.any()) return std::nullopt;
            return std::vector<long long>{};
        }
        auto x = delta.solve(b);
        if (!x) return std::nullopt;
        std::vector<long long> out(delta.cols(), 0);
        for (auto i : x->ones()) out[i] = 1;
        return out;
    }
    const IntMatrix delta = cells.boundary_int(m, augmented).transposed();
    std::vector<Integer> b(phi.begin(), phi.end());
    auto x = solve_integer(delta, b);
    if (!x) return std::nullopt;
    std::vector<long long> out;
    out.reserve(x->size());
    for (const auto& v : *x) out.push_back(static_cast<long long>(v));
    return out;
}

int gf2_pairing(const std::vector<long long>& cochain, const BitVector& chain)
{
    int acc = 0;
    for (auto i : chain.ones()) acc ^= static_cast<int>(cochain.at(i) & 1);
    return acc;
}

}  // namespace vkdim
