#include "vkdim/config_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace vkdim {

std::strong_ordering operator<=>(const ProductCell& a, const ProductCell& b)
{
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
}

std::strong_ordering operator<=>(const ConfigCell& a, const ConfigCell& b)
{
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
}

SignedCell canonical_cell(const Simplex& a, const Simplex& b)
{
    if (a.empty() || b.empty() || !a.disjoint_from(b)) {
        throw std::invalid_argument("configuration cell needs two disjoint nonempty simplices");
    }
    if (a.front() < b.front()) return {ConfigCell{a, b}, 1};
    return {ConfigCell{b, a}, swap_sign(a.dim(), b.dim())};
}

namespace {

template <typename Emit>
void product_boundary_terms(const Simplex& a, const Simplex& b, long long coefficient, Emit emit)
{
    if (a.size() > 1) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            emit(a.without(i), b, (i % 2 == 0) ? coefficient : -coefficient);
        }
    }
    if (b.size() > 1) {
        const long long sign = (a.dim() % 2 == 0) ? coefficient : -coefficient;
        for (std::size_t j = 0; j < b.size(); ++j) {
            emit(a, b.without(j), (j % 2 == 0) ? sign : -sign);
        }
    }
}

}  // namespace

ProductChain boundary(const ProductChain& chain)
{
    ProductChain out;
    for (const auto& [cell, c] : chain) {
        product_boundary_terms(cell.first, cell.second, c,
                               [&](const Simplex& x, const Simplex& y, long long v) {
                                   accumulate(out, ProductCell{x, y}, v);
                               });
    }
    return out;
}

ConfigChain boundary(const ConfigChain& chain)
{
    ConfigChain out;
    for (const auto& [cell, c] : chain) {
        product_boundary_terms(cell.first, cell.second, c,
                               [&](const Simplex& x, const Simplex& y, long long v) {
                                   auto sc = canonical_cell(x, y);
                                   accumulate(out, sc.cell, sc.sign * v);
                               });
    }
    return out;
}

ProductChain transfer(const ConfigChain& chain)
{
    ProductChain out;
    for (const auto& [cell, c] : chain) {
        accumulate(out, ProductCell{cell.first, cell.second}, c);
        accumulate(out, ProductCell{cell.second, cell.first},
                   swap_sign(cell.first.dim(), cell.second.dim()) * c);
    }
    return out;
}

ConfigChain quotient(const ProductChain& chain)
{
    ConfigChain out;
    for (const auto& [cell, c] : chain) {
        auto sc = canonical_cell(cell.first, cell.second);
        accumulate(out, sc.cell, sc.sign * c);
    }
    return out;
}

namespace {

std::vector<Simplex> all_faces(const SimplicialComplex& k)
{
    std::vector<Simplex> out;
    for (int d = 0; d <= k.dim(); ++d) out.insert(out.end(), k.faces(d).begin(), k.faces(d).end());
    return out;
}

template <typename Cell>
void layer_cells(std::vector<Cell>& found, std::vector<std::vector<Cell>>& cells,
                 std::map<Cell, std::size_t>& index)
{
    std::sort(found.begin(), found.end());
    for (auto& c : found) {
        const auto d = static_cast<std::size_t>(c.dim());
        if (d >= cells.size()) cells.resize(d + 1);
        index.emplace(c, cells[d].size());
        cells[d].push_back(std::move(c));
    }
}

template <typename Cell, typename Canonical>
CellComplex assemble(const std::vector<std::vector<Cell>>& cells,
                     const std::map<Cell, std::size_t>& index, int lowest, Canonical canonical)
{
    CellComplex cc(lowest);
    for (int d = lowest; d < static_cast<int>(cells.size()); ++d) {
        for (const Cell& cell : cells[static_cast<std::size_t>(d)]) {
            std::vector<Incidence> b;
            if (d > lowest) {
                product_boundary_terms(cell.first, cell.second, 1,
                                       [&](const Simplex& x, const Simplex& y, long long v) {
                                           auto [face, sign] = canonical(x, y);
                                           b.push_back({index.at(face), static_cast<int>(sign * v)});
                                       });
            }
            cc.add_cell(d, std::move(b));
        }
    }
    return cc;
}

}  // namespace

DeletedProduct::DeletedProduct(const SimplicialComplex& k, int lowest, int highest)
{
    lowest = std::max(lowest, 0);
    const auto faces = all_faces(k);
    std::vector<ProductCell> found;
    for (const Simplex& a : faces) {
        for (const Simplex& b : faces) {
            const int d = a.dim() + b.dim();
            if (d < lowest || d > highest || !a.disjoint_from(b)) continue;
            found.push_back({a, b});
        }
    }
    layer_cells(found, cells_, index_);
    cells_complex_ = assemble(cells_, index_, lowest, [](const Simplex& x, const Simplex& y) {
        return std::pair<ProductCell, int>{ProductCell{x, y}, 1};
    });
}

const std::vector<ProductCell>& DeletedProduct::cells(int d) const
{
    static const std::vector<ProductCell> none;
    if (d < 0 || d >= static_cast<int>(cells_.size())) return none;
    return cells_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> DeletedProduct::index_of(const ProductCell& c) const
{
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t DeletedProduct::size() const { return index_.size(); }

ConfigurationSpace::ConfigurationSpace(const SimplicialComplex& k, int lowest, int highest)
{
    lowest = std::max(lowest, 0);
    const auto faces = all_faces(k);
    std::vector<ConfigCell> found;
    for (const Simplex& a : faces) {
        for (const Simplex& b : faces) {
            const int d = a.dim() + b.dim();
            if (a.front() >= b.front() || d < lowest || d > highest || !a.disjoint_from(b)) continue;
            found.push_back({a, b});
        }
    }
    layer_cells(found, cells_, index_);
    cells_complex_ = assemble(cells_, index_, lowest, [](const Simplex& x, const Simplex& y) {
        auto sc = canonical_cell(x, y);
        return std::pair<ConfigCell, int>{sc.cell, sc.sign};
    });
}

const std::vector<ConfigCell>& ConfigurationSpace::cells(int d) const
{
    static const std::vector<ConfigCell> none;
    if (d < 0 || d >= static_cast<int>(cells_.size())) return none;
    return cells_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> ConfigurationSpace::index_of(const ConfigCell& c) const
{
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ConfigurationSpace::size() const { return index_.size(); }

std::size_t estimate_config_cells(const SimplicialComplex& k, int d)
{
    std::size_t total = 0;
    for (int p = 0; p <= d; ++p) {
        const int q = d - p;
        if (p > q) break;
        const std::size_t a = k.faces(p).size();
        const std::size_t b = k.faces(q).size();
        total += (p == q) ? a * (a > 0 ? a - 1 : 0) / 2 : a * b;
    }
    return total;
}

}  // namespace vkdim
