#include "vkdim/cell_complex.hpp"

#include <stdexcept>

namespace vkdim {

namespace {
const std::vector<Incidence> kNoBoundary;
}

std::size_t CellComplex::count(int d) const
{
    if (d < 0 || d > dim()) return 0;
    return boundaries_[static_cast<std::size_t>(d)].size();
}

const std::vector<Incidence>& CellComplex::boundary(int d, std::size_t cell) const
{
    if (d < 0 || d > dim()) return kNoBoundary;
    return boundaries_[static_cast<std::size_t>(d)].at(cell);
}

std::size_t CellComplex::add_cell(int d, std::vector<Incidence> boundary)
{
    if (d < 0) throw std::invalid_argument("negative cell dimension");
    if (d > dim()) boundaries_.resize(static_cast<std::size_t>(d) + 1);
    auto& layer = boundaries_[static_cast<std::size_t>(d)];
    layer.push_back(std::move(boundary));
    return layer.size() - 1;
}

Gf2Matrix CellComplex::boundary_gf2(int d, bool augmented) const
{
    if (d == 0) {
        Gf2Matrix m(augmented ? 1 : 0, count(0));
        if (augmented) {
            for (std::size_t c = 0; c < count(0); ++c) m.set(0, c);
        }
        return m;
    }
    Gf2Matrix m(count(d - 1), count(d));
    for (std::size_t c = 0; c < count(d); ++c) {
        for (const auto& inc : boundary(d, c)) {
            if (inc.sign % 2 != 0) m.flip(inc.face, c);
        }
    }
    return m;
}

IntMatrix CellComplex::boundary_int(int d, bool augmented) const
{
    if (d == 0) {
        IntMatrix m(augmented ? 1 : 0, count(0));
        if (augmented) {
            for (std::size_t c = 0; c < count(0); ++c) m.at(0, c) = 1;
        }
        return m;
    }
    IntMatrix m(count(d - 1), count(d));
    for (std::size_t c = 0; c < count(d); ++c) {
        for (const auto& inc : boundary(d, c)) m.at(inc.face, c) += inc.sign;
    }
    return m;
}

CellComplex to_cell_complex(const SimplicialComplex& k)
{
    CellComplex cc(0);
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.faces(d)) {
            std::vector<Incidence> b;
            if (d > 0) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    b.push_back({*k.index_of(s.without(i)), (i % 2 == 0) ? 1 : -1});
                }
            }
            cc.add_cell(d, std::move(b));
        }
    }
    return cc;
}

}  // namespace vkdim
