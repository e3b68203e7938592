#pragma once

#include <cstddef>
#include <vector>

#include "vkdim/complex.hpp"
#include "vkdim/gf2.hpp"
#include "vkdim/integer_matrix.hpp"

namespace vkdim {

struct Incidence {
    std::size_t face;  // index among cells of one lower dimension
    int sign;
};

/// A regular cell complex given by cell counts and signed boundary
/// incidences per dimension.
///
/// Dimensions below `lowest_dim()` are truncated: their cells are not
/// listed, and cells of the lowest dimension carry no boundary.
class CellComplex {
public:
    CellComplex() = default;
    explicit CellComplex(int lowest_dim) : lowest_(lowest_dim) {}

    int lowest_dim() const { return lowest_; }
    int dim() const { return static_cast<int>(boundaries_.size()) - 1; }
    std::size_t count(int d) const;
    const std::vector<Incidence>& boundary(int d, std::size_t cell) const;

    /// Appends a cell of dimension d and returns its index.
    std::size_t add_cell(int d, std::vector<Incidence> boundary);

    /// Rows are (d-1)-cells, columns d-cells. With `augmented`, d = 0 gives
    /// the 1 x n augmentation row.
    Gf2Matrix boundary_gf2(int d, bool augmented) const;
    IntMatrix boundary_int(int d, bool augmented) const;

private:
    int lowest_ = 0;
    std::vector<std::vector<std::vector<Incidence>>> boundaries_;
};

/// Simplicial chain complex with the standard alternating-sign boundary.
CellComplex to_cell_complex(const SimplicialComplex& k);

}  // namespace vkdim
