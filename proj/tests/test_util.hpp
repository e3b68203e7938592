#pragma once

#include <set>
#include <string>
#include <vector>

#include "vkdim/complex.hpp"

namespace testutil {

using Tuples = std::vector<std::vector<std::string>>;

inline vkdim::SimplicialComplex make(const Tuples& tuples) { return vkdim::SimplicialComplex::from_maximal_simplices(tuples); }

inline vkdim::SimplicialComplex c4() { return make({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}); }

inline vkdim::SimplicialComplex octahedron()
{
    return make({{"a", "c", "e"}, {"a", "c", "f"}, {"a", "d", "e"}, {"a", "d", "f"},
                 {"b", "c", "e"}, {"b", "c", "f"}, {"b", "d", "e"}, {"b", "d", "f"}});
}

/// Faces as label sets, independent of vertex order.
inline std::set<std::set<std::string>> label_faces(const vkdim::SimplicialComplex& k)
{
    std::set<std::set<std::string>> out;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& s : k.faces(d)) {
            auto l = k.labels_of(s);
            out.emplace(l.begin(), l.end());
        }
    }
    return out;
}

}  // namespace testutil
