#pragma once

#include <map>

#include "vkdim/complex.hpp"
#include "vkdim/config_space.hpp"

namespace vkdim {

/// Signed intersection number of the affine images of two disjoint
/// k-simplices when vertex rank r is placed at gamma(r + 1) on the moment
/// curve gamma(t) = (t, t^2, ..., t^(2k)) in R^(2k). Exact rational
/// arithmetic; the sign is that of the orientation of the concatenated
/// edge frames and is not yet calibrated (see moment_curve_calibration).
///
/// Throws std::invalid_argument on bad input, std::logic_error if the
/// points are found not to be in general position (cannot happen on the
/// moment curve).
int moment_curve_intersection(const Simplex& sigma, const Simplex& tau, int k);

/// The raw sign of the reference cell [0,2,..,2k] x [1,3,..,2k+1], on which
/// nu is +1. Multiplying raw intersections by it fixes the global convention.
int moment_curve_calibration(int k);

/// Calibrated intersection number on every top cell of C(K), k = dim K.
std::map<ConfigCell, int> moment_curve_oracle(const SimplicialComplex& k_complex, int k);

}  // namespace vkdim
