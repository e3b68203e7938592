#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vkdim/complex.hpp"

namespace vkdim::tools {

/// Thrown for unknown generator names and malformed expressions.
class ZooError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Builds a complex from an expression such as "join(points(2), cycle(5))".
///
/// simplex(k)  octahedron_boundary(k)  cycle(n)  path(n)  points(n)  star(n)
/// tree(n, seed)  random_flag(n, p, seed)  join(A, B, ...)  cone(A)  suspension(A)
///
/// Random entries take `default_seed` when their seed argument is omitted.
SimplicialComplex generate(const std::string& expression, std::uint64_t default_seed = 0);

/// Joins a command-line name and its parameters into one expression:
/// ("cycle", {"4"}) -> "cycle(4)".
std::string make_expression(const std::string& name, const std::vector<std::string>& params);

/// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
/// Uniform integer in [0, n); n > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

enum class Provenance { theorem, derived, trivial };

/// A catalogued zoo entry with the values it is expected to produce.
struct ZooEntry {
    std::string expression;
    bool flag;
    /// Reduced mod-2 Betti number in the top degree, when catalogued.
    std::optional<std::size_t> top_betti;
    Provenance betti_source;
    /// Expected exact actdim(A_L) when the pipeline should determine it.
    std::optional<int> actdim;
    Provenance actdim_source;
};

/// The catalogue used by the acceptance and round-trip tests.
const std::vector<ZooEntry>& zoo_catalog();

std::string to_string(Provenance p);

}  // namespace vkdim::tools
