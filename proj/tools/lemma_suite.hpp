#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vkdim/complex.hpp"
#include "vkdim/config_space.hpp"

namespace vkdim::tools {

struct LemmaSuiteOptions {
    std::uint64_t seed = 0;
    std::size_t count = 50;
    std::size_t max_vertices = 8;
    /// Test mode: flip the sign of the second term of s.
    bool inject_sign_bug = false;
    /// Largest number of cycle-basis elements summed into a candidate M.
    int max_combination = 2;
};

struct LemmaFailure {
    /// "pullback", "pushforward", "cycle", "mu-evaluation" or "moment-curve".
    std::string lemma;
    std::size_t sample = 0;
    SimplicialComplex complex;
    std::string detail;
};

struct LemmaCounters {
    std::size_t pullback_cells = 0;
    std::size_t pairs = 0;
    std::size_t star_pairs = 0;
    std::size_t oracle_cells = 0;
};

struct LemmaSuiteResult {
    std::size_t complexes = 0;
    LemmaCounters counters;
    /// First failure, minimized; empty when everything passed.
    std::optional<LemmaFailure> failure;

    bool passed() const { return !failure.has_value(); }
};

/// s with the sign of the second term optionally flipped.
ProductChain push_forward(const ConfigChain& chain, bool inject_sign_bug);

/// s applied to the ordered pair (a, b) as written, without passing through
/// the canonical representative. The injected bug is only visible here: on
/// canonical representatives the second term never meshes.
ProductChain push_ordered(const Simplex& a, const Simplex& b, bool inject_sign_bug);

/// A random flag complex with at most `max_vertices` vertices, dimension 1
/// or 2 and a nonzero top mod-2 cycle, with randomly permuted vertex order.
SimplicialComplex random_lemma_complex(std::mt19937_64& rng, std::size_t max_vertices = 8);

/// Runs every identity on one complex; returns the first violation.
std::optional<LemmaFailure> check_lemmas(const SimplicialComplex& l, const LemmaSuiteOptions& options,
                                         LemmaCounters* counters = nullptr);

/// Greedily drops maximal faces and vertices while the same identity still fails.
LemmaFailure minimize(LemmaFailure failure, const LemmaSuiteOptions& options);

LemmaSuiteResult run_lemma_suite(const LemmaSuiteOptions& options);

}  // namespace vkdim::tools
