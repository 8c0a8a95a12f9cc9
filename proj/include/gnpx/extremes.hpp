#pragma once

#include "gnpx/graph.hpp"

#include <cstdint>
#include <vector>

namespace gnpx {

// m largest common-neighbor counts over all k-subsets, with their witnesses.
// Order statistics are taken over the multiset of C(n,k) values. Ties are
// resolved toward the lexicographically smallest vertex set, so results are
// deterministic and comparable across implementations.
struct TopM {
    std::uint32_t k = 0;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> values;   // non-increasing, length min(m, C(n,k))
    std::vector<VertexSet> witnesses;    // witnesses[i] attains values[i]
    bool truncated = false;              // m exceeded C(n,k)
};

struct ExceedanceCount {
    std::uint32_t k = 0;
    double threshold = 0.0;
    std::uint64_t count = 0; // #{U : |N(U)| > threshold}, strict
};

// Pruned depth-first search over vertex subsets.
TopM top_m_common_neighbors(const Graph& g, std::uint32_t k, std::uint32_t m);

// Plain lexicographic enumeration of every k-subset; oracle for the search.
// Refuses C(n,k) > 10^7.
TopM brute_force_top_m(const Graph& g, std::uint32_t k, std::uint32_t m);

// Number of k-sets whose common-neighbor count strictly exceeds threshold.
ExceedanceCount count_exceedances(const Graph& g, std::uint32_t k, double threshold);

// Same contract with k := ell; used with gamma = Gamma_ell cutoffs.
ExceedanceCount count_ell_exceedances(const Graph& g, std::uint32_t ell, double gamma);

// C(n,k) clamped to cap (saturating); plumbing for enumeration guards
std::uint64_t binomial_coefficient_capped(std::uint64_t n, std::uint64_t k,
                                          std::uint64_t cap);

} // namespace gnpx
