#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gnpx {

// Sorted vector of distinct vertex ids.
using VertexSet = std::vector<std::uint32_t>;

// Undirected simple graph as a bitset adjacency matrix: one row per vertex,
// ceil(n/64) words per row, padding bits kept zero. Immutable once built;
// concurrent readers are safe.
class Graph {
public:
    explicit Graph(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    std::uint32_t words_per_row() const { return words_; }

    void add_edge(std::uint32_t u, std::uint32_t v);
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    std::uint32_t degree(std::uint32_t v) const;
    std::uint64_t edge_count() const;

    const std::uint64_t* row(std::uint32_t v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    // symmetry, zero diagonal, zero padding bits
    void check_invariants() const;

private:
    void require_vertex(std::uint32_t v) const;

    std::uint32_t n_;
    std::uint32_t words_;
    std::vector<std::uint64_t> bits_;
};

// G(n,p) sampler. Pure function of (n, p, seed): one uniform draw per pair in
// lexicographic (u,v) order, u < v. For p < 0.05 the draws are replaced by
// geometric skips over the same pair sequence; that path is valid but only the
// per-pair path is promised bit-stable across versions.
Graph sample_gnp(std::uint32_t n, double p, std::uint64_t seed);

// true iff the geometric-skip path is active for this p
bool gnp_uses_skip_sampling(double p);

// |N(U)|: vertices outside U adjacent to every member of U.
// U must be nonempty, strictly increasing, all ids < g.n().
std::uint32_t common_neighbor_count(const Graph& g, const VertexSet& u);

// Edge-list text format: "n m\n" then m lines "u v\n" with u < v.
void save_edge_list(const Graph& g, std::ostream& out);
Graph load_edge_list(std::istream& in);
void save_edge_list_file(const Graph& g, const std::string& path);
Graph load_edge_list_file(const std::string& path);

} // namespace gnpx
