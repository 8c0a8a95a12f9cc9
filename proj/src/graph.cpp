#include "gnpx/graph.hpp"
#include "gnpx/rng.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gnpx {

Graph::Graph(std::uint32_t n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
}

void Graph::require_vertex(std::uint32_t v) const {
    if (v >= n_) throw std::invalid_argument("vertex id out of range");
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    require_vertex(u);
    require_vertex(v);
    return (row(u)[v / 64] >> (v % 64)) & 1ULL;
}

std::uint32_t Graph::degree(std::uint32_t v) const {
    require_vertex(v);
    const std::uint64_t* r = row(v);
    std::uint32_t d = 0;
    for (std::uint32_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::uint64_t Graph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint32_t v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::check_invariants() const {
    for (std::uint32_t v = 0; v < n_; ++v) {
        if ((row(v)[v / 64] >> (v % 64)) & 1ULL)
            throw std::logic_error("diagonal bit set");
        if (n_ % 64 != 0) {
            std::uint64_t pad = row(v)[words_ - 1] >> (n_ % 64);
            if (pad != 0) throw std::logic_error("padding bits set");
        }
    }
    for (std::uint32_t u = 0; u < n_; ++u)
        for (std::uint32_t v = u + 1; v < n_; ++v)
            if (has_edge(u, v) != has_edge(v, u))
                throw std::logic_error("asymmetric adjacency");
}

bool gnp_uses_skip_sampling(double p) { return p > 0.0 && p < 0.05; }

namespace {

// map a linear index over the lexicographic pair sequence back to (u,v);
// callers advance idx monotonically so the row scan is amortized O(n)
struct PairCursor {
    std::uint64_t row_start = 0; // linear index of (u, u+1)
    std::uint32_t u = 0;
    std::uint32_t n;

    explicit PairCursor(std::uint32_t n_) : n(n_) {}

    std::pair<std::uint32_t, std::uint32_t> locate(std::uint64_t idx) {
        while (idx >= row_start + (n - 1 - u)) {
            row_start += n - 1 - u;
            ++u;
        }
        return {u, static_cast<std::uint32_t>(u + 1 + (idx - row_start))};
    }
};

} // namespace

Graph sample_gnp(std::uint32_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    Graph g(n);
    if (n < 2 || p == 0.0) return g;

    if (p == 1.0) {
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    Rng rng(seed);
    if (gnp_uses_skip_sampling(p)) {
        // geometric skips over the pair sequence (Batagelj-Brandes): the gap
        // before the next present edge is Geom(p) via inverse CDF
        const double log1mp = std::log1p(-p);
        const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        PairCursor cur(n);
        std::uint64_t idx = 0;
        while (true) {
            double u01 = rng.uniform01();
            double skip = std::floor(std::log1p(-u01) / log1mp);
            idx += static_cast<std::uint64_t>(skip);
            if (idx >= total) break;
            auto [u, v] = cur.locate(idx);
            g.add_edge(u, v);
            ++idx;
        }
        return g;
    }

    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) g.add_edge(u, v);
    return g;
}

std::uint32_t common_neighbor_count(const Graph& g, const VertexSet& u) {
    if (u.empty()) throw std::invalid_argument("vertex set must be nonempty");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] >= g.n()) throw std::invalid_argument("vertex id out of range");
        if (i > 0 && u[i] <= u[i - 1])
            throw std::invalid_argument("vertex set must be strictly increasing");
    }
    // members of U drop out by themselves: each row has a zero diagonal bit,
    // so ANDing row(m) clears bit m of the intersection
    const std::uint32_t words = g.words_per_row();
    std::uint32_t count = 0;
    for (std::uint32_t w = 0; w < words; ++w) {
        std::uint64_t acc = g.row(u[0])[w];
        for (std::size_t i = 1; i < u.size(); ++i) acc &= g.row(u[i])[w];
        count += std::popcount(acc);
    }
    return count;
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (std::uint32_t u = 0; u < g.n(); ++u)
        for (std::uint32_t v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
}

Graph load_edge_list(std::istream& in) {
    std::uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: bad header");
    if (n == 0 || n > 0xFFFFFFFFULL) throw std::runtime_error("edge list: bad vertex count");
    Graph g(static_cast<std::uint32_t>(n));
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
        if (u >= v || v >= n) throw std::runtime_error("edge list: bad edge");
        if (g.has_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)))
            throw std::runtime_error("edge list: duplicate edge");
        g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    return g;
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    save_edge_list(g, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return load_edge_list(in);
}

} // namespace gnpx
