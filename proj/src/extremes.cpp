#include "gnpx/extremes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace gnpx {

std::uint64_t binomial_coefficient_capped(std::uint64_t n, std::uint64_t k,
                                          std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r holds C(n-k+i, i) after each step
        if (r > cap) return cap;
    }
    return static_cast<std::uint64_t>(r);
}

namespace {

// better-first order: larger value wins, ties go to the lex smaller witness
bool better(std::uint32_t va, const VertexSet& wa, std::uint32_t vb, const VertexSet& wb) {
    if (va != vb) return va > vb;
    return wa < wb;
}

// keeps the `limit` best (value, witness) pairs under `better`
class TopAccumulator {
public:
    explicit TopAccumulator(std::uint64_t limit) : limit_(limit) {}

    bool full() const { return items_.size() >= limit_; }
    const std::pair<std::uint32_t, VertexSet>& worst() const { return items_.back(); }

    void offer(std::uint32_t value, VertexSet witness) {
        if (full() && !better(value, witness, items_.back().first, items_.back().second))
            return;
        auto pos = std::find_if(items_.begin(), items_.end(),
                                [&](const auto& it) {
                                    return better(value, witness, it.first, it.second);
                                });
        items_.insert(pos, {value, std::move(witness)});
        if (items_.size() > limit_) items_.pop_back();
    }

    std::vector<std::pair<std::uint32_t, VertexSet>> take() { return std::move(items_); }

private:
    std::uint64_t limit_;
    std::vector<std::pair<std::uint32_t, VertexSet>> items_;
};

void require_k(const Graph& g, std::uint32_t k) {
    if (k == 0 || k >= g.n()) throw std::invalid_argument("need 1 <= k < n");
}

TopM finish(std::uint32_t k, std::uint32_t m, bool truncated, TopAccumulator& acc) {
    TopM out;
    out.k = k;
    out.m = m;
    out.truncated = truncated;
    for (auto& [value, witness] : acc.take()) {
        out.values.push_back(value);
        out.witnesses.push_back(std::move(witness));
    }
    return out;
}

} // namespace

TopM top_m_common_neighbors(const Graph& g, std::uint32_t k, std::uint32_t m) {
    require_k(g, k);
    if (m == 0) throw std::invalid_argument("need m >= 1");
    const std::uint32_t n = g.n();
    const std::uint64_t nsets = binomial_coefficient_capped(n, k, m);
    const bool truncated = nsets < m;
    const std::uint64_t limit = truncated ? nsets : m;

    // |N(U)| is at most the minimum degree inside U, so scanning vertices in
    // descending degree order makes the running intersection shrink fast
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return g.degree(a) > g.degree(b);
    });

    // suffix_small[i]: the min(k-1, n-i) smallest vertex ids among order[i..);
    // needed to decide whether a tied branch could still produce a witness
    // lexicographically ahead of the current worst
    std::vector<std::vector<std::uint32_t>> suffix_small(n + 1);
    for (std::uint32_t i = n; i-- > 0;) {
        std::vector<std::uint32_t> s = suffix_small[i + 1];
        s.insert(std::lower_bound(s.begin(), s.end(), order[i]), order[i]);
        if (s.size() >= k) s.pop_back();
        suffix_small[i] = std::move(s);
    }

    TopAccumulator acc(limit);
    const std::uint32_t words = g.words_per_row();
    std::vector<std::uint64_t> inter(static_cast<std::size_t>(k) * words);
    std::vector<std::uint32_t> chosen;
    chosen.reserve(k);

    VertexSet scratch;
    auto sorted_with = [&](std::uint32_t extra) {
        scratch.assign(chosen.begin(), chosen.end());
        scratch.push_back(extra);
        std::sort(scratch.begin(), scratch.end());
        return scratch;
    };

    auto dfs = [&](auto&& self, std::uint32_t pos, std::uint32_t depth) -> void {
        for (std::uint32_t i = pos; i + (k - depth) <= n; ++i) {
            const std::uint32_t v = order[i];
            std::uint64_t* cur = inter.data() + static_cast<std::size_t>(depth) * words;
            const std::uint64_t* prev = depth == 0 ? nullptr : cur - words;
            std::uint32_t cap = 0;
            for (std::uint32_t w = 0; w < words; ++w) {
                cur[w] = prev == nullptr ? g.row(v)[w] : (prev[w] & g.row(v)[w]);
                cap += std::popcount(cur[w]);
            }
            if (depth + 1 == k) {
                acc.offer(cap, sorted_with(v));
                continue;
            }
            if (acc.full()) {
                const auto& [wv, ww] = acc.worst();
                if (cap < wv) continue;
                if (cap == wv) {
                    // the best this branch can do is tie; descend only if its
                    // lex-smallest completion could displace the worst witness
                    VertexSet lexmin = sorted_with(v);
                    const auto& small = suffix_small[i + 1];
                    lexmin.insert(lexmin.end(), small.begin(),
                                  small.begin() + (k - depth - 1));
                    std::sort(lexmin.begin(), lexmin.end());
                    if (!(lexmin < ww)) continue;
                }
            }
            chosen.push_back(v);
            self(self, i + 1, depth + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return finish(k, m, truncated, acc);
}

TopM brute_force_top_m(const Graph& g, std::uint32_t k, std::uint32_t m) {
    require_k(g, k);
    if (m == 0) throw std::invalid_argument("need m >= 1");
    const std::uint32_t n = g.n();
    constexpr std::uint64_t kGuard = 10'000'000;
    if (binomial_coefficient_capped(n, k, kGuard + 1) > kGuard)
        throw std::invalid_argument("brute force refuses C(n,k) > 10^7");

    const std::uint64_t nsets = binomial_coefficient_capped(n, k, m);
    TopAccumulator acc(nsets < m ? nsets : m);

    // odometer enumeration emits k-subsets in lexicographic order, matching
    // the witness tie-break by construction
    VertexSet u(k);
    std::iota(u.begin(), u.end(), 0);
    while (true) {
        acc.offer(common_neighbor_count(g, u), u);
        std::uint32_t i = k;
        while (i-- > 0) {
            if (u[i] + (k - i) < n) {
                ++u[i];
                for (std::uint32_t j = i + 1; j < k; ++j) u[j] = u[j - 1] + 1;
                break;
            }
            if (i == 0) return finish(k, m, nsets < m, acc);
        }
    }
}

namespace {

std::uint64_t count_dfs(const Graph& g, std::uint32_t k, double threshold) {
    const std::uint32_t n = g.n();
    const std::uint32_t words = g.words_per_row();
    std::vector<std::uint64_t> inter(static_cast<std::size_t>(k) * words);
    std::uint64_t count = 0;

    auto dfs = [&](auto&& self, std::uint32_t pos, std::uint32_t depth) -> void {
        for (std::uint32_t v = pos; v + (k - depth) <= n; ++v) {
            std::uint64_t* cur = inter.data() + static_cast<std::size_t>(depth) * words;
            const std::uint64_t* prev = depth == 0 ? nullptr : cur - words;
            std::uint32_t cap = 0;
            for (std::uint32_t w = 0; w < words; ++w) {
                cur[w] = prev == nullptr ? g.row(v)[w] : (prev[w] & g.row(v)[w]);
                cap += std::popcount(cur[w]);
            }
            if (depth + 1 == k) {
                if (static_cast<double>(cap) > threshold) ++count;
                continue;
            }
            // supersets only shrink the intersection
            if (!(static_cast<double>(cap) > threshold)) continue;
            self(self, v + 1, depth + 1);
        }
    };
    dfs(dfs, 0, 0);
    return count;
}

} // namespace

ExceedanceCount count_exceedances(const Graph& g, std::uint32_t k, double threshold) {
    require_k(g, k);
    return {k, threshold, count_dfs(g, k, threshold)};
}

ExceedanceCount count_ell_exceedances(const Graph& g, std::uint32_t ell, double gamma) {
    return count_exceedances(g, ell, gamma);
}

} // namespace gnpx
