#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "walkgi/error.hpp"

namespace walkgi {

inline constexpr std::size_t kMaxVertices = 4096;

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Adjacency is held as one bit row per vertex, so neighbourhood
/// intersection and local complementation are word-parallel. A Graph is
/// immutable once built; every transformation returns a new value.
class Graph {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits) {
        if (n < 1 || n > kMaxVertices) {
            throw GraphError("vertex count " + std::to_string(n) + " outside 1.." +
                             std::to_string(kMaxVertices));
        }
        bits_.assign(n_ * words_, 0);
    }

    std::size_t order() const noexcept { return n_; }

    bool adjacent(std::size_t i, std::size_t j) const noexcept {
        return (row(i)[j / kWordBits] >> (j % kWordBits)) & 1U;
    }

    std::span<const Word> row(std::size_t i) const noexcept {
        return {bits_.data() + i * words_, words_};
    }

    std::size_t degree(std::size_t i) const noexcept {
        std::size_t d = 0;
        for (Word w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
        return d;
    }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (std::size_t i = 0; i < n_; ++i) twice += degree(i);
        return twice / 2;
    }

    /// Number of vertices adjacent to both i and j.
    std::size_t common_neighbours(std::size_t i, std::size_t j) const noexcept {
        auto a = row(i);
        auto b = row(j);
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
        return c;
    }

    std::vector<std::size_t> neighbours(std::size_t i) const {
        std::vector<std::size_t> out;
        auto r = row(i);
        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = r[w];
            while (bits != 0) {
                out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j : neighbours(i)) {
                if (i < j) out.emplace_back(i, j);
            }
        }
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(std::size_t, std::span<const Edge>);
    friend Graph local_complement(const Graph&, std::size_t);
    friend Graph relabel(const Graph&, std::span<const std::size_t>);

    Word* mutable_row(std::size_t i) noexcept { return bits_.data() + i * words_; }

    void set_edge(std::size_t i, std::size_t j) noexcept {
        mutable_row(i)[j / kWordBits] |= Word{1} << (j % kWordBits);
        mutable_row(j)[i / kWordBits] |= Word{1} << (i % kWordBits);
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<Word> bits_;
};

/// Parameters (n, d, alpha, beta) of a strongly regular graph.
struct SrgParams {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t alpha = 0;
    std::size_t beta = 0;

    /// d(d - alpha - 1) == (n - d - 1) beta
    bool feasible() const noexcept {
        const auto [sn, sd, sa, sb] = std::tuple<long long, long long, long long, long long>(n, d, alpha, beta);
        return sd * (sd - sa - 1) == (sn - sd - 1) * sb;
    }

    std::string to_string() const {
        return std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(alpha) + "," +
               std::to_string(beta);
    }

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Builds a graph from an edge list. Pairs are symmetrized and duplicates
/// collapse; loops and out-of-range endpoints are rejected.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [i, j] : edges) {
        if (i >= n || j >= n) {
            throw GraphError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                             ") index out of range for n=" + std::to_string(n));
        }
        if (i == j) throw GraphError("loop at vertex " + std::to_string(i));
        g.set_edge(i, j);
    }
    return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> seq(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) seq[i] = g.degree(i);
    std::sort(seq.begin(), seq.end());
    return seq;
}

/// Returns the SRG parameters of g, or nullopt when g is not strongly
/// regular. Complete and edgeless graphs are not reported as SRGs.
inline std::optional<SrgParams> srg_parameters(const Graph& g) {
    const std::size_t n = g.order();
    const std::size_t d = g.degree(0);
    if (d == 0 || d == n - 1) return std::nullopt;
    for (std::size_t i = 1; i < n; ++i) {
        if (g.degree(i) != d) return std::nullopt;
    }
    std::optional<std::size_t> alpha;
    std::optional<std::size_t> beta;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto& slot = g.adjacent(i, j) ? alpha : beta;
            const std::size_t c = g.common_neighbours(i, j);
            if (!slot) {
                slot = c;
            } else if (*slot != c) {
                return std::nullopt;
            }
        }
    }
    return SrgParams{n, d, *alpha, *beta};
}

/// Local complement of g at u: adjacency among distinct neighbours of u is
/// complemented, every other pair is kept.
inline Graph local_complement(const Graph& g, std::size_t u) {
    if (u >= g.order()) {
        throw GraphError("vertex " + std::to_string(u) + " out of range for n=" +
                         std::to_string(g.order()));
    }
    Graph out = g;
    auto nbhd = g.row(u);
    for (std::size_t v : g.neighbours(u)) {
        Graph::Word* r = out.mutable_row(v);
        for (std::size_t w = 0; w < nbhd.size(); ++w) r[w] ^= nbhd[w];
        // v is in N(u); undo the self bit the xor just set.
        r[v / Graph::kWordBits] ^= Graph::Word{1} << (v % Graph::kWordBits);
    }
    return out;
}

/// Relabels vertex i as perm[i]. perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
    const std::size_t n = g.order();
    if (perm.size() != n) throw GraphError("permutation length does not match vertex count");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw GraphError("relabeling is not a permutation");
        seen[p] = true;
    }
    Graph out(n);
    for (auto [i, j] : g.edges()) out.set_edge(perm[i], perm[j]);
    return out;
}

}  // namespace walkgi
