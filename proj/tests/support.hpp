#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing in
// here calls the library's linear algebra or invariant code.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "walkgi/graph.hpp"
#include "walkgi/graph6.hpp"

namespace walkgi::testing {

inline std::filesystem::path data_dir() { return WALKGI_TEST_DATA_DIR; }

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    return build_graph(n, e);
}

inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return build_graph(leaves + 1, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return build_graph(10, e);
}

inline Graph two_triangles() { return build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

inline std::vector<Graph> load_graphs(const std::filesystem::path& file) {
    std::vector<Graph> out;
    for (auto& e : read_dataset(file, true).entries) out.push_back(std::move(e.graph));
    return out;
}

inline Graph load_graph(const std::filesystem::path& file) { return load_graphs(file).at(0); }

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) e.emplace_back(i, j);
        }
    }
    return build_graph(n, e);
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// --- oracles ---------------------------------------------------------------

/// Counts walks of length k from i to j by depth-first enumeration.
inline unsigned long count_walks_dfs(const Graph& g, std::size_t i, std::size_t j, unsigned k) {
    if (k == 0) return i == j ? 1 : 0;
    unsigned long total = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (g.adjacent(i, v)) total += count_walks_dfs(g, v, j, k - 1);
    }
    return total;
}

/// Laplace expansion along the first row; zero entries are skipped.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    mpz_class total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<mpz_class>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) minor[r - 1].push_back(m[r][k]);
            }
        }
        const mpz_class term = m[0][c] * cofactor_det(minor);
        if (c % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

/// Gaussian elimination over the rationals, first nonzero pivot.
inline mpz_class rational_det(const std::vector<std::vector<mpz_class>>& src) {
    const std::size_t n = src.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = src[i][j];
    }
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const mpq_class f = m[r][k] / m[k][k];
            for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    if (det.get_den() != 1) throw std::logic_error("non-integral determinant");
    return det.get_num();
}

inline std::vector<std::vector<mpz_class>> adjacency_rows(const Graph& g) {
    std::vector<std::vector<mpz_class>> m(g.order(), std::vector<mpz_class>(g.order(), 0));
    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j) m[i][j] = g.adjacent(i, j) ? 1 : 0;
    }
    return m;
}

/// Exhaustive isomorphism check over all n! bijections (n <= 8).
inline bool isomorphic_by_enumeration(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    std::vector<std::size_t> f(g.order());
    std::iota(f.begin(), f.end(), std::size_t{0});
    do {
        bool ok = true;
        for (std::size_t u = 0; u < g.order() && ok; ++u) {
            for (std::size_t v = u + 1; v < g.order() && ok; ++v) ok = g.adjacent(u, v) == h.adjacent(f[u], f[v]);
        }
        if (ok) return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

}  // namespace walkgi::testing
