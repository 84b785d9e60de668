#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "walkgi/encoding.hpp"
#include "walkgi/exact_linalg.hpp"
#include "walkgi/graph.hpp"
#include "walkgi/parallel.hpp"

namespace walkgi {

/// (a_ij^(1), ..., a_ij^(m)): walk counts of lengths 1..m from i to j.
using WalkTuple = std::vector<BigInt>;
using WalkRow = std::vector<WalkTuple>;

/// Multiset of per-vertex multisets of walk-count tuples. Tuples are
/// sorted within each row and rows are sorted, so two signatures compare
/// equal exactly when they agree up to vertex relabeling.
struct WalkSignature {
    std::size_t m = 0;
    std::vector<WalkRow> rows;

    friend bool operator==(const WalkSignature&, const WalkSignature&) = default;
};

/// Local-complement determinants ordered by |value|, negatives first on ties.
struct DetProfile {
    std::vector<BigInt> values;

    friend bool operator==(const DetProfile&, const DetProfile&) = default;
};

/// One walk signature per local complement, sorted by canonical encoding.
struct LcWalkSignature {
    std::vector<WalkSignature> parts;

    friend bool operator==(const LcWalkSignature&, const LcWalkSignature&) = default;
};

inline Bytes encode(const WalkSignature& s) {
    ByteWriter w;
    w.tag('W');
    w.u32(s.rows.size());
    w.u32(s.m);
    for (const auto& row : s.rows) {
        for (const auto& tuple : row) {
            for (const auto& v : tuple) w.integer(v);
        }
    }
    return std::move(w).take();
}

inline Bytes encode(const DetProfile& p) {
    ByteWriter w;
    w.tag('D');
    w.u32(p.values.size());
    for (const auto& v : p.values) w.integer(v);
    return std::move(w).take();
}

inline Bytes encode(const LcWalkSignature& s) {
    ByteWriter w;
    w.tag('L');
    w.u32(s.parts.size());
    for (const auto& part : s.parts) w.blob(encode(part));
    return std::move(w).take();
}

/// Walk signature from precomputed powers A^1..A^m.
inline WalkSignature walk_signature_from_powers(std::span<const IntMatrix> powers) {
    if (powers.empty()) throw std::invalid_argument("walk signature needs m >= 1");
    const std::size_t n = powers.front().size();
    WalkSignature sig;
    sig.m = powers.size();
    sig.rows.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        WalkRow& row = sig.rows[i];
        row.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            row[j].reserve(powers.size());
            for (const auto& p : powers) row[j].push_back(p(i, j));
        }
        std::sort(row.begin(), row.end());
    }
    std::sort(sig.rows.begin(), sig.rows.end());
    return sig;
}

inline WalkSignature walk_signature(const Graph& g, std::size_t m) {
    if (m == 0) throw std::invalid_argument("walk signature needs m >= 1");
    const IntMatrix a = adjacency_matrix(g);
    std::vector<IntMatrix> powers;
    powers.reserve(m);
    powers.push_back(a);
    while (powers.size() < m) powers.push_back(a * powers.back());
    return walk_signature_from_powers(powers);
}

/// Walk-length horizon: the number of distinct adjacency eigenvalues.
inline std::size_t default_m(const Graph& g) {
    return distinct_eigenvalue_count(adjacency_matrix(g));
}

inline bool det_profile_less(const BigInt& a, const BigInt& b) {
    if (const int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); c != 0) return c < 0;
    return a < b;
}

inline DetProfile lc_determinant_profile(const Graph& g, unsigned workers = 1) {
    DetProfile p;
    p.values.resize(g.order());
    parallel_for(g.order(), workers, [&](std::size_t u) {
        p.values[u] = determinant(adjacency_matrix(local_complement(g, u)));
    });
    std::sort(p.values.begin(), p.values.end(), det_profile_less);
    return p;
}

/// Canonical encoding of the local-complement walk signature. Each part
/// uses the horizon of its own local complement.
inline Bytes lc_walk_signature_encoding(const Graph& g, unsigned workers = 1) {
    std::vector<Bytes> parts(g.order());
    parallel_for(g.order(), workers, [&](std::size_t u) {
        const auto powers = detail::minimal_polynomial_powers(adjacency_matrix(local_complement(g, u)));
        parts[u] = encode(walk_signature_from_powers(powers));
    });
    std::sort(parts.begin(), parts.end());
    ByteWriter w;
    w.tag('L');
    w.u32(parts.size());
    for (const auto& part : parts) w.blob(part);
    return std::move(w).take();
}

inline LcWalkSignature lc_walk_signature(const Graph& g, unsigned workers = 1) {
    std::vector<std::pair<Bytes, WalkSignature>> parts(g.order());
    parallel_for(g.order(), workers, [&](std::size_t u) {
        const auto powers = detail::minimal_polynomial_powers(adjacency_matrix(local_complement(g, u)));
        auto sig = walk_signature_from_powers(powers);
        parts[u] = {encode(sig), std::move(sig)};
    });
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    LcWalkSignature out;
    out.parts.reserve(parts.size());
    for (auto& [bytes, sig] : parts) out.parts.push_back(std::move(sig));
    return out;
}

}  // namespace walkgi
