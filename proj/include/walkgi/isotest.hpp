#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walkgi/error.hpp"
#include "walkgi/exact_linalg.hpp"
#include "walkgi/graph.hpp"
#include "walkgi/invariants.hpp"
#include "walkgi/parallel.hpp"

namespace walkgi {

/// Pipeline stages, cheapest first.
enum class Stage {
    VertexCount,
    EdgeCount,
    DegreeSequence,
    Determinant,
    WalkSignature,
    LcDetProfile,
    LcWalkSignature,
};

inline constexpr std::string_view stage_name(Stage s) {
    switch (s) {
        case Stage::VertexCount: return "vertex-count";
        case Stage::EdgeCount: return "edge-count";
        case Stage::DegreeSequence: return "degree-sequence";
        case Stage::Determinant: return "determinant";
        case Stage::WalkSignature: return "walk-signature";
        case Stage::LcDetProfile: return "lc-det-profile";
        case Stage::LcWalkSignature: return "lc-walk-signature";
    }
    return "unknown";
}

inline constexpr Stage kAllStages[] = {
    Stage::VertexCount,   Stage::EdgeCount,    Stage::DegreeSequence,  Stage::Determinant,
    Stage::WalkSignature, Stage::LcDetProfile, Stage::LcWalkSignature,
};

/// Distinguished is a proof of non-isomorphism; NotDistinguished proves
/// nothing.
struct Verdict {
    std::optional<Stage> stage;

    bool distinguished() const noexcept { return stage.has_value(); }
};

/// True when the two graphs differ at the given stage.
inline bool stage_differs(Stage s, const Graph& g, const Graph& h, unsigned workers = 1) {
    switch (s) {
        case Stage::VertexCount: return g.order() != h.order();
        case Stage::EdgeCount: return g.edge_count() != h.edge_count();
        case Stage::DegreeSequence: return degree_sequence(g) != degree_sequence(h);
        case Stage::Determinant:
            return determinant(adjacency_matrix(g)) != determinant(adjacency_matrix(h));
        case Stage::WalkSignature: {
            const std::size_t m = std::max(default_m(g), default_m(h));
            return encode(walk_signature(g, m)) != encode(walk_signature(h, m));
        }
        case Stage::LcDetProfile:
            return encode(lc_determinant_profile(g, workers)) != encode(lc_determinant_profile(h, workers));
        case Stage::LcWalkSignature:
            return lc_walk_signature_encoding(g, workers) != lc_walk_signature_encoding(h, workers);
    }
    return false;
}

/// Runs the stages in order over `stages` and stops at the first difference.
inline Verdict distinguish_pair(const Graph& g, const Graph& h, std::span<const Stage> stages = kAllStages,
                                unsigned workers = 1) {
    for (Stage s : stages) {
        // Later stages assume equal orders.
        if (s != Stage::VertexCount && g.order() != h.order()) return Verdict{Stage::VertexCount};
        if (stage_differs(s, g, h, workers)) return Verdict{s};
    }
    return Verdict{};
}

// ---------------------------------------------------------------------------
// Brute-force oracle

inline constexpr std::size_t kDefaultOracleLimit = 12;

struct OracleResult {
    bool isomorphic = false;
    /// certificate[v] is the image in H of vertex v of G.
    std::vector<std::size_t> certificate;
};

inline bool is_isomorphism(const Graph& g, const Graph& h, std::span<const std::size_t> f) {
    if (g.order() != h.order() || f.size() != g.order()) return false;
    std::vector<bool> used(h.order(), false);
    for (std::size_t x : f) {
        if (x >= h.order() || used[x]) return false;
        used[x] = true;
    }
    for (std::size_t u = 0; u < g.order(); ++u) {
        for (std::size_t v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v) != h.adjacent(f[u], f[v])) return false;
        }
    }
    return true;
}

namespace detail {

class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        // Highest degree first: constrains the most pairs early.
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
        image_.assign(n_, n_);
        used_.assign(n_, false);
    }

    std::optional<std::vector<std::size_t>> run() {
        if (extend(0)) return image_;
        return std::nullopt;
    }

private:
    bool extend(std::size_t depth) {
        if (depth == n_) return true;
        const std::size_t v = order_[depth];
        for (std::size_t w = 0; w < n_; ++w) {
            if (used_[w] || h_.degree(w) != g_.degree(v)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const std::size_t u = order_[k];
                ok = g_.adjacent(u, v) == h_.adjacent(image_[u], w);
            }
            if (!ok) continue;
            image_[v] = w;
            used_[w] = true;
            if (extend(depth + 1)) return true;
            used_[w] = false;
            image_[v] = n_;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
};

}  // namespace detail

/// Exhaustive isomorphism test by backtracking over degree-preserving
/// bijections. Throws OracleLimitError above `limit` vertices.
inline OracleResult brute_force_isomorphic(const Graph& g, const Graph& h,
                                           std::size_t limit = kDefaultOracleLimit) {
    if (g.order() != h.order()) return {};
    if (g.order() > limit) {
        throw OracleLimitError("oracle limit: n=" + std::to_string(g.order()) + " exceeds cap " +
                               std::to_string(limit));
    }
    if (g.edge_count() != h.edge_count() || degree_sequence(g) != degree_sequence(h)) return {};
    auto found = detail::IsoSearch(g, h).run();
    if (!found) return {};
    if (!is_isomorphism(g, h, *found)) {
        throw InvariantViolation("oracle certificate failed edge-by-edge verification");
    }
    return {true, std::move(*found)};
}

// ---------------------------------------------------------------------------
// Group partitioning

using EquivalenceClasses = std::vector<std::vector<std::size_t>>;

struct StageStats {
    Stage stage;
    std::size_t classes_before = 0;
    std::size_t classes_after = 0;
    /// Graphs whose invariant was computed at this stage (cache hits excluded).
    std::size_t computed = 0;
    double seconds = 0.0;
};

struct PartitionReport {
    std::size_t input_size = 0;
    bool mixed_order = false;
    /// Classes of equal determinant profile.
    EquivalenceClasses coarse;
    /// Coarse classes refined by local-complement walk signatures.
    EquivalenceClasses final_classes;
    std::vector<StageStats> stages;
    /// Per-graph canonical encodings; lc walk encodings exist only for
    /// graphs that sat in a coarse class of size > 1 (or were supplied).
    std::vector<Bytes> profile_encodings;
    std::vector<std::optional<Bytes>> lc_walk_encodings;
};

/// Class size -> number of classes of that size.
inline std::map<std::size_t, std::size_t> class_size_histogram(const EquivalenceClasses& classes) {
    std::map<std::size_t, std::size_t> h;
    for (const auto& c : classes) ++h[c.size()];
    return h;
}

using ProgressFn = std::function<void(Stage, std::size_t done, std::size_t total)>;

struct PartitionOptions {
    unsigned workers = 1;
    /// Optional precomputed encodings indexed like the input; entries
    /// that are set are used instead of recomputing.
    std::vector<std::optional<Bytes>> cached_profiles;
    std::vector<std::optional<Bytes>> cached_lc_walks;
    ProgressFn progress;
};

namespace detail {

/// Groups `members` by byte-equal key; classes and members come out sorted
/// by input index.
inline EquivalenceClasses group_by_key(std::span<const std::size_t> members, const std::vector<Bytes>& keys) {
    std::vector<std::size_t> idx(members.begin(), members.end());
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return a < b;
    });
    EquivalenceClasses out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k == 0 || keys[idx[k]] != keys[idx[k - 1]]) out.emplace_back();
        out.back().push_back(idx[k]);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

template <class Compute>
std::size_t fill_encodings(std::span<const std::size_t> which, std::vector<Bytes>& out,
                           const std::vector<std::optional<Bytes>>& cache, unsigned workers, Stage stage,
                           const ProgressFn& progress, Compute&& compute) {
    std::vector<std::size_t> todo;
    for (std::size_t i : which) {
        if (i < cache.size() && cache[i]) {
            out[i] = *cache[i];
        } else {
            todo.push_back(i);
        }
    }
    std::mutex progress_mutex;
    std::size_t done = 0;
    // Few graphs: spread the per-vertex work of each graph instead.
    const unsigned inner = todo.size() >= workers ? 1U : workers;
    parallel_for(todo.size(), workers, [&](std::size_t k) {
        out[todo[k]] = compute(todo[k], inner);
        if (progress) {
            std::lock_guard lock(progress_mutex);
            progress(stage, ++done, todo.size());
        }
    });
    return todo.size();
}

}  // namespace detail

/// Partitions a group of graphs into classes of equal local-complement
/// determinant profile, then refines every class of size > 1 by
/// local-complement walk signatures. Graphs sharing a final class are not
/// distinguished by this method.
inline PartitionReport partition_group(std::span<const Graph> graphs, const PartitionOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    PartitionReport rep;
    const std::size_t count = graphs.size();
    rep.input_size = count;
    for (const auto& g : graphs) rep.mixed_order = rep.mixed_order || g.order() != graphs.front().order();

    std::vector<std::size_t> all(count);
    std::iota(all.begin(), all.end(), std::size_t{0});

    auto t0 = clock::now();
    rep.profile_encodings.resize(count);
    const std::size_t profiled = detail::fill_encodings(
        all, rep.profile_encodings, opts.cached_profiles, opts.workers, Stage::LcDetProfile, opts.progress,
        [&](std::size_t i, unsigned w) { return encode(lc_determinant_profile(graphs[i], w)); });
    rep.coarse = detail::group_by_key(all, rep.profile_encodings);
    rep.stages.push_back({Stage::LcDetProfile, count == 0 ? 0U : 1U, rep.coarse.size(), profiled,
                          std::chrono::duration<double>(clock::now() - t0).count()});

    t0 = clock::now();
    std::vector<std::size_t> refine;
    for (const auto& c : rep.coarse) {
        if (c.size() > 1) refine.insert(refine.end(), c.begin(), c.end());
    }
    std::vector<Bytes> walk_keys(count);
    const std::size_t walked = detail::fill_encodings(
        refine, walk_keys, opts.cached_lc_walks, opts.workers, Stage::LcWalkSignature, opts.progress,
        [&](std::size_t i, unsigned w) { return lc_walk_signature_encoding(graphs[i], w); });
    rep.lc_walk_encodings.resize(count);
    for (std::size_t i : refine) rep.lc_walk_encodings[i] = walk_keys[i];
    for (std::size_t i = 0; i < count && i < opts.cached_lc_walks.size(); ++i) {
        if (!rep.lc_walk_encodings[i] && opts.cached_lc_walks[i]) rep.lc_walk_encodings[i] = opts.cached_lc_walks[i];
    }

    for (const auto& c : rep.coarse) {
        if (c.size() == 1) {
            rep.final_classes.push_back(c);
            continue;
        }
        for (auto& sub : detail::group_by_key(c, walk_keys)) rep.final_classes.push_back(std::move(sub));
    }
    std::sort(rep.final_classes.begin(), rep.final_classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    rep.stages.push_back({Stage::LcWalkSignature, rep.coarse.size(), rep.final_classes.size(), walked,
                          std::chrono::duration<double>(clock::now() - t0).count()});
    return rep;
}

}  // namespace walkgi
