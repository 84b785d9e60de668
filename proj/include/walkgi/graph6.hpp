#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "walkgi/error.hpp"
#include "walkgi/graph.hpp"

namespace walkgi {

// graph6: printable bytes 63..126. A size header N(n) (one byte n+63 for
// n <= 62, else 126 followed by 18 bits in three bytes) is followed by
// the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per
// byte, most significant first, zero padded.

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {

inline constexpr int kG6Bias = 63;

inline std::size_t g6_body_length(std::size_t n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    for (std::size_t p = 0; p < text.size(); ++p) {
        const auto c = static_cast<unsigned char>(text[p]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte at position " + std::to_string(p), p);
    }
    if (text.empty()) throw ParseError("empty graph6 line", 0);

    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(text[0] - detail::kG6Bias);
        pos = 1;
    } else {
        if (text.size() > 1 && text[1] == '~') {
            throw ParseError("unsupported 8-byte graph6 size header", 1);
        }
        if (text.size() < 4) throw ParseError("truncated graph6 size header", text.size());
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - detail::kG6Bias);
        pos = 4;
    }
    if (n < 1 || n > kMaxVertices) {
        throw ParseError("graph6 vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices),
                         0);
    }
    const std::size_t expected = detail::g6_body_length(n);
    if (text.size() - pos != expected) {
        throw ParseError("truncated/overlong body: expected " + std::to_string(expected) + " bytes, got " +
                             std::to_string(text.size() - pos),
                         text.size() < pos + expected ? text.size() : pos + expected);
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const int value = text[pos + bit / 6] - detail::kG6Bias;
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (; bit % 6 != 0; ++bit) {
        const int value = text[pos + bit / 6] - detail::kG6Bias;
        if ((value >> (5 - bit % 6)) & 1) {
            throw ParseError("nonzero graph6 padding bit", pos + bit / 6);
        }
    }
    return build_graph(n, edges);
}

inline std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + detail::kG6Bias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + detail::kG6Bias));
        }
    }
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + detail::kG6Bias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kG6Bias));
    return out;
}

struct DatasetEntry {
    std::string id;
    std::string g6;
    Graph graph;
};

struct DatasetIssue {
    std::size_t line = 0;
    std::string message;
};

struct Dataset {
    std::vector<DatasetEntry> entries;
    std::vector<DatasetIssue> issues;
};

/// Reads one graph6 graph per line. Blank lines, '#' comments and a bare
/// ">>graph6<<" token are skipped. Ids are "<file name>:<line>". In strict
/// mode the first bad line throws DatasetError; otherwise bad lines are
/// collected in `issues`.
inline Dataset read_dataset(const std::filesystem::path& path, bool strict = false) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset " + path.string(), 0);
    const std::string name = path.filename().string();
    Dataset ds;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view text = line;
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
            text.remove_suffix(1);
        }
        if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
        if (text.empty() || text.front() == '#') continue;
        try {
            ds.entries.push_back({name + ":" + std::to_string(lineno), std::string(text), parse_graph6(text)});
        } catch (const Error& e) {
            const std::string msg = name + ":" + std::to_string(lineno) + ": " + e.what();
            if (strict) throw DatasetError(msg, lineno);
            ds.issues.push_back({lineno, msg});
        }
    }
    return ds;
}

}  // namespace walkgi
