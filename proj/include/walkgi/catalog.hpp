#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "walkgi/encoding.hpp"
#include "walkgi/error.hpp"
#include "walkgi/exact_linalg.hpp"
#include "walkgi/graph.hpp"
#include "walkgi/graph6.hpp"

namespace walkgi {

// Catalog file: a "walkgi-catalog v1" header line, then one record per
// line with six tab-separated fields
//
//   id  g6  params  det  lc_profile_digest  lc_walk_digest
//
// params is "n,d,alpha,beta" or "-", det is decimal, digests are lowercase
// hex SHA-256 of the canonical encodings ("-" when not computed). The
// encodings themselves live in "<catalog>.blobs/<digest>.bin".

inline constexpr std::string_view kCatalogHeader = "walkgi-catalog v1";
inline constexpr std::string_view kCatalogHeaderPrefix = "walkgi-catalog ";
inline constexpr std::string_view kAbsent = "-";

struct CatalogRecord {
    std::string id;
    std::string g6;
    std::optional<SrgParams> params;
    std::string det;
    std::string lc_profile_digest;
    /// Empty when the lc walk signature was never needed.
    std::string lc_walk_digest;

    friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

namespace detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) return out;
        start = tab + 1;
    }
}

inline void check_field(const std::string& f, std::string_view name) {
    if (f.empty() || f.find_first_of("\t\r\n") != std::string::npos) {
        throw CatalogError("catalog field '" + std::string(name) + "' is empty or contains a tab/newline");
    }
}

inline std::optional<SrgParams> parse_params(const std::string& s, std::size_t lineno) {
    if (s == kAbsent) return std::nullopt;
    SrgParams p;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(s);
    if (!(in >> p.n >> c1 >> p.d >> c2 >> p.alpha >> c3 >> p.beta) || c1 != ',' || c2 != ',' || c3 != ',' ||
        in.peek() != std::char_traits<char>::eof()) {
        throw CatalogError("catalog line " + std::to_string(lineno) + ": malformed params '" + s + "'");
    }
    return p;
}

inline bool is_hex_digest(const std::string& s) {
    return s.size() == 64 && s.find_first_not_of("0123456789abcdef") == std::string::npos;
}

}  // namespace detail

inline void catalog_write(const std::vector<CatalogRecord>& records, const std::filesystem::path& path) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CatalogError("cannot write catalog " + tmp.string());
        out << kCatalogHeader << '\n';
        for (const auto& r : records) {
            detail::check_field(r.id, "id");
            detail::check_field(r.g6, "g6");
            detail::check_field(r.det, "det");
            detail::check_field(r.lc_profile_digest, "lc_profile_digest");
            if (!r.lc_walk_digest.empty()) detail::check_field(r.lc_walk_digest, "lc_walk_digest");
            out << r.id << '\t' << r.g6 << '\t' << (r.params ? r.params->to_string() : std::string(kAbsent))
                << '\t' << r.det << '\t' << r.lc_profile_digest << '\t'
                << (r.lc_walk_digest.empty() ? std::string(kAbsent) : r.lc_walk_digest) << '\n';
        }
        if (!out.flush()) throw CatalogError("failed writing catalog " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::vector<CatalogRecord> catalog_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError("cannot open catalog " + path.string());
    std::string line;
    if (!std::getline(in, line) || !line.starts_with(kCatalogHeaderPrefix)) {
        throw CatalogError("not a walkgi catalog: " + path.string());
    }
    if (line != kCatalogHeader) throw CatalogError("unsupported catalog version: " + line);
    std::vector<CatalogRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = detail::split_tabs(line);
        if (f.size() != 6) {
            throw CatalogError("catalog line " + std::to_string(lineno) + ": expected 6 fields, got " +
                               std::to_string(f.size()));
        }
        CatalogRecord r;
        r.id = std::move(f[0]);
        r.g6 = std::move(f[1]);
        r.params = detail::parse_params(f[2], lineno);
        r.det = std::move(f[3]);
        r.lc_profile_digest = std::move(f[4]);
        r.lc_walk_digest = f[5] == kAbsent ? std::string() : std::move(f[5]);
        mpz_class det_check;
        if (det_check.set_str(r.det, 10) != 0) {
            throw CatalogError("catalog line " + std::to_string(lineno) + ": malformed determinant");
        }
        if (!detail::is_hex_digest(r.lc_profile_digest) ||
            (!r.lc_walk_digest.empty() && !detail::is_hex_digest(r.lc_walk_digest))) {
            throw CatalogError("catalog line " + std::to_string(lineno) + ": malformed digest");
        }
        records.push_back(std::move(r));
    }
    return records;
}

/// Content-addressed sidecar store for canonical encodings.
class BlobStore {
public:
    explicit BlobStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static BlobStore for_catalog(const std::filesystem::path& catalog) {
        return BlobStore(catalog.string() + ".blobs");
    }

    const std::filesystem::path& directory() const noexcept { return dir_; }

    /// Stores `bytes` and returns their hex digest.
    std::string put(const Bytes& bytes) const {
        const std::string hex = digest_hex(bytes);
        const auto file = dir_ / (hex + ".bin");
        if (std::filesystem::exists(file)) return hex;
        std::filesystem::create_directories(dir_);
        const auto tmp = dir_ / (hex + ".tmp");
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
            if (!out.flush()) throw CatalogError("cannot write blob " + tmp.string());
        }
        std::filesystem::rename(tmp, file);
        return hex;
    }

    /// Loads the blob for `hex`; the content must hash back to `hex`.
    std::optional<Bytes> get(const std::string& hex) const {
        std::ifstream in(dir_ / (hex + ".bin"), std::ios::binary);
        if (!in) return std::nullopt;
        Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (digest_hex(bytes) != hex) throw CatalogError("blob " + hex + " does not match its digest");
        return bytes;
    }

private:
    std::filesystem::path dir_;
};

}  // namespace walkgi
