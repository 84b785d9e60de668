// walkgi: command-line front end for the walk-count isomorphism toolkit.
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
// violation.

#include <cstddef>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "walkgi/walkgi.hpp"

namespace {

using namespace walkgi;

enum class OutputFormat { Text, Records };

struct RunConfig {
    OutputFormat format = OutputFormat::Text;
    unsigned workers = default_workers();
    bool oracle = false;
    std::size_t oracle_cap = kDefaultOracleLimit;
    bool strict = false;
    std::string catalog;
};

/// Thrown for bad arguments discovered after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Loader {
public:
    explicit Loader(const RunConfig& cfg) : cfg_(cfg) {}

    std::vector<DatasetEntry> load(const std::string& path) {
        Dataset ds = read_dataset(path, cfg_.strict);
        for (const auto& issue : ds.issues) {
            std::cerr << "parse error: " << issue.message << '\n';
            had_issues_ = true;
        }
        return std::move(ds.entries);
    }

    DatasetEntry load_single(const std::string& path) {
        auto entries = load(path);
        if (entries.size() != 1) {
            throw UsageError(path + " must hold exactly one graph (found " + std::to_string(entries.size()) + ")");
        }
        return std::move(entries.front());
    }

    bool had_issues() const noexcept { return had_issues_; }

private:
    const RunConfig& cfg_;
    bool had_issues_ = false;
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, std::string_view sep = ",") {
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (const auto& x : v) {
        std::ostringstream s;
        s << x;
        parts.push_back(s.str());
    }
    return join(parts, sep);
}

// --- info / det / lc / walks ---------------------------------------------

int cmd_info(const RunConfig& cfg, Loader& loader, const std::string& file) {
    const auto entries = loader.load(file);
    struct Row {
        std::optional<SrgParams> params;
        BigInt det;
        std::size_t m = 0;
    };
    std::vector<Row> rows(entries.size());
    parallel_for(entries.size(), cfg.workers, [&](std::size_t i) {
        const Graph& g = entries[i].graph;
        const IntMatrix a = adjacency_matrix(g);
        rows[i] = {srg_parameters(g), determinant(a), distinct_eigenvalue_count(a)};
    });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Graph& g = entries[i].graph;
        const Row& r = rows[i];
        if (cfg.format == OutputFormat::Records) {
            std::cout << "id=" << entries[i].id << " n=" << g.order() << " edges=" << g.edge_count()
                      << " degrees=" << join_numbers(degree_sequence(g))
                      << " srg=" << (r.params ? r.params->to_string() : "none") << " det=" << r.det
                      << " m=" << r.m << '\n';
        } else {
            std::cout << entries[i].id << ": n=" << g.order() << " edges=" << g.edge_count() << " degrees=("
                      << join_numbers(degree_sequence(g)) << ") "
                      << (r.params ? "SRG(" + r.params->to_string() + ")" : std::string("not SRG"))
                      << ", det=" << r.det << ", m=" << r.m << '\n';
        }
    }
    return 0;
}

int cmd_det(const RunConfig& cfg, Loader& loader, const std::string& file) {
    const auto entries = loader.load(file);
    std::vector<BigInt> dets(entries.size());
    parallel_for(entries.size(), cfg.workers,
                 [&](std::size_t i) { dets[i] = determinant(adjacency_matrix(entries[i].graph)); });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (cfg.format == OutputFormat::Records) {
            std::cout << "id=" << entries[i].id << " det=" << dets[i] << '\n';
        } else {
            std::cout << entries[i].id << ": det=" << dets[i] << '\n';
        }
    }
    return 0;
}

int cmd_lc(const RunConfig& cfg, Loader& loader, const std::string& file, std::optional<std::size_t> vertex) {
    for (const auto& e : loader.load(file)) {
        const std::size_t n = e.graph.order();
        if (vertex && *vertex >= n) {
            throw UsageError("vertex " + std::to_string(*vertex) + " out of range for " + e.id);
        }
        const std::size_t first = vertex ? *vertex : 0;
        const std::size_t last = vertex ? *vertex + 1 : n;
        for (std::size_t u = first; u < last; ++u) {
            const std::string text = write_graph6(local_complement(e.graph, u));
            if (cfg.format == OutputFormat::Records) {
                std::cout << "id=" << e.id << " vertex=" << u << " g6=" << text << '\n';
            } else {
                std::cout << text << '\n';
            }
        }
    }
    return 0;
}

int cmd_walks(const RunConfig& cfg, Loader& loader, const std::string& file, std::size_t i, std::size_t j,
              std::optional<std::size_t> length) {
    for (const auto& e : loader.load(file)) {
        const Graph& g = e.graph;
        if (i >= g.order() || j >= g.order()) {
            throw UsageError("vertex pair out of range for " + e.id);
        }
        const std::size_t m = length ? *length : default_m(g);
        if (m == 0) throw UsageError("--length must be at least 1");
        const IntMatrix a = adjacency_matrix(g);
        std::vector<BigInt> tuple;
        IntMatrix p = a;
        for (std::size_t k = 1; k <= m; ++k) {
            if (k > 1) p = a * p;
            tuple.push_back(p(i, j));
        }
        if (cfg.format == OutputFormat::Records) {
            std::cout << "id=" << e.id << " i=" << i << " j=" << j << " m=" << m << " walks=" << join_numbers(tuple)
                      << '\n';
        } else {
            std::cout << e.id << ": s(" << i << "," << j << ") = (" << join_numbers(tuple, ", ") << ")\n";
        }
    }
    return 0;
}

// --- pair / oracle -------------------------------------------------------

std::string certificate_text(const std::vector<std::size_t>& cert) {
    std::vector<std::string> parts;
    for (std::size_t v = 0; v < cert.size(); ++v) parts.push_back(std::to_string(v) + "->" + std::to_string(cert[v]));
    return join(parts, " ");
}

int cmd_pair(const RunConfig& cfg, Loader& loader, const std::string& file_a, const std::string& file_b) {
    const auto a = loader.load_single(file_a);
    const auto b = loader.load_single(file_b);
    const Verdict v = distinguish_pair(a.graph, b.graph, kAllStages, cfg.workers);
    const bool records = cfg.format == OutputFormat::Records;
    if (v.distinguished()) {
        if (records) {
            std::cout << "verdict=distinguished stage=" << stage_name(*v.stage) << '\n';
        } else {
            std::cout << "Distinguished: " << stage_name(*v.stage) << '\n';
        }
        return 0;
    }
    std::string oracle_part;
    std::string oracle_record;
    if (cfg.oracle) {
        if (a.graph.order() > cfg.oracle_cap) {
            oracle_part = "; oracle: skipped (n=" + std::to_string(a.graph.order()) + " exceeds cap " +
                          std::to_string(cfg.oracle_cap) + ")";
            oracle_record = " oracle=skipped";
        } else {
            const OracleResult r = brute_force_isomorphic(a.graph, b.graph, cfg.oracle_cap);
            if (r.isomorphic) {
                oracle_part = "; oracle: isomorphic, certificate " + certificate_text(r.certificate);
                oracle_record = " oracle=isomorphic certificate=" + join_numbers(r.certificate);
            } else {
                oracle_part = "; oracle: non-isomorphic";
                oracle_record = " oracle=non-isomorphic";
            }
        }
    }
    if (records) {
        std::cout << "verdict=not-distinguished" << oracle_record << '\n';
    } else {
        std::cout << "NotDistinguished" << oracle_part << '\n';
    }
    return 0;
}

int cmd_oracle(const RunConfig& cfg, Loader& loader, const std::string& file_a, const std::string& file_b) {
    const auto a = loader.load_single(file_a);
    const auto b = loader.load_single(file_b);
    if (a.graph.order() == b.graph.order() && a.graph.order() > cfg.oracle_cap) {
        throw UsageError("oracle limit: n=" + std::to_string(a.graph.order()) + " exceeds cap " +
                         std::to_string(cfg.oracle_cap) + " (raise with --oracle-cap)");
    }
    const OracleResult r = brute_force_isomorphic(a.graph, b.graph, cfg.oracle_cap);
    if (cfg.format == OutputFormat::Records) {
        std::cout << "oracle=" << (r.isomorphic ? "isomorphic" : "non-isomorphic");
        if (r.isomorphic) std::cout << " certificate=" << join_numbers(r.certificate);
        std::cout << '\n';
    } else if (r.isomorphic) {
        std::cout << "isomorphic; certificate " << certificate_text(r.certificate) << '\n';
    } else {
        std::cout << "non-isomorphic\n";
    }
    return 0;
}

// --- group ---------------------------------------------------------------

std::string histogram_text(const EquivalenceClasses& classes) {
    std::vector<std::string> parts;
    for (auto [size, count] : class_size_histogram(classes)) {
        if (size > 1) parts.push_back(std::to_string(count) + " x" + std::to_string(size));
    }
    return join(parts, ", ");
}

std::size_t multi_count(const EquivalenceClasses& classes) {
    std::size_t c = 0;
    for (const auto& cl : classes) c += cl.size() > 1 ? 1 : 0;
    return c;
}

std::string member_ids(const std::vector<std::size_t>& cls, const std::vector<DatasetEntry>& entries) {
    std::vector<std::string> ids;
    for (std::size_t i : cls) ids.push_back(entries[i].id);
    return join(ids, ",");
}

void print_partition_line(std::ostream& out, std::string_view label, const EquivalenceClasses& classes) {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    const std::size_t multi = multi_count(classes);
    if (multi == 0) {
        out << label << ": " << total << " singletons\n";
        return;
    }
    out << label << ": " << classes.size() << " classes, " << multi << " with more than one member ("
        << histogram_text(classes) << ")\n";
}

/// Loads cached encodings from an existing catalog, keyed by graph6 text.
struct CatalogCache {
    std::vector<CatalogRecord> records;
    std::unordered_map<std::string, std::size_t> by_g6;
};

CatalogCache load_catalog_cache(const std::string& path) {
    CatalogCache cache;
    if (path.empty() || !std::filesystem::exists(path)) return cache;
    cache.records = catalog_read(path);
    for (std::size_t i = 0; i < cache.records.size(); ++i) cache.by_g6.emplace(cache.records[i].g6, i);
    return cache;
}

int cmd_group(const RunConfig& cfg, Loader& loader, const std::string& file) {
    const auto entries = loader.load(file);
    if (entries.empty()) throw UsageError(file + " holds no graphs");
    std::vector<Graph> graphs;
    graphs.reserve(entries.size());
    for (const auto& e : entries) graphs.push_back(e.graph);

    PartitionOptions opts;
    opts.workers = cfg.workers;
    CatalogCache cache = load_catalog_cache(cfg.catalog);
    std::optional<BlobStore> blobs;
    if (!cfg.catalog.empty()) {
        blobs = BlobStore::for_catalog(cfg.catalog);
        opts.cached_profiles.resize(entries.size());
        opts.cached_lc_walks.resize(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto it = cache.by_g6.find(entries[i].g6);
            if (it == cache.by_g6.end()) continue;
            const CatalogRecord& r = cache.records[it->second];
            opts.cached_profiles[i] = blobs->get(r.lc_profile_digest);
            if (!r.lc_walk_digest.empty()) opts.cached_lc_walks[i] = blobs->get(r.lc_walk_digest);
        }
    }
    if (entries.size() >= 100) {
        auto mu = std::make_shared<std::mutex>();
        opts.progress = [mu](Stage s, std::size_t done, std::size_t total) {
            const std::size_t step = std::max<std::size_t>(1, total / 20);
            if (done % step == 0 || done == total) {
                std::cerr << "progress " << stage_name(s) << ' ' << done << '/' << total << '\n';
            }
        };
    }

    const PartitionReport rep = partition_group(graphs, opts);
    if (rep.mixed_order) std::cerr << "warning: " << file << " mixes vertex counts; they separate trivially\n";

    const bool records = cfg.format == OutputFormat::Records;
    std::ostream& timing = records ? std::cerr : std::cout;
    if (records) {
        std::cout << "graphs=" << rep.input_size << " n=" << graphs.front().order()
                  << " mixed=" << (rep.mixed_order ? 1 : 0) << '\n';
        for (const auto& [label, classes] :
             {std::pair<std::string, const EquivalenceClasses*>{"coarse", &rep.coarse}, {"final", &rep.final_classes}}) {
            std::cout << "partition=" << label << " classes=" << classes->size()
                      << " multi=" << multi_count(*classes);
            for (auto [size, count] : class_size_histogram(*classes)) std::cout << " size" << size << '=' << count;
            std::cout << '\n';
        }
        for (const auto& c : rep.coarse) {
            if (c.size() > 1) std::cout << "coarse-class size=" << c.size() << " members=" << member_ids(c, entries) << '\n';
        }
        for (const auto& c : rep.final_classes) {
            if (c.size() > 1) std::cout << "residual-class size=" << c.size() << " members=" << member_ids(c, entries) << '\n';
        }
    } else {
        std::cout << "group " << file << ": " << rep.input_size << " graphs, n=" << graphs.front().order() << '\n';
        print_partition_line(std::cout, "coarse (lc-det-profile)", rep.coarse);
        print_partition_line(std::cout, "final (lc-walk-signature)", rep.final_classes);
        const std::size_t residual = multi_count(rep.final_classes);
        if (residual > 0) {
            std::cout << "NOT DISTINGUISHED: " << residual << " class(es) remain\n";
            for (const auto& c : rep.final_classes) {
                if (c.size() > 1) std::cout << "  " << member_ids(c, entries) << '\n';
            }
        }
    }
    for (const auto& s : rep.stages) {
        timing << "timing stage=" << stage_name(s.stage) << " computed=" << s.computed << " seconds=" << s.seconds
               << '\n';
    }

    if (blobs) {
        std::vector<CatalogRecord> out = cache.records;
        std::unordered_map<std::string, std::size_t> by_id;
        for (std::size_t i = 0; i < out.size(); ++i) by_id.emplace(out[i].id, i);
        std::vector<CatalogRecord> fresh(entries.size());
        parallel_for(entries.size(), cfg.workers, [&](std::size_t i) {
            CatalogRecord& r = fresh[i];
            r.id = entries[i].id;
            r.g6 = entries[i].g6;
            r.params = srg_parameters(graphs[i]);
            r.det = determinant(adjacency_matrix(graphs[i])).get_str();
            r.lc_profile_digest = blobs->put(rep.profile_encodings[i]);
            if (rep.lc_walk_encodings[i]) r.lc_walk_digest = blobs->put(*rep.lc_walk_encodings[i]);
        });
        for (auto& r : fresh) {
            if (auto it = by_id.find(r.id); it != by_id.end()) {
                out[it->second] = std::move(r);
            } else {
                by_id.emplace(r.id, out.size());
                out.push_back(std::move(r));
            }
        }
        catalog_write(out, cfg.catalog);
        std::cerr << "catalog " << cfg.catalog << ": " << out.size() << " records\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"walkgi: walk-count invariants, local complements and determinant profiles"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));
    app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--oracle", cfg.oracle, "Run the brute-force oracle when a pair is not distinguished");
    app.add_option("--oracle-cap", cfg.oracle_cap, "Largest vertex count the oracle accepts")
        ->check(CLI::PositiveNumber);
    app.add_flag("--strict", cfg.strict, "Abort on the first malformed graph6 line");
    app.add_option("--catalog", cfg.catalog, "Catalog file to reuse and update (group)");

    std::string file_a;
    std::string file_b;
    std::optional<std::size_t> vertex;
    std::size_t vi = 0;
    std::size_t vj = 0;
    std::optional<std::size_t> length;

    auto* info = app.add_subcommand("info", "Basic invariants of every graph in a file");
    info->add_option("file", file_a)->required();
    auto* det = app.add_subcommand("det", "Exact adjacency determinant of every graph in a file");
    det->add_option("file", file_a)->required();
    auto* pair = app.add_subcommand("pair", "Run the staged pipeline on two single-graph files");
    pair->add_option("file_a", file_a)->required();
    pair->add_option("file_b", file_b)->required();
    auto* group = app.add_subcommand("group", "Partition a dataset into equivalence classes");
    group->add_option("file", file_a)->required();
    auto* lc = app.add_subcommand("lc", "Print local complements as graph6");
    lc->add_option("file", file_a)->required();
    lc->add_option("--vertex", vertex, "Vertex to complement at (default: every vertex)");
    auto* walks = app.add_subcommand("walks", "Print walk counts of lengths 1..m between two vertices");
    walks->add_option("file", file_a)->required();
    walks->add_option("i", vi)->required();
    walks->add_option("j", vj)->required();
    walks->add_option("--length", length, "Walk-length horizon m (default: distinct eigenvalue count)");
    auto* oracle = app.add_subcommand("oracle", "Brute-force isomorphism test of two single-graph files");
    oracle->add_option("file_a", file_a)->required();
    oracle->add_option("file_b", file_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    cfg.format = format == "records" ? OutputFormat::Records : OutputFormat::Text;

    Loader loader(cfg);
    int rc = 0;
    try {
        if (info->parsed()) rc = cmd_info(cfg, loader, file_a);
        if (det->parsed()) rc = cmd_det(cfg, loader, file_a);
        if (pair->parsed()) rc = cmd_pair(cfg, loader, file_a, file_b);
        if (group->parsed()) rc = cmd_group(cfg, loader, file_a);
        if (lc->parsed()) rc = cmd_lc(cfg, loader, file_a, vertex);
        if (walks->parsed()) rc = cmd_walks(cfg, loader, file_a, vi, vj, length);
        if (oracle->parsed()) rc = cmd_oracle(cfg, loader, file_a, file_b);
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    std::cout.flush();
    if (rc == 0 && loader.had_issues()) return 1;
    return rc;
}
