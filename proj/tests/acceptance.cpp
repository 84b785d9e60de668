// Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion.
//
// Usage: walkgi_acceptance [--data DIR] [CRITERION...]
// A criterion is "1".."6" or "2:n-d-a-b" / "3:n-d-a-b" for a single group.
// Exit status: 0 all selected criteria passed, 1 any failure, 77 when every
// selected criterion was skipped.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "walkgi/walkgi.hpp"

namespace {

using namespace walkgi;
namespace fs = std::filesystem;

// Every comparison below is exact; these pin the sample sizes and bounds.
constexpr std::size_t kRandomPairs = 10000;
constexpr std::size_t kMaxPairOrder = 8;
constexpr unsigned kMaxDfsLength = 4;
constexpr std::size_t kMaxCofactorOrder = 7;
constexpr std::size_t kInvolutionTrials = 1000;
constexpr std::size_t kRoundTripGraphs = 1000;
constexpr std::size_t kMaxRoundTripOrder = 64;
constexpr unsigned kPowerExponent = 17;
const BigInt kPowerFloor = BigInt(1) << 31;
const BigInt kRookDeterminant("-351843720888320");
const std::string kFloatArtifact = "-351843720888319.81";

enum class Outcome { Pass, Fail, Skip };

struct Result {
    Outcome outcome = Outcome::Pass;
    std::vector<std::string> notes;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            failures.push_back(what);
            outcome = Outcome::Fail;
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

struct GroupSpec {
    SrgParams params;
    std::size_t members;
};

const std::vector<GroupSpec> kSmallGroups{
    {{16, 6, 2, 2}, 2},    {{25, 12, 5, 6}, 15},  {{26, 10, 3, 4}, 10},  {{28, 12, 6, 4}, 4},
    {{29, 14, 6, 7}, 41},  {{35, 18, 9, 9}, 227}, {{36, 14, 4, 6}, 180}, {{40, 12, 2, 4}, 28},
    {{45, 12, 3, 3}, 78},  {{64, 18, 2, 6}, 167},
};

struct BigGroupSpec {
    SrgParams params;
    std::map<std::size_t, std::size_t> multi_histogram;  // class size -> count, sizes > 1
};

const std::vector<BigGroupSpec> kBigGroups{
    {{35, 16, 6, 8}, {{2, 42}, {4, 2}}},
    {{36, 15, 6, 6}, {{2, 152}, {3, 6}, {4, 2}}},
    {{37, 18, 8, 9}, {{2, 3379}}},
};

std::string dashed(const SrgParams& p) {
    return std::to_string(p.n) + "-" + std::to_string(p.d) + "-" + std::to_string(p.alpha) + "-" +
           std::to_string(p.beta);
}

fs::path group_file(const fs::path& data, const SrgParams& p) { return data / "srg" / ("srg-" + dashed(p) + ".g6"); }

std::vector<std::vector<mpz_class>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<mpz_class>> rows(m.size(), std::vector<mpz_class>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
    }
    return rows;
}

// --- 1 -------------------------------------------------------------------

Result exact_arithmetic(const fs::path& data) {
    Result r;
    const fs::path file = group_file(data, {36, 10, 4, 2});
    if (!fs::exists(file)) {
        r.check(false, "missing " + file.string());
        return r;
    }
    const auto graphs = testing::load_graphs(file);
    r.check(graphs.size() == 1, "expected a single graph in " + file.string());
    const Graph& g = graphs.front();
    r.check(srg_parameters(g) == SrgParams{36, 10, 4, 2}, "parameters are not (36,10,4,2)");

    const IntMatrix a = adjacency_matrix(g);
    const IntMatrix p = mat_pow(a, kPowerExponent);
    BigInt lo = p(0, 0);
    BigInt hi = p(0, 0);
    for (const auto& e : p.entries()) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    r.check(lo > kPowerFloor, "A^17 has an entry not exceeding 2^31: " + lo.get_str());
    r.note("A^17 entries in [" + lo.get_str() + ", " + hi.get_str() + "]");

    const BigInt det = determinant(a);
    r.check(det == kRookDeterminant, "determinant " + det.get_str() + " != " + kRookDeterminant.get_str());
    r.check(det.get_str() != kFloatArtifact, "determinant equals the floating-point artifact");
    const mpz_class cross = testing::rational_det(to_rows(a));
    r.check(cross == det, "independent elimination gives " + cross.get_str());
    r.note("det=" + det.get_str());
    return r;
}

// --- 2 -------------------------------------------------------------------

Result small_group(const fs::path& data, const GroupSpec& spec) {
    Result r;
    const fs::path file = group_file(data, spec.params);
    if (!fs::exists(file)) {
        r.check(false, "dataset not available: " + file.string());
        return r;
    }
    const auto graphs = testing::load_graphs(file);
    r.check(graphs.size() == spec.members,
            "expected " + std::to_string(spec.members) + " graphs, found " + std::to_string(graphs.size()));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto p = srg_parameters(graphs[i]);
        r.check(p == spec.params, "graph " + std::to_string(i) + " has wrong parameters");
        r.check(distinct_eigenvalue_count(adjacency_matrix(graphs[i])) == 3,
                "graph " + std::to_string(i) + " does not have 3 distinct eigenvalues");
    }
    PartitionOptions opts;
    opts.workers = default_workers();
    const PartitionReport rep = partition_group(graphs, opts);
    r.check(rep.final_classes.size() == graphs.size(),
            "final partition has " + std::to_string(rep.final_classes.size()) + " classes for " +
                std::to_string(graphs.size()) + " graphs");
    r.note(std::to_string(graphs.size()) + " graphs, coarse " + std::to_string(rep.coarse.size()) + " classes, final " +
           std::to_string(rep.final_classes.size()));
    return r;
}

// --- 3 -------------------------------------------------------------------

Result big_group(const fs::path& data, const BigGroupSpec& spec) {
    Result r;
    const fs::path file = group_file(data, spec.params);
    if (!fs::exists(file)) {
        r.outcome = Outcome::Skip;
        r.note("dataset not available: " + file.string());
        return r;
    }
    const auto graphs = testing::load_graphs(file);
    PartitionOptions opts;
    opts.workers = default_workers();
    const PartitionReport rep = partition_group(graphs, opts);
    std::map<std::size_t, std::size_t> multi;
    for (auto [size, count] : class_size_histogram(rep.coarse)) {
        if (size > 1) multi[size] = count;
    }
    std::ostringstream got;
    for (auto [size, count] : multi) got << count << "x" << size << ' ';
    r.check(multi == spec.multi_histogram, "coarse multi-member classes: " + got.str());
    r.check(rep.final_classes.size() == graphs.size(),
            "residual classes remain: " + std::to_string(graphs.size() - rep.final_classes.size()) + " merges");
    r.note(std::to_string(graphs.size()) + " graphs, coarse " + got.str());
    return r;
}

// --- 4 -------------------------------------------------------------------

Result petersen_fixture(const fs::path& data) {
    Result r;
    const Graph g = testing::load_graph(data / "fixtures" / "petersen.g6");
    r.check(srg_parameters(g) == SrgParams{10, 3, 0, 1}, "parameters are not (10,3,0,1)");
    const BigInt det = determinant(adjacency_matrix(g));
    const mpz_class cofactor = testing::cofactor_det(testing::adjacency_rows(g));
    // Eigenvalues 3, 1 (x5), -2 (x4).
    mpz_class spectral = 3;
    for (int i = 0; i < 4; ++i) spectral *= -2;
    r.check(det == 48, "determinant " + det.get_str());
    r.check(cofactor == det, "cofactor expansion gives " + cofactor.get_str());
    r.check(spectral == det, "eigenvalue product gives " + spectral.get_str());
    const DetProfile prof = lc_determinant_profile(g);
    r.check(prof.values.size() == 10 &&
                std::all_of(prof.values.begin(), prof.values.end(), [&](const BigInt& v) { return v == prof.values[0]; }),
            "local-complement determinants are not all equal");
    r.check(default_m(g) == 3, "m != 3");
    r.note("det=" + det.get_str() + ", lc determinants all " + prof.values.front().get_str());
    return r;
}

// --- 5 -------------------------------------------------------------------

struct Encodings {
    Bytes walk;
    Bytes profile;
    Bytes lc_walk;
    friend bool operator==(const Encodings&, const Encodings&) = default;
};

Encodings encodings(const Graph& g, std::size_t m) {
    return {encode(walk_signature(g, m)), encode(lc_determinant_profile(g)), lc_walk_signature_encoding(g)};
}

Result soundness(const fs::path& data) {
    Result r;
    std::mt19937_64 rng(20260101);
    std::size_t distinguished = 0;
    std::size_t exceptions = 0;
    std::size_t unsound = 0;
    std::size_t relabel_mismatch = 0;

    auto run_pair = [&](const Graph& g, const Graph& h) {
        try {
            const Verdict v = distinguish_pair(g, h);
            const bool iso = brute_force_isomorphic(g, h).isomorphic;
            if (v.distinguished()) {
                ++distinguished;
                if (iso) ++unsound;
            }
        } catch (const std::exception&) {
            ++exceptions;
        }
    };

    for (std::size_t t = 0; t < kRandomPairs; ++t) {
        const std::size_t n = 1 + rng() % kMaxPairOrder;
        const double p = 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
        const Graph g = testing::random_graph(n, p, rng);
        const Graph h = testing::random_graph(n, p, rng);
        run_pair(g, h);
        // Relabeled copies of both members.
        for (const Graph* base : {&g, &h}) {
            const Graph moved = relabel(*base, testing::random_permutation(n, rng));
            run_pair(*base, moved);
            const std::size_t m = default_m(*base);
            if (encodings(*base, m) != encodings(moved, m)) ++relabel_mismatch;
        }
    }
    r.check(unsound == 0, "(a) " + std::to_string(unsound) + " isomorphic pairs were distinguished");
    r.check(exceptions == 0, "(a) " + std::to_string(exceptions) + " exceptions");
    r.check(relabel_mismatch == 0, "(b) " + std::to_string(relabel_mismatch) + " relabelings changed an encoding");
    r.note("(a,b) " + std::to_string(3 * kRandomPairs) + " pairs, " + std::to_string(distinguished) + " distinguished");

    std::size_t walk_checks = 0;
    for (std::size_t t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % kMaxPairOrder;
        const Graph g = testing::random_graph(n, 0.5, rng);
        const IntMatrix a = adjacency_matrix(g);
        for (unsigned k = 1; k <= kMaxDfsLength; ++k) {
            const IntMatrix pk = mat_pow(a, k);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    ++walk_checks;
                    if (pk(i, j) != testing::count_walks_dfs(g, i, j, k)) {
                        r.check(false, "(c) walk count mismatch");
                        return r;
                    }
                }
            }
        }
    }
    r.note("(c) " + std::to_string(walk_checks) + " walk counts");

    std::size_t det_checks = 0;
    std::uniform_int_distribution<long> entry(-9, 9);
    for (std::size_t t = 0; t < 400; ++t) {
        const std::size_t n = 1 + t % kMaxCofactorOrder;
        std::vector<std::vector<long>> rows(n, std::vector<long>(n));
        for (auto& row : rows) {
            for (auto& x : row) x = (t % 2 == 0) ? entry(rng) : static_cast<long>(rng() % 2);
        }
        const IntMatrix m = IntMatrix::from_rows(rows);
        ++det_checks;
        if (determinant(m) != testing::cofactor_det(to_rows(m))) {
            r.check(false, "(d) determinant mismatch at n=" + std::to_string(n));
            return r;
        }
    }
    r.note("(d) " + std::to_string(det_checks) + " determinants");

    std::size_t srg_count = 0;
    for (const auto& entry_path : fs::directory_iterator(data / "srg")) {
        if (entry_path.path().extension() != ".g6") continue;
        for (const auto& g : testing::load_graphs(entry_path.path())) {
            const auto p = srg_parameters(g);
            r.check(p.has_value(), "(e) " + entry_path.path().filename().string() + " holds a non-SRG");
            if (!p) continue;
            const std::size_t n = g.order();
            const IntMatrix a = adjacency_matrix(g);
            const IntMatrix i = IntMatrix::identity(n);
            const IntMatrix rhs = BigInt(static_cast<unsigned long>(p->d)) * i +
                                  BigInt(static_cast<unsigned long>(p->alpha)) * a +
                                  BigInt(static_cast<unsigned long>(p->beta)) * (IntMatrix::all_ones(n) - i - a);
            r.check(a * a == rhs, "(e) identity fails in " + entry_path.path().filename().string());
            ++srg_count;
        }
    }
    r.note("(e) " + std::to_string(srg_count) + " SRGs");

    for (std::size_t t = 0; t < kInvolutionTrials; ++t) {
        const std::size_t n = 1 + rng() % 40;
        const Graph g = testing::random_graph(n, 0.5, rng);
        const std::size_t u = rng() % n;
        if (local_complement(local_complement(g, u), u) != g) {
            r.check(false, "(f) involution fails");
            return r;
        }
    }
    r.note("(f) " + std::to_string(kInvolutionTrials) + " involutions");
    return r;
}

// --- 6 -------------------------------------------------------------------

Result format_fidelity() {
    Result r;
    std::mt19937_64 rng(20260102);
    std::size_t mismatches = 0;
    for (std::size_t t = 0; t < kRoundTripGraphs; ++t) {
        const std::size_t n = 1 + rng() % kMaxRoundTripOrder;
        const Graph g = testing::random_graph(n, 0.5, rng);
        if (parse_graph6(write_graph6(g)) != g) ++mismatches;
    }
    r.check(mismatches == 0, std::to_string(mismatches) + " round-trip mismatches");

    const Graph k2 = testing::complete_graph(2);
    const Graph k3 = testing::complete_graph(3);
    r.check(parse_graph6("A_") == k2 && write_graph6(k2) == "A_", "A_ <-> K2");
    r.check(parse_graph6("A?") == Graph(2) && write_graph6(Graph(2)) == "A?", "A? <-> edgeless 2");
    r.check(parse_graph6("Bw") == k3 && write_graph6(k3) == "Bw", "Bw <-> K3");

    const fs::path dir = fs::temp_directory_path() / ("walkgi-acceptance-" + std::to_string(rng()));
    fs::create_directories(dir);
    const fs::path path = dir / "catalog.tsv";
    try {
        BlobStore blobs = BlobStore::for_catalog(path);
        std::vector<CatalogRecord> records;
        std::vector<Graph> graphs{testing::petersen(), testing::path_graph(4), Graph(3)};
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            CatalogRecord rec;
            rec.id = "fixture:" + std::to_string(i + 1);
            rec.g6 = write_graph6(graphs[i]);
            rec.params = srg_parameters(graphs[i]);
            rec.det = determinant(adjacency_matrix(graphs[i])).get_str();
            rec.lc_profile_digest = blobs.put(encode(lc_determinant_profile(graphs[i])));
            if (i == 0) rec.lc_walk_digest = blobs.put(lc_walk_signature_encoding(graphs[i]));
            records.push_back(rec);
        }
        catalog_write(records, path);
        const auto back = catalog_read(path);
        r.check(back == records, "catalog records differ after round trip");
        for (std::size_t i = 0; i < back.size(); ++i) {
            r.check(parse_graph6(back[i].g6) == graphs[i], "catalog g6 does not reproduce graph");
            const auto blob = blobs.get(back[i].lc_profile_digest);
            r.check(blob && *blob == encode(lc_determinant_profile(graphs[i])), "profile blob differs");
        }
    } catch (const std::exception& e) {
        r.check(false, std::string("catalog: ") + e.what());
    }
    fs::remove_all(dir);
    r.note(std::to_string(kRoundTripGraphs) + " round trips, 3 fixed vectors, catalog");
    return r;
}

// --- driver --------------------------------------------------------------

struct Criterion {
    std::string key;
    std::string title;
    std::function<Result()> run;
};

std::vector<Criterion> criteria(const fs::path& data) {
    std::vector<Criterion> out;
    out.push_back({"1", "exact arithmetic on SRG(36,10,4,2)", [data] { return exact_arithmetic(data); }});
    for (const auto& g : kSmallGroups) {
        out.push_back({"2:" + dashed(g.params), "small group SRG(" + g.params.to_string() + ")",
                       [data, g] { return small_group(data, g); }});
    }
    for (const auto& g : kBigGroups) {
        out.push_back({"3:" + dashed(g.params), "big group SRG(" + g.params.to_string() + ")",
                       [data, g] { return big_group(data, g); }});
    }
    out.push_back({"4", "Petersen fixture", [data] { return petersen_fixture(data); }});
    out.push_back({"5", "property-based soundness", [data] { return soundness(data); }});
    out.push_back({"6", "format fidelity", [] { return format_fidelity(); }});
    return out;
}

bool selected(const std::string& key, const std::vector<std::string>& wanted) {
    if (wanted.empty()) return true;
    for (const auto& w : wanted) {
        if (key == w || key.rfind(w + ":", 0) == 0) return true;
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    fs::path data = WALKGI_TEST_DATA_DIR;
    if (const char* env = std::getenv("WALKGI_DATA_DIR"); env && *env) data = env;
    std::vector<std::string> wanted;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--data" && i + 1 < argc) {
            data = argv[++i];
        } else {
            wanted.push_back(arg);
        }
    }

    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& c : criteria(data)) {
        if (!selected(c.key, wanted)) continue;
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* label = r.outcome == Outcome::Pass ? "PASS" : r.outcome == Outcome::Fail ? "FAIL" : "SKIP";
        std::ostringstream line;
        line << label << " [" << c.key << "] " << c.title << " (" << std::fixed;
        line.precision(2);
        line << secs << "s)";
        for (const auto& n : r.notes) line << "; " << n;
        for (const auto& f : r.failures) line << "; " << f;
        std::cout << line.str() << std::endl;
        switch (r.outcome) {
            case Outcome::Pass: ++passed; break;
            case Outcome::Fail: ++failed; break;
            case Outcome::Skip: ++skipped; break;
        }
    }
    std::cout << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped" << std::endl;
    if (failed > 0) return 1;
    if (passed == 0 && skipped > 0) return 77;
    return 0;
}
