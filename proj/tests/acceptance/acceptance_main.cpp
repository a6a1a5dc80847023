// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// anything fails. Criteria 6 and 8 drive the installed CLI end to end on
// a synthetic three-subject recording set.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowtopo/curves/constants.hpp"
#include "flowtopo/curves/fapc.hpp"
#include "flowtopo/curves/hepc.hpp"
#include "flowtopo/curves/persistence_curve.hpp"
#include "flowtopo/curves/residual.hpp"
#include "flowtopo/features/folds.hpp"
#include "flowtopo/tda/rips.hpp"
#include "flowtopo/tda/sublevel.hpp"
#include "flowtopo/util/rng.hpp"
#include "flowtopo/util/stats.hpp"
#include "support/oracles.hpp"
#include "support/synth.hpp"

using namespace flowtopo;
namespace ts = flowtopo::testsupport;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> body;
};

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return {};
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args) {
    // progress lines go to a log next to the outputs; failures stay visible
    const std::string command = std::string(FLOWTOPO_CLI_PATH) + " " + args +
                                " >> " +
                                (fs::temp_directory_path() / "flowtopo_acceptance" /
                                 "cli.log")
                                    .string();
    return std::system(command.c_str());
}

// ---------------------------------------------------------------------
// criterion 1: FAPC closed form vs exact piecewise integration
// ---------------------------------------------------------------------
bool fapc_closed_form(std::string& detail) {
    std::size_t checked = 0;
    double worst = 0.0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        SplitRng rng(trial * 101 + 7);
        const double scale = std::pow(10.0, rng.next_unit() * 7.0 - 5.0); // 1e-5..1e2
        const std::size_t bars = 1 + rng.next_below(20);
        const PersistenceDiagram d = ts::random_diagram(trial + 5000, bars, scale);

        // alternate AP-style and clipped SP-style domains
        curves::Domain dom;
        if (trial % 2 == 0) {
            const auto support = curves::ap_domain(d);
            if (!support) continue;
            dom = *support;
        } else {
            dom = {0.2 * scale, 1.5 * scale};
        }
        const curves::CoefficientVector c = curves::fapc_coefficients(d, 15, dom);
        double norm = 0.0;
        for (std::size_t n = 0; n < 15; ++n)
            norm = std::max(norm, std::abs(c.fourier_coeff(n)));
        for (std::size_t n = 0; n < 15; ++n) {
            const std::complex<double> ref = ts::fapc_quadrature(d, n, dom);
            const double err = std::abs(c.fourier_coeff(n) - ref);
            const double bound = 1e-8 * std::max(norm, std::abs(ref));
            worst = std::max(worst, bound > 0.0 ? err / bound : 0.0);
            if (err > bound) {
                detail = "beta_" + std::to_string(n) + " off by " +
                         std::to_string(err) + " at trial " + std::to_string(trial);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " coefficients within 1e-8 relative " +
             "(worst at " + std::to_string(worst) + " of the bound)";
    return true;
}

// ---------------------------------------------------------------------
// criterion 2: HEPC recursion vs high-precision reference
// ---------------------------------------------------------------------
bool hepc_recursion(std::string& detail) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        SplitRng rng(trial * 31 + 3);
        const double scale_mag = std::pow(10.0, rng.next_unit() * 6.0 - 4.0);
        const std::size_t bars = 1 + rng.next_below(16);
        const PersistenceDiagram d = ts::random_diagram(trial + 9000, bars, scale_mag);
        const double scale =
            d.has_finite_bar() ? 5.0 / d.max_finite_death() : 1.0;
        const curves::CoefficientVector mine = curves::hepc_coefficients(d, 15, scale);
        const std::vector<double> ref = ts::hepc_recursion_reference(d, 15, scale);
        for (std::size_t n = 0; n < 15; ++n) {
            const double tol = 1e-10 * std::max(1.0, std::abs(ref[n]));
            if (std::abs(mine.values[n] - ref[n]) > tol) {
                detail = "alpha_" + std::to_string(n) + " deviates at trial " +
                         std::to_string(trial);
                return false;
            }
        }
    }
    // the worked two-bar anchor
    PersistenceDiagram anchor;
    anchor.bars = {{0.0, 1.0, 1}, {1.0, 2.0, 1}};
    anchor.normalize();
    const auto c = curves::hepc_coefficients(anchor, 15, 1.0);
    if (std::abs(c.values[0] - 0.31142) > 5e-5) {
        detail = "alpha_0 anchor = " + std::to_string(c.values[0]);
        return false;
    }
    detail = "100 diagrams x 15 orders within 1e-10; alpha_0 anchor " +
             std::to_string(c.values[0]);
    return true;
}

// ---------------------------------------------------------------------
// criterion 3: persistence oracles
// ---------------------------------------------------------------------
tda::PointCloud random_cloud(std::uint64_t seed, std::size_t count,
                             std::size_t dim) {
    SplitRng rng(seed);
    tda::PointCloud cloud;
    cloud.dim = dim;
    for (std::size_t i = 0; i < count * dim; ++i)
        cloud.coords.push_back(rng.next_unit() * 2.0 - 1.0);
    return cloud;
}

bool persistence_oracles(std::string& detail) {
    // sublevel vs threshold sweep
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        SplitRng rng(seed * 11 + 1);
        const std::size_t n = 1 + rng.next_below(64);
        std::vector<double> f;
        for (std::size_t i = 0; i < n; ++i)
            f.push_back(std::floor(rng.next_unit() * 10.0) / 2.0);
        const auto mine =
            tda::sublevel_persistence(f, DiagramSource::SublevelAirflow);
        const auto ref = ts::sublevel_bruteforce(f);
        if (ts::sorted_pairs(mine) != ts::sorted_pairs(std::span<const Bar>(ref))) {
            detail = "sublevel mismatch at seed " + std::to_string(seed);
            return false;
        }
    }
    // H0 vs MST
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto cloud = random_cloud(seed * 7 + 2, 2 + seed % 63, 3);
        const auto diagrams = tda::rips_persistence(cloud, 0);
        std::vector<double> deaths;
        for (const Bar& b : diagrams[0].bars)
            if (b.finite())
                for (std::uint32_t m = 0; m < b.multiplicity; ++m)
                    deaths.push_back(b.death);
        std::sort(deaths.begin(), deaths.end());
        if (deaths != ts::mst_edge_lengths(cloud)) {
            detail = "H0/MST mismatch at seed " + std::to_string(seed);
            return false;
        }
    }
    // H1 vs full boundary-matrix reduction
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto cloud = random_cloud(seed * 13 + 5, 4 + seed % 9, 2 + seed % 2);
        const auto diagrams = tda::rips_persistence(cloud, 1);
        const auto brute = ts::rips_bruteforce(cloud);
        if (ts::sorted_pairs(diagrams[1]) !=
            ts::sorted_pairs(std::span<const Bar>(brute.h1))) {
            detail = "H1 mismatch at seed " + std::to_string(seed);
            return false;
        }
    }
    // the unit square, exactly
    tda::PointCloud square;
    square.dim = 2;
    square.coords = {0, 0, 1, 0, 1, 1, 0, 1};
    const auto diagrams = tda::rips_persistence(square, 1);
    const auto h1 = ts::sorted_pairs(diagrams[1]);
    if (h1.size() != 1 || h1[0].first != 1.0 || h1[0].second != std::sqrt(2.0)) {
        detail = "unit square H1 is not (1, sqrt 2)";
        return false;
    }
    detail = "sublevel 1000/1000, MST 100/100, H1 brute force 50/50, square exact";
    return true;
}

// ---------------------------------------------------------------------
// criterion 4: residual ordering at recording scales
// ---------------------------------------------------------------------
PersistenceDiagram scaled_corpus_diagram(std::uint64_t seed, const SourceKey& key) {
    SplitRng rng(seed);
    PersistenceDiagram d;
    d.dim = key.dim;
    d.source = key.source;
    // per-diagram max death targets the reported medians per source
    double target = 1.3e-4, birth_lo = 0.0, birth_span = 0.3;
    if (key.source == DiagramSource::RipsAirflow && key.dim == 1) {
        target = 2.9e-4;
        birth_lo = 0.2;
        birth_span = 0.5;
    } else if (key.source == DiagramSource::SublevelAirflow) {
        target = 6.7e-4;
        birth_lo = -0.9;
        birth_span = 0.9;
    } else if (key.source == DiagramSource::SublevelIrr) {
        target = 33.0;
        birth_lo = 0.35;
        birth_span = 0.35;
    }
    const double spread = std::exp(0.35 * (2.0 * rng.next_unit() - 1.0));
    const double top = target * spread;
    const std::size_t bars = 15 + rng.next_below(30);
    for (std::size_t i = 0; i < bars; ++i) {
        const double birth = (birth_lo + birth_span * rng.next_unit()) * top;
        const double death =
            birth + (0.05 + 0.95 * rng.next_unit()) * (top - birth);
        if (death > birth) d.bars.push_back({birth, death, 1});
    }
    // pin the intended scale: one bar reaches the per-diagram max
    d.bars.push_back({birth_lo * top, top, 1});
    d.bars.push_back({birth_lo * top, kInfiniteDeath, 1});
    d.normalize();
    return d;
}

bool residual_ordering(std::string& detail) {
    std::map<SourceKey, std::vector<PersistenceDiagram>> corpus;
    for (const SourceKey& key : pipeline_source_keys()) {
        for (std::uint64_t i = 0; i < 150; ++i)
            corpus[key].push_back(
                scaled_corpus_diagram(i * 37 + key.dim * 7 +
                                          static_cast<std::uint64_t>(key.source) * 131,
                                      key));
    }
    const curves::FitConstants constants = curves::estimate_constants(corpus);

    std::ostringstream report;
    for (const auto& [key, diagrams] : corpus) {
        double hepc = 0.0, sp = 0.0, ap = 0.0;
        std::vector<double> maxima;
        for (const PersistenceDiagram& d : diagrams) {
            const auto curve = curves::entropy_curve(d);
            const auto support = curves::ap_domain(d);
            maxima.push_back(support->d_max);
            hepc += curves::approximation_residual(
                curve,
                curves::hepc_coefficients(d, 15, constants.scale_for(key)));
            sp += curves::approximation_residual(
                curve, curves::fapc_coefficients(d, 15, constants.domain_for(key),
                                                 curves::ApproximationKind::SP_FAPC));
            ap += curves::approximation_residual(
                curve, curves::fapc_coefficients(d, 15, *support,
                                                 curves::ApproximationKind::AP_FAPC));
        }
        const double n = static_cast<double>(diagrams.size());
        hepc /= n;
        sp /= n;
        ap /= n;
        report << "  " << to_string(key) << ": AP " << ap << " SP " << sp
               << " HEPC " << hepc << " (median d_max " << median(maxima) << ")\n";
        if (!(ap < sp && ap < hepc)) {
            detail = "ordering violated for " + to_string(key);
            return false;
        }
    }
    std::cout << report.str();
    detail = "AP-FAPC mean residual smallest on all four sources";
    return true;
}

// ---------------------------------------------------------------------
// criterion 5: single-bar nullity
// ---------------------------------------------------------------------
bool single_bar_nullity(std::string& detail) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SplitRng rng(seed);
        const double birth = rng.next_unit() * std::pow(10.0, rng.next_unit() * 6 - 4);
        const double death = birth * (1.0 + rng.next_unit()) + 1e-9;
        PersistenceDiagram d;
        d.bars = {{birth, death, 1}};
        d.normalize();
        if (!curves::entropy_curve(d).is_zero()) {
            detail = "curve not identically zero";
            return false;
        }
        for (const double v : curves::hepc_coefficients(d, 15, 3.0).values)
            if (v != 0.0) {
                detail = "HEPC coefficient nonzero";
                return false;
            }
        const curves::Domain dom{birth * 0.5, death * 2.0 + 1.0};
        for (const double v : curves::fapc_coefficients(d, 15, dom).values)
            if (v != 0.0) {
                detail = "FAPC coefficient nonzero";
                return false;
            }
    }
    detail = "50 one-bar diagrams: curve, HEPC and FAPC all exactly zero";
    return true;
}

// ---------------------------------------------------------------------
// criteria 6 and 8 share the synthetic fixture
// ---------------------------------------------------------------------
struct FixturePaths {
    fs::path root;
    ts::SynthFixture fixture;
};

FixturePaths build_fixture() {
    FixturePaths p;
    p.root = fs::temp_directory_path() / "flowtopo_acceptance";
    fs::remove_all(p.root);
    fs::create_directories(p.root);
    p.fixture = ts::build_synthetic_fixture((p.root / "fixture").string(),
                                            ts::default_three_subjects());
    return p;
}

bool pipeline_determinism(FixturePaths& p, std::string& detail) {
    const fs::path out_a = p.root / "a.csv";
    const fs::path out_b = p.root / "b.csv";
    const fs::path out_c = p.root / "c.csv";
    const std::string common = "extract --subjects " + p.fixture.manifest_path +
                               " --seed 42";

    if (run_cli(common + " --workers 1 --cache-dir " +
                (p.root / "cache_a").string() + " --out " + out_a.string() +
                " --run-manifest " + (p.root / "a.json").string()) != 0) {
        detail = "first extract run failed";
        return false;
    }
    if (run_cli(common + " --workers 1 --cache-dir " +
                (p.root / "cache_a").string() + " --out " + out_b.string()) != 0) {
        detail = "second extract run failed";
        return false;
    }
    // eight workers, cold cache: exercises the parallel path end to end
    if (run_cli(common + " --workers 8 --cache-dir " +
                (p.root / "cache_c").string() + " --out " + out_c.string()) != 0) {
        detail = "eight-worker extract run failed";
        return false;
    }

    const std::string a = slurp(out_a);
    if (a.empty()) {
        detail = "no output produced";
        return false;
    }
    if (a != slurp(out_b)) {
        detail = "rerun differs from first run";
        return false;
    }
    if (a != slurp(out_c)) {
        detail = "eight-worker run differs from single-worker run";
        return false;
    }

    // manifest accounting: emitted + skipped == candidates, events and
    // emissions both present
    const auto manifest = nlohmann::json::parse(slurp(p.root / "a.json"));
    std::size_t emitted_total = 0, event_skips = 0;
    for (const auto& [subject, counts] : manifest["subjects"].items()) {
        std::size_t skipped = 0;
        for (const auto& [reason, count] : counts["skipped"].items())
            skipped += count.get<std::size_t>();
        event_skips += counts["skipped"]["event_overlap"].get<std::size_t>();
        emitted_total += counts["emitted"].get<std::size_t>();
        if (counts["emitted"].get<std::size_t>() + skipped !=
            counts["total_epochs"].get<std::size_t>()) {
            detail = "manifest accounting broken for subject " + subject;
            return false;
        }
    }
    if (event_skips == 0 || emitted_total == 0) {
        detail = "fixture produced no event skips or no windows";
        return false;
    }
    std::size_t rows = 0;
    for (const char ch : a)
        if (ch == '\n') ++rows;
    detail = std::to_string(emitted_total) + " windows, " +
             std::to_string(event_skips) + " event skips, " +
             std::to_string(rows - 1) + " identical rows across 3 runs";
    return true;
}

// ---------------------------------------------------------------------
// criterion 7: folds and class weights
// ---------------------------------------------------------------------
bool folds_and_weights(std::string& detail) {
    std::vector<features::SubjectInfo> subjects;
    SplitRng rng(8);
    for (int i = 0; i < 160; ++i)
        subjects.push_back({"p" + std::to_string(i),
                            static_cast<int>(2 + rng.next_below(16)),
                            rng.next_below(2) == 0 ? 'M' : 'F'});
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const features::FoldAssignment folds =
            features::stratified_folds(subjects, 5, seed);
        std::map<std::string, int> seen;
        std::map<std::pair<int, char>, std::array<int, 5>> strata;
        for (const auto& s : subjects) {
            const int fold = folds.at(s.subject_id);
            if (fold < 0 || fold > 4) {
                detail = "fold out of range";
                return false;
            }
            if (seen.count(s.subject_id)) {
                detail = "subject assigned twice";
                return false;
            }
            seen[s.subject_id] = fold;
            ++strata[{s.age_years, s.sex}][static_cast<std::size_t>(fold)];
        }
        for (const auto& [key, counts] : strata) {
            const auto [lo, hi] =
                std::minmax_element(counts.begin(), counts.end());
            if (*hi - *lo > 1) {
                detail = "stratum imbalance beyond 1 at seed " +
                         std::to_string(seed);
                return false;
            }
        }
    }

    // inverse-frequency weights on the dataset-scale counts
    std::vector<SleepStage> labels;
    labels.insert(labels.end(), 58272, SleepStage::Wake);
    labels.insert(labels.end(), 583261, SleepStage::NREM);
    labels.insert(labels.end(), 100895, SleepStage::REM);
    const auto w = features::class_weights(labels);
    const double total = 742428.0;
    const double expect[3] = {total / (3.0 * 58272.0), total / (3.0 * 583261.0),
                              total / (3.0 * 100895.0)};
    for (int c = 0; c < 3; ++c) {
        if (std::abs(w[static_cast<std::size_t>(c)] - expect[c]) > 1e-9) {
            detail = "weight mismatch for class " + std::to_string(c);
            return false;
        }
    }
    detail = "100 seeds balanced/exclusive; weights " + std::to_string(w[0]) +
             " / " + std::to_string(w[1]) + " / " + std::to_string(w[2]);
    return true;
}

// ---------------------------------------------------------------------
// criterion 8: exported widths and a schema-consuming classifier
// ---------------------------------------------------------------------
std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    return fields;
}

bool export_schema(FixturePaths& p, std::string& detail) {
    const struct {
        const char* blocks;
        std::size_t expected;
    } cases[] = {
        {"Baseline", 11},
        {"Baseline+HEPC", 71},
        {"Baseline+AP_FAPC+HEPC", 191},
    };
    fs::path full_csv;
    for (const auto& c : cases) {
        const fs::path out =
            p.root / (std::string("cols_") + std::to_string(c.expected) + ".csv");
        // reuse the determinism run's diagram cache; blocks do not affect it
        if (run_cli("extract --subjects " + p.fixture.manifest_path +
                    " --seed 42 --blocks " + c.blocks + " --cache-dir " +
                    (p.root / "cache_a").string() + " --out " + out.string()) != 0) {
            detail = std::string("extract failed for blocks ") + c.blocks;
            return false;
        }
        std::istringstream csv(slurp(out));
        std::string header;
        std::getline(csv, header);
        const std::size_t columns = split_line(header).size();
        if (columns != 6 + c.expected) {
            detail = std::string(c.blocks) + " exported " +
                     std::to_string(columns - 6) + " feature columns, expected " +
                     std::to_string(c.expected);
            return false;
        }
        if (c.expected == 191) full_csv = out;
    }

    // a deliberately naive external consumer: nearest-centroid over the
    // numeric columns, holding out one fold, straight off the CSV with no
    // schema-specific handling. A three-subject corpus cannot populate all
    // five folds, so when the fold column is degenerate the split falls
    // back to holding out the first subject.
    std::istringstream csv(slurp(full_csv));
    std::string line;
    std::getline(csv, line);
    const std::vector<std::string> header = split_line(line);
    std::size_t label_col = 0, fold_col = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "label") label_col = i;
        if (header[i] == "fold") fold_col = i;
    }
    struct Row {
        std::string subject, label, fold;
        std::vector<double> x;
    };
    std::vector<Row> rows;
    std::set<std::string> folds_seen;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        Row row;
        row.subject = fields[0];
        row.label = fields[label_col];
        row.fold = fields[fold_col];
        for (std::size_t i = 6; i < fields.size(); ++i)
            row.x.push_back(std::stod(fields[i]));
        folds_seen.insert(row.fold);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        detail = "no rows for the schema smoke test";
        return false;
    }
    const bool by_fold = folds_seen.size() > 1;
    const std::string held_out = by_fold ? rows.front().fold : rows.front().subject;

    std::map<std::string, std::vector<double>> centroid;
    std::map<std::string, std::size_t> count;
    std::vector<std::pair<std::string, std::vector<double>>> test_rows;
    for (const Row& row : rows) {
        const std::string& split_key = by_fold ? row.fold : row.subject;
        if (split_key == held_out) {
            test_rows.emplace_back(row.label, row.x);
            continue;
        }
        auto& c = centroid[row.label];
        if (c.empty()) c.assign(row.x.size(), 0.0);
        for (std::size_t i = 0; i < row.x.size(); ++i) c[i] += row.x[i];
        ++count[row.label];
    }
    if (centroid.empty()) {
        detail = "no training rows for the schema smoke test";
        return false;
    }
    for (auto& [label, c] : centroid)
        for (double& v : c) v /= static_cast<double>(count[label]);
    std::size_t scored = 0, correct = 0;
    for (const auto& [label, x] : test_rows) {
        double best = 1e300;
        std::string pick;
        for (const auto& [cl, c] : centroid) {
            double dist = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                dist += (x[i] - c[i]) * (x[i] - c[i]);
            if (dist < best) {
                best = dist;
                pick = cl;
            }
        }
        ++scored;
        if (pick == label) ++correct;
    }
    detail = "widths 11/71/191 confirmed; nearest-centroid consumed the CSV (" +
             std::to_string(correct) + "/" + std::to_string(scored) +
             " on the held-out fold)";
    return true;
}

} // namespace

int main() {
    FixturePaths fixture;
    try {
        fixture = build_fixture();
    } catch (const std::exception& e) {
        std::cerr << "fixture construction failed: " << e.what() << "\n";
        return 1;
    }

    std::vector<Criterion> criteria = {
        {"1 FAPC closed form vs exact integration (1e-8 rel)", 10.0,
         fapc_closed_form},
        {"2 HEPC recursion vs high-precision reference (1e-10)", 5.0,
         hepc_recursion},
        {"3 persistence diagrams vs brute-force oracles", 60.0,
         persistence_oracles},
        {"4 AP-FAPC residual smallest on every source", 120.0, residual_ordering},
        {"5 single-bar diagrams are identically null", 10.0, single_bar_nullity},
        {"6 pipeline determinism across reruns and 1-vs-8 workers", 300.0,
         [&](std::string& d) { return pipeline_determinism(fixture, d); }},
        {"7 fold exclusivity/balance and inverse-frequency weights", 5.0,
         folds_and_weights},
        {"8 export widths 11/71/191 and consumable CSV schema", 120.0,
         [&](std::string& d) { return export_schema(fixture, d); }},
    };

    int failures = 0;
    for (Criterion& criterion : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > criterion.time_limit_s) {
            ok = false;
            detail += " [over the " + std::to_string(criterion.time_limit_s) +
                      " s limit]";
        }
        std::printf("[%s] criterion %s (%.2f s) %s\n", ok ? "PASS" : "FAIL",
                    criterion.name.c_str(), elapsed,
                    detail.empty() ? "" : ("- " + detail).c_str());
        if (!ok) ++failures;
    }

    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures;
}
