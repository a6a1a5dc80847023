#include "flowtopo/pipeline/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "flowtopo/curves/fapc.hpp"
#include "flowtopo/curves/hepc.hpp"
#include "flowtopo/curves/persistence_curve.hpp"
#include "flowtopo/curves/residual.hpp"
#include "flowtopo/errors.hpp"
#include "flowtopo/features/classical.hpp"
#include "flowtopo/features/folds.hpp"
#include "flowtopo/ingest/csv.hpp"
#include "flowtopo/ingest/edf.hpp"
#include "flowtopo/ingest/windows.hpp"
#include "flowtopo/io/diagram_io.hpp"
#include "flowtopo/io/feature_io.hpp"
#include "flowtopo/preprocess/breaths.hpp"
#include "flowtopo/preprocess/filter.hpp"
#include "flowtopo/tda/maxmin.hpp"
#include "flowtopo/tda/rips.hpp"
#include "flowtopo/tda/sublevel.hpp"
#include "flowtopo/tda/takens.hpp"
#include "flowtopo/util/rng.hpp"
#include "flowtopo/util/stats.hpp"
#include "flowtopo/version.hpp"

namespace flowtopo::pipeline {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t h) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t window_cache_key(const EpochWindow& window,
                               const PipelineConfig& config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(window.subject_id.data(), window.subject_id.size(), h);
    h = fnv1a(&window.target_epoch_index, sizeof(window.target_epoch_index), h);
    h = fnv1a(window.airflow.data(), window.airflow.size() * sizeof(double), h);
    const double ds = config.airflow_downsample_hz;
    const std::uint64_t knobs[4] = {config.rips_max_points, config.embed_dim,
                                    config.seed,
                                    static_cast<std::uint64_t>(ds * 1e6)};
    h = fnv1a(knobs, sizeof(knobs), h);
    return h;
}

std::uint64_t window_seed(const PipelineConfig& config, const EpochWindow& window) {
    SplitRng rng(config.seed);
    return rng.split(window.subject_id)
        .split(static_cast<std::uint64_t>(window.target_epoch_index))
        .next_u64();
}

Recording load_recording(const SubjectEntry& entry,
                         const PipelineConfig& config) {
    const fs::path path(entry.recording_path);
    Recording rec;
    if (path.extension() == ".edf" || path.extension() == ".EDF") {
        rec = ingest::read_edf(entry.recording_path);
    } else if (path.extension() == ".csv" || path.extension() == ".CSV") {
        if (entry.csv_rate_hz <= 0.0)
            throw InputError("subject " + entry.subject_id +
                             ": csv recording needs csv_rate_hz in the manifest");
        rec = ingest::read_csv_recording(entry.recording_path, entry.csv_rate_hz,
                                         config.airflow_channel);
    } else {
        throw InputError("unsupported recording extension: " +
                         entry.recording_path);
    }
    rec.subject_id = entry.subject_id;
    return rec;
}

} // namespace

std::vector<SubjectEntry> read_subject_manifest(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot open subject manifest " + path);
    std::vector<SubjectEntry> entries;
    std::string line;
    long long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line == "\r") continue;
        const std::vector<std::string> fields = ingest::split_csv_line(line);
        if (fields.size() < 6)
            throw ParseError("subject manifest row needs at least 6 fields", lineno);
        SubjectEntry e;
        e.subject_id = fields[0];
        e.recording_path = fields[1];
        e.stages_path = fields[2];
        e.events_path = fields[3];
        try {
            e.age_years = std::stoi(fields[4]);
        } catch (const std::exception&) {
            if (lineno == 1) continue; // header row
            throw ParseError("bad age in subject manifest", lineno);
        }
        if (fields[5] != "M" && fields[5] != "F")
            throw ParseError("sex must be M or F in subject manifest", lineno);
        e.sex = fields[5][0];
        if (fields.size() >= 7 && !fields[6].empty())
            e.csv_rate_hz = std::stod(fields[6]);
        entries.push_back(std::move(e));
    }
    if (entries.empty()) throw InputError("subject manifest is empty: " + path);
    return entries;
}

std::map<SourceKey, PersistenceDiagram> compute_window_diagrams(
    const EpochWindow& window, const std::vector<double>& filtered,
    const preprocess::IrrSignal& irr_signal, const PipelineConfig& config) {
    std::map<SourceKey, PersistenceDiagram> diagrams;

    // Rips on the delay embedding of the decimated airflow; tau is one
    // second of samples at the operative rate.
    const std::vector<double> decimated = preprocess::decimate(
        filtered, window.airflow_rate_hz, config.airflow_downsample_hz);
    const auto tau =
        static_cast<std::size_t>(std::llround(config.airflow_downsample_hz));
    tda::PointCloud cloud = tda::takens_embed(decimated, tau, config.embed_dim);
    if (cloud.size() > config.rips_max_points)
        cloud = tda::maxmin_subsample(cloud, config.rips_max_points,
                                      window_seed(config, window));
    std::vector<PersistenceDiagram> rips = tda::rips_persistence(
        cloud, 1, std::nullopt, DiagramSource::RipsAirflow);
    diagrams[{DiagramSource::RipsAirflow, 0}] = std::move(rips[0]);
    diagrams[{DiagramSource::RipsAirflow, 1}] = std::move(rips[1]);

    diagrams[{DiagramSource::SublevelAirflow, 0}] =
        tda::sublevel_persistence(filtered, DiagramSource::SublevelAirflow);
    diagrams[{DiagramSource::SublevelIrr, 0}] =
        tda::sublevel_persistence(irr_signal.samples, DiagramSource::SublevelIrr);
    return diagrams;
}

namespace {

struct WindowTask {
    EpochWindow window;
    std::size_t subject_index = 0;
};

struct WindowOutcome {
    bool emitted = false;
    io::FeatureRow row;      // valid when emitted
    std::string skip_reason; // valid when not emitted
};

WindowOutcome process_window(const WindowTask& task, const PipelineConfig& config,
                             const curves::FitConstants& constants) {
    WindowOutcome outcome;
    const EpochWindow& window = task.window;
    const std::vector<double> filtered =
        preprocess::detrend_lowpass(window.airflow, window.airflow_rate_hz);

    preprocess::BreathSequence breaths;
    try {
        breaths = preprocess::detect_breaths(filtered, window.airflow_rate_hz);
    } catch (const EmptyBreathsError&) {
        outcome.skip_reason = "too_few_breaths";
        return outcome;
    }
    if (breaths.cycle_count() < 2) {
        outcome.skip_reason = "too_few_breaths";
        return outcome;
    }
    const preprocess::IrrSignal irr_signal =
        preprocess::irr(breaths, window.duration_s());

    std::map<SourceKey, PersistenceDiagram> diagrams;
    bool cached = false;
    fs::path cache_file;
    if (!config.cache_dir.empty()) {
        char name[32];
        std::snprintf(name, sizeof(name), "%016llx.csv",
                      static_cast<unsigned long long>(
                          window_cache_key(window, config)));
        cache_file = fs::path(config.cache_dir) / name;
        if (fs::exists(cache_file)) {
            diagrams = io::load_diagrams(cache_file.string());
            cached = true;
        }
    }
    if (!cached) {
        diagrams = compute_window_diagrams(window, filtered, irr_signal, config);
        if (!cache_file.empty()) {
            const fs::path tmp = cache_file.string() + ".tmp" +
                                 std::to_string(window.target_epoch_index);
            io::save_diagrams(diagrams, tmp.string());
            fs::rename(tmp, cache_file); // atomic publish
        }
    }

    if (!config.diagrams_dir.empty()) {
        const fs::path out = fs::path(config.diagrams_dir) /
                             (window.subject_id + "_" +
                              std::to_string(window.target_epoch_index) + ".csv");
        io::save_diagrams(diagrams, out.string());
    }

    const features::ClassicalFeatures classical =
        features::classical_features(filtered, window.airflow_rate_hz, breaths);
    const features::FeatureVector vec =
        features::assemble(window, classical, diagrams, constants,
                           config.feature_blocks, config.n_coeffs);

    outcome.emitted = true;
    outcome.row.subject_id = vec.subject_id;
    outcome.row.epoch_index = vec.target_epoch_index;
    outcome.row.label = to_string(vec.label);
    outcome.row.features = vec.flattened();
    std::string flags;
    for (const std::string& f : vec.quality_flags) {
        if (!flags.empty()) flags += ";";
        flags += f;
    }
    outcome.row.quality_flags = flags;
    return outcome;
}

} // namespace

ExtractSummary run_extract(const PipelineConfig& config) {
    config.validate();
    if (config.manifest_in.empty())
        throw InputError("extract: no subject manifest configured");
    if (config.features_out.empty())
        throw InputError("extract: no features output path configured");

    const std::vector<SubjectEntry> subjects =
        read_subject_manifest(config.manifest_in);

    const curves::FitConstants constants =
        config.constants_path.empty()
            ? curves::default_fit_constants()
            : curves::load_fit_constants(config.constants_path);

    if (!config.cache_dir.empty()) fs::create_directories(config.cache_dir);
    if (!config.diagrams_dir.empty()) fs::create_directories(config.diagrams_dir);

    // Ingest sequentially: windows gated on events and SQI, counted by the
    // first failing check.
    struct SubjectCounts {
        std::size_t total = 0;
        std::size_t emitted = 0;
        std::map<std::string, std::size_t> skipped;
    };
    std::vector<SubjectCounts> counts(subjects.size());
    std::vector<WindowTask> tasks;
    std::vector<std::string> warnings;
    for (std::size_t s = 0; s < subjects.size(); ++s) {
        const Recording recording = load_recording(subjects[s], config);
        AnnotationSet annotations;
        annotations.stages = ingest::read_stages_csv(subjects[s].stages_path);
        annotations.events = ingest::read_events_csv(subjects[s].events_path);
        annotations.demographics = {subjects[s].age_years, subjects[s].sex};
        ingest::WindowBuildResult built = ingest::build_windows(
            recording, annotations, config.sqi_threshold, config.airflow_channel);
        counts[s].total = built.total_epochs;
        for (std::size_t r = 0; r < ingest::kSkipReasonCount; ++r)
            counts[s].skipped[to_string(static_cast<ingest::SkipReason>(r))] =
                built.skipped[r];
        counts[s].skipped["too_few_breaths"] = 0;
        for (EpochWindow& w : built.windows)
            tasks.push_back({std::move(w), s});
    }

    // the per-window stage is pure; workers own disjoint slots
    std::vector<WindowOutcome> outcomes(tasks.size());
    const std::size_t worker_count =
        std::max<std::size_t>(1, std::min(config.workers, tasks.size() ? tasks.size() : 1));
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    const auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                outcomes[i] = process_window(tasks[i], config, constants);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (worker_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (std::size_t t = 0; t < worker_count; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<io::FeatureRow> rows;
    rows.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        SubjectCounts& c = counts[tasks[i].subject_index];
        if (outcomes[i].emitted) {
            ++c.emitted;
            rows.push_back(std::move(outcomes[i].row));
        } else {
            ++c.skipped[outcomes[i].skip_reason];
        }
    }

    std::sort(rows.begin(), rows.end(),
              [](const io::FeatureRow& a, const io::FeatureRow& b) {
                  if (a.subject_id != b.subject_id) return a.subject_id < b.subject_id;
                  return a.epoch_index < b.epoch_index;
              });

    // folds per subject, weights over the exported corpus
    std::vector<features::SubjectInfo> infos;
    infos.reserve(subjects.size());
    for (const SubjectEntry& e : subjects)
        infos.push_back({e.subject_id, e.age_years, e.sex});
    const features::FoldAssignment folds =
        features::stratified_folds(infos, config.folds_k, config.seed);

    std::vector<SleepStage> labels;
    labels.reserve(rows.size());
    for (const io::FeatureRow& r : rows) labels.push_back(stage_from_string(r.label));
    std::array<double, 3> weights{1.0, 1.0, 1.0};
    bool have_weights = false;
    try {
        weights = features::class_weights(labels);
        have_weights = true;
    } catch (const MissingClassError& e) {
        warnings.push_back(std::string("class weights skipped: ") + e.what());
    }
    for (io::FeatureRow& r : rows) {
        r.fold = folds.at(r.subject_id);
        if (have_weights) {
            const SleepStage s = stage_from_string(r.label);
            r.weight = weights[static_cast<std::size_t>(s)];
        } else {
            r.weight = 1.0;
        }
    }

    const std::vector<std::string> columns =
        features::feature_column_names(config.feature_blocks, config.n_coeffs);
    {
        std::ofstream os(config.features_out, std::ios::binary);
        if (!os) throw InputError("cannot write features to " + config.features_out);
        os << (config.output_format == "ndjson"
                   ? io::serialize_features_ndjson(columns, rows)
                   : io::serialize_features_csv(columns, rows));
    }

    ExtractSummary summary;
    summary.subjects = subjects.size();
    summary.windows_emitted = rows.size();

    nlohmann::ordered_json manifest;
    manifest["tool"] = "flowtopo";
    manifest["version"] = kVersion;
    manifest["config_hash"] = config_hash(config);
    manifest["config"] = nlohmann::ordered_json::parse("{}");
    {
        const auto trim = [](const std::string& s) {
            const auto a = s.find_first_not_of(" \t");
            if (a == std::string::npos) return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        std::istringstream cfg(serialize_config(config));
        std::string line;
        while (std::getline(cfg, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            manifest["config"][trim(line.substr(0, eq))] =
                trim(line.substr(eq + 1));
        }
    }
    nlohmann::ordered_json subjects_json;
    for (std::size_t s = 0; s < subjects.size(); ++s) {
        nlohmann::ordered_json sj;
        sj["total_epochs"] = counts[s].total;
        sj["emitted"] = counts[s].emitted;
        nlohmann::ordered_json skipped;
        std::size_t skip_sum = 0;
        for (const auto& [reason, count] : counts[s].skipped) {
            skipped[reason] = count;
            skip_sum += count;
            summary.skipped_total[reason] += count;
        }
        sj["skipped"] = skipped;
        if (counts[s].emitted + skip_sum != counts[s].total)
            throw Error("manifest accounting broken for subject " +
                        subjects[s].subject_id);
        subjects_json[subjects[s].subject_id] = sj;
        summary.epochs_total += counts[s].total;
    }
    manifest["subjects"] = subjects_json;
    manifest["windows_emitted"] = rows.size();
    manifest["feature_columns"] = columns.size();
    manifest["warnings"] = warnings;

    if (!config.run_manifest_out.empty()) {
        std::ofstream os(config.run_manifest_out, std::ios::binary);
        if (!os)
            throw InputError("cannot write run manifest to " +
                             config.run_manifest_out);
        os << manifest.dump(2) << "\n";
    }
    return summary;
}

std::map<SourceKey, std::vector<PersistenceDiagram>> load_diagram_corpus(
    const std::string& dir) {
    if (!fs::exists(dir)) throw InputError("diagram directory missing: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::map<SourceKey, std::vector<PersistenceDiagram>> corpus;
    for (const fs::path& f : files) {
        for (auto& [key, diagram] : io::load_diagrams(f.string()))
            corpus[key].push_back(std::move(diagram));
    }
    if (corpus.empty()) throw InputError("no diagrams found under " + dir);
    return corpus;
}

void run_constants(const PipelineConfig& config, const std::string& diagrams_dir,
                   const std::string& out_path,
                   std::vector<std::string>* warnings) {
    auto corpus = load_diagram_corpus(diagrams_dir);
    const SplitRng base(config.seed);
    for (auto& [key, diagrams] : corpus) {
        if (diagrams.size() > config.constants_sample) {
            SplitRng rng = base.split("constants-" + to_string(key));
            deterministic_shuffle(diagrams, rng);
            diagrams.resize(config.constants_sample);
        } else if (diagrams.size() < config.constants_sample && warnings) {
            warnings->push_back("source " + to_string(key) + ": only " +
                                std::to_string(diagrams.size()) +
                                " diagrams available, using all");
        }
    }
    std::vector<std::string> estimate_warnings;
    const curves::FitConstants constants =
        curves::estimate_constants(corpus, &estimate_warnings);
    if (warnings)
        warnings->insert(warnings->end(), estimate_warnings.begin(),
                         estimate_warnings.end());
    if (constants.hepc_scale.empty())
        throw InputError("constants: no source produced usable estimates");
    curves::save_fit_constants(constants, out_path);
}

std::vector<ResidualReportRow> run_residual_report(
    const PipelineConfig& config, const std::string& diagrams_dir) {
    auto corpus = load_diagram_corpus(diagrams_dir);
    const curves::FitConstants constants =
        config.constants_path.empty()
            ? curves::estimate_constants(corpus)
            : curves::load_fit_constants(config.constants_path);

    std::vector<ResidualReportRow> rows;
    for (const auto& [key, diagrams] : corpus) {
        ResidualReportRow row;
        row.key = key;
        row.diagrams = diagrams.size();
        std::vector<double> d_mins, d_maxs;
        double hepc_sum = 0.0, sp_sum = 0.0, ap_sum = 0.0;
        std::size_t counted = 0;
        const bool have_constants = constants.hepc_scale.count(key) != 0 &&
                                    constants.sp_domain.count(key) != 0;
        for (const PersistenceDiagram& diagram : diagrams) {
            const auto support = curves::ap_domain(diagram);
            if (!support) continue; // zero curves fit exactly, residual 0
            d_mins.push_back(support->d_min);
            d_maxs.push_back(support->d_max);
            if (!have_constants) continue;
            const curves::PersistenceCurve curve = curves::entropy_curve(diagram);
            const auto hepc = curves::hepc_coefficients(
                diagram, config.n_coeffs, constants.scale_for(key));
            hepc_sum += curves::approximation_residual(curve, hepc);
            const auto sp = curves::fapc_coefficients(
                diagram, config.n_coeffs, constants.domain_for(key),
                curves::ApproximationKind::SP_FAPC);
            sp_sum += curves::approximation_residual(curve, sp);
            const auto ap = curves::fapc_coefficients(
                diagram, config.n_coeffs, *support,
                curves::ApproximationKind::AP_FAPC);
            ap_sum += curves::approximation_residual(curve, ap);
            ++counted;
        }
        if (counted > 0) {
            row.mean_residual_hepc = hepc_sum / static_cast<double>(counted);
            row.mean_residual_sp_fapc = sp_sum / static_cast<double>(counted);
            row.mean_residual_ap_fapc = ap_sum / static_cast<double>(counted);
        }
        if (!d_mins.empty()) {
            row.min_d_min = *std::min_element(d_mins.begin(), d_mins.end());
            row.median_d_min = median(d_mins);
            row.median_d_max = median(d_maxs);
            row.max_d_max = *std::max_element(d_maxs.begin(), d_maxs.end());
        }
        rows.push_back(row);
    }
    return rows;
}

std::string residual_report_csv(const std::vector<ResidualReportRow>& rows) {
    std::ostringstream os;
    os << "source,diagrams,hepc_residual,sp_fapc_residual,ap_fapc_residual,"
          "min_d_min,median_d_min,median_d_max,max_d_max\n";
    for (const ResidualReportRow& r : rows) {
        os << to_string(r.key) << "," << r.diagrams << ","
           << io::format_double(r.mean_residual_hepc) << ","
           << io::format_double(r.mean_residual_sp_fapc) << ","
           << io::format_double(r.mean_residual_ap_fapc) << ","
           << io::format_double(r.min_d_min) << ","
           << io::format_double(r.median_d_min) << ","
           << io::format_double(r.median_d_max) << ","
           << io::format_double(r.max_d_max) << "\n";
    }
    return os.str();
}

void run_folds(const std::string& demographics_csv, int k, std::uint64_t seed,
               const std::string& out_path) {
    const auto demographics = ingest::read_demographics_csv(demographics_csv);
    if (demographics.empty())
        throw InputError("no subjects in " + demographics_csv);
    std::vector<features::SubjectInfo> infos;
    infos.reserve(demographics.size());
    for (const auto& d : demographics)
        infos.push_back({d.subject_id, d.demographics.age_years, d.demographics.sex});
    const features::FoldAssignment folds = features::stratified_folds(infos, k, seed);
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw InputError("cannot write folds to " + out_path);
    os << "subject_id,fold\n";
    for (const auto& [subject, fold] : folds) os << subject << "," << fold << "\n";
}

} // namespace flowtopo::pipeline
