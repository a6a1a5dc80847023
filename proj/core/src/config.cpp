#include "flowtopo/pipeline/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flowtopo/errors.hpp"

namespace flowtopo::pipeline {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

void PipelineConfig::validate() const {
    if (sqi_threshold < 0.0 || sqi_threshold > 1.0)
        throw ConfigError("sqi_threshold must lie in [0, 1]");
    if (airflow_downsample_hz <= 0.0)
        throw ConfigError("airflow_downsample_hz must be positive");
    if (rips_max_points < 3) throw ConfigError("rips_max_points must be >= 3");
    if (embed_dim < 2) throw ConfigError("embed_dim must be >= 2");
    if (n_coeffs < 1) throw ConfigError("n_coeffs must be >= 1");
    if (folds_k < 2) throw ConfigError("folds_k must be >= 2");
    if (workers < 1) throw ConfigError("workers must be >= 1");
    if (output_format != "csv" && output_format != "ndjson")
        throw ConfigError("output_format must be csv or ndjson");
    if (feature_blocks.empty()) throw ConfigError("feature_blocks is empty");
}

std::string serialize_config(const PipelineConfig& c) {
    std::ostringstream os;
    os << "# flowtopo pipeline config\n";
    os << "sqi_threshold = " << format_double(c.sqi_threshold) << "\n";
    os << "airflow_downsample_hz = " << format_double(c.airflow_downsample_hz) << "\n";
    os << "rips_max_points = " << c.rips_max_points << "\n";
    os << "embed_dim = " << c.embed_dim << "\n";
    os << "n_coeffs = " << c.n_coeffs << "\n";
    os << "feature_blocks = " << features::feature_blocks_to_string(c.feature_blocks)
       << "\n";
    os << "folds_k = " << c.folds_k << "\n";
    os << "seed = " << c.seed << "\n";
    os << "workers = " << c.workers << "\n";
    os << "constants_sample = " << c.constants_sample << "\n";
    os << "airflow_channel = " << c.airflow_channel << "\n";
    os << "output_format = " << c.output_format << "\n";
    os << "constants_path = " << c.constants_path << "\n";
    os << "manifest_in = " << c.manifest_in << "\n";
    os << "features_out = " << c.features_out << "\n";
    os << "run_manifest_out = " << c.run_manifest_out << "\n";
    os << "diagrams_dir = " << c.diagrams_dir << "\n";
    os << "cache_dir = " << c.cache_dir << "\n";
    return os.str();
}

PipelineConfig parse_config(const std::string& text) {
    PipelineConfig c;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": missing '='");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        try {
            if (key == "sqi_threshold") c.sqi_threshold = std::stod(value);
            else if (key == "airflow_downsample_hz") c.airflow_downsample_hz = std::stod(value);
            else if (key == "rips_max_points") c.rips_max_points = std::stoul(value);
            else if (key == "embed_dim") c.embed_dim = std::stoul(value);
            else if (key == "n_coeffs") c.n_coeffs = std::stoul(value);
            else if (key == "feature_blocks") c.feature_blocks = features::parse_feature_blocks(value);
            else if (key == "folds_k") c.folds_k = std::stoi(value);
            else if (key == "seed") c.seed = std::stoull(value);
            else if (key == "workers") c.workers = std::stoul(value);
            else if (key == "constants_sample") c.constants_sample = std::stoul(value);
            else if (key == "airflow_channel") c.airflow_channel = value;
            else if (key == "output_format") c.output_format = value;
            else if (key == "constants_path") c.constants_path = value;
            else if (key == "manifest_in") c.manifest_in = value;
            else if (key == "features_out") c.features_out = value;
            else if (key == "run_manifest_out") c.run_manifest_out = value;
            else if (key == "diagrams_dir") c.diagrams_dir = value;
            else if (key == "cache_dir") c.cache_dir = value;
            else throw ConfigError("config line " + std::to_string(lineno) +
                                   ": unknown key '" + key + "'");
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": bad value for '" + key + "'");
        }
    }
    c.validate();
    return c;
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot read config from " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config(buf.str());
}

void save_config(const PipelineConfig& config, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot write config to " + path);
    os << serialize_config(config);
}

std::string config_hash(const PipelineConfig& config) {
    const std::string text = serialize_config(config);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace flowtopo::pipeline
