#include "flowtopo/curves/constants.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flowtopo/curves/fapc.hpp"
#include "flowtopo/errors.hpp"
#include "flowtopo/util/stats.hpp"

namespace flowtopo::curves {

double FitConstants::scale_for(const SourceKey& key) const {
    const auto it = hepc_scale.find(key);
    if (it == hepc_scale.end())
        throw ConfigError("no HEPC scale for source " + to_string(key));
    return it->second;
}

Domain FitConstants::domain_for(const SourceKey& key) const {
    const auto it = sp_domain.find(key);
    if (it == sp_domain.end())
        throw ConfigError("no SP-FAPC domain for source " + to_string(key));
    return it->second;
}

FitConstants default_fit_constants() {
    FitConstants c;
    const SourceKey rips_h0{DiagramSource::RipsAirflow, 0};
    const SourceKey rips_h1{DiagramSource::RipsAirflow, 1};
    const SourceKey sub_air{DiagramSource::SublevelAirflow, 0};
    const SourceKey sub_irr{DiagramSource::SublevelIrr, 0};
    c.hepc_scale[rips_h0] = 90442.544;
    c.hepc_scale[rips_h1] = 55034.829;
    c.hepc_scale[sub_air] = 15909.436;
    c.hepc_scale[sub_irr] = 0.164;
    c.sp_domain[rips_h0] = {0.0, 0.0002};
    c.sp_domain[rips_h1] = {0.0, 0.0005};
    c.sp_domain[sub_air] = {-0.0015, 0.0015};
    c.sp_domain[sub_irr] = {10.0, 50.0};
    return c;
}

FitConstants estimate_constants(
    const std::map<SourceKey, std::vector<PersistenceDiagram>>& sample,
    std::vector<std::string>* warnings) {
    FitConstants out;
    for (const auto& [key, diagrams] : sample) {
        std::vector<double> inverse_scales;
        std::vector<double> support_mins;
        std::vector<double> support_maxs;
        for (const PersistenceDiagram& d : diagrams) {
            if (d.has_finite_bar())
                inverse_scales.push_back(5.0 / d.max_finite_death());
            if (const auto dom = ap_domain(d)) {
                support_mins.push_back(dom->d_min);
                support_maxs.push_back(dom->d_max);
            }
        }
        if (inverse_scales.empty() || support_mins.empty()) {
            if (warnings)
                warnings->push_back("source " + to_string(key) +
                                    " has no usable diagrams; skipped");
            continue;
        }
        out.hepc_scale[key] = mean(inverse_scales);
        Domain dom{percentile(support_mins, 0.25), percentile(support_maxs, 0.75)};
        if (dom.width() <= 0.0) {
            if (warnings)
                warnings->push_back("source " + to_string(key) +
                                    " yields an empty SP domain; skipped");
            continue;
        }
        out.sp_domain[key] = dom;
    }
    return out;
}

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

std::string serialize_fit_constants(const FitConstants& constants) {
    std::ostringstream os;
    os << "# flowtopo fit constants\n";
    for (const auto& [key, scale] : constants.hepc_scale)
        os << to_string(key) << ".hepc_scale = " << format_double(scale) << "\n";
    for (const auto& [key, dom] : constants.sp_domain)
        os << to_string(key) << ".sp_domain = " << format_double(dom.d_min) << " "
           << format_double(dom.d_max) << "\n";
    return os.str();
}

FitConstants parse_fit_constants(const std::string& text) {
    FitConstants out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("fit constants line " + std::to_string(lineno) +
                              ": missing '='");
        const std::string key_full = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const auto dot = key_full.rfind('.');
        if (dot == std::string::npos)
            throw ConfigError("fit constants line " + std::to_string(lineno) +
                              ": expected <source>.<field>");
        const SourceKey key = source_key_from_string(key_full.substr(0, dot));
        const std::string field = key_full.substr(dot + 1);
        std::istringstream vs(value);
        if (field == "hepc_scale") {
            double scale = 0.0;
            if (!(vs >> scale) || scale <= 0.0)
                throw ConfigError("fit constants line " + std::to_string(lineno) +
                                  ": bad hepc_scale");
            out.hepc_scale[key] = scale;
        } else if (field == "sp_domain") {
            Domain dom;
            if (!(vs >> dom.d_min >> dom.d_max) || dom.width() <= 0.0)
                throw ConfigError("fit constants line " + std::to_string(lineno) +
                                  ": bad sp_domain");
            out.sp_domain[key] = dom;
        } else {
            throw ConfigError("fit constants line " + std::to_string(lineno) +
                              ": unknown field '" + field + "'");
        }
    }
    return out;
}

void save_fit_constants(const FitConstants& constants, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot write fit constants to " + path);
    os << serialize_fit_constants(constants);
}

FitConstants load_fit_constants(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot read fit constants from " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_fit_constants(buf.str());
}

} // namespace flowtopo::curves
