#include "flowtopo/io/diagram_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flowtopo/errors.hpp"
#include "flowtopo/ingest/csv.hpp"

namespace flowtopo::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string serialize_diagrams(
    const std::map<SourceKey, PersistenceDiagram>& diagrams) {
    std::ostringstream os;
    os << "source,dim,birth,death,multiplicity\n";
    for (const auto& [key, diagram] : diagrams) {
        for (const Bar& bar : diagram.bars) {
            os << to_string(key.source) << "," << key.dim << ","
               << format_double(bar.birth) << ",";
            if (bar.finite())
                os << format_double(bar.death);
            else
                os << "inf";
            os << "," << bar.multiplicity << "\n";
        }
    }
    return os.str();
}

std::map<SourceKey, PersistenceDiagram> parse_diagrams(const std::string& text) {
    std::map<SourceKey, PersistenceDiagram> out;
    std::istringstream is(text);
    std::string line;
    long long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        if (lineno == 1 && line.rfind("source,", 0) == 0) continue;
        const std::vector<std::string> fields = ingest::split_csv_line(line);
        if (fields.size() < 5)
            throw ParseError("diagram row needs 5 fields", lineno);
        SourceKey key;
        key.source = diagram_source_from_string(fields[0]);
        key.dim = std::stoi(fields[1]);
        Bar bar;
        bar.birth = std::stod(fields[2]);
        bar.death = fields[3] == "inf" ? kInfiniteDeath : std::stod(fields[3]);
        bar.multiplicity = static_cast<std::uint32_t>(std::stoul(fields[4]));
        auto& diagram = out[key];
        diagram.dim = key.dim;
        diagram.source = key.source;
        diagram.bars.push_back(bar);
    }
    for (auto& [key, diagram] : out) diagram.normalize();
    return out;
}

void save_diagrams(const std::map<SourceKey, PersistenceDiagram>& diagrams,
                   const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot write diagrams to " + path);
    os << serialize_diagrams(diagrams);
}

std::map<SourceKey, PersistenceDiagram> load_diagrams(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot read diagrams from " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_diagrams(buf.str());
}

} // namespace flowtopo::io
