#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowtopo/types.hpp"

namespace flowtopo::io {

// Diagram CSV: header "source,dim,birth,death,multiplicity", death is
// "inf" for essential bars. Doubles are written with 17 significant
// digits so the round-trip is exact.
std::string serialize_diagrams(const std::map<SourceKey, PersistenceDiagram>& diagrams);
std::map<SourceKey, PersistenceDiagram> parse_diagrams(const std::string& text);

void save_diagrams(const std::map<SourceKey, PersistenceDiagram>& diagrams,
                   const std::string& path);
std::map<SourceKey, PersistenceDiagram> load_diagrams(const std::string& path);

// %.17g round-trip formatting used by every exporter.
std::string format_double(double v);

} // namespace flowtopo::io
