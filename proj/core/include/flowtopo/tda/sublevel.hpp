#pragma once

#include <span>

#include "flowtopo/types.hpp"

namespace flowtopo::tda {

// H0 persistence of the sublevel filtration of a series viewed as a path
// graph (vertex values f_i, edge value max(f_i, f_{i+1})).
//
// Local minima create components; when two components meet, the one with
// the older birth survives (elder rule; ties resolve to the component born
// at the lower index). Consecutive equal values belong to one component,
// so plateaus never produce bars. The global minimum yields the essential
// bar (min, +inf). Output is in canonical (normalized) form.
PersistenceDiagram sublevel_persistence(std::span<const double> series,
                                        DiagramSource source);

} // namespace flowtopo::tda
