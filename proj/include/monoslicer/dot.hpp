#pragma once

#include <string>

#include "monoslicer/decomposition.hpp"
#include "monoslicer/graph.hpp"

namespace monoslicer {

/// DOT rendering of the whole graph. Facades are boxes, functions ellipses,
/// tables cylinders. Emission is sorted, so output is byte-stable.
std::string export_dot(const DependencyGraph& graph);

/// DOT rendering of one subsystem's induced subgraph.
/// Throws UnknownSubsystem.
std::string export_dot(const DependencyGraph& graph, const SubsystemPartition& partition,
                       const SubsystemId& ss);

}  // namespace monoslicer
