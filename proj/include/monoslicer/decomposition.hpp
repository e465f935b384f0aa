#pragma once

#include <map>
#include <set>
#include <string>

#include "monoslicer/model.hpp"

namespace monoslicer {

struct Subsystem {
    AreaName name;
    std::set<TableId> tables;  // shared tables already removed

    bool operator==(const Subsystem&) const = default;
};

/// Result of mapping tables into business subsystems. Every model table
/// lands in exactly one place: one subsystem, the control set (SSC), or the
/// shared set. Subsystems that claimed a shared table are disqualified but
/// still listed so downstream steps can report them.
struct SubsystemPartition {
    std::map<SubsystemId, Subsystem> subsystems;
    std::set<TableId> control;
    std::set<TableId> shared_tables;
    std::set<SubsystemId> disqualified;

    bool has(const SubsystemId& ss) const { return subsystems.count(ss) != 0; }

    bool operator==(const SubsystemPartition&) const = default;
};

/// Step #1: partition the model's tables by business area, isolate control
/// tables, and mark tables claimed by two or more areas as shared (their
/// claiming subsystems become disqualified). Deterministic and independent
/// of area-map row order.
SubsystemPartition partition_tables(const SystemModel& model, const AreaMap& map);

/// The subsystem's table set (shared tables excluded).
/// Throws UnknownSubsystem.
const std::set<TableId>& tables_of(const SubsystemPartition& partition, const SubsystemId& ss);

}  // namespace monoslicer
