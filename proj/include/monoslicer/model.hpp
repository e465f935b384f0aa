#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace monoslicer {

// Identifier namespaces. All of them are plain case-sensitive names; the
// model keeps facades, business functions and tables disjoint.
using FacadeId = std::string;
using FunctionId = std::string;
using TableId = std::string;
using CallableId = std::string;  // FacadeId or FunctionId
using AreaName = std::string;
using SubsystemId = std::string;
using TxnScopeId = std::string;
using DataItem = std::string;

enum class AccessMode { Read, Write };

std::string to_string(AccessMode mode);

/// Declared inputs/outputs of a facade or business function. A data item
/// may legitimately appear on both sides.
struct IoSignature {
    std::set<DataItem> inputs;
    std::set<DataItem> outputs;

    bool operator==(const IoSignature&) const = default;
};

/// One call site. `ordinal` is the 1-based position of the call within the
/// caller's body; per caller the ordinals form a gap-free sequence 1..k.
struct CallEdge {
    CallableId caller;
    FunctionId callee;
    int ordinal = 1;

    auto operator<=>(const CallEdge&) const = default;
};

/// One table access. `txn_scope`, when present, names the transaction group
/// whose writes commit atomically together.
struct AccessEdge {
    FunctionId function;
    TableId table;
    AccessMode mode = AccessMode::Read;
    std::optional<TxnScopeId> txn_scope;

    auto operator<=>(const AccessEdge&) const = default;
};

/// The monolith as declarative facts: entry-point facades, business
/// functions, database tables, ordered call edges, table accesses and
/// per-callable I/O signatures. Immutable once built; edges are kept in
/// canonical sorted order so structurally equal models compare equal.
struct SystemModel {
    std::set<FacadeId> facades;
    std::set<FunctionId> functions;
    std::set<TableId> tables;
    std::vector<CallEdge> call_edges;
    std::vector<AccessEdge> access_edges;
    std::map<CallableId, IoSignature> signatures;

    bool is_facade(const std::string& id) const { return facades.count(id) != 0; }
    bool is_function(const std::string& id) const { return functions.count(id) != 0; }
    bool is_table(const std::string& id) const { return tables.count(id) != 0; }
    bool is_callable(const std::string& id) const { return is_facade(id) || is_function(id); }

    /// Signature lookup; nullptr when the callable has no entry.
    const IoSignature* signature_of(const CallableId& id) const {
        auto it = signatures.find(id);
        return it == signatures.end() ? nullptr : &it->second;
    }

    /// Sorts the edge lists into canonical order. Builders call this once
    /// after assembling a model by hand; parse_model does it internally.
    void canonicalize();

    bool operator==(const SystemModel&) const = default;
};

/// Step #1 input: which business area(s) claim each table, plus the tables
/// reserved for the Control Subsystem (logs, error messages, ...).
struct AreaMap {
    std::map<TableId, std::set<AreaName>> assignments;
    std::set<TableId> control_tables;

    bool operator==(const AreaMap&) const = default;
};

}  // namespace monoslicer
