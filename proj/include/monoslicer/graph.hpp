#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monoslicer/decomposition.hpp"
#include "monoslicer/model.hpp"

namespace monoslicer {

enum class VertexKind { Facade, Function, Table };
enum class EdgeKind { Call, Access };

std::string to_string(VertexKind kind);

struct GraphEdge {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    EdgeKind kind = EdgeKind::Call;
    int ordinal = 0;                       // call edges only
    AccessMode mode = AccessMode::Read;    // access edges only
    std::optional<TxnScopeId> txn_scope;   // access edges only
};

/// Step #2: the typed dependency graph over facades, business functions and
/// tables. A faithful view of the model — it adds no vertices or edges.
/// Immutable after construction; reachability masks are precomputed so that
/// queries for different facades/subsystems can run concurrently.
class DependencyGraph {
public:
    DependencyGraph() = default;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::optional<std::uint32_t> index_of(const std::string& name) const;
    const std::string& vertex_name(std::uint32_t v) const { return vertices_[v]; }
    VertexKind vertex_kind(std::uint32_t v) const { return kinds_[v]; }

    const std::vector<GraphEdge>& edges() const { return edges_; }
    /// Outgoing edge indices of `v`, sorted by target vertex name.
    const std::vector<std::uint32_t>& out_edges(std::uint32_t v) const { return out_[v]; }

    /// All vertex indices of one kind, in name order.
    const std::vector<std::uint32_t>& facade_vertices() const { return facade_ids_; }
    const std::vector<std::uint32_t>& table_vertices() const { return table_ids_; }

    /// reach mask: reachable_from_facade(f)[v] != 0 iff there is a directed
    /// path facade→v. Precomputed for every facade at build time.
    const std::vector<char>& reachable_from_facade(std::uint32_t facade) const;
    /// coreach mask: reaches_table(t)[v] != 0 iff there is a directed path
    /// v→table. Precomputed for every table at build time.
    const std::vector<char>& reaches_table(std::uint32_t table) const;

    friend DependencyGraph build_graph(const SystemModel& model);

private:
    std::vector<std::string> vertices_;               // sorted by name
    std::vector<VertexKind> kinds_;
    std::map<std::string, std::uint32_t> index_;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<std::uint32_t>> out_;     // edge indices, sorted by dst name
    std::vector<std::vector<std::uint32_t>> in_;      // edge indices
    std::vector<std::uint32_t> facade_ids_;
    std::vector<std::uint32_t> table_ids_;
    std::map<std::uint32_t, std::vector<char>> facade_reach_;
    std::map<std::uint32_t, std::vector<char>> table_coreach_;
};

/// Step #3 result: a facade that reaches a table, with one witness path.
struct FacadeTablePair {
    FacadeId facade;
    TableId table;
    std::vector<std::string> witness;  // facade, ..., table

    auto operator<=>(const FacadeTablePair&) const = default;
};

/// Step #5 input: the business functions lying on some facade→table path,
/// i.e. reachable from the facade and reaching at least one listed table.
struct Slice {
    FacadeId facade;
    std::set<TableId> tables;
    std::set<FunctionId> functions;

    bool operator==(const Slice&) const = default;
};

/// One Evaluated-Subsystems row: counts over the subsystem's subgraph.
struct MetricsRow {
    std::size_t tables = 0;
    std::size_t functions = 0;
    std::size_t call_edges = 0;
    std::size_t access_edges = 0;

    bool operator==(const MetricsRow&) const = default;
};

/// Membership view of one subsystem's induced subgraph: the subsystem's
/// tables, every function that lies on a facade→table path into the
/// subsystem or directly accesses one of its tables, the facades with at
/// least one pair into it, and the edges among those vertices.
struct SubsystemSubgraph {
    std::set<FacadeId> facades;
    std::set<FunctionId> functions;
    std::set<TableId> tables;
    std::vector<std::size_t> call_edge_indices;    // into graph.edges()
    std::vector<std::size_t> access_edge_indices;  // into graph.edges()
};

DependencyGraph build_graph(const SystemModel& model);

/// Step #3: every (facade, table) pair connected by a directed path, in
/// canonical (facade, table) order. Each pair carries the witness path found
/// by a depth-first search that always explores the lexicographically
/// smallest unvisited neighbour first.
std::vector<FacadeTablePair> reachable_pairs(const DependencyGraph& graph);

/// Step #4: the subset of pairs whose table belongs to `ss`. Shared tables
/// belong to no subsystem, so their pairs never match.
/// Throws UnknownSubsystem.
std::vector<FacadeTablePair> pairs_for_subsystem(const std::vector<FacadeTablePair>& pairs,
                                                 const SubsystemPartition& partition,
                                                 const SubsystemId& ss);

/// Step #5: functions on any path from `facade` to any table in `tables`.
/// Throws UnknownVertex when the facade or a listed table is not in the graph.
Slice slice_for(const DependencyGraph& graph, const FacadeId& facade,
                const std::set<TableId>& tables);

SubsystemSubgraph subsystem_subgraph(const DependencyGraph& graph,
                                     const SubsystemPartition& partition,
                                     const SubsystemId& ss);

/// Counts over subsystem_subgraph(ss). Throws UnknownSubsystem.
MetricsRow graph_metrics(const DependencyGraph& graph, const SubsystemPartition& partition,
                         const SubsystemId& ss);

}  // namespace monoslicer
