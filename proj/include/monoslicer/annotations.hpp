#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monoslicer/model.hpp"

namespace monoslicer {

/// Human-authored descriptor prose for one slice. Keyed by the subsystem
/// plus the slice's function set (or its fingerprint), so names survive
/// model regeneration as long as the slice itself is stable.
struct AnnotationEntry {
    SubsystemId subsystem;
    std::set<FunctionId> functions;  // empty when keyed by fingerprint only
    std::string fingerprint;         // derived from (subsystem, functions) or given
    std::string name;
    std::string purpose;
    std::vector<std::string> features;

    bool operator==(const AnnotationEntry&) const = default;
};

class AnnotationSet {
public:
    AnnotationSet() = default;
    explicit AnnotationSet(std::vector<AnnotationEntry> entries);

    /// Entry whose key matches (subsystem, slice function set); nullptr if none.
    const AnnotationEntry* find(const SubsystemId& ss,
                                const std::set<FunctionId>& functions) const;

    const std::vector<AnnotationEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<AnnotationEntry> entries_;
};

/// Stable fingerprint of a slice: FNV-1a over the subsystem name and the
/// sorted function names.
std::string slice_fingerprint(const SubsystemId& ss, const std::set<FunctionId>& functions);

/// Parses the annotation file (JSON). Throws SyntaxError / SchemaError.
AnnotationSet parse_annotations(std::string_view text);
AnnotationSet parse_annotations_file(const std::string& path);

}  // namespace monoslicer
