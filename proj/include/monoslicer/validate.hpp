#pragma once

#include <string>
#include <vector>

#include "monoslicer/errors.hpp"
#include "monoslicer/model.hpp"

namespace monoslicer {

enum class ViolationCode {
    DuplicateId,         // a name appears in more than one of facades/functions/tables
    DanglingEdge,        // an edge references an undeclared or wrongly-kinded vertex
    CallToFacade,        // a call edge targets a facade
    FacadeAccessesTable, // an access edge originates at a facade
    OrdinalGap,          // a caller's call ordinals are not a gap-free 1..k sequence
    UnmappedTable,       // a model table is absent from the area map
};

std::string to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string subject;  // the offending identifier (edge endpoint, caller, table)
    std::string detail;

    auto operator<=>(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

/// Checks every structural invariant of the model and its area map.
/// Violations come back sorted by (code, subject); an empty report means
/// the model is safe for analysis.
ValidationReport validate_model(const SystemModel& model, const AreaMap& map);

/// Thrown by the pipeline when validation finds violations (fail-fast).
class ValidationFailure : public AnalysisError {
public:
    explicit ValidationFailure(ValidationReport report)
        : AnalysisError("model validation failed with " +
                        std::to_string(report.size()) + " violation(s)"),
          report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

}  // namespace monoslicer
