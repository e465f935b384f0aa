#pragma once

#include <stdexcept>
#include <string>

namespace monoslicer {

/// Base class for every error raised by the analysis library.
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, bad CSV row). Carries the 1-based
/// line/column where the problem was detected when known (0 = unknown).
class SyntaxError : public AnalysisError {
public:
    SyntaxError(const std::string& message, int line = 0, int column = 0)
        : AnalysisError(format(message, line, column)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, int line, int column);

    int line_ = 0;
    int column_ = 0;
};

/// Structurally valid document that violates the expected schema. `path`
/// names the offending field (e.g. "signatures.AUTPOScltBen").
class SchemaError : public AnalysisError {
public:
    SchemaError(std::string path, const std::string& message)
        : AnalysisError(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Area map document with no table assignments at all.
class EmptyMapError : public AnalysisError {
public:
    EmptyMapError() : AnalysisError("area map contains no table assignments") {}
};

/// File could not be opened or read.
class IoError : public AnalysisError {
public:
    using AnalysisError::AnalysisError;
};

class UnknownSubsystem : public AnalysisError {
public:
    explicit UnknownSubsystem(const std::string& name)
        : AnalysisError("unknown subsystem: " + name) {}
};

class UnknownVertex : public AnalysisError {
public:
    explicit UnknownVertex(const std::string& name)
        : AnalysisError("unknown vertex: " + name) {}
};

/// A slice function has no entry in the model's signature table.
class MissingSignature : public AnalysisError {
public:
    explicit MissingSignature(const std::string& name)
        : AnalysisError("no I/O signature for callable: " + name) {}
};

/// classify_gateway was asked about a facade that is not a source of the
/// candidate's pairs.
class NotASourceFacade : public AnalysisError {
public:
    NotASourceFacade(const std::string& facade, const std::string& candidate)
        : AnalysisError("facade " + facade + " is not a source of candidate " + candidate) {}
};

}  // namespace monoslicer
