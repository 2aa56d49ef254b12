#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdsl {

// 1-based line/column within one input text. Column counts bytes.
struct SourcePos {
    int line = 0;
    int column = 0;

    bool valid() const { return line > 0 && column > 0; }
    std::string str() const {
        return std::to_string(line) + ":" + std::to_string(column);
    }
};

enum class ErrorCode {
    UnboundSymbol,
    DivisionByZero,
    ConflictingBinding,
    IllegalCharacter,
    SyntaxError,
    DuplicateName,
    MissingTrueArm,
    UndeclaredStream,
    UnknownKind,
    UnknownApiVersion,
    MissingField,
    UnitNotClock,
    AmbiguousTarget,
    MissingAssignment,
    DanglingReference,
    MalformedPatternName,
    UnknownPattern,
    NegativeCost,
    UnknownFunction,
    RecursiveFlow,
    UnboundDimension,
    DoubleDefine,
    DanglingConsumer,
    EmptyCompatibleSet,
    Infeasible,
    TooLarge,
    UnknownSink,
    ObjectiveMismatch,
    EmptyTrace,
    IoError,
    BadManifest,
};

const char* error_code_name(ErrorCode code);

// Hard failures of an operation's contract. Recoverable front-end findings
// travel as Diagnostic lists instead.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, SourcePos pos = {})
        : std::runtime_error(format(code, message, pos)),
          code_(code),
          pos_(pos) {}

    ErrorCode code() const { return code_; }
    SourcePos pos() const { return pos_; }

private:
    static std::string format(ErrorCode code, const std::string& message,
                              SourcePos pos) {
        std::string out = error_code_name(code);
        if (pos.valid()) out += " at " + pos.str();
        out += ": " + message;
        return out;
    }

    ErrorCode code_;
    SourcePos pos_;
};

enum class Severity { kError, kWarning };

struct Diagnostic {
    Severity severity = Severity::kError;
    ErrorCode code = ErrorCode::SyntaxError;
    SourcePos pos;
    std::string message;

    std::string str() const {
        std::string out = severity == Severity::kError ? "error" : "warning";
        if (pos.valid()) out += " " + pos.str();
        out += " [" + std::string(error_code_name(code)) + "] " + message;
        return out;
    }
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::kError) return true;
    return false;
}

}  // namespace rdsl
