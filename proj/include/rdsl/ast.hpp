#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdsl/expr.hpp"

namespace rdsl {

enum class StreamDir { In, Out, Internal };

// Reference to a stream (or slice of one): name, index expressions, and an
// optional cross-period delay tag `@-k`.
struct StreamRef {
    std::string name;
    std::vector<ExprPtr> indices;
    int delay = 0;  // k periods earlier; 0 = same period
    SourcePos pos;
};

// A call argument: an iteration range `i = 1:N`, a named binding
// `formal = streamRef`, or a positional value. Positional values (and the
// right-hand side of bindings) are stream references; a bare arithmetic
// expression (e.g. a loop index forwarded to a modifier) is carried as
// `index_expr`.
struct CallArg {
    enum class Kind { Range, Binding, Positional };
    Kind kind = Kind::Positional;

    std::string name;  // range variable or bound formal name
    ExprPtr range_lo;
    ExprPtr range_hi;

    std::optional<StreamRef> ref;  // Binding/Positional stream value
    ExprPtr index_expr;            // Binding/Positional scalar value
    SourcePos pos;
};

struct CallStmt {
    std::string callee;
    std::vector<CallArg> args;
    SourcePos pos;
};

struct StreamDecl {
    std::string name;
    std::vector<ExprPtr> dims;  // empty = scalar stream
    StreamDir direction = StreamDir::Internal;
    std::optional<std::string> label;    // timing label for constraints
    std::optional<std::string> comment;  // trailing % comment, kept verbatim
    SourcePos pos;
};

struct FlowDef {
    std::string name;
    std::vector<std::string> formals;  // index parameters
    std::vector<StreamDecl> streams;
    std::vector<CallStmt> body;
    SourcePos pos;

    const StreamDecl* find_stream(const std::string& stream_name) const {
        for (const auto& s : streams)
            if (s.name == stream_name) return &s;
        return nullptr;
    }
    // Declaration-order IN/OUT streams; the flow's callable interface.
    std::vector<const StreamDecl*> interface_streams() const {
        std::vector<const StreamDecl*> out;
        for (const auto& s : streams)
            if (s.direction != StreamDir::Internal) out.push_back(&s);
        return out;
    }
};

struct ModifierParam {
    StreamDir direction = StreamDir::In;  // In or Out only
    std::string name;
    SourcePos pos;
};

struct Action {
    enum class Kind { FunctionCall, ErrorMessage, AssignEmpty };
    Kind kind = Kind::FunctionCall;

    std::string function;            // FunctionCall
    std::vector<std::string> args;   // FunctionCall: ordered param names
    std::string target;              // ErrorMessage / AssignEmpty
    std::string message;             // ErrorMessage
    SourcePos pos;
};

struct GuardCond {
    // v0 guard grammar: `streamName != EMPTY`, `streamName == EMPTY`, or the
    // literal TRUE arm.
    bool is_true = false;
    std::string stream;
    bool negated = false;  // true for `!= EMPTY`
    SourcePos pos;
};

struct GuardArm {
    GuardCond cond;
    std::vector<Action> actions;
};

struct GuardedBlock {
    // policy is always FIRST in v0
    std::vector<GuardArm> arms;
    SourcePos pos;
};

struct ModifierDef {
    std::string name;
    std::vector<ModifierParam> params;
    // Either a single unguarded action or a guarded block.
    std::optional<Action> plain_action;
    std::optional<GuardedBlock> guarded;
    SourcePos pos;

    const ModifierParam* find_param(const std::string& param_name) const {
        for (const auto& p : params)
            if (p.name == param_name) return &p;
        return nullptr;
    }
};

struct SourceUnit {
    std::vector<FlowDef> flows;
    std::vector<ModifierDef> modifiers;

    const FlowDef* find_flow(const std::string& name) const {
        for (const auto& f : flows)
            if (f.name == name) return &f;
        return nullptr;
    }
    const ModifierDef* find_modifier(const std::string& name) const {
        for (const auto& m : modifiers)
            if (m.name == name) return &m;
        return nullptr;
    }
    // Concatenates another unit into this one (multi-file compilation).
    void merge(SourceUnit other);
};

bool structurally_equal(const SourceUnit& a, const SourceUnit& b);

}  // namespace rdsl
