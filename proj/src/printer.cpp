#include "rdsl/printer.hpp"

namespace rdsl {

namespace {

void print_stream_ref(const StreamRef& ref, std::string& out) {
    out += ref.name;
    for (const auto& idx : ref.indices) {
        out += "[";
        out += idx->text();
        out += "]";
    }
    if (ref.delay > 0) out += "@-" + std::to_string(ref.delay);
}

void print_call(const CallStmt& call, std::string& out) {
    out += "  " + call.callee + "(";
    bool first = true;
    for (const auto& arg : call.args) {
        if (!first) out += ", ";
        first = false;
        switch (arg.kind) {
            case CallArg::Kind::Range:
                out += arg.name + " = " + arg.range_lo->text() + ":" +
                       arg.range_hi->text();
                break;
            case CallArg::Kind::Binding:
                out += arg.name + " = ";
                if (arg.ref) {
                    print_stream_ref(*arg.ref, out);
                } else {
                    out += arg.index_expr->text();
                }
                break;
            case CallArg::Kind::Positional:
                if (arg.ref) {
                    print_stream_ref(*arg.ref, out);
                } else {
                    out += arg.index_expr->text();
                }
                break;
        }
    }
    out += ")\n";
}

std::string escape_message(const std::string& message) {
    std::string out;
    for (char c : message) {
        switch (c) {
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            default: out += c;
        }
    }
    return out;
}

void print_action(const Action& action, const std::string& indent,
                  std::string& out) {
    out += indent;
    switch (action.kind) {
        case Action::Kind::FunctionCall: {
            out += action.function + "(";
            for (std::size_t i = 0; i < action.args.size(); ++i) {
                if (i > 0) out += ", ";
                out += action.args[i];
            }
            out += ")";
            break;
        }
        case Action::Kind::ErrorMessage:
            out += "error_message(" + action.target + ", \"" +
                   escape_message(action.message) + "\")";
            break;
        case Action::Kind::AssignEmpty:
            out += action.target + " = EMPTY";
            break;
    }
    out += "\n";
}

}  // namespace

std::string pretty_print(const SourceUnit& unit) {
    std::string out;
    bool first_def = true;

    for (const auto& flow : unit.flows) {
        if (!first_def) out += "\n";
        first_def = false;
        out += "flow " + flow.name;
        if (!flow.formals.empty()) {
            out += "(";
            for (std::size_t i = 0; i < flow.formals.size(); ++i) {
                if (i > 0) out += ", ";
                out += flow.formals[i];
            }
            out += ")";
        }
        out += "\n";
        for (const auto& decl : flow.streams) {
            out += "  " + decl.name + " : stream";
            for (const auto& dim : decl.dims) {
                out += "[";
                out += dim->text();
                out += "]";
            }
            bool has_type = decl.direction != StreamDir::Internal;
            if (has_type || decl.label) {
                out += "{";
                if (has_type) {
                    out += "type = ";
                    out += decl.direction == StreamDir::In ? "in" : "out";
                }
                if (decl.label) {
                    if (has_type) out += ", ";
                    out += "label = " + *decl.label;
                }
                out += "}";
            }
            if (decl.comment && !decl.comment->empty())
                out += " % " + *decl.comment;
            out += "\n";
        }
        for (const auto& call : flow.body) print_call(call, out);
    }

    for (const auto& mod : unit.modifiers) {
        if (!first_def) out += "\n";
        first_def = false;
        out += "modifier " + mod.name + "(";
        for (std::size_t i = 0; i < mod.params.size(); ++i) {
            if (i > 0) out += ", ";
            out += mod.params[i].direction == StreamDir::In ? "in " : "out ";
            out += mod.params[i].name;
        }
        out += ")\n";
        if (mod.guarded) {
            out += "  guarded{first}{\n";
            for (const auto& arm : mod.guarded->arms) {
                out += "    ";
                if (arm.cond.is_true) {
                    out += "TRUE";
                } else {
                    out += "(" + arm.cond.stream +
                           (arm.cond.negated ? " != " : " == ") + "EMPTY)";
                }
                out += " :\n";
                for (const auto& action : arm.actions)
                    print_action(action, "      ", out);
            }
            out += "  }\n";
        } else if (mod.plain_action) {
            print_action(*mod.plain_action, "  ", out);
        }
    }
    return out;
}

// Structural equality goes through the canonical printer: two units are
// equal iff they print identically.
bool structurally_equal(const SourceUnit& a, const SourceUnit& b) {
    return pretty_print(a) == pretty_print(b);
}

}  // namespace rdsl
