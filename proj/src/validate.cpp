#include "rdsl/validate.hpp"

#include <set>
#include <string>

namespace rdsl {

namespace {

void check_flow(const FlowDef& flow, const SourceUnit& unit,
                std::vector<Diagnostic>& diags) {
    auto err = [&](ErrorCode code, SourcePos pos, std::string message) {
        diags.push_back(Diagnostic{Severity::kError, code, pos,
                                   std::move(message)});
    };

    std::set<std::string> streams;
    for (const auto& decl : flow.streams) {
        if (!streams.insert(decl.name).second)
            err(ErrorCode::DuplicateName, decl.pos,
                "stream '" + decl.name + "' declared twice in flow '" +
                    flow.name + "'");
    }
    std::set<std::string> formals(flow.formals.begin(), flow.formals.end());

    for (const auto& call : flow.body) {
        std::set<std::string> range_vars;
        for (const auto& arg : call.args)
            if (arg.kind == CallArg::Kind::Range) range_vars.insert(arg.name);

        auto known_index_var = [&](const std::string& name) {
            return range_vars.count(name) || formals.count(name);
        };

        for (const auto& arg : call.args) {
            if (arg.kind == CallArg::Kind::Range || !arg.ref) continue;
            const StreamRef& ref = *arg.ref;
            // A bare identifier may also be an index variable forwarded to
            // the callee; anything else must be a declared stream.
            bool index_var = ref.indices.empty() && ref.delay == 0 &&
                             known_index_var(ref.name);
            if (!streams.count(ref.name) && !index_var)
                err(ErrorCode::UndeclaredStream, ref.pos,
                    "reference to undeclared stream '" + ref.name +
                        "' in flow '" + flow.name + "'");
        }

        // Arity / name checks when the callee is part of this compilation.
        if (const FlowDef* callee = unit.find_flow(call.callee)) {
            auto iface = callee->interface_streams();
            std::set<std::string> iface_names;
            for (const auto* s : iface) iface_names.insert(s->name);
            std::set<std::string> callee_formals(callee->formals.begin(),
                                                 callee->formals.end());
            std::size_t positional = 0;
            for (const auto& arg : call.args) {
                if (arg.kind == CallArg::Kind::Binding) {
                    if (!iface_names.count(arg.name) &&
                        !callee_formals.count(arg.name))
                        err(ErrorCode::SyntaxError, arg.pos,
                            "flow '" + call.callee + "' has no interface "
                            "stream or formal named '" + arg.name + "'");
                } else if (arg.kind == CallArg::Kind::Positional) {
                    ++positional;
                }
            }
            if (positional > iface.size())
                err(ErrorCode::SyntaxError, call.pos,
                    "call to flow '" + call.callee + "' passes " +
                        std::to_string(positional) + " positional values, "
                        "interface has " + std::to_string(iface.size()));
            for (const auto& formal : callee->formals) {
                bool bound = false;
                for (const auto& arg : call.args)
                    if (arg.kind != CallArg::Kind::Positional &&
                        arg.name == formal)
                        bound = true;
                if (!bound)
                    err(ErrorCode::SyntaxError, call.pos,
                        "call to flow '" + call.callee + "' does not bind "
                        "formal '" + formal + "'");
            }
        } else if (const ModifierDef* callee =
                       unit.find_modifier(call.callee)) {
            std::size_t provided = 0;
            for (const auto& arg : call.args) {
                if (arg.kind == CallArg::Kind::Range) continue;
                ++provided;
                if (arg.kind == CallArg::Kind::Binding &&
                    !callee->find_param(arg.name))
                    err(ErrorCode::SyntaxError, arg.pos,
                        "modifier '" + call.callee + "' has no parameter '" +
                            arg.name + "'");
            }
            if (provided > callee->params.size())
                err(ErrorCode::SyntaxError, call.pos,
                    "call to modifier '" + call.callee + "' passes " +
                        std::to_string(provided) + " values, modifier has " +
                        std::to_string(callee->params.size()) +
                        " parameters");
        }
        // Unknown callee: resolved at elaboration against other units.
    }
}

void check_modifier(const ModifierDef& mod, std::vector<Diagnostic>& diags) {
    auto err = [&](ErrorCode code, SourcePos pos, std::string message) {
        diags.push_back(Diagnostic{Severity::kError, code, pos,
                                   std::move(message)});
    };

    std::set<std::string> in_params;
    std::set<std::string> out_params;
    std::set<std::string> all_params;
    for (const auto& p : mod.params) {
        if (!all_params.insert(p.name).second)
            err(ErrorCode::DuplicateName, p.pos,
                "parameter '" + p.name + "' declared twice in modifier '" +
                    mod.name + "'");
        (p.direction == StreamDir::In ? in_params : out_params)
            .insert(p.name);
    }

    auto check_action = [&](const Action& action,
                            std::set<std::string>& assigned) {
        switch (action.kind) {
            case Action::Kind::FunctionCall:
                for (const auto& arg : action.args) {
                    if (!all_params.count(arg))
                        err(ErrorCode::SyntaxError, action.pos,
                            "function argument '" + arg + "' is not a "
                            "parameter of modifier '" + mod.name + "'");
                    if (out_params.count(arg)) assigned.insert(arg);
                }
                break;
            case Action::Kind::ErrorMessage:
            case Action::Kind::AssignEmpty:
                if (!out_params.count(action.target))
                    err(ErrorCode::SyntaxError, action.pos,
                        "'" + action.target + "' is not an out parameter of "
                        "modifier '" + mod.name + "'");
                assigned.insert(action.target);
                break;
        }
    };

    auto require_all_assigned = [&](const std::set<std::string>& assigned,
                                    SourcePos pos, const std::string& where) {
        for (const auto& out : out_params)
            if (!assigned.count(out))
                err(ErrorCode::SyntaxError, pos,
                    "out parameter '" + out + "' is not assigned " + where);
    };

    if (mod.guarded) {
        for (const auto& arm : mod.guarded->arms) {
            if (!arm.cond.is_true && !in_params.count(arm.cond.stream))
                err(ErrorCode::SyntaxError, arm.cond.pos,
                    "guard condition references '" + arm.cond.stream +
                        "', which is not an in parameter of modifier '" +
                        mod.name + "'");
            std::set<std::string> assigned;
            for (const auto& action : arm.actions)
                check_action(action, assigned);
            require_all_assigned(assigned, arm.cond.pos,
                                 "on every arm of modifier '" + mod.name +
                                     "'");
        }
    } else if (mod.plain_action) {
        std::set<std::string> assigned;
        check_action(*mod.plain_action, assigned);
        require_all_assigned(assigned, mod.plain_action->pos,
                             "by modifier '" + mod.name + "'");
    } else {
        err(ErrorCode::SyntaxError, mod.pos,
            "modifier '" + mod.name + "' has no body");
    }
}

}  // namespace

std::vector<Diagnostic> validate_unit(const SourceUnit& unit) {
    std::vector<Diagnostic> diags;

    std::set<std::string> names;
    for (const auto& f : unit.flows)
        if (!names.insert(f.name).second)
            diags.push_back(Diagnostic{Severity::kError,
                                       ErrorCode::DuplicateName, f.pos,
                                       "duplicate name '" + f.name + "'"});
    for (const auto& m : unit.modifiers)
        if (!names.insert(m.name).second)
            diags.push_back(Diagnostic{Severity::kError,
                                       ErrorCode::DuplicateName, m.pos,
                                       "duplicate name '" + m.name + "'"});

    for (const auto& f : unit.flows) check_flow(f, unit, diags);
    for (const auto& m : unit.modifiers) check_modifier(m, diags);
    return diags;
}

}  // namespace rdsl
