#include "rdsl/parser.hpp"

#include <set>

namespace rdsl {

namespace {

// Recursive-descent parser over the token stream. Recovery skips to the next
// newline and continues, so one bad line yields one diagnostic.
class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::vector<Diagnostic>& diags)
        : toks_(tokens), diags_(diags) {}

    SourceUnit run() {
        SourceUnit unit;
        skip_blank();
        while (!at(Tok::Eof)) {
            if (at(Tok::Separator)) {
                next();
                skip_blank();
                continue;
            }
            try {
                if (at(Tok::KwFlow)) {
                    parse_flow(unit);
                } else if (at(Tok::KwModifier)) {
                    parse_modifier(unit);
                } else {
                    error("expected 'flow' or 'modifier', found " +
                          std::string(tok_name(peek().kind)));
                    sync_line();
                }
            } catch (Bail) {
                sync_line();
            }
            skip_blank();
        }
        check_unique_names(unit);
        return unit;
    }

private:
    const Token& peek(int ahead = 0) const {
        std::size_t idx = pos_ + ahead;
        if (idx >= toks_.size()) idx = toks_.size() - 1;
        return toks_[idx];
    }
    bool at(Tok kind) const { return peek().kind == kind; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok kind) {
        if (!at(kind)) return false;
        next();
        return true;
    }
    const Token& expect(Tok kind) {
        if (!at(kind)) {
            error("expected " + std::string(tok_name(kind)) + ", found " +
                  tok_name(peek().kind));
            throw Bail{};
        }
        return next();
    }
    void error(const std::string& message) {
        diags_.push_back(Diagnostic{Severity::kError, ErrorCode::SyntaxError,
                                    peek().pos, message});
    }
    void skip_blank() {
        while (at(Tok::Newline)) next();
    }
    void sync_line() {
        while (!at(Tok::Newline) && !at(Tok::Eof)) next();
        skip_blank();
    }

    struct Bail {};

    // ---- expressions over tokens (dims, indices, range bounds) ----

    ExprPtr parse_expr() { return parse_sum(); }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        while (true) {
            if (accept(Tok::Plus)) {
                lhs = Expr::binary(BinOp::Add, lhs, parse_term());
            } else if (accept(Tok::Minus)) {
                lhs = Expr::binary(BinOp::Sub, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }
    ExprPtr parse_term() {
        ExprPtr lhs = parse_atom();
        while (true) {
            if (accept(Tok::Star)) {
                lhs = Expr::binary(BinOp::Mul, lhs, parse_atom());
            } else if (accept(Tok::Slash)) {
                lhs = Expr::binary(BinOp::Div, lhs, parse_atom());
            } else {
                return lhs;
            }
        }
    }
    ExprPtr parse_atom() {
        if (at(Tok::Int)) return Expr::literal(next().int_value);
        if (at(Tok::Ident)) return Expr::ident(next().text);
        if (accept(Tok::Minus))
            return Expr::binary(BinOp::Sub, Expr::literal(0), parse_atom());
        if (accept(Tok::LParen)) {
            ExprPtr inner = parse_sum();
            expect(Tok::RParen);
            return inner;
        }
        error("expected expression, found " +
              std::string(tok_name(peek().kind)));
        throw Bail{};
    }

    // ---- flows ----

    void parse_flow(SourceUnit& unit) {
        FlowDef flow;
        flow.pos = peek().pos;
        expect(Tok::KwFlow);
        flow.name = expect(Tok::Ident).text;
        if (accept(Tok::LParen)) {
            if (!at(Tok::RParen)) {
                do {
                    flow.formals.push_back(expect(Tok::Ident).text);
                } while (accept(Tok::Comma));
            }
            expect(Tok::RParen);
        }
        expect(Tok::Newline);
        skip_blank();

        while (at(Tok::Ident)) {
            try {
                if (peek(1).kind == Tok::Colon) {
                    flow.streams.push_back(parse_stream_decl());
                } else if (peek(1).kind == Tok::LParen) {
                    flow.body.push_back(parse_call());
                } else {
                    error("expected ':' (stream declaration) or '(' (call) "
                          "after identifier");
                    sync_line();
                }
            } catch (Bail) {
                sync_line();
            }
            skip_blank();
        }
        unit.flows.push_back(std::move(flow));
    }

    StreamDecl parse_stream_decl() {
        StreamDecl decl;
        decl.pos = peek().pos;
        decl.name = expect(Tok::Ident).text;
        expect(Tok::Colon);
        expect(Tok::KwStream);
        while (at(Tok::LBracket)) {
            // `[type = in]` attributes in bracket clothing (Fig. 11 style)
            if (peek(1).kind == Tok::KwType || peek(1).kind == Tok::KwLabel) {
                next();
                parse_attrs(decl, Tok::RBracket);
            } else {
                next();
                decl.dims.push_back(parse_expr());
                expect(Tok::RBracket);
            }
        }
        if (accept(Tok::LBrace)) {
            parse_attrs(decl, Tok::RBrace);
        } else if (accept(Tok::LParen)) {
            parse_attrs(decl, Tok::RParen);
        }
        expect(Tok::Newline);
        return decl;
    }

    void parse_attrs(StreamDecl& decl, Tok closer) {
        do {
            if (accept(Tok::KwType)) {
                expect(Tok::Eq);
                if (accept(Tok::KwIn)) {
                    decl.direction = StreamDir::In;
                } else if (accept(Tok::KwOut)) {
                    decl.direction = StreamDir::Out;
                } else {
                    error("stream type must be 'in' or 'out'");
                    throw Bail{};
                }
            } else if (accept(Tok::KwLabel)) {
                expect(Tok::Eq);
                decl.label = expect(Tok::Ident).text;
            } else {
                error("expected 'type' or 'label' attribute");
                throw Bail{};
            }
        } while (accept(Tok::Comma));
        expect(closer);
    }

    StreamRef parse_stream_ref() {
        StreamRef ref;
        ref.pos = peek().pos;
        ref.name = expect(Tok::Ident).text;
        while (at(Tok::LBracket)) {
            next();
            ref.indices.push_back(parse_expr());
            expect(Tok::RBracket);
        }
        if (accept(Tok::At)) {
            expect(Tok::Minus);
            const Token& k = expect(Tok::Int);
            if (k.int_value < 1) {
                error("delay tag must be @-k with k >= 1");
                throw Bail{};
            }
            ref.delay = static_cast<int>(k.int_value);
        }
        return ref;
    }

    // Argument value: a stream reference when it looks like one, otherwise an
    // arithmetic expression (loop indices forwarded to modifiers).
    void parse_arg_value(CallArg& arg) {
        if (at(Tok::Ident)) {
            // ident followed by [ ... ] / @ / end-of-arg is a stream ref;
            // ident followed by an operator is an expression.
            Tok after = peek(1).kind;
            if (after == Tok::Comma || after == Tok::RParen ||
                after == Tok::LBracket || after == Tok::At) {
                arg.ref = parse_stream_ref();
                return;
            }
        }
        arg.index_expr = parse_expr();
    }

    CallStmt parse_call() {
        CallStmt call;
        call.pos = peek().pos;
        call.callee = expect(Tok::Ident).text;
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            do {
                CallArg arg;
                arg.pos = peek().pos;
                if (at(Tok::Ident) && peek(1).kind == Tok::Eq) {
                    arg.name = next().text;
                    next();  // '='
                    // Range `lo:hi` or binding value.
                    ExprPtr first;
                    bool is_ref_shape =
                        at(Tok::Ident) &&
                        (peek(1).kind == Tok::Comma ||
                         peek(1).kind == Tok::RParen ||
                         peek(1).kind == Tok::LBracket ||
                         peek(1).kind == Tok::At);
                    if (is_ref_shape) {
                        arg.kind = CallArg::Kind::Binding;
                        arg.ref = parse_stream_ref();
                    } else {
                        first = parse_expr();
                        if (accept(Tok::Colon)) {
                            arg.kind = CallArg::Kind::Range;
                            arg.range_lo = first;
                            arg.range_hi = parse_expr();
                        } else {
                            arg.kind = CallArg::Kind::Binding;
                            arg.index_expr = first;
                        }
                    }
                } else {
                    arg.kind = CallArg::Kind::Positional;
                    parse_arg_value(arg);
                }
                call.args.push_back(std::move(arg));
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        expect(Tok::Newline);
        return call;
    }

    // ---- modifiers ----

    void parse_modifier(SourceUnit& unit) {
        ModifierDef mod;
        mod.pos = peek().pos;
        expect(Tok::KwModifier);
        try {
            mod.name = expect(Tok::Ident).text;
            expect(Tok::LParen);
            if (!at(Tok::RParen)) {
                do {
                    ModifierParam param;
                    param.pos = peek().pos;
                    if (accept(Tok::KwIn)) {
                        param.direction = StreamDir::In;
                    } else if (accept(Tok::KwOut)) {
                        param.direction = StreamDir::Out;
                    } else {
                        error("modifier parameter must start with 'in' or "
                              "'out'");
                        throw Bail{};
                    }
                    param.name = expect(Tok::Ident).text;
                    mod.params.push_back(std::move(param));
                } while (accept(Tok::Comma));
            }
            expect(Tok::RParen);
            expect(Tok::Newline);
            skip_blank();

            if (at(Tok::KwGuarded)) {
                mod.guarded = parse_guarded();
            } else {
                mod.plain_action = parse_action();
                skip_blank();
            }
        } catch (Bail) {
            sync_line();
        }
        unit.modifiers.push_back(std::move(mod));
    }

    GuardedBlock parse_guarded() {
        GuardedBlock block;
        block.pos = peek().pos;
        expect(Tok::KwGuarded);
        expect(Tok::LBrace);
        if (!accept(Tok::KwFirst)) {
            error("unsupported guarded policy (only 'first' is available)");
            throw Bail{};
        }
        expect(Tok::RBrace);
        expect(Tok::LBrace);
        skip_blank();

        while (!at(Tok::RBrace) && !at(Tok::Eof)) {
            GuardArm arm;
            arm.cond = parse_guard_cond();
            expect(Tok::Colon);
            skip_blank();
            while (!at(Tok::RBrace) && !at(Tok::Eof) && !at_arm_start()) {
                arm.actions.push_back(parse_action());
                skip_blank();
            }
            block.arms.push_back(std::move(arm));
        }
        expect(Tok::RBrace);
        accept(Tok::Newline);
        skip_blank();

        if (block.arms.empty() || !block.arms.back().cond.is_true) {
            diags_.push_back(Diagnostic{Severity::kError,
                                        ErrorCode::MissingTrueArm, block.pos,
                                        "guarded block must end with a TRUE "
                                        "arm"});
            throw Bail{};
        }
        return block;
    }

    bool at_arm_start() const {
        if (peek().kind == Tok::KwTrue && peek(1).kind == Tok::Colon)
            return true;
        return peek().kind == Tok::LParen;
    }

    GuardCond parse_guard_cond() {
        GuardCond cond;
        cond.pos = peek().pos;
        if (accept(Tok::KwTrue)) {
            cond.is_true = true;
            return cond;
        }
        expect(Tok::LParen);
        cond.stream = expect(Tok::Ident).text;
        if (accept(Tok::Neq)) {
            cond.negated = true;
        } else if (accept(Tok::EqEq)) {
            cond.negated = false;
        } else {
            error("guard condition must compare against EMPTY with '!=' or "
                  "'=='");
            throw Bail{};
        }
        expect(Tok::KwEmpty);
        expect(Tok::RParen);
        return cond;
    }

    Action parse_action() {
        Action action;
        action.pos = peek().pos;
        std::string head = expect(Tok::Ident).text;
        if (accept(Tok::Eq)) {
            expect(Tok::KwEmpty);
            accept(Tok::Newline);
            action.kind = Action::Kind::AssignEmpty;
            action.target = head;
            return action;
        }
        expect(Tok::LParen);
        if (head == "error_message") {
            action.kind = Action::Kind::ErrorMessage;
            action.target = expect(Tok::Ident).text;
            expect(Tok::Comma);
            action.message = expect(Tok::String).text;
            expect(Tok::RParen);
            accept(Tok::Newline);
            return action;
        }
        action.kind = Action::Kind::FunctionCall;
        action.function = head;
        if (!at(Tok::RParen)) {
            do {
                action.args.push_back(expect(Tok::Ident).text);
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        accept(Tok::Newline);
        return action;
    }

    void check_unique_names(const SourceUnit& unit) {
        std::set<std::string> seen;
        auto check = [&](const std::string& name, SourcePos pos) {
            if (!seen.insert(name).second)
                diags_.push_back(Diagnostic{Severity::kError,
                                            ErrorCode::DuplicateName, pos,
                                            "duplicate definition of '" +
                                                name + "'"});
        };
        for (const auto& f : unit.flows) check(f.name, f.pos);
        for (const auto& m : unit.modifiers) check(m.name, m.pos);
    }

    const std::vector<Token>& toks_;
    std::vector<Diagnostic>& diags_;
    std::size_t pos_ = 0;
};

// Trailing `%` comment on a source line, if any (used to preserve stream
// declaration comments through the AST).
std::optional<std::string> trailing_comment(std::string_view text, int line) {
    int current = 1;
    std::size_t start = 0;
    while (current < line) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) return std::nullopt;
        start = nl + 1;
        ++current;
    }
    std::size_t end = text.find('\n', start);
    std::string_view l = text.substr(
        start, end == std::string_view::npos ? text.size() - start
                                             : end - start);
    std::size_t pct = l.find('%');
    if (pct == std::string_view::npos) return std::nullopt;
    std::string_view comment = l.substr(pct + 1);
    while (!comment.empty() && comment.front() == ' ')
        comment.remove_prefix(1);
    while (!comment.empty() &&
           (comment.back() == ' ' || comment.back() == '\r'))
        comment.remove_suffix(1);
    return std::string(comment);
}

}  // namespace

void SourceUnit::merge(SourceUnit other) {
    for (auto& f : other.flows) flows.push_back(std::move(f));
    for (auto& m : other.modifiers) modifiers.push_back(std::move(m));
}

SourceUnit parse_unit(const std::vector<Token>& tokens,
                      std::vector<Diagnostic>& diags) {
    return Parser(tokens, diags).run();
}

SourceUnit parse_source(std::string_view text,
                        std::vector<Diagnostic>& diags) {
    std::vector<Token> tokens;
    try {
        tokens = tokenize(text);
    } catch (const Error& err) {
        diags.push_back(
            Diagnostic{Severity::kError, err.code(), err.pos(), err.what()});
        return SourceUnit{};
    }
    SourceUnit unit = parse_unit(tokens, diags);
    for (auto& flow : unit.flows)
        for (auto& decl : flow.streams)
            decl.comment = trailing_comment(text, decl.pos.line);
    return unit;
}

}  // namespace rdsl
