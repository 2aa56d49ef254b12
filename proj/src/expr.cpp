#include "rdsl/expr.hpp"

#include <cctype>

namespace rdsl {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnboundSymbol: return "UnboundSymbol";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ConflictingBinding: return "ConflictingBinding";
        case ErrorCode::IllegalCharacter: return "IllegalCharacter";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::MissingTrueArm: return "MissingTrueArm";
        case ErrorCode::UndeclaredStream: return "UndeclaredStream";
        case ErrorCode::UnknownKind: return "UnknownKind";
        case ErrorCode::UnknownApiVersion: return "UnknownApiVersion";
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::UnitNotClock: return "UnitNotClock";
        case ErrorCode::AmbiguousTarget: return "AmbiguousTarget";
        case ErrorCode::MissingAssignment: return "MissingAssignment";
        case ErrorCode::DanglingReference: return "DanglingReference";
        case ErrorCode::MalformedPatternName: return "MalformedPatternName";
        case ErrorCode::UnknownPattern: return "UnknownPattern";
        case ErrorCode::NegativeCost: return "NegativeCost";
        case ErrorCode::UnknownFunction: return "UnknownFunction";
        case ErrorCode::RecursiveFlow: return "RecursiveFlow";
        case ErrorCode::UnboundDimension: return "UnboundDimension";
        case ErrorCode::DoubleDefine: return "DoubleDefine";
        case ErrorCode::DanglingConsumer: return "DanglingConsumer";
        case ErrorCode::EmptyCompatibleSet: return "EmptyCompatibleSet";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::UnknownSink: return "UnknownSink";
        case ErrorCode::ObjectiveMismatch: return "ObjectiveMismatch";
        case ErrorCode::EmptyTrace: return "EmptyTrace";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::BadManifest: return "BadManifest";
    }
    return "Error";
}

const char* binop_text(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
    }
    return "?";
}

const char* rel_text(Rel rel) {
    switch (rel) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Eq: return "=";
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
    }
    return "?";
}

SymbolTable SymbolTable::bind(const std::string& name, std::int64_t value,
                              const std::string& provenance) const {
    SymbolTable next = *this;
    auto it = next.entries_.find(name);
    if (it != next.entries_.end()) {
        if (it->second.value != value) {
            throw Error(ErrorCode::ConflictingBinding,
                        name + " already bound to " +
                            std::to_string(it->second.value) + " (" +
                            it->second.provenance + "), new value " +
                            std::to_string(value) + " (" + provenance + ")");
        }
        return next;  // idempotent rebinding
    }
    next.entries_[name] = Binding{value, provenance};
    return next;
}

SymbolTable SymbolTable::bind_all(
    const std::vector<std::tuple<std::string, std::int64_t, std::string>>&
        bindings) const {
    SymbolTable next = *this;
    for (const auto& [name, value, prov] : bindings)
        next = next.bind(name, value, prov);
    return next;
}

std::optional<std::int64_t> SymbolTable::lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) return std::nullopt;
    return it->second.value;
}

const Binding* SymbolTable::entry(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

std::shared_ptr<const Expr> Expr::literal(std::int64_t v) {
    return std::make_shared<const Expr>(Literal{v});
}
std::shared_ptr<const Expr> Expr::ident(std::string name) {
    return std::make_shared<const Expr>(Ident{std::move(name)});
}
std::shared_ptr<const Expr> Expr::binary(BinOp op,
                                         std::shared_ptr<const Expr> lhs,
                                         std::shared_ptr<const Expr> rhs) {
    return std::make_shared<const Expr>(
        Binary{op, std::move(lhs), std::move(rhs)});
}
std::shared_ptr<const Expr> Expr::chain(
    std::vector<std::shared_ptr<const Expr>> operands,
    std::vector<Rel> relations) {
    return std::make_shared<const Expr>(
        Chain{std::move(operands), std::move(relations)});
}

void Expr::collect_identifiers(std::set<std::string>& out) const {
    if (const auto* id = std::get_if<Ident>(&node_)) {
        out.insert(id->name);
    } else if (const auto* bin = std::get_if<Binary>(&node_)) {
        bin->lhs->collect_identifiers(out);
        bin->rhs->collect_identifiers(out);
    } else if (const auto* ch = std::get_if<Chain>(&node_)) {
        for (const auto& op : ch->operands) op->collect_identifiers(out);
    }
}

std::set<std::string> Expr::identifiers() const {
    std::set<std::string> out;
    collect_identifiers(out);
    return out;
}

namespace {

int precedence(BinOp op) {
    return (op == BinOp::Mul || op == BinOp::Div) ? 2 : 1;
}

void render(const Expr& e, std::string& out, int parent_prec) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node())) {
        if (lit->value < 0) {
            out += "(" + std::to_string(lit->value) + ")";
        } else {
            out += std::to_string(lit->value);
        }
    } else if (const auto* id = std::get_if<Expr::Ident>(&e.node())) {
        out += id->name;
    } else if (const auto* bin = std::get_if<Expr::Binary>(&e.node())) {
        int prec = precedence(bin->op);
        bool parens = prec < parent_prec;
        if (parens) out += "(";
        render(*bin->lhs, out, prec);
        out += binop_text(bin->op);
        // Right side gets prec+1 so non-associative re-parses stay correct
        // (a-b-c prints as a-b-c, a-(b-c) keeps its parens).
        render(*bin->rhs, out, prec + 1);
        if (parens) out += ")";
    } else if (const auto* ch = std::get_if<Expr::Chain>(&e.node())) {
        bool parens = parent_prec > 0;
        if (parens) out += "(";
        for (std::size_t i = 0; i < ch->operands.size(); ++i) {
            if (i > 0) {
                out += " ";
                out += rel_text(ch->relations[i - 1]);
                out += " ";
            }
            render(*ch->operands[i], out, 1);
        }
        if (parens) out += ")";
    }
}

}  // namespace

std::string Expr::text() const {
    std::string out;
    render(*this, out, 0);
    return out;
}

namespace {

std::int64_t eval_arith(const Expr& e, const SymbolTable& symbols) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node()))
        return lit->value;
    if (const auto* id = std::get_if<Expr::Ident>(&e.node())) {
        auto v = symbols.lookup(id->name);
        if (!v) throw Error(ErrorCode::UnboundSymbol, id->name);
        return *v;
    }
    if (const auto* bin = std::get_if<Expr::Binary>(&e.node())) {
        std::int64_t lhs = eval_arith(*bin->lhs, symbols);
        std::int64_t rhs = eval_arith(*bin->rhs, symbols);
        switch (bin->op) {
            case BinOp::Add: return lhs + rhs;
            case BinOp::Sub: return lhs - rhs;
            case BinOp::Mul: return lhs * rhs;
            case BinOp::Div:
                if (rhs == 0)
                    throw Error(ErrorCode::DivisionByZero, e.text());
                return lhs / rhs;  // truncates toward zero
        }
    }
    throw Error(ErrorCode::SyntaxError,
                "comparison chain used where an integer is required: " +
                    e.text());
}

bool holds(Rel rel, std::int64_t a, std::int64_t b) {
    switch (rel) {
        case Rel::Lt: return a < b;
        case Rel::Le: return a <= b;
        case Rel::Eq: return a == b;
        case Rel::Ge: return a >= b;
        case Rel::Gt: return a > b;
    }
    return false;
}

}  // namespace

EvalResult eval_expr(const Expr& expr, const SymbolTable& symbols) {
    if (const auto* ch = std::get_if<Expr::Chain>(&expr.node())) {
        std::vector<std::int64_t> values;
        values.reserve(ch->operands.size());
        for (const auto& op : ch->operands)
            values.push_back(eval_arith(*op, symbols));
        for (std::size_t i = 0; i < ch->relations.size(); ++i) {
            if (!holds(ch->relations[i], values[i], values[i + 1]))
                return EvalResult{false};
        }
        return EvalResult{true};
    }
    return EvalResult{eval_arith(expr, symbols)};
}

std::int64_t eval_int(const Expr& expr, const SymbolTable& symbols) {
    return eval_arith(expr, symbols);
}

bool eval_bool(const Expr& expr, const SymbolTable& symbols) {
    auto result = eval_expr(expr, symbols);
    if (const auto* b = std::get_if<bool>(&result)) return *b;
    throw Error(ErrorCode::SyntaxError,
                "expected a comparison chain: " + expr.text());
}

// ---------------------------------------------------------------------------
// Standalone expression parser

namespace {

struct ExprLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) != token) return false;
        pos += token.size();
        return true;
    }
};

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : lex_{text} {}

    ExprPtr parse() {
        ExprPtr e = parse_chain();
        if (!lex_.eof())
            throw Error(ErrorCode::SyntaxError,
                        "trailing input in expression: " +
                            std::string(lex_.text.substr(lex_.pos)));
        return e;
    }

private:
    ExprPtr parse_chain() {
        ExprPtr first = parse_sum();
        std::vector<ExprPtr> operands{first};
        std::vector<Rel> relations;
        while (true) {
            std::optional<Rel> rel = try_relation();
            if (!rel) break;
            relations.push_back(*rel);
            operands.push_back(parse_sum());
        }
        if (relations.empty()) return first;
        return Expr::chain(std::move(operands), std::move(relations));
    }

    std::optional<Rel> try_relation() {
        if (lex_.consume("<=")) return Rel::Le;
        if (lex_.consume(">=")) return Rel::Ge;
        if (lex_.consume("==")) return Rel::Eq;
        if (lex_.consume("<")) return Rel::Lt;
        if (lex_.consume(">")) return Rel::Gt;
        if (lex_.consume("=")) return Rel::Eq;
        return std::nullopt;
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        while (true) {
            if (lex_.consume("+")) {
                lhs = Expr::binary(BinOp::Add, lhs, parse_term());
            } else if (lex_.consume("-")) {
                lhs = Expr::binary(BinOp::Sub, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_atom();
        while (true) {
            if (lex_.consume("*")) {
                lhs = Expr::binary(BinOp::Mul, lhs, parse_atom());
            } else if (lex_.consume("/")) {
                lhs = Expr::binary(BinOp::Div, lhs, parse_atom());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.consume("(");
            ExprPtr inner = parse_chain();
            if (!lex_.consume(")"))
                throw Error(ErrorCode::SyntaxError, "expected ')'");
            return inner;
        }
        if (c == '-') {
            lex_.consume("-");
            return Expr::binary(BinOp::Sub, Expr::literal(0), parse_atom());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t value = 0;
            while (lex_.pos < lex_.text.size() &&
                   std::isdigit(static_cast<unsigned char>(
                       lex_.text[lex_.pos]))) {
                value = value * 10 + (lex_.text[lex_.pos] - '0');
                ++lex_.pos;
            }
            // Non-integer literals are a parse error by design.
            if (lex_.pos < lex_.text.size() && lex_.text[lex_.pos] == '.')
                throw Error(ErrorCode::SyntaxError,
                            "non-integer literal in expression");
            return Expr::literal(value);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (lex_.pos < lex_.text.size()) {
                char ch = lex_.text[lex_.pos];
                if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
                    name += ch;
                    ++lex_.pos;
                } else {
                    break;
                }
            }
            return Expr::ident(std::move(name));
        }
        if (c == '\0')
            throw Error(ErrorCode::SyntaxError, "unexpected end of expression");
        throw Error(ErrorCode::IllegalCharacter,
                    std::string("'") + c + "' in expression");
    }

    ExprLexer lex_;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) {
    return ExprParser(text).parse();
}

}  // namespace rdsl
