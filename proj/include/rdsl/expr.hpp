#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rdsl/diag.hpp"

namespace rdsl {

// All arithmetic in the toolchain is exact 64-bit integer math; times are
// abstract clock ticks, sizes are bytes.
using Clock = std::int64_t;
using Bytes = std::int64_t;

struct TimeValue {
    Clock value = 0;
    // Only "clock" is accepted in v0; kept as a field so loaders can report
    // the offending unit verbatim.
    std::string unit = "clock";
};

struct Binding {
    std::int64_t value = 0;
    std::string provenance;  // constraint-doc name, system file, flow label
};

// Immutable-by-value symbol table. bind() returns a new table and never
// touches the receiver.
class SymbolTable {
public:
    SymbolTable() = default;

    SymbolTable bind(const std::string& name, std::int64_t value,
                     const std::string& provenance) const;
    SymbolTable bind_all(
        const std::vector<std::tuple<std::string, std::int64_t, std::string>>&
            bindings) const;

    std::optional<std::int64_t> lookup(const std::string& name) const;
    const Binding* entry(const std::string& name) const;
    bool contains(const std::string& name) const {
        return entries_.count(name) != 0;
    }
    const std::map<std::string, Binding>& entries() const { return entries_; }

private:
    std::map<std::string, Binding> entries_;
};

enum class BinOp { Add, Sub, Mul, Div };
enum class Rel { Lt, Le, Eq, Ge, Gt };

const char* binop_text(BinOp op);
const char* rel_text(Rel rel);

// Expression tree over integer literals, identifiers and + - * /
// (truncating division), plus a chained-comparison form whose value is the
// conjunction of its pairwise relations.
class Expr {
public:
    struct Literal {
        std::int64_t value;
    };
    struct Ident {
        std::string name;
    };
    struct Binary {
        BinOp op;
        std::shared_ptr<const Expr> lhs;
        std::shared_ptr<const Expr> rhs;
    };
    struct Chain {
        std::vector<std::shared_ptr<const Expr>> operands;  // k+1 operands
        std::vector<Rel> relations;                         // k relations
    };

    using Node = std::variant<Literal, Ident, Binary, Chain>;

    explicit Expr(Node node) : node_(std::move(node)) {}

    static std::shared_ptr<const Expr> literal(std::int64_t v);
    static std::shared_ptr<const Expr> ident(std::string name);
    static std::shared_ptr<const Expr> binary(BinOp op,
                                              std::shared_ptr<const Expr> lhs,
                                              std::shared_ptr<const Expr> rhs);
    static std::shared_ptr<const Expr> chain(
        std::vector<std::shared_ptr<const Expr>> operands,
        std::vector<Rel> relations);

    const Node& node() const { return node_; }
    bool is_chain() const { return std::holds_alternative<Chain>(node_); }

    void collect_identifiers(std::set<std::string>& out) const;
    std::set<std::string> identifiers() const;

    // Canonical text form; parse_expression(text()) reproduces the tree.
    std::string text() const;

private:
    Node node_;
};

using ExprPtr = std::shared_ptr<const Expr>;

// integer for arithmetic expressions, boolean for comparison chains
using EvalResult = std::variant<std::int64_t, bool>;

// Throws Error{UnboundSymbol} / Error{DivisionByZero}.
EvalResult eval_expr(const Expr& expr, const SymbolTable& symbols);

// eval_expr for expressions known to be arithmetic (throws if chain) /
// known to be chains (a bare arithmetic expr is not a chain).
std::int64_t eval_int(const Expr& expr, const SymbolTable& symbols);
bool eval_bool(const Expr& expr, const SymbolTable& symbols);

// Parses the standalone expression grammar used by constraint equations and
// SDK metadata fields:
//   chain  := sum (REL sum)*          REL in { < <= = == >= > }
//   sum    := term (('+'|'-') term)*
//   term   := atom (('*'|'/') atom)*
//   atom   := INT | IDENT | '(' chain ')' | '-' atom
// Throws Error{SyntaxError} / Error{IllegalCharacter}.
ExprPtr parse_expression(std::string_view text);

}  // namespace rdsl
