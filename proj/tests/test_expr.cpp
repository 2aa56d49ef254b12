#include <doctest.h>

#include <random>

#include "rdsl/expr.hpp"

using namespace rdsl;

namespace {

SymbolTable table_with(std::initializer_list<std::pair<const char*, std::int64_t>>
                           bindings) {
    SymbolTable t;
    for (const auto& [name, value] : bindings)
        t = t.bind(name, value, "test");
    return t;
}

// Independent chain oracle: evaluates each pairwise relation explicitly and
// ANDs them, without going through Expr::Chain evaluation.
bool naive_chain_eval(const Expr& e, const SymbolTable& symbols) {
    const auto& ch = std::get<Expr::Chain>(e.node());
    bool all = true;
    for (std::size_t i = 0; i < ch.relations.size(); ++i) {
        std::int64_t a = eval_int(*ch.operands[i], symbols);
        std::int64_t b = eval_int(*ch.operands[i + 1], symbols);
        bool ok = false;
        switch (ch.relations[i]) {
            case Rel::Lt: ok = a < b; break;
            case Rel::Le: ok = a <= b; break;
            case Rel::Eq: ok = a == b; break;
            case Rel::Ge: ok = a >= b; break;
            case Rel::Gt: ok = a > b; break;
        }
        all = all && ok;
    }
    return all;
}

}  // namespace

TEST_CASE("arithmetic evaluation") {
    auto symbols = table_with({{"A", 1}, {"B", 10}});
    auto e = parse_expression("A*370 + B");
    CHECK(eval_int(*e, symbols) == 380);

    CHECK(eval_int(*parse_expression("7/2"), {}) == 3);
    CHECK(eval_int(*parse_expression("(0-7)/2"), {}) == -3);  // truncation toward zero
    CHECK(eval_int(*parse_expression("-7/2"), {}) == -3);
    CHECK(eval_int(*parse_expression("2+3*4"), {}) == 14);
    CHECK(eval_int(*parse_expression("(2+3)*4"), {}) == 20);
}

TEST_CASE("chained comparison") {
    auto e = parse_expression("C <= A*370 + B < 500");
    REQUIRE(e->is_chain());

    auto sat = table_with({{"C", 380}, {"A", 1}, {"B", 10}});
    CHECK(eval_bool(*e, sat) == true);  // 380 <= 380 and 380 < 500

    auto unsat = table_with({{"C", 380}, {"A", 2}, {"B", 10}});
    CHECK(eval_bool(*e, unsat) == false);  // 750 >= 500
}

TEST_CASE("equality relation accepts both spellings") {
    auto symbols = table_with({{"x", 5}});
    CHECK(eval_bool(*parse_expression("x = 5"), symbols));
    CHECK(eval_bool(*parse_expression("x == 5"), symbols));
    CHECK_FALSE(eval_bool(*parse_expression("x = 6"), symbols));
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_WITH_AS(eval_int(*parse_expression("ghost + 1"), {}),
                         doctest::Contains("ghost"), Error);
    CHECK_THROWS_AS(eval_int(*parse_expression("1/0"), {}), Error);
    try {
        eval_int(*parse_expression("1/(2-2)"), {});
        FAIL("expected DivisionByZero");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_expression("1 + "), Error);
    CHECK_THROWS_AS(parse_expression("(1"), Error);
    CHECK_THROWS_AS(parse_expression("a § b"), Error);
    CHECK_THROWS_AS(parse_expression("1.5 + 2"), Error);  // integers only
}

TEST_CASE("bind_symbols semantics") {
    SymbolTable base;
    auto t1 = base.bind("modem_period", 1000000, "system.yaml");
    CHECK(t1.lookup("modem_period") == 1000000);
    CHECK_FALSE(base.contains("modem_period"));  // input table untouched

    auto t2 = t1.bind("X", 5, "a");
    CHECK_NOTHROW(t2.bind("X", 5, "b"));  // idempotent
    try {
        t2.bind("X", 6, "c");
        FAIL("expected ConflictingBinding");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::ConflictingBinding);
    }
}

TEST_CASE("referential transparency") {
    auto symbols = table_with({{"a", 7}, {"b", 3}});
    auto e = parse_expression("a*b - a/b <= a*a");
    auto r1 = eval_expr(*e, symbols);
    auto r2 = eval_expr(*e, symbols);
    CHECK(r1 == r2);
}

TEST_CASE("chain equivalence against naive oracle") {
    // Random chains over random small tables must agree with the explicit
    // pairwise-AND evaluator.
    std::mt19937_64 rng(20240817);
    const char* vars[] = {"a", "b", "c", "d"};
    for (int iter = 0; iter < 500; ++iter) {
        SymbolTable symbols;
        for (const char* v : vars)
            symbols = symbols.bind(v, static_cast<std::int64_t>(rng() % 21) - 10,
                                   "gen");

        int terms = 2 + static_cast<int>(rng() % 4);
        std::string text;
        const char* rels[] = {"<", "<=", "=", ">=", ">"};
        for (int i = 0; i < terms; ++i) {
            if (i > 0) {
                text += " ";
                text += rels[rng() % 5];
                text += " ";
            }
            // operand: var, literal, or var+literal
            switch (rng() % 3) {
                case 0: text += vars[rng() % 4]; break;
                case 1: text += std::to_string(rng() % 20); break;
                default:
                    text += vars[rng() % 4];
                    text += "+";
                    text += std::to_string(rng() % 10);
            }
        }
        auto e = parse_expression(text);
        REQUIRE(e->is_chain());
        CHECK(eval_bool(*e, symbols) == naive_chain_eval(*e, symbols));
    }
}

TEST_CASE("expression text round-trip") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        // Build random arithmetic trees and assert text -> parse -> text is a
        // fixpoint.
        std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
            if (depth == 0 || rng() % 3 == 0) {
                if (rng() % 2)
                    return Expr::literal(static_cast<std::int64_t>(rng() % 100));
                return Expr::ident(std::string(1, 'a' + rng() % 4));
            }
            BinOp ops[] = {BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div};
            return Expr::binary(ops[rng() % 4], gen(depth - 1), gen(depth - 1));
        };
        auto e = gen(4);
        auto text = e->text();
        auto reparsed = parse_expression(text);
        CHECK(reparsed->text() == text);
    }
}
