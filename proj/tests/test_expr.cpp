#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "mink/expr.hpp"
#include "mink/rng.hpp"
#include "support/symdiff.hpp"

using namespace mink;

TEST_CASE("basic shapes") {
    const ExprPtr s = parse_expression("sin(v)");
    REQUIRE(s->kind == Expr::Kind::Unary);
    CHECK(s->uop == UnaryOp::Sin);
    CHECK(s->a->kind == Expr::Kind::Variable);

    // leading minus applies to the whole power
    const ExprPtr p = parse_expression("-v^2");
    REQUIRE(p->kind == Expr::Kind::Unary);
    CHECK(p->uop == UnaryOp::Neg);
    REQUIRE(p->a->kind == Expr::Kind::Binary);
    CHECK(p->a->bop == BinaryOp::Pow);
    CHECK(p->a->a->kind == Expr::Kind::Variable);
    CHECK(p->a->b->kind == Expr::Kind::Number);
    CHECK(p->a->b->number == 2.0);

    // while an explicitly parenthesized base keeps the minus inside
    const ExprPtr q = parse_expression("(-v)^2");
    REQUIRE(q->kind == Expr::Kind::Binary);
    CHECK(q->bop == BinaryOp::Pow);
    CHECK(q->a->kind == Expr::Kind::Unary);

    // '^' is right associative
    const ExprPtr r = parse_expression("v^2^3");
    REQUIRE(r->kind == Expr::Kind::Binary);
    CHECK(r->a->kind == Expr::Kind::Variable);
    CHECK(r->b->kind == Expr::Kind::Binary);

    // named constants become number literals
    CHECK(parse_expression("pi")->number == doctest::Approx(3.14159265358979).epsilon(1e-14));
    CHECK(parse_expression("e")->number == doctest::Approx(2.71828182845905).epsilon(1e-14));

    // whitespace is insignificant
    CHECK(structurally_equal(parse_expression(" 1+ 2 *v "), parse_expression("1+2*v")));
    CHECK_FALSE(structurally_equal(parse_expression("(1+2)*v"), parse_expression("1+2*v")));
}

TEST_CASE("evaluation") {
    const ExprPtr e = parse_expression("2*v + sin(v)^2");
    const double v = 0.7;
    CHECK(eval_expr_value(e, v)
          == doctest::Approx(2 * v + std::sin(v) * std::sin(v)).epsilon(1e-15));
    CHECK_THROWS_AS(eval_expr_value(parse_expression("ln(v-1)"), 0.5), DomainError);
    CHECK_THROWS_AS(eval_expr_value(parse_expression("1/v"), 0.0), DivisionByZero);
}

TEST_CASE("round-trip corpus") {
    const std::vector<std::string> corpus = {
        "v",
        "pi",
        "e",
        "0",
        "1.5",
        "2.5e-3",
        "1e6",
        ".5",
        "v+1",
        "v-1",
        "1-v-2",
        "2*v",
        "v/3",
        "v*v*v",
        "v+2*v",
        "(v+2)*v",
        "v^2",
        "-v^2",
        "v^-2",
        "(-v)^2",
        "v^2^3",
        "2^v",
        "sin(v)",
        "cos(2*v)",
        "sinh(v/2)",
        "cosh(v)^2-sinh(v)^2",
        "tan(v/4)",
        "tanh(3*v)",
        "exp(-v^2/2)",
        "ln(1+v^2)",
        "sqrt(1+v^2)",
        "sin(cos(v))",
        "1/(1+exp(-v))",
        "-(v+1)/(v-2)",
        "0.25*sin(2*pi*v)+e^v",
    };
    REQUIRE(corpus.size() >= 30);
    for (const std::string& text : corpus) {
        CAPTURE(text);
        const ExprPtr first = parse_expression(text);
        const ExprPtr second = parse_expression(serialize_expr(first));
        CHECK(structurally_equal(first, second));
    }
}

TEST_CASE("parse errors carry byte offsets") {
    struct Bad {
        std::string text;
        std::size_t offset;
    };
    const std::vector<Bad> cases = {
        {"u cosh", 0},      // unknown identifier
        {"sin v", 4},       // function call needs '('
        {"1 + ", 4},        // missing operand at end
        {"(v", 2},          // unbalanced paren
        {"v + * 2", 4},     // operator where a value belongs
        {"2 * (3 + )", 9},  // empty operand before ')'
        {"cos()", 4},       // empty argument
        {"v v", 2},         // trailing garbage
        {"sqrt 2", 5},      // '(' expected after function name
        {"1..2", 2},        // "1." lexes as a number, the second dot is dangling
        {"@", 0},           // stray character
    };
    REQUIRE(cases.size() >= 10);
    for (const Bad& c : cases) {
        CAPTURE(c.text);
        try {
            parse_expression(c.text);
            FAIL_CHECK("expected ParseError for: " << c.text);
        } catch (const ParseError& err) {
            CHECK(err.offset == c.offset);
        }
    }
}

namespace {

// random parser-reachable ASTs (number literals are non-negative; negative
// values only ever appear behind a unary minus)
ExprPtr random_ast(SplitMix64& rng, int depth) {
    const std::uint64_t pick = rng.next() % (depth <= 0 ? 2 : 10);
    switch (pick) {
        case 0:
            return make_number(std::floor(rng.uniform(0.0, 10.0) * 16.0) / 16.0);
        case 1:
            return make_variable();
        case 2:
        case 3: {
            constexpr UnaryOp ops[] = {UnaryOp::Neg,  UnaryOp::Sin,  UnaryOp::Cos,
                                       UnaryOp::Sinh, UnaryOp::Cosh, UnaryOp::Tan,
                                       UnaryOp::Tanh, UnaryOp::Exp,  UnaryOp::Ln,
                                       UnaryOp::Sqrt};
            return make_unary(ops[rng.next() % 10], random_ast(rng, depth - 1));
        }
        default: {
            constexpr BinaryOp ops[] = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul,
                                        BinaryOp::Div, BinaryOp::Pow};
            return make_binary(ops[rng.next() % 5], random_ast(rng, depth - 1),
                               random_ast(rng, depth - 1));
        }
    }
}

} // namespace

// serialize/parse round trip on randomly generated trees
TEST_CASE("round-trip property") {
    SplitMix64 rng(314159);
    for (int i = 0; i < 300; ++i) {
        const ExprPtr tree = random_ast(rng, 5);
        const std::string text = serialize_expr(tree);
        CAPTURE(text);
        CHECK(structurally_equal(tree, parse_expression(text)));
    }
}

// Jets of composed expressions against symbolic differentiation of the AST.
TEST_CASE("jets agree with symbolic derivatives") {
    const std::vector<std::string> exprs = {
        "sin(v)*cos(2*v)",
        "sinh(v)+cosh(v/2)",
        "exp(-v^2)",
        "ln(1+v^2)",
        "sqrt(1+sinh(v)^2)",
        "tan(v/2)",
        "tanh(v)*exp(v/3)",
        "(v+1)/(v^2+2)",
        "v^2.5",
        "cos(sinh(v/2))^3",
    };
    REQUIRE(exprs.size() == 10);
    SplitMix64 rng(99);
    for (const std::string& text : exprs) {
        CAPTURE(text);
        const ExprPtr f = parse_expression(text);
        const ExprPtr d1 = minktest::diff(f);
        const ExprPtr d2 = minktest::diff(d1);
        const ExprPtr d3 = minktest::diff(d2);
        for (int i = 0; i < 25; ++i) {
            const double v = rng.uniform(0.3, 1.2);
            const Jet3 jet = eval_expr(f, jet_variable(v));
            const double want1 = eval_expr_value(d1, v);
            const double want2 = eval_expr_value(d2, v);
            const double want3 = eval_expr_value(d3, v);
            CHECK(std::fabs(jet.c1 - want1) / std::max(1.0, std::fabs(want1)) < 1e-12);
            CHECK(std::fabs(jet.c2 - want2) / std::max(1.0, std::fabs(want2)) < 1e-12);
            CHECK(std::fabs(jet.c3 - want3) / std::max(1.0, std::fabs(want3)) < 1e-12);
        }
    }
}
