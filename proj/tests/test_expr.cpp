#include "qverify/expr.hpp"

#include <random>

#include <gtest/gtest.h>

#include "qverify/catalog.hpp"
#include "qverify/eval.hpp"

namespace qv {
namespace {

TEST(Parse, CallShapes) {
    const auto [lhs, rhs] = parse_equation("J(1,2)*phi(q) == f(2,3,2; q^2, q^2; q)");
    ASSERT_EQ(lhs->kind, NodeKind::Mul);
    EXPECT_EQ(lhs->a->callee, "J");
    ASSERT_EQ(lhs->a->groups.size(), 1u);
    EXPECT_EQ(lhs->a->groups[0].size(), 2u);
    EXPECT_EQ(lhs->b->callee, "phi");
    ASSERT_EQ(rhs->kind, NodeKind::Call);
    EXPECT_EQ(rhs->callee, "f");
    ASSERT_EQ(rhs->groups.size(), 3u);
    EXPECT_EQ(rhs->groups[0].size(), 3u);
    EXPECT_EQ(rhs->groups[1].size(), 2u);
    EXPECT_EQ(rhs->groups[2].size(), 1u);

    // Identical to the built-in entry for the same rewrite.
    const IdentitySpec* spec = find_identity("hecke-3.2");
    ASSERT_NE(spec, nullptr);
    EXPECT_TRUE(expr_equal(lhs, spec->lhs));
    EXPECT_TRUE(expr_equal(rhs, spec->rhs));
}

TEST(Parse, NegativeUnits) {
    const ExprPtr e = parse_expr("j(-q^2; -q^10)");
    ASSERT_EQ(e->kind, NodeKind::Call);
    EXPECT_EQ(e->callee, "j");
    EXPECT_EQ(e->groups[0][0]->kind, NodeKind::Neg);
    EXPECT_EQ(e->groups[1][0]->kind, NodeKind::Neg);
    const auto x = fold_monomial(e->groups[0][0]);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->exp(), 2);
    EXPECT_EQ(x->unit(), CycNum(-1));
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_expr("(1 +"), ParseError);
    EXPECT_THROW(parse_expr("1 ="), ParseError);
    EXPECT_THROW(parse_expr("foo + 1"), ParseError);
    EXPECT_THROW(parse_expr("j(q; q) extra"), ParseError);
    EXPECT_THROW(parse_expr("q ^ w"), ParseError);
    try {
        parse_expr("1 + (2 *");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_GE(e.line, 1);
        EXPECT_GT(e.column, 1);
    }
}

TEST(Render, Precedence) {
    const ExprPtr e = parse_expr("(1 + q)*w");
    EXPECT_EQ(render(e), "(1 + q)*w");
    EXPECT_EQ(render(parse_expr("w*q^3")), "w*q^3");
    EXPECT_EQ(render(parse_expr("-q^2*phi(q)")), "-q^2*phi(q)");
    EXPECT_EQ(render(parse_expr("1 - (2 - 3)")), "1 - (2 - 3)");
    EXPECT_EQ(render(parse_expr("q^-3")), "q^-3");
}

TEST(Render, RoundTripBuiltins) {
    for (const auto& spec : builtin_catalog()) {
        EXPECT_TRUE(expr_equal(parse_expr(render(spec.lhs)), spec.lhs)) << spec.id;
        EXPECT_TRUE(expr_equal(parse_expr(render(spec.rhs)), spec.rhs)) << spec.id;
    }
}

ExprPtr gen_ast(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth == 0 ? 3 : 10);
    std::uniform_int_distribution<std::int64_t> small(0, 12);
    std::uniform_int_distribution<std::int64_t> expo(-9, 9);
    switch (pick(rng)) {
        case 0: return Expr::number_lit(small(rng));
        case 1: return Expr::make(NodeKind::SymW);
        case 2: return Expr::make(NodeKind::SymI);
        case 3: return Expr::make(NodeKind::SymQ);
        case 4: return Expr::unary(NodeKind::Neg, gen_ast(rng, depth - 1));
        case 5: return Expr::binary(NodeKind::Add, gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 6: return Expr::binary(NodeKind::Sub, gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 7: return Expr::binary(NodeKind::Mul, gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 8: return Expr::binary(NodeKind::Div, gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 9: return Expr::pow(gen_ast(rng, depth - 1), expo(rng));
        default: {
            std::uniform_int_distribution<int> fpick(0, 11);
            auto sub = [&] { return gen_ast(rng, depth - 1); };
            switch (fpick(rng)) {
                case 0: return Expr::call("j", {{sub()}, {sub()}});
                case 1: return Expr::call("J", {{sub(), sub()}});
                case 2: return Expr::call("Jb", {{sub(), sub()}});
                case 3: return Expr::call("Jm", {{sub()}});
                case 4: return Expr::call("P", {{sub()}, {sub()}, {Expr::make(NodeKind::Inf)}});
                case 5: return Expr::call("P", {{sub()}, {sub()}, {sub()}});
                case 6: return Expr::call("m", {{sub()}, {sub()}, {sub()}});
                case 7: return Expr::call("f", {{sub(), sub(), sub()}, {sub(), sub()}, {sub()}});
                case 8: return Expr::call("D", {{sub()}, {sub()}, {sub()}, {sub()}, {sub()}});
                case 9: return Expr::call("phi", {{sub()}});
                case 10: return Expr::call("psi", {{sub()}});
                default: return Expr::call("chi", {{sub()}});
            }
        }
    }
}

TEST(Render, RoundTripGenerated) {
    std::mt19937_64 rng(401);
    for (int iter = 0; iter < 500; ++iter) {
        const ExprPtr e = gen_ast(rng, 4);
        const std::string text = render(e);
        ExprPtr back;
        try {
            back = parse_expr(text);
        } catch (const ParseError& err) {
            FAIL() << "render produced unparsable text: " << text << " (" << err.what() << ")";
        }
        EXPECT_TRUE(expr_equal(e, back)) << text;
    }
}

TEST(IdentityFiles, ParseAndValidate) {
    const std::string text =
        "# a comment\n"
        "my-first : J(1,2)*phi(q) == f(2,3,2; q^2, q^2; q) @ 30\n"
        "\n"
        "second.one : Jm(1) == J(1,3)   # trailing comment\n";
    const auto stmts = parse_identity_file(text);
    ASSERT_EQ(stmts.size(), 2u);
    EXPECT_EQ(stmts[0].name, "my-first");
    EXPECT_EQ(stmts[0].order, std::optional<std::int64_t>(30));
    EXPECT_EQ(stmts[1].name, "second.one");
    EXPECT_FALSE(stmts[1].order.has_value());

    EXPECT_THROW(parse_identity_file("a : 1 == 1\na : 2 == 2\n"), ParseError);
    EXPECT_THROW(parse_identity_file("no colon here\n"), ParseError);
    EXPECT_THROW(parse_identity_file("x : 1 + == 2\n"), ParseError);
}

TEST(Eval, MockExamples) {
    const Series phi = eval_expr(std::string("phi(q)"), 3);
    EXPECT_EQ(phi.coeff(0), CycNum(1));
    EXPECT_EQ(phi.coeff(1), CycNum(2));
    EXPECT_EQ(phi.coeff(2), CycNum(2));
    EXPECT_EQ(phi.coeff(3), CycNum(3));

    const Series shifted = eval_expr(std::string("q^-2 * chi(q^8)"), 10);
    EXPECT_GE(shifted.val(), 6);
    EXPECT_EQ(shifted.coeff(6), CycNum(1));
}

TEST(Eval, ScalarAndMonomialFolding) {
    const Series s = eval_expr(std::string("(w - w^2)^2"), 2);
    EXPECT_EQ(s.coeff(0), CycNum(-3));
    const auto m = fold_monomial(parse_expr("-w^2*I*q^-5"));
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->exp(), -5);
    const auto notm = fold_monomial(parse_expr("1 + q"));
    EXPECT_FALSE(notm.has_value());
    const auto two = fold_monomial(parse_expr("2*q"));
    EXPECT_FALSE(two.has_value());
}

TEST(Eval, ErrorsCarryNodePath) {
    try {
        eval_expr(std::string("1 + m(q; q; q)"), 5);
        FAIL() << "expected PrefactorZero";
    } catch (const PrefactorZero& e) {
        EXPECT_NE(std::string(e.what()).find("/m"), std::string::npos) << e.what();
    }
    EXPECT_THROW(eval_expr(std::string("j(q; 1)"), 5), EvalError);        // bad base
    EXPECT_THROW(eval_expr(std::string("phi(q^0)"), 5), InvalidSubstitution);
    EXPECT_THROW(eval_expr(std::string("J(1 + q, 2)"), 5), EvalError);    // non-integer arg
    EXPECT_THROW(eval_expr(std::string("zeta(3)"), 5), EvalError);        // unknown call
    EXPECT_THROW(eval_expr(std::string("m(q, q, q)"), 5), EvalError);     // wrong group shape
}

TEST(Eval, MatchesDirectModuleCalls) {
    const Series via_dsl = eval_expr(std::string("m(q; q^10; q^2)"), 30);
    const Series direct = m_series(Monomial::q_pow(1), Base::q_pow(10), Monomial::q_pow(2), 31);
    EXPECT_FALSE(Series::eq_to(via_dsl, direct, 30).has_value());

    const Series p = eval_expr(std::string("P(q; q; inf)"), 20);
    const Series pd = poch_inf(Monomial::q_pow(1), Base::q_pow(1), 21);
    EXPECT_FALSE(Series::eq_to(p, pd, 20).has_value());

    const Series pf = eval_expr(std::string("P(-q; q; 2)"), 10);
    EXPECT_EQ(pf.coeff(3), CycNum(1));
}

} // namespace
} // namespace qv
