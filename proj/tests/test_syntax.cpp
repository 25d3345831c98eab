#include "cyclic/error.hpp"
#include "cyclic/syntax.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace cyclic;

namespace {

SyntaxError syntax_error(std::string_view text) {
    try {
        (void)parse_spec(text);
    } catch (const SyntaxError& e) {
        return e;
    }
    ADD_FAILURE() << "parsed: " << text;
    return SyntaxError(0, 0, "");
}

}  // namespace

TEST(Spec, Cyclic) {
    const auto s = parse_spec("cyclic t=4 nodes=(0,-1)");
    EXPECT_EQ(s.kind, QuiverSpec::Kind::Cyclic);
    EXPECT_EQ(s.twist, 4);
    EXPECT_EQ(s.degrees, (std::vector<int>{0, -1}));
    EXPECT_EQ(s.cyclic(), CyclicQuiver(4, {0, -1}));
}

TEST(Spec, K1) {
    const auto s = parse_spec("k1 t=5 split=(1,0) tail=-2");
    EXPECT_EQ(s.kind, QuiverSpec::Kind::K1);
    EXPECT_EQ(s.k1(), K1Quiver(5, {1, 0}, -2));
}

TEST(Spec, WhitespaceInsensitive) {
    EXPECT_EQ(parse_spec("  cyclic   t = 4\n nodes = ( 0 , -1 ) "), parse_spec("cyclic t=4 nodes=(0,-1)"));
}

TEST(Spec, UnbalancedParenReportsColumn) {
    const auto e = syntax_error("cyclic t=4 nodes=(0,-1");
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 22);
}

TEST(Spec, Locations) {
    EXPECT_EQ(syntax_error("cyclik t=4 nodes=(0)").column(), 0);
    EXPECT_EQ(syntax_error("cyclic t=x nodes=(0,1)").column(), 9);
    const auto e = syntax_error("cyclic t=4\nnodes=(0,,1)");
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 9);
    EXPECT_EQ(syntax_error("cyclic t=4 nodes=(0,1) extra").column(), 23);
}

TEST(Spec, SemanticErrors) {
    for (const char* text : {"k1 t=5 split=(0,1) tail=-2", "cyclic t=4 nodes=(0)", "cyclic t=-1 nodes=(0,1)"}) {
        try {
            (void)parse_spec(text);
            ADD_FAILURE() << text;
        } catch (const SyntaxError&) {
            ADD_FAILURE() << "syntax error for " << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::SemanticError) << text;
        }
    }
}

TEST(Spec, RoundTrip) {
    gen::Source src(61);
    for (int trial = 0; trial < 100; ++trial) {
        QuiverSpec s;
        if (src.coin()) {
            const auto q = src.quiver(6, 5, 30);
            s = QuiverSpec{QuiverSpec::Kind::Cyclic, q.twist(), std::vector<int>(q.degrees().begin(), q.degrees().end()), 0};
        } else {
            const auto q = src.k1_quiver(src.uniform(1, 3), 8);
            s = QuiverSpec{QuiverSpec::Kind::K1, q.twist(),
                           std::vector<int>(q.splitting().begin(), q.splitting().end()), q.tail_degree()};
        }
        EXPECT_EQ(parse_spec(to_string(s)), s) << to_string(s);
    }
}

TEST(SectionLiteral, Forms) {
    const auto s = parse_section("2*(0:1)^2 (1:2) inf", 4);
    EXPECT_EQ(s.scale(), 2);
    EXPECT_EQ(s.zeros().multiplicity(ProjPoint::affine(0)), 2);
    EXPECT_EQ(s.zeros().multiplicity(ProjPoint::affine(Rational(1, 2))), 1);
    EXPECT_EQ(s.zeros().multiplicity(ProjPoint::infinity()), 1);
    EXPECT_TRUE(parse_section("0", 3).is_zero());
    EXPECT_TRUE(parse_section("0", -2).is_zero());
    EXPECT_EQ(parse_section("-3/4", 0).scale(), Rational(-3, 4));
    EXPECT_EQ(parse_section("[-1,0,1]", 2), parse_section("1*(-1:1)(1:1)", 2));
    EXPECT_EQ(parse_form("1*(0:1)", 1), CoeffForm(std::vector<Rational>{0, 1}));
    EXPECT_EQ(parse_form("[1,0,1]", 2), CoeffForm(std::vector<Rational>{1, 0, 1}));
}

TEST(SectionLiteral, Errors) {
    auto kind = [](std::string_view text, int degree) {
        try {
            (void)parse_section(text, degree);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::SemanticError;
    };
    EXPECT_EQ(kind("1*(0:1)", 2), ErrorKind::DegreeMismatch);
    EXPECT_EQ(kind("1*(0:1", 1), ErrorKind::SyntaxError);
    EXPECT_EQ(kind("1*(0:0)", 1), ErrorKind::SyntaxError);
    EXPECT_EQ(kind("1/0*(0:1)", 1), ErrorKind::SyntaxError);
    EXPECT_EQ(kind("[1,0,1]", 2), ErrorKind::IrrationalRoots);
    EXPECT_EQ(kind("1*(0:1)^0", 0), ErrorKind::SyntaxError);
}

TEST(SectionLiteral, FormatRoundTrip) {
    gen::Source src(62);
    for (int trial = 0; trial < 200; ++trial) {
        const int degree = src.uniform(0, 6);
        const auto s = src.section(degree);
        EXPECT_EQ(parse_section(format_section(s), degree), s) << format_section(s);
    }
    EXPECT_EQ(format_section(Section::zero(2)), "0");
    EXPECT_EQ(format_form(CoeffForm(std::vector<Rational>{-2, 0, 1})), "[-2,0,1]");
    EXPECT_EQ(format_form(CoeffForm(std::vector<Rational>{0, 1})), "1*(0:1)");
}

TEST(RepLiteral, CyclicAndK1) {
    const CyclicQuiver q(1, {0, 0});
    const auto r = parse_cyclic_rep(q, "phi2=1*(1:1); phi1=0;");
    EXPECT_TRUE(r.map(0).is_zero());
    EXPECT_EQ(r.map(1).zeros().multiplicity(ProjPoint::affine(1)), 1);
    const K1Quiver k(5, {1, 0}, -2);
    const auto kr = parse_k1_rep(k, "phi1=[1,2,1]; phi2=0; phi3=1*(0:1)(1:1)(2:1); phi4=[1,0,0,0,0,0,0,1]");
    EXPECT_EQ(kr.odd(0), CoeffForm(std::vector<Rational>{1, 2, 1}));
    EXPECT_TRUE(kr.even(0).is_zero());
}

TEST(RepLiteral, MissingOrRepeatedMaps) {
    const CyclicQuiver q(1, {0, 0});
    for (const char* text : {"phi1=0", "phi1=0; phi1=0; phi2=0", "phi1=0; phi3=0"}) {
        try {
            (void)parse_cyclic_rep(q, text);
            ADD_FAILURE() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::SemanticError) << text;
        }
    }
}
