#include <gtest/gtest.h>

#include "support.hpp"

using namespace wildrep;
using namespace wildrep::testing;

namespace {

ErrorStage stage_of(const std::string& text) {
    try {
        parse_dsl(text);
    } catch (const Error& e) {
        return e.stage();
    }
    ADD_FAILURE() << "no error for: " << text;
    return ErrorStage::Pipeline;
}

}  // namespace

TEST(Dsl, ParsesPI) {
    auto s = parse_dsl("class PI { at inf: <x^(5/2)> #1 {t1:[1]}; }");
    EXPECT_EQ(s.name, "PI");
    EXPECT_EQ(s.cls.flavor, Flavor::Modified);
    ASSERT_EQ(s.cls.locals.size(), 1u);
    const auto& e = s.cls.locals[0].entries.at(0);
    EXPECT_TRUE(s.cls.locals[0].point.infinite);
    EXPECT_EQ(slope(e.circle), R(5, 2));
    EXPECT_EQ(ram(e.circle), 2);
    EXPECT_EQ(e.mult, 1);
    EXPECT_EQ(e.cls.str(), "{t1:[1]}");
}

TEST(Dsl, TameMultiplicityTwo) {
    auto s = parse_dsl("class A { at inf: <0> #2 {a:[2]}; at 0: <0> #2 {e1:[1]; 1:[1]}; }");
    const LocalClass* l = s.cls.at(SpherePoint::finite(R(0)));
    ASSERT_NE(l, nullptr);
    ASSERT_EQ(l->entries.size(), 1u);
    EXPECT_TRUE(l->entries[0].circle.is_tame());
    EXPECT_EQ(l->entries[0].mult, 2);
    EXPECT_EQ(l->entries[0].cls.unipotent_block_count(), 1);
}

TEST(Dsl, TwoTermFactor) {
    auto s = parse_dsl("class A { at inf: <x^2 + 3*x^(1/2)>; }");
    const auto& q = s.cls.locals[0].entries[0].circle.rep();
    ASSERT_EQ(q.terms.size(), 2u);
    EXPECT_EQ(slope(q), R(2));
    EXPECT_EQ(ram(q), 2);
    EXPECT_EQ(s.cls.locals[0].entries[0].cls, ConjClass::identity(1));
}

TEST(Dsl, Extensions) {
    auto s = parse_dsl(
        "// leading comment\n"
        "class B unmodified {\n"
        "  at inf: <-x^(3) + 1/2*x> #1 {-t:[1]};  // trailing comment\n"
        "  at -1/2: <0> #1;\n"
        "}\n");
    EXPECT_EQ(s.cls.flavor, Flavor::Unmodified);
    EXPECT_EQ(s.cls.locals.size(), 2u);
    const LocalClass* at_inf = s.cls.at(SpherePoint::infinity());
    ASSERT_NE(at_inf, nullptr);
    EXPECT_EQ(at_inf->entries[0].cls.spectrum[0].first.str(), "-t");
    EXPECT_EQ(at_inf->entries[0].circle.rep().terms.size(), 2u);
    const LocalClass* at_half = s.cls.at(SpherePoint::finite(R(-1, 2)));
    ASSERT_NE(at_half, nullptr);
    EXPECT_EQ(at_half->entries[0].cls, ConjClass::identity(1));
}

TEST(Dsl, PrintParseFixpointOnCatalog) {
    for (const auto& name : catalog_names()) {
        const std::string& src = catalog_source(name);
        auto once = parse_dsl(src);
        std::string printed = print_dsl(once);
        EXPECT_EQ(printed, src) << name;
        EXPECT_EQ(print_dsl(parse_dsl(printed)), printed) << name;
        EXPECT_EQ(canonical_form(forest_of(parse_dsl(printed).cls), true), canonical_form(forest_of(once.cls), true));
    }
}

TEST(DslProperty, PrintParseFixpointOnRandomClasses) {
    Gen g(61);
    for (int i = 0; i < 220; ++i) {
        SourceSpec s{"R" + std::to_string(i), g.global()};
        if (g.coin()) s.cls.flavor = Flavor::Unmodified;
        std::string text = print_dsl(s);
        auto back = parse_dsl(text);
        EXPECT_EQ(back.name, s.name);
        EXPECT_EQ(back.cls.flavor, s.cls.flavor);
        EXPECT_EQ(print_dsl(back), text);
        EXPECT_EQ(canonical_form(forest_of(back.cls), true), canonical_form(forest_of(s.cls), true));
    }
}

TEST(Dsl, ErrorStages) {
    EXPECT_EQ(stage_of("class Bad { at inf <x> ; }"), ErrorStage::Parse);
    EXPECT_EQ(stage_of("klass A { at inf: <x>; }"), ErrorStage::Parse);
    EXPECT_EQ(stage_of("class A { at inf: <x^(1/0)>; }"), ErrorStage::Parse);
    EXPECT_EQ(stage_of("class A { at inf: <x>; } extra"), ErrorStage::Parse);
    EXPECT_EQ(stage_of("class A { at inf: <x> $; }"), ErrorStage::Parse);
    EXPECT_EQ(stage_of("class A { at inf: <x^(-1)>; }"), ErrorStage::Parse);
    EXPECT_EQ(stage_of("class A { at 0: <0>; at 0: <0>; }"), ErrorStage::Semantic);
    EXPECT_EQ(stage_of("class A { at inf: <x^(3)> #2 {a:[1]}; }"), ErrorStage::Semantic);
    EXPECT_EQ(stage_of("class A { at inf: <x> {0:[1]}; }"), ErrorStage::Semantic);
    EXPECT_EQ(stage_of("class A { at inf: <x>, <x>; }"), ErrorStage::Semantic);
    EXPECT_EQ(stage_of("class A { at inf: <x^(1/2)>, <-x^(1/2)>; }"), ErrorStage::Semantic);
    EXPECT_EQ(stage_of("class A { at inf: <x> #0; }"), ErrorStage::Semantic);
}

TEST(Dsl, ParseErrorPosition) {
    try {
        parse_dsl("class A {\n  at inf: <x>\n  at 0: <0>;\n}");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 3);
    }
    try {
        parse_dsl("class A { at inf: <x> ?; }");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 23);
    }
}

TEST(Dsl, PrinterRejectsIrrationalData) {
    SourceSpec s{"A", parse_dsl("class A { at inf: <x^(3)>; }").cls};
    GlobalClass g = s.cls;
    g.locals[0].entries[0].circle =
        StokesCircle(ExpFactor(SpherePoint::infinity(), {{R(3), ExactScalar::phase(R(1, 3))}}));
    EXPECT_THROW(print_dsl({"A", g}), NotRepresentable);
}
