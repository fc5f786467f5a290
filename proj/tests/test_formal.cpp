#include <gtest/gtest.h>

#include "support.hpp"

using namespace wildrep;
using namespace wildrep::testing;

namespace {

EigVal sym(const std::string& n) { return EigVal::symbol(n); }
EigVal one() { return EigVal::exact(ExactScalar::one()); }

}  // namespace

TEST(ConjClass, MergeAndPrint) {
    ConjClass c({{sym("b"), {1}}, {sym("a"), {1}}, {sym("b"), {2}}});
    EXPECT_EQ(c.dim, 4);
    EXPECT_EQ(c.str(), "{a:[1]; b:[2,1]}");
    EXPECT_EQ(c.shape_key(), ConjClass({{sym("x"), {1}}, {sym("y"), {2, 1}}}).shape_key());
}

TEST(ConjClass, NegationOfSymbols) {
    ConjClass c({{sym("t"), {1}}, {EigVal::exact(S(2)), {1}}});
    auto n = c.negated();
    EXPECT_EQ(n.negated(), c);
    EXPECT_NE(n, c);
    EXPECT_THROW(c.scaled(EigVal::exact(S(3))), SymbolicScale);
}

TEST(ConjClass, ChildAndParent) {
    ConjClass c({{sym("x"), {1}}, {one(), {1}}});
    EXPECT_EQ(child(c), ConjClass({{sym("x"), {1}}}));
    ConjClass small({{sym("x"), {1}}});
    auto p = parent(small, 2);
    EXPECT_EQ(p.dim, 2);
    EXPECT_EQ(child(p), small);
    EXPECT_THROW(parent(ConjClass({{one(), {1}}}), 1), TargetTooSmall);
}

TEST(ConjClassProperty, ChildOfParent) {
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::pair<EigVal, std::vector<int>>> spec;
        if (g.coin()) spec.push_back({one(), {g.uniform(1, 3)}});
        spec.push_back({sym("s"), {g.uniform(1, 2)}});
        ConjClass c(spec);
        int need = c.dim + c.unipotent_block_count();
        int target = need + g.uniform(0, 2);
        auto p = parent(c, target);
        EXPECT_EQ(p.dim, target);
        EXPECT_EQ(child(p), c);
        EXPECT_EQ(child(p).dim, p.dim - p.unipotent_block_count());
    }
}

TEST(GlobalClass, ModifyUnmodifyRoundTrip) {
    for (const char* name : {"PVI", "PIII2"}) {
        GlobalClass g = parse_dsl(catalog_source(name)).cls;
        GlobalClass u = unmodify(g);
        EXPECT_EQ(u.flavor, Flavor::Unmodified);
        EXPECT_EQ(rank_at(u, SpherePoint::infinity()), rank_at(g, SpherePoint::infinity()));
        for (const auto& l : u.locals) EXPECT_EQ(rank_at(l), rank_at(u, SpherePoint::infinity())) << name;
        GlobalClass back = modify(u);
        EXPECT_EQ(print_dsl({"x", back}), print_dsl({"x", g})) << name;
        EXPECT_EQ(print_dsl({"x", unmodify(back)}), print_dsl({"x", u})) << name;
    }
}

TEST(GlobalClass, Compatibility) {
    auto bad = parse_dsl("class B { at inf: <0> {a:[1]}; at 0: <x^(1/2)> {b:[1]}; }").cls;
    EXPECT_FALSE(is_compatible(bad));
    EXPECT_THROW(unmodify(bad), Incompatible);
    EXPECT_TRUE(is_compatible(parse_dsl(catalog_source("PIII0")).cls));
}

TEST(GlobalClass, FormalTwist) {
    auto g = parse_dsl("class T { at inf: <x^(2)> #2 {a:[2]}; at 0: <3*x> {b:[1]}, <0> {-1:[1]}; }").cls;
    ExpFactor q0(SpherePoint::finite(R(0)), {{R(1), S(3)}});
    auto t = formal_twist(g, SpherePoint::finite(R(0)), q0, EigVal::exact(S(-1)));
    const auto* l = t.at(SpherePoint::finite(R(0)));
    ASSERT_NE(l, nullptr);
    bool saw_tame = false;
    for (const auto& e : l->entries) saw_tame = saw_tame || e.circle.is_tame();
    EXPECT_TRUE(saw_tame);
    ExpFactor back_q(SpherePoint::finite(R(0)), {{R(1), S(-3)}});
    auto back = formal_twist(t, SpherePoint::finite(R(0)), back_q, EigVal::exact(S(-1)));
    back.normalize();
    g.normalize();
    EXPECT_EQ(print_dsl({"x", back}), print_dsl({"x", g}));
    EXPECT_EQ(rank_at(modify(g), SpherePoint::infinity()), rank_at(g, SpherePoint::infinity()));
}
