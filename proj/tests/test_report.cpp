#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace wildrep;
using namespace wildrep::testing;

namespace {

std::vector<std::string> lines_with(const std::string& text, const std::string& needle) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.find(needle) != std::string::npos) out.push_back(line);
    }
    return out;
}

std::string xlabel(const std::string& line) {
    std::smatch m;
    if (std::regex_search(line, m, std::regex("xlabel=\"([^\"]*)\""))) return m[1];
    return {};
}

}  // namespace

TEST(Report, JsonRoundTripOnCatalog) {
    for (const auto& name : catalog_names()) {
        Json j = to_json(catalog_report(name));
        EXPECT_EQ(to_json(report_from_json(j)), j) << name;
        EXPECT_EQ(j.at("schema"), kSchemaVersion);
    }
}

TEST(Report, JsonRoundTripWithVerification) {
    AnalyzeOptions opts;
    opts.verify_readings = true;
    Report r = analyze(parse_dsl(catalog_source("PIII2")), opts);
    ASSERT_EQ(r.verified.size(), r.readings.size());
    Json j = to_json(r);
    EXPECT_EQ(to_json(report_from_json(j)), j);
}

TEST(Report, JsonFieldsAndRationals) {
    Json j = to_json(catalog_report("PI"));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"schema", "name", "source", "k", "enriched_tree", "readings", "diagram",
                                              "distinct_forests"}));
    EXPECT_EQ(to_json(R(5, 2)), "5/2");
    EXPECT_EQ(to_json(R(3)), "3/1");
    EXPECT_EQ(rat_from_json(Json("-7/3")), R(-7, 3));
    for (const auto& field : {"nodes", "B", "legs", "d", "dimension"}) EXPECT_TRUE(j.at("diagram").contains(field));
}

TEST(Report, JsonRoundTripOnRandomForests) {
    Gen g(71);
    for (int i = 0; i < 200; ++i) {
        FissionForest f = forest_of(g.global());
        Json j = to_json(f);
        FissionForest back = forest_from_json(j);
        EXPECT_EQ(to_json(back), j);
        EXPECT_EQ(canonical_form(back, true), canonical_form(f, true));
    }
}

TEST(Report, ScalarJson) {
    for (const auto& s : {S(3, 4), S(-2), ExactScalar::phase(R(1, 3)), scalar_pow(S(2), R(1, 2)), ExactScalar()}) {
        EXPECT_EQ(scalar_from_json(to_json(s)), s) << s.str();
    }
}

TEST(Report, PITreeDot) {
    FissionForest f = forest_of(parse_dsl(catalog_source("PI")).cls);
    ASSERT_EQ(f.trees.size(), 1u);
    std::string dot = emit_dot(f.trees[0], "PI");
    std::multiset<std::string> filled, hollow;
    for (const auto& line : lines_with(dot, "shape=circle")) {
        (line.find("style=filled") != std::string::npos ? filled : hollow).insert(xlabel(line));
    }
    EXPECT_EQ(filled, (std::multiset<std::string>{"5/2"}));
    EXPECT_EQ(hollow, (std::multiset<std::string>{"2", "3/2", "1", "1/2"}));
    EXPECT_EQ(lines_with(dot, "shape=box").size(), 1u);
    EXPECT_FALSE(lines_with(dot, "rank=same").empty());
}

TEST(Report, PVIDiagramDot) {
    Diagram d = catalog_report("PVI").diagram;
    std::string dot = emit_dot(d, "PVI");
    EXPECT_EQ(lines_with(dot, "fillcolor=lightblue").size(), 4u);
    auto legs_lines = lines_with(dot, "[shape=circle, label=");
    ASSERT_EQ(legs_lines.size(), 1u);
    EXPECT_EQ(legs_lines[0].find("filled"), std::string::npos);
    std::size_t center = 0;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        if (d.nodes[i].dim == 2) center = i;
    }
    std::string c = "c" + std::to_string(center);
    int degree = 0;
    for (const auto& line : lines_with(dot, "--")) {
        if (line.find(c + " ") != std::string::npos || line.find(c + ";") != std::string::npos) ++degree;
    }
    EXPECT_EQ(degree, 4);
}

TEST(Report, NegativeEdgesDashed) {
    std::string dot = emit_dot(catalog_report("PIII1").diagram, "PIII1");
    auto loops = lines_with(dot, "style=dashed");
    EXPECT_EQ(loops.size(), 2u);
    for (const auto& l : loops) EXPECT_NE(l.find("label=\"-1\""), std::string::npos) << l;
}

TEST(Report, ForestDotHasOneClusterPerTree) {
    Report r = catalog_report("PVI");
    for (const auto& rd : r.readings) {
        std::string dot = emit_dot(rd.forest, "f");
        EXPECT_EQ(lines_with(dot, "subgraph cluster_").size(), rd.forest.trees.size());
    }
}

TEST(Report, Deterministic) {
    for (const auto& name : catalog_names()) {
        Report a = catalog_report(name);
        Report b = catalog_report(name);
        EXPECT_EQ(emit_json(a), emit_json(b));
        EXPECT_EQ(emit_dot(a.diagram), emit_dot(b.diagram));
    }
}

TEST(Report, AnalyzeRejectsIncompatible) {
    auto spec = parse_dsl("class Bad { at inf: <0> {a:[1]}; at 0: <x^(1/2)> {b:[1]}; }");
    EXPECT_THROW(analyze(spec), Incompatible);
    EXPECT_THROW(catalog_source("PVII"), SemanticError);
}

TEST(Report, UnmodifiedInputIsModified) {
    auto unmod = parse_dsl(
        "class PVIu unmodified { at inf: <0> #2 {t1:[1]; t2:[1]}; at 0: <0> #2 {t3:[1]; 1:[1]};"
        " at 1: <0> #2 {t4:[1]; 1:[1]}; at 2: <0> #2 {t5:[1]; 1:[1]}; }");
    Report r = analyze(unmod);
    EXPECT_TRUE(diagram_eq(r.diagram, catalog_report("PVI").diagram));
    EXPECT_EQ(table_of(r), table_of(catalog_report("PVI")));
}
