#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wildrep/diagram.hpp"
#include "wildrep/dsl.hpp"
#include "wildrep/readings.hpp"

namespace wildrep {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct AnalyzeOptions {
    bool unmodified = false;       // treat the input as unmodified data regardless of its flag
    bool verify_readings = false;  // realize every reading and compare diagrams
};

struct Report {
    std::string name;
    std::string source;  // canonical DSL of the input
    EnrichedTree tree;
    std::vector<Reading> readings;
    int distinct_forests = 0;
    Diagram diagram;
    long dimension = 0;
    std::vector<bool> verified;  // one per reading when verification ran

    int k() const { return tree.k(); }
};

Report analyze(const SourceSpec& spec, const AnalyzeOptions& opts = {});

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const Json& j);
Json to_json(const ConjClass& c);
ConjClass class_from_json(const Json& j);
Json to_json(const TreeNode& n);
TreeNode node_from_json(const Json& j);
Json to_json(const FissionTree& t);
FissionTree tree_from_json(const Json& j);
Json to_json(const FissionForest& f);
FissionForest forest_from_json(const Json& j);
Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);
Json to_json(const Report& r);
Report report_from_json(const Json& j);

std::string emit_json(const Report& r);
std::string emit_dot(const FissionTree& t, const std::string& name = "tree");
std::string emit_dot(const FissionForest& f, const std::string& name = "forest");
std::string emit_dot(const Diagram& d, const std::string& name = "diagram");

/// Names of the built-in Painleve classes, in table order.
const std::vector<std::string>& catalog_names();
/// DSL source of a built-in class; throws SemanticError for unknown names.
const std::string& catalog_source(const std::string& name);
Report catalog_report(const std::string& name);

}  // namespace wildrep
