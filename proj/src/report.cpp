#include "wildrep/report.hpp"

#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "wildrep/errors.hpp"

namespace wildrep {

Report analyze(const SourceSpec& spec, const AnalyzeOptions& opts) {
    GlobalClass g = spec.cls;
    if (opts.unmodified) g.flavor = Flavor::Unmodified;
    if (g.flavor == Flavor::Unmodified) g = modify(g);
    if (!is_compatible(g)) throw Incompatible("a finite point carries larger rank than infinity");
    Report r;
    r.name = spec.name;
    r.source = print_dsl(spec);
    r.tree = enriched_tree(g);
    r.readings = readings(r.tree);
    r.distinct_forests = distinct_forest_count(r.tree);
    r.diagram = diagram_of(g);
    r.dimension = dimension(r.diagram);
    if (opts.verify_readings) {
        for (const auto& rd : r.readings) r.verified.push_back(diagram_eq(diagram_of(realize(rd.forest)), r.diagram));
    }
    return r;
}

Json to_json(const Rat& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

Rat rat_from_json(const Json& j) { return parse_rat(j.get<std::string>()); }

Json to_json(const ExactScalar& s) {
    if (auto r = s.to_rat()) return to_json(*r);
    Json mag = Json::object();
    for (const auto& [p, e] : s.magnitude()) mag[std::to_string(p)] = to_json(e);
    return Json{{"magnitude", mag}, {"turn", to_json(s.turn())}};
}

ExactScalar scalar_from_json(const Json& j) {
    if (j.is_string()) return ExactScalar::from_rat(rat_from_json(j));
    std::map<std::uint64_t, Rat> mag;
    for (const auto& [p, e] : j.at("magnitude").items()) mag[std::stoull(p)] = rat_from_json(e);
    return ExactScalar::make(std::move(mag), rat_from_json(j.at("turn")));
}

namespace {

Json eig_to_json(const EigVal& v) {
    if (v.is_symbolic()) return Json{{"symbol", v.name()}, {"sign", v.sign()}};
    return Json{{"value", to_json(v.value())}};
}

EigVal eig_from_json(const Json& j) {
    if (j.contains("symbol")) return EigVal::symbol(j.at("symbol").get<std::string>(), j.at("sign").get<int>());
    return EigVal::exact(scalar_from_json(j.at("value")));
}

Json point_to_json(const SpherePoint& p) { return p.infinite ? Json("inf") : to_json(p.value); }

SpherePoint point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return SpherePoint::infinity();
    return SpherePoint::finite(scalar_from_json(j));
}

Json rats(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(to_json(r));
    return out;
}

std::vector<Rat> rats_from(const Json& j) {
    std::vector<Rat> out;
    for (const auto& r : j) out.push_back(rat_from_json(r));
    return out;
}

}  // namespace

Json to_json(const ConjClass& c) {
    Json spec = Json::array();
    for (const auto& [v, blocks] : c.spectrum) spec.push_back(Json{{"eigenvalue", eig_to_json(v)}, {"blocks", blocks}});
    return Json{{"dim", c.dim}, {"spectrum", spec}};
}

ConjClass class_from_json(const Json& j) {
    std::vector<std::pair<EigVal, std::vector<int>>> spec;
    for (const auto& e : j.at("spectrum")) {
        spec.emplace_back(eig_from_json(e.at("eigenvalue")), e.at("blocks").get<std::vector<int>>());
    }
    return ConjClass(std::move(spec));
}

Json to_json(const TreeNode& n) {
    Json out;
    switch (n.kind) {
        case TreeNode::Kind::Root: out["kind"] = "root"; break;
        case TreeNode::Kind::Vertex:
            out["kind"] = "vertex";
            out["height"] = to_json(n.height);
            out["mandatory"] = n.mandatory;
            break;
        case TreeNode::Kind::Leaf:
            out["kind"] = "leaf";
            out["mult"] = n.leaf.mult;
            out["class"] = to_json(n.leaf.cls);
            out["levels"] = rats(n.leaf.levels);
            out["slope"] = to_json(n.leaf.slope);
            return out;
    }
    Json kids = Json::array();
    for (const auto& c : n.children) kids.push_back(to_json(c));
    out["children"] = kids;
    return out;
}

TreeNode node_from_json(const Json& j) {
    TreeNode n;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "leaf") {
        n.kind = TreeNode::Kind::Leaf;
        n.leaf.mult = j.at("mult").get<int>();
        n.leaf.cls = class_from_json(j.at("class"));
        n.leaf.levels = rats_from(j.at("levels"));
        n.leaf.slope = rat_from_json(j.at("slope"));
        return n;
    }
    if (kind == "vertex") {
        n.kind = TreeNode::Kind::Vertex;
        n.height = rat_from_json(j.at("height"));
        n.mandatory = j.at("mandatory").get<bool>();
    } else if (kind != "root") {
        throw SemanticError("unknown node kind '" + kind + "'");
    }
    for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
    return n;
}

Json to_json(const FissionTree& t) {
    return Json{{"point", t.point ? point_to_json(*t.point) : Json()}, {"root", to_json(t.root)}};
}

FissionTree tree_from_json(const Json& j) {
    FissionTree t;
    if (!j.at("point").is_null()) t.point = point_from_json(j.at("point"));
    t.root = node_from_json(j.at("root"));
    return t;
}

Json to_json(const FissionForest& f) {
    Json trees = Json::array();
    for (const auto& t : f.trees) trees.push_back(to_json(t));
    return Json{{"trees", trees}};
}

FissionForest forest_from_json(const Json& j) {
    FissionForest f;
    for (const auto& t : j.at("trees")) f.trees.push_back(tree_from_json(t));
    return f;
}

Json to_json(const Diagram& d) {
    Json nodes = Json::array();
    Json legs = Json::array();
    for (const auto& n : d.nodes) {
        nodes.push_back(Json{{"label", n.label}, {"point", point_to_json(n.point)}, {"dim", n.dim}});
        legs.push_back(n.legs);
    }
    return Json{{"nodes", nodes}, {"B", d.B}, {"legs", legs}, {"d", d.dimension_vector()}, {"dimension", dimension(d)}};
}

Diagram diagram_from_json(const Json& j) {
    Diagram d;
    const auto& nodes = j.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        d.nodes.push_back({nodes[i].at("label").get<std::string>(), point_from_json(nodes[i].at("point")),
                           nodes[i].at("dim").get<int>(), j.at("legs").at(i).get<std::vector<int>>()});
    }
    d.B = j.at("B").get<std::vector<std::vector<long>>>();
    return d;
}

Json to_json(const Report& r) {
    Json groups = Json::array();
    for (const auto& g : r.tree.groups) groups.push_back(Json{{"lambda", to_json(g.lambda)}, {"subtree", to_json(g.vertex)}});
    Json rds = Json::array();
    for (std::size_t i = 0; i < r.readings.size(); ++i) {
        const auto& rd = r.readings[i];
        Json e{{"label", rd.label.str()},
               {"index", rd.label.index},
               {"rank", rd.rank},
               {"finite_singularities", rd.finite_sings},
               {"total_singularities", rd.total_sings()},
               {"forest", to_json(rd.forest)}};
        if (i < r.verified.size()) e["diagram_verified"] = static_cast<bool>(r.verified[i]);
        rds.push_back(e);
    }
    return Json{{"schema", kSchemaVersion},
                {"name", r.name},
                {"source", r.source},
                {"k", r.k()},
                {"enriched_tree", Json{{"groups", groups}}},
                {"readings", rds},
                {"diagram", to_json(r.diagram)},
                {"distinct_forests", r.distinct_forests}};
}

Report report_from_json(const Json& j) {
    if (j.at("schema").get<int>() != kSchemaVersion) throw SemanticError("unsupported report schema");
    Report r;
    r.name = j.at("name").get<std::string>();
    r.source = j.at("source").get<std::string>();
    for (const auto& g : j.at("enriched_tree").at("groups")) {
        r.tree.groups.push_back({scalar_from_json(g.at("lambda")), node_from_json(g.at("subtree"))});
    }
    for (const auto& e : j.at("readings")) {
        Reading rd;
        rd.label.index = e.at("index").get<int>();
        rd.rank = e.at("rank").get<int>();
        rd.finite_sings = e.at("finite_singularities").get<int>();
        rd.forest = forest_from_json(e.at("forest"));
        if (e.contains("diagram_verified")) r.verified.push_back(e.at("diagram_verified").get<bool>());
        r.readings.push_back(std::move(rd));
    }
    r.diagram = diagram_from_json(j.at("diagram"));
    r.dimension = j.at("diagram").at("dimension").get<long>();
    r.distinct_forests = j.at("distinct_forests").get<int>();
    return r;
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

struct DotTree {
    std::ostringstream body;
    std::map<Rat, std::vector<std::string>> by_height;
    int next = 0;
    std::string prefix;

    std::string add(const TreeNode& n) {
        std::string id = prefix + std::to_string(next++);
        switch (n.kind) {
            case TreeNode::Kind::Root: body << "  " << id << " [shape=box, label=\"\"];\n"; break;
            case TreeNode::Kind::Vertex:
                body << "  " << id << " [shape=circle, width=0.15, label=\"\", xlabel=" << quote(to_string(n.height))
                     << (n.mandatory ? ", style=filled, fillcolor=black" : "") << "];\n";
                by_height[n.height].push_back(id);
                break;
            case TreeNode::Kind::Leaf: {
                std::string label = std::to_string(n.leaf.mult) + " " + n.leaf.cls.str();
                body << "  " << id << " [shape=plaintext, label=" << quote(label) << "];\n";
                by_height[Rat(0)].push_back(id);
                break;
            }
        }
        for (const auto& c : n.children) body << "  " << id << " -> " << add(c) << ";\n";
        return id;
    }

    void ranks() {
        for (const auto& [h, ids] : by_height) {
            body << "  { rank=same;";
            for (const auto& id : ids) body << " " << id << ";";
            body << " }\n";
        }
    }
};

std::string loop_label(long b) {
    if (b % 2 == 0) return std::to_string(b / 2);
    std::cerr << "warning: odd loop value " << b << " rendered as a half-integer\n";
    return std::to_string(b) + "/2";
}

}  // namespace

std::string emit_dot(const FissionTree& t, const std::string& name) {
    DotTree d;
    d.prefix = "n";
    d.add(t.root);
    d.ranks();
    std::string label = t.point ? "  label=" + quote(t.point->str()) + ";\n" : "";
    return "digraph " + quote(name) + " {\n  edge [arrowhead=none];\n" + label + d.body.str() + "}\n";
}

std::string emit_dot(const FissionForest& f, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n  edge [arrowhead=none];\n";
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
        DotTree d;
        d.prefix = "t" + std::to_string(i) + "_";
        d.add(f.trees[i].root);
        d.ranks();
        out << " subgraph cluster_" << i << " {\n";
        if (f.trees[i].point) out << "  label=" << quote(f.trees[i].point->str()) << ";\n";
        out << d.body.str() << " }\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_dot(const Diagram& d, const std::string& name) {
    std::ostringstream out;
    out << "graph " << quote(name) << " {\n";
    const std::size_t n = d.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        out << "  c" << i << " [shape=circle, style=filled, fillcolor=lightblue, label="
            << quote(std::to_string(d.nodes[i].dim)) << ", xlabel=" << quote(d.nodes[i].label) << "];\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            long b = d.B[i][j];
            if (b == 0) continue;
            std::string label = i == j ? loop_label(b) : std::to_string(b < 0 ? -b : b);
            out << "  c" << i << " -- c" << j << " [label=" << quote(label) << (b < 0 ? ", style=dashed" : "")
                << "];\n";
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::string prev = "c" + std::to_string(i);
        for (std::size_t k = 0; k < d.nodes[i].legs.size(); ++k) {
            std::string id = "l" + std::to_string(i) + "_" + std::to_string(k);
            out << "  " << id << " [shape=circle, label=" << quote(std::to_string(d.nodes[i].legs[k])) << "];\n";
            out << "  " << prev << " -- " << id << ";\n";
            prev = id;
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace wildrep
