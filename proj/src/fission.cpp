#include "wildrep/fission.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "wildrep/errors.hpp"

namespace wildrep {

FissionDatum fission_datum(const LocalClass& l) {
    FissionDatum d;
    const std::size_t n = l.entries.size();
    for (const auto& e : l.entries) d.entries.push_back({e.mult, e.cls, levels(e.circle), slope(e.circle)});
    d.f.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            d.f[i][j] = d.f[j][i] = fission_exponent(l.entries[i].circle, l.entries[j].circle);
        }
    }
    return d;
}

std::vector<Rat> possible_exponents(const std::vector<Rat>& lv, const Rat& upto) {
    std::vector<Rat> out;
    Rat lower = lv.empty() ? Rat(0) : lv.front();
    for (Rat h = floor_rat(upto); h > lower; h -= 1) out.push_back(h);
    std::int64_t r = 1;
    for (std::size_t j = 0; j < lv.size(); ++j) {
        r = lcm64(r, den_of(lv[j]));
        Rat step = Rat(1) / Rat(r);
        Rat below = (j + 1 < lv.size()) ? lv[j + 1] : Rat(0);
        for (Rat h = floor_rat(lv[j] / step) * step; h > below; h -= step) {
            if (h <= upto) out.push_back(h);
        }
    }
    return out;
}

Rat FissionTree::top() const {
    Rat best = 0;
    for (const auto& c : root.children) {
        if (c.kind == TreeNode::Kind::Vertex) best = std::max(best, c.height);
    }
    return best;
}

namespace {

std::optional<Rat> next_below(const std::vector<Rat>& vs, const std::optional<Rat>& h) {
    for (const auto& v : vs) {  // decreasing
        if (!h || v < *h) return v;
    }
    return std::nullopt;
}

Rat gluing_height(const std::vector<Rat>& a, const std::vector<Rat>& b, const Rat& f) {
    std::optional<Rat> best;
    for (const auto* vs : {&a, &b}) {
        for (const auto& v : *vs) {
            if (v > f && (!best || v < *best)) best = v;
        }
    }
    if (!best) throw Unrealizable("no vertex above fission exponent " + to_string(f));
    return *best;
}

struct Builder {
    const FissionDatum& d;
    std::vector<std::vector<Rat>> verts;
    std::vector<std::vector<Rat>> glue;

    void grow(TreeNode& node, const std::vector<std::size_t>& members, const std::optional<Rat>& h) {
        if (members.size() == 1 && !next_below(verts[members[0]], h)) {
            TreeNode leaf;
            leaf.kind = TreeNode::Kind::Leaf;
            leaf.leaf = d.entries[members[0]];
            node.children.push_back(std::move(leaf));
            return;
        }
        // Components of members still glued somewhere below h.
        std::vector<std::size_t> comp(members.size());
        std::iota(comp.begin(), comp.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return comp[x] == x ? x : comp[x] = find(comp[x]);
        };
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                if (!h || glue[members[a]][members[b]] < *h) comp[find(a)] = find(b);
            }
        }
        std::map<std::size_t, std::vector<std::size_t>> groups;
        for (std::size_t a = 0; a < members.size(); ++a) groups[find(a)].push_back(members[a]);
        for (auto& [root, group] : groups) {
            std::optional<Rat> hc;
            for (auto i : group) {
                auto v = next_below(verts[i], h);
                if (v && (!hc || *v > *hc)) hc = v;
            }
            if (!hc) {
                if (group.size() > 1) throw Unrealizable("coincident leaves below every vertex");
                grow(node, group, h);
                continue;
            }
            for (auto i : group) {
                for (auto j : group) {
                    if (i != j && glue[i][j] > *hc) throw Unrealizable("gluing height above branch vertex");
                }
            }
            TreeNode v;
            v.kind = TreeNode::Kind::Vertex;
            v.height = *hc;
            for (auto i : group) {
                const auto& lv = d.entries[i].levels;
                if (std::find(lv.begin(), lv.end(), *hc) != lv.end()) v.mandatory = true;
            }
            grow(v, group, hc);
            node.children.push_back(std::move(v));
        }
    }
};

}  // namespace

FissionTree build_tree(const FissionDatum& d, std::optional<Rat> top) {
    const std::size_t n = d.entries.size();
    Builder b{d, {}, {}};
    Rat fmax = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && d.f[i][j] <= 0) throw Unrealizable("distinct entries with zero fission exponent");
            fmax = std::max(fmax, d.f[i][j]);
        }
    }
    Rat probe = floor_rat(fmax) + 1;
    for (const auto& e : d.entries) {
        if (!e.levels.empty()) probe = std::max(probe, e.levels.front());
    }
    std::vector<std::vector<Rat>> wide;
    for (const auto& e : d.entries) wide.push_back(possible_exponents(e.levels, probe));
    b.glue.assign(n, std::vector<Rat>(n, Rat(0)));
    Rat upto = 0;
    for (const auto& e : d.entries) {
        if (!e.levels.empty()) upto = std::max(upto, e.levels.front());
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            b.glue[i][j] = b.glue[j][i] = gluing_height(wide[i], wide[j], d.f[i][j]);
            upto = std::max(upto, b.glue[i][j]);
        }
    }
    if (top) {
        if (*top < upto) throw Unrealizable("datum does not fit below height " + to_string(*top));
        upto = *top;
    }
    for (const auto& e : d.entries) b.verts.push_back(possible_exponents(e.levels, upto));
    FissionTree t;
    if (n == 0) return t;
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    b.grow(t.root, all, std::nullopt);
    return t;
}

FissionForest forest_of(const GlobalClass& g) {
    FissionForest f;
    for (const auto& l : g.locals) {
        FissionTree t = build_tree(fission_datum(l));
        t.point = l.point;
        f.trees.push_back(std::move(t));
    }
    return f;
}

namespace {

void collect(const TreeNode& n, std::vector<const FissionLeaf*>& out) {
    if (n.kind == TreeNode::Kind::Leaf) out.push_back(&n.leaf);
    for (const auto& c : n.children) collect(c, out);
}

/// Records, for every pair of leaves below `n`, the height of their lowest common vertex.
void pair_heights(const TreeNode& n, std::map<const FissionLeaf*, std::map<const FissionLeaf*, Rat>>& out,
                  const Rat& above) {
    Rat here = n.kind == TreeNode::Kind::Vertex ? n.height : above;
    std::vector<std::vector<const FissionLeaf*>> parts;
    for (const auto& c : n.children) {
        parts.emplace_back();
        collect(c, parts.back());
        pair_heights(c, out, here);
    }
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            for (auto* x : parts[a]) {
                for (auto* y : parts[b]) out[x][y] = out[y][x] = here;
            }
        }
    }
}

}  // namespace

std::vector<const FissionLeaf*> leaves_of(const TreeNode& n) {
    std::vector<const FissionLeaf*> out;
    collect(n, out);
    return out;
}

FissionDatum read_datum(const FissionTree& t) {
    FissionDatum d;
    auto ls = leaves_of(t.root);
    std::map<const FissionLeaf*, std::map<const FissionLeaf*, Rat>> heights;
    Rat top = t.top();
    pair_heights(t.root, heights, top + 1);
    const std::size_t n = ls.size();
    d.f.assign(n, std::vector<Rat>(n, Rat(0)));
    std::vector<std::vector<Rat>> verts;
    for (auto* l : ls) {
        d.entries.push_back(*l);
        verts.push_back(possible_exponents(l->levels, top + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat g = heights[ls[i]][ls[j]];
            std::optional<Rat> best;
            for (const auto* vs : {&verts[i], &verts[j]}) {
                for (const auto& v : *vs) {
                    if (v < g && (!best || v > *best)) best = v;
                }
            }
            if (!best) throw Unrealizable("no vertex below gluing height " + to_string(g));
            d.f[i][j] = d.f[j][i] = *best;
        }
    }
    return d;
}

std::string canonical_form(const TreeNode& n, bool with_eigenvalues) {
    std::vector<std::string> kids;
    for (const auto& c : n.children) kids.push_back(canonical_form(c, with_eigenvalues));
    std::sort(kids.begin(), kids.end());
    std::string body;
    for (const auto& k : kids) body += k;
    switch (n.kind) {
        case TreeNode::Kind::Root: return "R(" + body + ")";
        case TreeNode::Kind::Vertex:
            return "V" + to_string(n.height) + (n.mandatory ? "*" : "") + "(" + body + ")";
        case TreeNode::Kind::Leaf: {
            std::string s = "L" + std::to_string(n.leaf.mult) + "|";
            s += with_eigenvalues ? n.leaf.cls.str() : n.leaf.cls.shape_key();
            s += "|";
            for (const auto& l : n.leaf.levels) s += to_string(l) + ",";
            return s + ";";
        }
    }
    return body;
}

std::string canonical_form(const FissionTree& t, bool with_eigenvalues) {
    std::string s = canonical_form(t.root, with_eigenvalues);
    if (!t.point) return s;
    if (with_eigenvalues) return "@" + t.point->str() + s;
    return (t.point->infinite ? "@inf" : "@fin") + s;
    return s;
}

std::string canonical_form(const FissionForest& f, bool with_eigenvalues) {
    std::vector<std::string> ts;
    for (const auto& t : f.trees) ts.push_back(canonical_form(t, with_eigenvalues));
    std::sort(ts.begin(), ts.end());
    std::string out = "F1:";
    for (const auto& t : ts) out += t + ";";
    return out;
}

bool is_isomorphic(const FissionForest& a, const FissionForest& b) {
    return canonical_form(a) == canonical_form(b);
}

namespace {

struct Realizer {
    std::uint64_t next_prime = 2;
    std::vector<std::pair<std::map<Rat, ExactScalar>, const FissionLeaf*>> out;

    ExactScalar take_prime() {
        auto is_prime = [](std::uint64_t p) {
            for (std::uint64_t d = 2; d * d <= p; ++d) {
                if (p % d == 0) return false;
            }
            return true;
        };
        std::uint64_t p = next_prime;
        next_prime = p + 1;
        while (!is_prime(next_prime)) ++next_prime;
        return ExactScalar::from_rat(Rat(static_cast<unsigned long>(p)));
    }

    void walk(const TreeNode& n, std::map<Rat, ExactScalar> terms) {
        if (n.kind == TreeNode::Kind::Leaf) {
            out.emplace_back(std::move(terms), &n.leaf);
            return;
        }
        if (n.children.size() == 1) {
            walk(n.children.front(), terms);
            return;
        }
        bool has_leaf = false;
        std::set<Rat> heights;
        for (const auto& c : n.children) {
            if (c.kind == TreeNode::Kind::Leaf) has_leaf = true;
            else heights.insert(c.height);
        }
        // One child may keep a zero coefficient: it must sit at the lowest child height, or the
        // difference to a lower sibling would drop below the gluing exponent.
        bool zero_used = has_leaf;
        for (const auto& c : n.children) {
            if (c.kind == TreeNode::Kind::Leaf) {
                walk(c, terms);
                continue;
            }
            auto next = terms;
            auto below = leaves_of(c);
            bool low = std::all_of(below.begin(), below.end(),
                                   [&](const FissionLeaf* l) { return l->slope < c.height; });
            if (!zero_used && low && c.height == *heights.begin()) {
                zero_used = true;
            } else {
                next[c.height] = take_prime();
            }
            walk(c, std::move(next));
        }
    }
};

}  // namespace

GlobalClass realize(const FissionForest& f) {
    GlobalClass g;
    g.flavor = Flavor::Modified;
    Realizer r;
    long next_point = 0;
    std::vector<const FissionTree*> order;
    for (const auto& t : f.trees) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const FissionTree* a, const FissionTree* b) {
        bool ia = a->point && a->point->infinite;
        bool ib = b->point && b->point->infinite;
        return ia && !ib;
    });
    bool seen_infinity = false;
    for (const auto* t : order) {
        SpherePoint p;
        if (t->point && t->point->infinite) {
            if (seen_infinity) throw Unrealizable("two trees at infinity");
            seen_infinity = true;
            p = SpherePoint::infinity();
        } else {
            p = SpherePoint::finite(Rat(next_point++));
        }
        r.out.clear();
        r.walk(t->root, {});
        LocalClass l{p, {}};
        for (auto& [terms, leaf] : r.out) {
            for (const auto& lv : leaf->levels) terms.emplace(lv, ExactScalar::one());
            Rat top = terms.empty() ? Rat(0) : terms.rbegin()->first;
            if (leaf->slope > top) terms.emplace(leaf->slope, ExactScalar::one());
            std::vector<Term> ts;
            for (const auto& [e, c] : terms) ts.push_back({e, c});
            l.entries.push_back({StokesCircle(ExpFactor(p, ts)), leaf->mult, leaf->cls});
        }
        g.locals.push_back(std::move(l));
    }
    g.normalize();
    return g;
}

}  // namespace wildrep
