#include "wildrep/readings.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wildrep/errors.hpp"

namespace wildrep {

FissionTree EnrichedTree::tree() const {
    FissionTree t;
    t.point = SpherePoint::infinity();
    for (const auto& g : groups) t.root.children.push_back(g.vertex);
    return t;
}

namespace {

void roles_below(const TreeNode& n, bool plus, std::optional<int> b, std::vector<LeafRole>& out) {
    if (n.kind == TreeNode::Kind::Leaf) {
        out.push_back({&n.leaf, plus, b});
        return;
    }
    bool here = plus || (n.kind == TreeNode::Kind::Vertex && n.height > 1 && n.height < 2);
    for (const auto& c : n.children) roles_below(c, here, b, out);
}

/// Deep slope of a leaf in generic position: its top level, or 0 when tame.
Rat lead_level(const FissionLeaf& l) { return l.levels.empty() ? Rat(0) : l.levels.front(); }

std::vector<std::vector<Rat>> fission_of(const TreeNode& principal) {
    FissionTree t;
    t.root.children.push_back(principal);
    return read_datum(t).f;
}

}  // namespace

std::vector<LeafRole> leaf_roles(const TreeNode& principal) {
    std::vector<LeafRole> out;
    int b = 0;
    for (const auto& c : principal.children) {
        std::optional<int> cls;
        if (c.kind == TreeNode::Kind::Vertex && c.height == 1) cls = b++;
        roles_below(c, false, cls, out);
    }
    return out;
}

EnrichedTree enriched_tree(const ShapeClass& s) {
    std::vector<std::pair<ExactScalar, std::vector<std::size_t>>> buckets;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const auto& sh = s.entries[i].shape;
        SpherePoint l = lambda_coeff(sh);
        if (l.infinite) throw NotRepresentable("class is not of generic form");
        auto it = std::find_if(buckets.begin(), buckets.end(), [&](const auto& b) { return b.first == l.value; });
        if (it == buckets.end()) buckets.push_back({l.value, {i}});
        else it->second.push_back(i);
    }
    EnrichedTree t;
    for (const auto& [lambda, idx] : buckets) {
        FissionDatum d;
        for (auto i : idx) {
            const auto& e = s.entries[i];
            Rat lower = e.shape.deep.slope;
            if (!e.shape.linear.is_zero()) lower = std::max(lower, Rat(1));
            d.entries.push_back({e.mult, e.cls, e.shape.deep.levels, lower});
        }
        d.f.assign(idx.size(), std::vector<Rat>(idx.size(), Rat(0)));
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = 0; b < idx.size(); ++b) {
                if (a != b) d.f[a][b] = s.pairs[idx[a]][idx[b]]->fission;
            }
        }
        FissionTree sub = build_tree(d, Rat(2));
        if (sub.root.children.size() != 1 || sub.root.children.front().kind != TreeNode::Kind::Vertex ||
            sub.root.children.front().height != 2) {
            throw Unrealizable("principal subtree does not hang from height 2");
        }
        t.groups.push_back({lambda, std::move(sub.root.children.front())});
    }
    std::stable_sort(t.groups.begin(), t.groups.end(), [](const PrincipalSubtree& a, const PrincipalSubtree& b) {
        auto ca = canonical_form(a.vertex);
        auto cb = canonical_form(b.vertex);
        if (ca != cb) return ca < cb;
        return a.lambda < b.lambda;
    });
    return t;
}

EnrichedTree enriched_tree(const GlobalClass& g) { return enriched_tree(genericize(g).shapes); }

std::string canonical_form(const EnrichedTree& t, bool with_eigenvalues) {
    std::vector<std::string> parts;
    for (const auto& g : t.groups) parts.push_back(canonical_form(g.vertex, with_eigenvalues));
    std::sort(parts.begin(), parts.end());
    std::string out = "E" + std::to_string(t.k()) + ":";
    for (const auto& p : parts) out += p + ";";
    return out;
}

std::string ReadingLabel::str() const { return generic() ? "generic" : "nongeneric " + std::to_string(index); }

namespace {

Rat transformed_fission(const Rat& f, const Rat& ka, const Rat& kb, Rat (*image)(const Rat&)) {
    if (f < std::max(ka, kb)) return f * image(ka) / ka;
    return std::max(image(ka), image(kb));
}

Rat to_finite(const Rat& k) { return k / (1 - k); }
Rat stays_wild(const Rat& k) { return k / (k - 1); }

struct Placed {
    FissionLeaf leaf;
    int group = 0;
    int site = -1;  // -1 for infinity, else b-class
    Rat key;        // slope used by the fission rule
    bool moved = false;
};

FissionLeaf to_finite_leaf(const FissionLeaf& l) {
    FissionLeaf out = l;
    Rat k = lead_level(l);
    if (k == 0) {
        out.cls = l.cls.negated();
        out.slope = 0;
        return out;
    }
    std::int64_t r = l.ram();
    std::int64_t s = num_of(Rat(k * r));
    Rat ns = Rat(s) / Rat(r - s);
    out.levels = transformed_levels(l.levels, Rat(r) / Rat(r - s), ns);
    out.slope = ns;
    if (s % 2) out.cls = l.cls.negated();
    return out;
}

FissionLeaf to_infinity_leaf(const FissionLeaf& l) {
    FissionLeaf out = l;
    Rat k = lead_level(l);
    std::int64_t r = l.ram();
    std::int64_t s = num_of(Rat(k * r));
    Rat ns = Rat(s) / Rat(s - r);
    out.levels = transformed_levels(l.levels, Rat(r) / Rat(s - r), ns);
    out.slope = ns;
    if (s % 2) out.cls = l.cls.negated();
    return out;
}

FissionTree tree_from(const std::vector<FissionLeaf>& leaves, const std::vector<std::vector<Rat>>& f,
                      const SpherePoint& p) {
    FissionTree t = build_tree(FissionDatum{leaves, f});
    t.point = p;
    return t;
}

}  // namespace

int forest_rank(const FissionForest& f) {
    int r = 0;
    for (const auto& t : f.trees) {
        if (!t.point || !t.point->infinite) continue;
        for (const auto* l : leaves_of(t.root)) r += l->mult * static_cast<int>(l->ram());
    }
    return r;
}

std::vector<Reading> readings(const EnrichedTree& t) {
    const int k = t.k();
    std::vector<std::vector<LeafRole>> roles;
    std::vector<std::vector<std::vector<Rat>>> intra;
    for (const auto& g : t.groups) {
        roles.push_back(leaf_roles(g.vertex));
        intra.push_back(fission_of(g.vertex));
    }
    std::vector<Reading> out;

    {
        Reading gen;
        std::vector<FissionLeaf> leaves;
        std::vector<int> owner;
        std::vector<std::size_t> pos;
        for (int g = 0; g < k; ++g) {
            for (std::size_t a = 0; a < roles[g].size(); ++a) {
                FissionLeaf l = *roles[g][a].leaf;
                l.slope = 2;
                leaves.push_back(l);
                owner.push_back(g);
                pos.push_back(a);
            }
        }
        const std::size_t n = leaves.size();
        std::vector<std::vector<Rat>> f(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                f[a][b] = owner[a] == owner[b] ? intra[owner[a]][pos[a]][pos[b]] : Rat(2);
            }
        }
        gen.forest.trees.push_back(tree_from(leaves, f, SpherePoint::infinity()));
        gen.rank = forest_rank(gen.forest);
        gen.finite_sings = 0;
        out.push_back(std::move(gen));
    }

    for (int i = 0; i < k; ++i) {
        std::vector<Placed> placed;
        std::vector<std::size_t> pos;
        for (int g = 0; g < k; ++g) {
            for (std::size_t a = 0; a < roles[g].size(); ++a) {
                const LeafRole& role = roles[g][a];
                Placed p;
                p.group = g;
                if (g != i) {
                    p.leaf = *role.leaf;
                    p.leaf.slope = 2;
                    p.key = 2;
                } else if (lead_level(*role.leaf) > 1) {
                    p.leaf = to_infinity_leaf(*role.leaf);
                    p.key = lead_level(*role.leaf);
                    p.moved = true;
                } else {
                    if (!role.b_class) throw Unrealizable("leaf below height 1 outside every height-1 vertex");
                    p.leaf = to_finite_leaf(*role.leaf);
                    p.key = lead_level(*role.leaf);
                    p.site = *role.b_class;
                    p.moved = true;
                }
                placed.push_back(std::move(p));
                pos.push_back(a);
            }
        }
        Reading rd;
        rd.label.index = i + 1;
        std::set<int> sites;
        for (const auto& p : placed) sites.insert(p.site);
        for (int site : sites) {
            std::vector<std::size_t> idx;
            for (std::size_t a = 0; a < placed.size(); ++a) {
                if (placed[a].site == site) idx.push_back(a);
            }
            std::vector<FissionLeaf> leaves;
            for (auto a : idx) leaves.push_back(placed[a].leaf);
            std::vector<std::vector<Rat>> f(idx.size(), std::vector<Rat>(idx.size(), Rat(0)));
            for (std::size_t x = 0; x < idx.size(); ++x) {
                for (std::size_t y = 0; y < idx.size(); ++y) {
                    if (x == y) continue;
                    const Placed& a = placed[idx[x]];
                    const Placed& b = placed[idx[y]];
                    if (a.group != b.group) {
                        f[x][y] = std::max(a.leaf.slope, b.leaf.slope);
                    } else if (!a.moved) {
                        f[x][y] = intra[a.group][pos[idx[x]]][pos[idx[y]]];
                    } else {
                        Rat f0 = intra[a.group][pos[idx[x]]][pos[idx[y]]];
                        f[x][y] = transformed_fission(f0, a.key, b.key, site < 0 ? stays_wild : to_finite);
                    }
                }
            }
            SpherePoint p = site < 0 ? SpherePoint::infinity() : SpherePoint::finite(Rat(site));
            rd.forest.trees.push_back(tree_from(leaves, f, p));
        }
        rd.rank = forest_rank(rd.forest);
        rd.finite_sings = finite_singularities(t, i + 1);
        out.push_back(std::move(rd));
    }
    return out;
}

int reading_rank(const EnrichedTree& t, const ReadingLabel& label) {
    int r = 0;
    for (int g = 0; g < t.k(); ++g) {
        for (const auto& role : leaf_roles(t.groups[g].vertex)) {
            const FissionLeaf& l = *role.leaf;
            int ram = static_cast<int>(l.ram());
            if (label.generic() || g + 1 != label.index) {
                r += l.mult * ram;
            } else if (role.plus_member) {
                int s = static_cast<int>(num_of(Rat(lead_level(l) * ram)));
                r += l.mult * (s - ram);
            }
        }
    }
    return r;
}

int finite_singularities(const EnrichedTree& t, int i) {
    if (i < 1 || i > t.k()) throw std::out_of_range("reading index out of range");
    int n = 0;
    for (const auto& c : t.groups[i - 1].vertex.children) {
        if (c.kind == TreeNode::Kind::Vertex && c.height == 1) ++n;
    }
    return n;
}

int distinct_forest_count(const EnrichedTree& t) {
    std::set<std::string> forms;
    for (const auto& g : t.groups) forms.insert(canonical_form(g.vertex));
    return 1 + static_cast<int>(forms.size());
}

FissionForest reading_forest_from_shapes(const ShapeClass& generic, const ExactScalar& lambda) {
    auto l = lambda.to_rat();
    if (!l) throw NotRepresentable("twist by a non-rational value " + lambda.str());
    return shape_forest(apply_word(generic, {Elementary::twist(Rat(-*l)), Elementary::fourier()}));
}

}  // namespace wildrep
