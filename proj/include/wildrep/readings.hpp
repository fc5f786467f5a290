#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wildrep/sl2.hpp"

namespace wildrep {

/// One height-2 vertex of an enriched tree together with the Fourier sphere value of its circles.
struct PrincipalSubtree {
    ExactScalar lambda;
    TreeNode vertex;
};

struct EnrichedTree {
    std::vector<PrincipalSubtree> groups;  // ordered by canonical form, then lambda

    int k() const { return static_cast<int>(groups.size()); }
    /// Formal root with the k principal subtrees attached.
    FissionTree tree() const;
};

/// Leaf of a principal subtree with its derived flags, in depth-first order.
struct LeafRole {
    const FissionLeaf* leaf = nullptr;
    bool plus_member = false;      // ancestor strictly between heights 1 and 2
    std::optional<int> b_class;    // index of the height-1 child holding the leaf
};

std::vector<LeafRole> leaf_roles(const TreeNode& principal);

EnrichedTree enriched_tree(const ShapeClass& generic);
EnrichedTree enriched_tree(const GlobalClass& g);

std::string canonical_form(const EnrichedTree& t, bool with_eigenvalues = false);

struct ReadingLabel {
    int index = 0;  // 0 for the generic reading, i >= 1 for the i-th nongeneric one

    bool generic() const { return index == 0; }
    std::string str() const;
};

struct Reading {
    ReadingLabel label;
    FissionForest forest;
    int rank = 0;
    int finite_sings = 0;
    int total_sings() const { return finite_sings + 1; }
};

std::vector<Reading> readings(const EnrichedTree& t);
int reading_rank(const EnrichedTree& t, const ReadingLabel& label);
int finite_singularities(const EnrichedTree& t, int i);
int distinct_forest_count(const EnrichedTree& t);

/// Forest of the reading obtained by twisting `lambda` to zero and applying Fourier to concrete shapes.
FissionForest reading_forest_from_shapes(const ShapeClass& generic, const ExactScalar& lambda);
/// Rank at infinity of a forest: sum of mult * ram over the leaves of its infinite tree.
int forest_rank(const FissionForest& f);

}  // namespace wildrep
