#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wildrep/formal.hpp"

namespace wildrep {

/// One leaf of a fission datum. `slope` is carried along for realization and diagrams
/// but is not part of the admissible-deformation class.
struct FissionLeaf {
    int mult = 1;
    ConjClass cls;
    std::vector<Rat> levels;  // decreasing
    Rat slope = 0;

    std::int64_t ram() const { return final_denominator(levels); }
};

struct FissionDatum {
    std::vector<FissionLeaf> entries;
    std::vector<std::vector<Rat>> f;  // symmetric, zero diagonal
};

FissionDatum fission_datum(const LocalClass& l);

/// Heights a circle with these levels may carry, decreasing, all <= upto.
std::vector<Rat> possible_exponents(const std::vector<Rat>& levels, const Rat& upto);

struct TreeNode {
    enum class Kind { Root, Vertex, Leaf };
    Kind kind = Kind::Root;
    Rat height = 0;          // vertices only
    bool mandatory = false;  // vertex height is a level of the branch
    std::vector<TreeNode> children;
    FissionLeaf leaf;        // leaves only
};

struct FissionTree {
    TreeNode root;
    std::optional<SpherePoint> point;
    /// Height of the highest vertex, 0 for a bare root.
    Rat top() const;
};

struct FissionForest {
    std::vector<FissionTree> trees;
};

/// Builds the tree; with `top` set, branches stop at that height.
FissionTree build_tree(const FissionDatum& d, std::optional<Rat> top = std::nullopt);
FissionForest forest_of(const GlobalClass& g);

/// Leaves in depth-first order with fission exponents read back from gluing heights.
FissionDatum read_datum(const FissionTree& t);
std::vector<const FissionLeaf*> leaves_of(const TreeNode& n);

/// Deterministic serialization; eigenvalue names are included only on request.
std::string canonical_form(const TreeNode& n, bool with_eigenvalues = false);
std::string canonical_form(const FissionTree& t, bool with_eigenvalues = false);
std::string canonical_form(const FissionForest& f, bool with_eigenvalues = false);
bool is_isomorphic(const FissionForest& a, const FissionForest& b);

/// Concrete modified class whose forest is isomorphic to `f`.
GlobalClass realize(const FissionForest& f);

}  // namespace wildrep
