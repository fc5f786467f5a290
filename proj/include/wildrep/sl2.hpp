#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wildrep/fission.hpp"

namespace wildrep {

struct Sl2Elem {
    Rat a = 1, b = 0, c = 0, d = 1;

    Sl2Elem() = default;
    /// Throws std::invalid_argument unless ad - bc = 1.
    Sl2Elem(Rat a_, Rat b_, Rat c_, Rat d_);

    friend Sl2Elem operator*(const Sl2Elem& x, const Sl2Elem& y);
    friend bool operator==(const Sl2Elem& x, const Sl2Elem& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

struct Elementary {
    enum class Kind { Twist, Scale, Fourier };
    Kind kind = Kind::Fourier;
    Rat param = 0;

    static Elementary twist(const Rat& l) { return {Kind::Twist, l}; }
    static Elementary scale(const Rat& v);
    static Elementary fourier() { return {Kind::Fourier, 0}; }
    Sl2Elem matrix() const;
    std::string str() const;
};

/// Elementary steps in the order they are applied.
using ElementaryWord = std::vector<Elementary>;

/// Matrix of the composite: later steps multiply on the left.
Sl2Elem word_matrix(const ElementaryWord& w);
/// Word whose matrix is A: [T(b/a), S(a)] when c = 0, else [T(d/c), S(-c), F, T(a/c)].
/// S(v) has matrix diag(v, 1/v), matching its action x -> v x at infinity.
ElementaryWord sl2_factor(const Sl2Elem& A);
std::string word_str(const ElementaryWord& w);

SpherePoint homography(const Sl2Elem& A, const SpherePoint& p);

/// Numerical data of a circle's part other than its x^2 and x terms (at a finite point, all of it).
struct DeepData {
    std::vector<Rat> levels;
    std::int64_t ram = 1;
    Rat slope = 0;

    std::int64_t irr() const;
    bool is_tame() const { return slope == 0; }
};

struct CircleShape {
    SpherePoint point;
    ExactScalar quad;    // x^2 coefficient, infinity only
    ExactScalar linear;  // x coefficient, infinity only
    DeepData deep;

    Rat total_slope() const;
    std::int64_t total_irr() const;
};

struct ShapeEntry {
    CircleShape shape;
    int mult = 1;
    ConjClass cls;
};

struct PairData {
    Rat fission;
    std::vector<Rat> common_levels;
};

/// Deformation-class data of a modified class, with pairwise data for circles sharing a point.
struct ShapeClass {
    std::vector<ShapeEntry> entries;
    std::vector<std::vector<std::optional<PairData>>> pairs;
};

ShapeClass shape_of(const GlobalClass& g);
FissionForest shape_forest(const ShapeClass& s);
int shape_rank_at_infinity(const ShapeClass& s);

ShapeClass twist(const ShapeClass& s, const Rat& lambda);
ShapeClass scale(const ShapeClass& s, const Rat& v);
/// A lone rank-one circle of slope <= 1 at infinity, on which Fourier is undefined.
bool is_excluded_rank_one(const ShapeClass& s);
ShapeClass fourier(const ShapeClass& s);
ShapeClass apply_word(const ShapeClass& s, const ElementaryWord& w);
ShapeClass apply_sl2(const ShapeClass& s, const Sl2Elem& A);

/// Levels after rescaling by `factor` and gaining top exponent `new_slope`.
std::vector<Rat> transformed_levels(const std::vector<Rat>& lv, const Rat& factor, const Rat& new_slope);

SpherePoint lambda_coeff(const CircleShape& s);

struct Genericized {
    ShapeClass shapes;
    ElementaryWord word;
};

Genericized genericize(const ShapeClass& s);
Genericized genericize(const GlobalClass& g);

}  // namespace wildrep
