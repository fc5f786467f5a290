#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wildrep/rational.hpp"
#include "wildrep/scalar.hpp"

namespace wildrep {

/// One monomial c * x^exp of an exponential factor; x is z at infinity and 1/(z-a) at a.
struct Term {
    Rat exp;
    ExactScalar coeff;
    friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
};

/// q = sum c_i x^{k_i} anchored at a point; exponents strictly decreasing, no zero coefficients.
struct ExpFactor {
    SpherePoint point;
    std::vector<Term> terms;

    ExpFactor() = default;
    /// Sorts, merges equal exponents and drops zero coefficients.
    ExpFactor(SpherePoint p, std::vector<Term> ts);

    bool is_tame() const { return terms.empty(); }
    /// Coefficient of x^e (zero when absent).
    ExactScalar coeff_at(const Rat& e) const;
    std::string str() const;

    friend bool operator==(const ExpFactor& a, const ExpFactor& b) {
        return a.point == b.point && a.terms == b.terms;
    }
};

std::int64_t ram(const ExpFactor& q);
Rat slope(const ExpFactor& q);
std::int64_t irr(const ExpFactor& q);

/// Galois orbit of an exponential factor, stored through its canonical representative.
class StokesCircle {
public:
    StokesCircle() = default;
    explicit StokesCircle(const ExpFactor& q);

    const ExpFactor& rep() const { return rep_; }
    const SpherePoint& point() const { return rep_.point; }
    bool is_tame() const { return rep_.is_tame(); }
    std::string str() const { return rep_.str(); }

    friend bool operator==(const StokesCircle& a, const StokesCircle& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const StokesCircle& a, const StokesCircle& b) { return !(a == b); }

private:
    ExpFactor rep_;
};

std::int64_t ram(const StokesCircle& c);
Rat slope(const StokesCircle& c);
std::int64_t irr(const StokesCircle& c);

/// j-th Galois conjugate: each coefficient of x^{n/r} picks up exp(-2 pi i j n / r).
ExpFactor conjugate(const ExpFactor& q, std::int64_t r, std::int64_t j);
ExpFactor conjugate(const StokesCircle& c, std::int64_t j);

/// Levels by brute force over conjugate differences, decreasing.
std::vector<Rat> levels(const StokesCircle& c);

/// Subset of a decreasing exponent list where the running lcm of denominators strictly grows.
std::vector<Rat> increasing_denominator_subset(const std::vector<Rat>& exps_desc);

/// lcm of the denominators of a level list (1 when empty).
std::int64_t final_denominator(const std::vector<Rat>& levels);

enum class Cut { Geq, Gt, Leq, Lt };
StokesCircle truncate(const StokesCircle& c, const Rat& cutoff, Cut mode);

bool circle_eq(const StokesCircle& a, const StokesCircle& b);

/// Largest exponent at which the two factors' coefficients differ; 0 if equal.
Rat slope_of_difference(const ExpFactor& a, const ExpFactor& b);

struct CommonPart {
    StokesCircle circle;
    Rat cutoff;
    bool has_common;
};

CommonPart common_part(const StokesCircle& a, const StokesCircle& b);
Rat fission_exponent(const StokesCircle& a, const StokesCircle& b);
/// Irregularity of Hom(a, b): sum over conjugate pairs of the slope of the difference.
std::int64_t irr_hom(const StokesCircle& a, const StokesCircle& b);

}  // namespace wildrep
