#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wildrep/circle.hpp"

namespace wildrep {

/// Eigenvalue of a formal monodromy: an exact scalar or a named symbol up to sign.
class EigVal {
public:
    static EigVal exact(const ExactScalar& v);
    static EigVal symbol(const std::string& name, int sign = 1);

    bool is_symbolic() const { return symbolic_; }
    const ExactScalar& value() const { return value_; }
    const std::string& name() const { return name_; }
    int sign() const { return sign_; }
    bool is_one() const { return !symbolic_ && value_ == ExactScalar::one(); }

    EigVal negated() const;
    /// Product with gamma; a symbol may only meet +-1.
    EigVal scaled(const EigVal& gamma) const;

    /// Canonical ordering key.
    std::string key() const;
    /// DSL spelling: a rational or a token, with a leading '-' for a flipped symbol.
    std::string str() const;

    friend bool operator==(const EigVal& a, const EigVal& b) { return a.key() == b.key(); }

private:
    bool symbolic_ = false;
    ExactScalar value_;
    std::string name_;
    int sign_ = 1;
};

/// Conjugacy class in GL_dim given by Jordan block sizes per eigenvalue.
struct ConjClass {
    int dim = 0;
    std::vector<std::pair<EigVal, std::vector<int>>> spectrum;

    ConjClass() = default;
    /// Sorts eigenvalues by key, blocks decreasing, merges repeats; dim is the block total.
    explicit ConjClass(std::vector<std::pair<EigVal, std::vector<int>>> spec);

    static ConjClass identity(int n);

    int unipotent_block_count() const;
    ConjClass negated() const;
    ConjClass scaled(const EigVal& gamma) const;
    /// Block structure with eigenvalue identities forgotten, e.g. "[1][1]".
    std::string shape_key() const;
    std::string str() const;

    friend bool operator==(const ConjClass& a, const ConjClass& b) { return a.str() == b.str(); }
};

ConjClass child(const ConjClass& c);
ConjClass parent(const ConjClass& c, int target_dim);

struct LocalEntry {
    StokesCircle circle;
    int mult = 1;
    ConjClass cls;
};

struct LocalClass {
    SpherePoint point;
    std::vector<LocalEntry> entries;
};

enum class Flavor { Modified, Unmodified };

struct GlobalClass {
    std::vector<LocalClass> locals;  // infinity first, then finite points in scalar order
    Flavor flavor = Flavor::Modified;

    /// Sorts points, checks distinctness, circle distinctness and class dimensions.
    void normalize();
    const LocalClass* at(const SpherePoint& p) const;
};

int rank_at(const LocalClass& l);
int rank_at(const GlobalClass& g, const SpherePoint& p);
bool is_compatible(const GlobalClass& g);
GlobalClass modify(const GlobalClass& g);
GlobalClass unmodify(const GlobalClass& g);
GlobalClass formal_twist(const GlobalClass& g, const SpherePoint& a, const ExpFactor& q0,
                         const EigVal& gamma);

}  // namespace wildrep
