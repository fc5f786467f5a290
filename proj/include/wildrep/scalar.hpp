#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "wildrep/rational.hpp"

namespace wildrep {

/// Exact complex number of the form prod(p^e_p) * exp(2*pi*i*turn), or zero.
class ExactScalar {
public:
    ExactScalar() = default;  // zero

    static ExactScalar zero() { return {}; }
    static ExactScalar one();
    static ExactScalar from_rat(const Rat& r);
    /// exp(2*pi*i*t).
    static ExactScalar phase(const Rat& t);
    static ExactScalar make(std::map<std::uint64_t, Rat> magnitude, const Rat& turn);

    bool is_zero() const { return zero_; }
    const std::map<std::uint64_t, Rat>& magnitude() const { return mag_; }
    const Rat& turn() const { return turn_; }

    /// The value as a rational, when it is one.
    std::optional<Rat> to_rat() const;

    ExactScalar operator-() const;
    std::string str() const;

    friend bool operator==(const ExactScalar& a, const ExactScalar& b);
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
    /// Total order: zero first, then (turn, magnitude) lexicographically.
    friend bool operator<(const ExactScalar& a, const ExactScalar& b);

private:
    bool zero_ = true;
    std::map<std::uint64_t, Rat> mag_;
    Rat turn_ = 0;
};

ExactScalar scalar_mul(const ExactScalar& x, const ExactScalar& y);
ExactScalar scalar_pow(const ExactScalar& x, const Rat& e);
ExactScalar scalar_inv(const ExactScalar& x);
/// Exact sum when it stays in the representable group; throws NotRepresentable otherwise.
ExactScalar scalar_try_add(const ExactScalar& x, const ExactScalar& y);
ExactScalar scalar_sub(const ExactScalar& x, const ExactScalar& y);

/// A point of the Riemann sphere.
struct SpherePoint {
    bool infinite = true;
    ExactScalar value;

    static SpherePoint infinity() { return {}; }
    static SpherePoint finite(const ExactScalar& v) { return {false, v}; }
    static SpherePoint finite(const Rat& v) { return {false, ExactScalar::from_rat(v)}; }

    std::string str() const;
    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator!=(const SpherePoint& a, const SpherePoint& b) { return !(a == b); }
    /// Infinity first, then finite points by scalar order.
    friend bool operator<(const SpherePoint& a, const SpherePoint& b);
};

}  // namespace wildrep
