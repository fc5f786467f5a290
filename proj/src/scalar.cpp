#include "wildrep/scalar.hpp"

#include <tuple>

#include "wildrep/errors.hpp"

namespace wildrep {

namespace {

void factor_into(mpz_class n, int sign, std::map<std::uint64_t, Rat>& out) {
    if (n < 0) n = -n;
    for (unsigned long d = 2; d < 1000000 && mpz_class(d) * d <= n; ++d) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
            out[d] += sign;
            n /= d;
        }
    }
    if (n > 1) {
        if (!n.fits_ulong_p() || mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
            throw NotRepresentable("cannot factor " + n.get_str());
        }
        out[n.get_ui()] += sign;
    }
}

void drop_zero_exponents(std::map<std::uint64_t, Rat>& m) {
    for (auto it = m.begin(); it != m.end();) {
        it = (it->second == 0) ? m.erase(it) : std::next(it);
    }
}

}  // namespace

ExactScalar ExactScalar::one() { return make({}, 0); }

ExactScalar ExactScalar::phase(const Rat& t) { return make({}, t); }

ExactScalar ExactScalar::make(std::map<std::uint64_t, Rat> magnitude, const Rat& turn) {
    ExactScalar s;
    s.zero_ = false;
    drop_zero_exponents(magnitude);
    s.mag_ = std::move(magnitude);
    s.turn_ = frac(turn);
    return s;
}

ExactScalar ExactScalar::from_rat(const Rat& r) {
    if (r == 0) return zero();
    std::map<std::uint64_t, Rat> m;
    factor_into(r.get_num(), 1, m);
    factor_into(r.get_den(), -1, m);
    return make(std::move(m), r < 0 ? make_rat(1, 2) : Rat(0));
}

std::optional<Rat> ExactScalar::to_rat() const {
    if (zero_) return Rat(0);
    if (turn_ != 0 && turn_ != make_rat(1, 2)) return std::nullopt;
    Rat v = 1;
    for (const auto& [p, e] : mag_) {
        if (!is_integer(e)) return std::nullopt;
        mpz_class pe;
        long k = num_of(e);
        mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
        v = (k < 0) ? Rat(v / pe) : Rat(v * pe);
    }
    if (turn_ != 0) v = -v;
    return v;
}

ExactScalar ExactScalar::operator-() const {
    if (zero_) return *this;
    return make(mag_, turn_ + make_rat(1, 2));
}

std::string ExactScalar::str() const {
    if (auto r = to_rat()) return to_string(*r);
    std::string out;
    for (const auto& [p, e] : mag_) {
        if (!out.empty()) out += "*";
        out += std::to_string(p) + "^(" + to_string(e) + ")";
    }
    if (turn_ != 0) {
        if (!out.empty()) out += "*";
        out += "e(" + to_string(turn_) + ")";
    }
    return out;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.turn_ == b.turn_ && a.mag_ == b.mag_;
}

bool operator<(const ExactScalar& a, const ExactScalar& b) {
    if (a.zero_ || b.zero_) return a.zero_ && !b.zero_;
    if (a.turn_ != b.turn_) return a.turn_ < b.turn_;
    return a.mag_ < b.mag_;
}

ExactScalar scalar_mul(const ExactScalar& x, const ExactScalar& y) {
    if (x.is_zero() || y.is_zero()) return ExactScalar::zero();
    auto m = x.magnitude();
    for (const auto& [p, e] : y.magnitude()) m[p] += e;
    return ExactScalar::make(std::move(m), x.turn() + y.turn());
}

ExactScalar scalar_pow(const ExactScalar& x, const Rat& e) {
    if (x.is_zero()) {
        if (e <= 0) throw NotRepresentable("zero raised to a non-positive power");
        return x;
    }
    auto m = x.magnitude();
    for (auto& [p, k] : m) k *= e;
    return ExactScalar::make(std::move(m), x.turn() * e);
}

ExactScalar scalar_inv(const ExactScalar& x) { return scalar_pow(x, -1); }

ExactScalar scalar_try_add(const ExactScalar& x, const ExactScalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x == y) return scalar_mul(x, ExactScalar::from_rat(2));
    if (x == -y) return ExactScalar::zero();
    auto a = x.to_rat();
    auto b = y.to_rat();
    if (a && b) return ExactScalar::from_rat(*a + *b);
    throw NotRepresentable("sum " + x.str() + " + " + y.str() + " leaves the coefficient group");
}

ExactScalar scalar_sub(const ExactScalar& x, const ExactScalar& y) { return scalar_try_add(x, -y); }

std::string SpherePoint::str() const { return infinite ? "inf" : value.str(); }

bool operator<(const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite || b.infinite) return a.infinite && !b.infinite;
    return a.value < b.value;
}

}  // namespace wildrep
