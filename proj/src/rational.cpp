#include "wildrep/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace wildrep {

Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    Rat r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

std::int64_t den_of(const Rat& r) {
    if (!r.get_den().fits_slong_p()) throw std::overflow_error("denominator too large");
    return r.get_den().get_si();
}

std::int64_t num_of(const Rat& r) {
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("numerator too large");
    return r.get_num().get_si();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat floor_rat(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(q);
}

Rat frac(const Rat& r) { return r - floor_rat(r); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Rat next_multiple_above(const Rat& x, const Rat& step) {
    Rat m = floor_rat(x / step) + 1;
    return m * step;
}

}  // namespace wildrep
