#include "wildrep/circle.hpp"

#include <algorithm>
#include <set>

#include "wildrep/errors.hpp"

namespace wildrep {

ExpFactor::ExpFactor(SpherePoint p, std::vector<Term> ts) : point(std::move(p)) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.exp > b.exp; });
    for (auto& t : ts) {
        if (t.exp <= 0) throw SemanticError("exponent must be positive, got " + to_string(t.exp));
        if (!terms.empty() && terms.back().exp == t.exp) {
            terms.back().coeff = scalar_try_add(terms.back().coeff, t.coeff);
        } else {
            terms.push_back(t);
        }
    }
    std::erase_if(terms, [](const Term& t) { return t.coeff.is_zero(); });
}

ExactScalar ExpFactor::coeff_at(const Rat& e) const {
    for (const auto& t : terms) {
        if (t.exp == e) return t.coeff;
    }
    return ExactScalar::zero();
}

std::string ExpFactor::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        ExactScalar c = t.coeff;
        bool negative = c.to_rat() && *c.to_rat() < 0;
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        if (negative) c = -c;
        if (c != ExactScalar::one()) out += c.str() + "*";
        out += "x";
        if (t.exp != 1) out += "^(" + to_string(t.exp) + ")";
    }
    return out;
}

std::int64_t ram(const ExpFactor& q) {
    std::int64_t r = 1;
    for (const auto& t : q.terms) r = lcm64(r, den_of(t.exp));
    return r;
}

Rat slope(const ExpFactor& q) { return q.terms.empty() ? Rat(0) : q.terms.front().exp; }

std::int64_t irr(const ExpFactor& q) { return num_of(Rat(slope(q) * ram(q))); }

ExpFactor conjugate(const ExpFactor& q, std::int64_t r, std::int64_t j) {
    ExpFactor out = q;
    for (auto& t : out.terms) {
        Rat n = t.exp * r;
        t.coeff = scalar_mul(t.coeff, ExactScalar::phase(-Rat(j) * n / r));
    }
    return out;
}

namespace {

bool lex_less(const ExpFactor& a, const ExpFactor& b) {
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].coeff != b.terms[i].coeff) return a.terms[i].coeff < b.terms[i].coeff;
    }
    return false;
}

}  // namespace

StokesCircle::StokesCircle(const ExpFactor& q) : rep_(q) {
    std::int64_t r = ram(q);
    for (std::int64_t j = 1; j < r; ++j) {
        ExpFactor c = conjugate(q, r, j);
        if (lex_less(c, rep_)) rep_ = c;
    }
}

std::int64_t ram(const StokesCircle& c) { return ram(c.rep()); }
Rat slope(const StokesCircle& c) { return slope(c.rep()); }
std::int64_t irr(const StokesCircle& c) { return irr(c.rep()); }

ExpFactor conjugate(const StokesCircle& c, std::int64_t j) { return conjugate(c.rep(), ram(c), j); }

std::vector<Rat> levels(const StokesCircle& c) {
    std::int64_t r = ram(c);
    std::set<Rat, std::greater<>> found;
    for (std::int64_t j = 1; j < r; ++j) {
        for (const auto& t : c.rep().terms) {
            std::int64_t n = num_of(Rat(t.exp * r));
            if ((j * n) % r != 0) {
                found.insert(t.exp);
                break;
            }
        }
    }
    return {found.begin(), found.end()};
}

std::vector<Rat> increasing_denominator_subset(const std::vector<Rat>& exps_desc) {
    std::vector<Rat> out;
    std::int64_t cur = 1;
    for (const auto& e : exps_desc) {
        std::int64_t next = lcm64(cur, den_of(e));
        if (next > cur) {
            out.push_back(e);
            cur = next;
        }
    }
    return out;
}

std::int64_t final_denominator(const std::vector<Rat>& lv) {
    std::int64_t r = 1;
    for (const auto& l : lv) r = lcm64(r, den_of(l));
    return r;
}

StokesCircle truncate(const StokesCircle& c, const Rat& cutoff, Cut mode) {
    std::vector<Term> kept;
    for (const auto& t : c.rep().terms) {
        bool keep = false;
        switch (mode) {
            case Cut::Geq: keep = t.exp >= cutoff; break;
            case Cut::Gt: keep = t.exp > cutoff; break;
            case Cut::Leq: keep = t.exp <= cutoff; break;
            case Cut::Lt: keep = t.exp < cutoff; break;
        }
        if (keep) kept.push_back(t);
    }
    return StokesCircle(ExpFactor(c.point(), kept));
}

bool circle_eq(const StokesCircle& a, const StokesCircle& b) {
    if (a.point() != b.point() || ram(a) != ram(b)) return false;
    if (a.rep().terms.size() != b.rep().terms.size()) return false;
    std::int64_t r = ram(b);
    for (std::int64_t j = 0; j < r; ++j) {
        if (conjugate(b, j).terms == a.rep().terms) return true;
    }
    return false;
}

Rat slope_of_difference(const ExpFactor& a, const ExpFactor& b) {
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].exp > b.terms[j].exp)) {
            return a.terms[i].exp;
        }
        if (i == a.terms.size() || b.terms[j].exp > a.terms[i].exp) return b.terms[j].exp;
        if (a.terms[i].coeff != b.terms[j].coeff) return a.terms[i].exp;
        ++i;
        ++j;
    }
    return 0;
}

namespace {

void require_same_point(const StokesCircle& a, const StokesCircle& b) {
    if (a.point() != b.point()) {
        throw DifferentPoints("circles at " + a.point().str() + " and " + b.point().str());
    }
}

}  // namespace

CommonPart common_part(const StokesCircle& a, const StokesCircle& b) {
    require_same_point(a, b);
    Rat step = Rat(1) / Rat(ram(a) * ram(b));
    std::set<Rat> candidates{Rat(0)};
    for (const auto* c : {&a, &b}) {
        for (const auto& t : c->rep().terms) candidates.insert(next_multiple_above(t.exp, step));
    }
    for (const auto& k : candidates) {
        StokesCircle ta = truncate(a, k, Cut::Geq);
        if (circle_eq(ta, truncate(b, k, Cut::Geq))) return {ta, k, !ta.is_tame()};
    }
    throw std::logic_error("common_part: no cutoff found");
}

Rat fission_exponent(const StokesCircle& a, const StokesCircle& b) {
    CommonPart cp = common_part(a, b);
    return std::max(slope(truncate(a, cp.cutoff, Cut::Lt)), slope(truncate(b, cp.cutoff, Cut::Lt)));
}

std::int64_t irr_hom(const StokesCircle& a, const StokesCircle& b) {
    require_same_point(a, b);
    Rat total = 0;
    for (std::int64_t i = 0; i < ram(a); ++i) {
        ExpFactor ca = conjugate(a, i);
        for (std::int64_t j = 0; j < ram(b); ++j) total += slope_of_difference(ca, conjugate(b, j));
    }
    if (!is_integer(total)) throw std::logic_error("irr_hom: non-integral total " + to_string(total));
    return num_of(total);
}

}  // namespace wildrep
