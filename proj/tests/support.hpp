#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "wildrep/errors.hpp"
#include "wildrep/readings.hpp"
#include "wildrep/report.hpp"

namespace wildrep::testing {

inline Rat R(long n, long d = 1) { return make_rat(n, d); }
inline ExactScalar S(long n, long d = 1) { return ExactScalar::from_rat(make_rat(n, d)); }

struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    bool coin() { return uniform(0, 1) == 1; }

    Rat small_rat(bool allow_zero = false) {
        for (;;) {
            Rat r = make_rat(uniform(-4, 4), uniform(1, 3));
            if (allow_zero || r != 0) return r;
        }
    }

    /// Exponent with denominator <= max_den in (0, top].
    Rat exponent(int max_den, const Rat& top) {
        for (;;) {
            int d = uniform(1, max_den);
            Rat e = make_rat(uniform(1, 4 * d), d);
            if (e <= top) return e;
        }
    }

    ExpFactor factor(const SpherePoint& p, int max_terms = 3, int max_den = 6, Rat top = R(4)) {
        std::vector<Term> ts;
        int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i) ts.push_back({exponent(max_den, top), ExactScalar::from_rat(small_rat())});
        return ExpFactor(p, ts);
    }

    /// A pair sharing a random prefix, so that common parts are frequent.
    std::pair<ExpFactor, ExpFactor> related_pair(const SpherePoint& p) {
        ExpFactor a = factor(p);
        std::vector<Term> shared;
        for (const auto& t : a.terms) {
            if (coin()) shared.push_back(t);
        }
        ExpFactor tail = factor(p, 2, 6, R(2));
        std::vector<Term> bt = shared;
        for (const auto& t : tail.terms) bt.push_back(t);
        return {a, ExpFactor(p, bt)};
    }

    ConjClass symbolic_class(int dim, int& counter) {
        std::vector<std::pair<EigVal, std::vector<int>>> spec;
        int left = dim;
        while (left > 0) {
            int b = uniform(1, left);
            spec.push_back({EigVal::symbol("e" + std::to_string(counter++)), {b}});
            left -= b;
        }
        return ConjClass(std::move(spec));
    }

    LocalClass local(const SpherePoint& p, int max_circles, int& counter, Rat top = R(4)) {
        LocalClass l{p, {}};
        int n = uniform(1, max_circles);
        std::vector<StokesCircle> seen;
        for (int i = 0; i < n; ++i) {
            StokesCircle c(factor(p, 3, 6, top));
            if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
            seen.push_back(c);
            int mult = uniform(1, 2);
            l.entries.push_back({c, mult, symbolic_class(mult, counter)});
        }
        return l;
    }

    /// Random compatible modified class: at most 3 circles per point, denominators <= 6.
    GlobalClass global(int max_finite = 2) {
        for (;;) {
            int counter = 0;
            GlobalClass g;
            g.locals.push_back(local(SpherePoint::infinity(), 3, counter));
            int m = uniform(0, max_finite);
            for (int i = 0; i < m; ++i) g.locals.push_back(local(SpherePoint::finite(R(i)), 2, counter, R(2)));
            try {
                g.normalize();
            } catch (const Error&) {
                continue;
            }
            if (is_compatible(g) && rank_at(g, SpherePoint::infinity()) >= 2) return g;
        }
    }

    Sl2Elem sl2() {
        ElementaryWord w = word(uniform(1, 5));
        return word_matrix(w);
    }

    ElementaryWord word(int len) {
        ElementaryWord w;
        for (int i = 0; i < len; ++i) {
            switch (uniform(0, 2)) {
                case 0: w.push_back(Elementary::twist(small_rat(true))); break;
                case 1: w.push_back(Elementary::scale(small_rat())); break;
                default: w.push_back(Elementary::fourier()); break;
            }
        }
        return w;
    }
};

/// Levels by counting distinct conjugates of truncations, independent of the scan in the library.
inline std::vector<Rat> levels_oracle(const StokesCircle& c) {
    const auto& q = c.rep();
    std::int64_t r = ram(q);
    std::vector<Rat> out;
    auto count_at = [&](const Rat& cut, bool strict) {
        std::set<std::string> seen;
        for (std::int64_t j = 0; j < r; ++j) {
            std::vector<Term> ts;
            for (const auto& t : conjugate(q, r, j).terms) {
                if (strict ? t.exp > cut : t.exp >= cut) ts.push_back(t);
            }
            seen.insert(ExpFactor(q.point, ts).str());
        }
        return seen.size();
    };
    for (const auto& t : q.terms) {
        if (count_at(t.exp, false) > count_at(t.exp, true)) out.push_back(t.exp);
    }
    return out;
}

/// Every slope of a difference between conjugates of a and b.
inline std::set<Rat> slope_set_oracle(const StokesCircle& a, const StokesCircle& b) {
    std::set<Rat> out;
    for (std::int64_t i = 0; i < ram(a); ++i) {
        for (std::int64_t j = 0; j < ram(b); ++j) out.insert(slope_of_difference(conjugate(a, i), conjugate(b, j)));
    }
    return out;
}

inline bool same_shapes(const ShapeClass& x, const ShapeClass& y) {
    if (x.entries.size() != y.entries.size()) return false;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        const auto& a = x.entries[i];
        const auto& b = y.entries[i];
        if (a.shape.point != b.shape.point || a.shape.quad != b.shape.quad || a.shape.linear != b.shape.linear ||
            a.shape.deep.levels != b.shape.deep.levels || a.shape.deep.ram != b.shape.deep.ram ||
            a.shape.deep.slope != b.shape.deep.slope || a.mult != b.mult || !(a.cls == b.cls)) {
            return false;
        }
        for (std::size_t j = 0; j < x.entries.size(); ++j) {
            if (x.pairs[i][j].has_value() != y.pairs[i][j].has_value()) return false;
            if (x.pairs[i][j] && (x.pairs[i][j]->fission != y.pairs[i][j]->fission ||
                                  x.pairs[i][j]->common_levels != y.pairs[i][j]->common_levels)) {
                return false;
            }
        }
    }
    return true;
}

inline std::multiset<std::pair<int, int>> table_of(const Report& r) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& rd : r.readings) out.insert({rd.rank, rd.total_sings()});
    return out;
}

}  // namespace wildrep::testing
