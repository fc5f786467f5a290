#include "wildrep/sl2.hpp"

#include <algorithm>
#include <set>

#include "wildrep/errors.hpp"

namespace wildrep {

Sl2Elem::Sl2Elem(Rat a_, Rat b_, Rat c_, Rat d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw std::invalid_argument("determinant is not 1");
}

Sl2Elem operator*(const Sl2Elem& x, const Sl2Elem& y) {
    return Sl2Elem(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
}

Elementary Elementary::scale(const Rat& v) {
    if (v == 0) throw std::invalid_argument("scale parameter must be nonzero");
    return {Kind::Scale, v};
}

Sl2Elem Elementary::matrix() const {
    switch (kind) {
        case Kind::Twist: return Sl2Elem(1, param, 0, 1);
        case Kind::Scale: return Sl2Elem(param, 0, 0, Rat(1) / param);
        case Kind::Fourier: return Sl2Elem(0, 1, -1, 0);
    }
    return {};
}

std::string Elementary::str() const {
    switch (kind) {
        case Kind::Twist: return "T(" + to_string(param) + ")";
        case Kind::Scale: return "S(" + to_string(param) + ")";
        case Kind::Fourier: return "F";
    }
    return "";
}

Sl2Elem word_matrix(const ElementaryWord& w) {
    Sl2Elem m;
    for (const auto& e : w) m = e.matrix() * m;
    return m;
}

ElementaryWord sl2_factor(const Sl2Elem& A) {
    if (A.c == 0) return {Elementary::twist(A.b / A.a), Elementary::scale(A.a)};
    return {Elementary::twist(A.d / A.c), Elementary::scale(-A.c), Elementary::fourier(),
            Elementary::twist(A.a / A.c)};
}

std::string word_str(const ElementaryWord& w) {
    std::string out;
    for (const auto& e : w) out += (out.empty() ? "" : " ") + e.str();
    return out;
}

SpherePoint homography(const Sl2Elem& A, const SpherePoint& p) {
    if (p.infinite) {
        if (A.c == 0) return SpherePoint::infinity();
        return SpherePoint::finite(Rat(A.a / A.c));
    }
    auto z = p.value.to_rat();
    if (!z) throw NotRepresentable("homography of a non-rational point " + p.str());
    Rat den = A.c * *z + A.d;
    if (den == 0) return SpherePoint::infinity();
    return SpherePoint::finite(Rat((A.a * *z + A.b) / den));
}

std::int64_t DeepData::irr() const { return num_of(Rat(slope * ram)); }

Rat CircleShape::total_slope() const {
    Rat s = deep.slope;
    if (point.infinite) {
        if (!quad.is_zero()) s = std::max(s, Rat(2));
        if (!linear.is_zero()) s = std::max(s, Rat(1));
    }
    return s;
}

std::int64_t CircleShape::total_irr() const { return num_of(Rat(total_slope() * deep.ram)); }

namespace {

DeepData deep_of(const ExpFactor& q) {
    DeepData d;
    d.levels = levels(StokesCircle(q));
    d.ram = ram(q);
    d.slope = slope(q);
    return d;
}

}  // namespace

ShapeClass shape_of(const GlobalClass& g) {
    ShapeClass s;
    std::vector<StokesCircle> circles;
    for (const auto& l : g.locals) {
        for (const auto& e : l.entries) {
            CircleShape sh;
            sh.point = l.point;
            const ExpFactor& q = e.circle.rep();
            if (l.point.infinite) {
                sh.quad = q.coeff_at(2);
                sh.linear = q.coeff_at(1);
                std::vector<Term> rest;
                for (const auto& t : q.terms) {
                    if (t.exp != 2 && t.exp != 1) rest.push_back(t);
                }
                sh.deep = deep_of(ExpFactor(l.point, rest));
            } else {
                sh.deep = deep_of(q);
            }
            s.entries.push_back({sh, e.mult, e.cls});
            circles.push_back(e.circle);
        }
    }
    const std::size_t n = circles.size();
    s.pairs.assign(n, std::vector<std::optional<PairData>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || circles[i].point() != circles[j].point()) continue;
            CommonPart cp = common_part(circles[i], circles[j]);
            s.pairs[i][j] = PairData{fission_exponent(circles[i], circles[j]),
                                     cp.has_common ? levels(cp.circle) : std::vector<Rat>{}};
        }
    }
    return s;
}

FissionForest shape_forest(const ShapeClass& s) {
    std::vector<SpherePoint> points;
    for (const auto& e : s.entries) {
        if (std::find(points.begin(), points.end(), e.shape.point) == points.end()) points.push_back(e.shape.point);
    }
    std::sort(points.begin(), points.end());
    FissionForest f;
    for (const auto& p : points) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s.entries.size(); ++i) {
            if (s.entries[i].shape.point == p) idx.push_back(i);
        }
        FissionDatum d;
        for (auto i : idx) {
            const auto& e = s.entries[i];
            d.entries.push_back({e.mult, e.cls, e.shape.deep.levels, e.shape.total_slope()});
        }
        d.f.assign(idx.size(), std::vector<Rat>(idx.size(), Rat(0)));
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = 0; b < idx.size(); ++b) {
                if (a != b) d.f[a][b] = s.pairs[idx[a]][idx[b]]->fission;
            }
        }
        FissionTree t = build_tree(d);
        t.point = p;
        f.trees.push_back(std::move(t));
    }
    return f;
}

int shape_rank_at_infinity(const ShapeClass& s) {
    int r = 0;
    for (const auto& e : s.entries) {
        if (e.shape.point.infinite) r += e.mult * static_cast<int>(e.shape.deep.ram);
    }
    return r;
}

ShapeClass twist(const ShapeClass& s, const Rat& lambda) {
    ShapeClass out = s;
    ExactScalar shift = ExactScalar::from_rat(Rat(lambda / 2));
    for (auto& e : out.entries) {
        if (e.shape.point.infinite) e.shape.quad = scalar_sub(e.shape.quad, shift);
    }
    return out;
}

ShapeClass scale(const ShapeClass& s, const Rat& v) {
    if (v == 0) throw std::invalid_argument("scale parameter must be nonzero");
    ShapeClass out = s;
    ExactScalar sv = ExactScalar::from_rat(v);
    ExactScalar inv = scalar_inv(sv);
    ExactScalar sv2 = scalar_mul(sv, sv);
    for (auto& e : out.entries) {
        auto& sh = e.shape;
        if (sh.point.infinite) {
            // Above slope 2 the x coefficient is the anchor described in move_shape and scales inversely.
            sh.linear = scalar_mul(sh.linear, sh.total_slope() > 2 ? inv : sv);
            sh.quad = scalar_mul(sh.quad, sv2);
        } else {
            sh.point = SpherePoint::finite(scalar_mul(sh.point.value, inv));
        }
    }
    return out;
}

std::vector<Rat> transformed_levels(const std::vector<Rat>& lv, const Rat& factor, const Rat& new_slope) {
    std::set<Rat, std::greater<>> exps;
    for (const auto& l : lv) exps.insert(l * factor);
    if (new_slope > 0) exps.insert(new_slope);
    return increasing_denominator_subset({exps.begin(), exps.end()});
}

namespace {

enum class Route { AtInfinityWild, InfinityToFinite, FiniteToInfinity };

struct Moved {
    CircleShape shape;
    bool negate = false;
    Route route = Route::AtInfinityWild;
    Rat key_slope;  // slope governing the fission rule
};

Moved move_shape(const CircleShape& sh) {
    Moved m;
    const DeepData& dp = sh.deep;
    if (!sh.point.infinite) {
        m.route = Route::FiniteToInfinity;
        m.key_slope = dp.slope;
        m.shape.point = SpherePoint::infinity();
        m.shape.linear = -sh.point.value;
        if (dp.is_tame()) {
            m.negate = true;
            return m;
        }
        std::int64_t r = dp.ram, s = dp.irr();
        Rat ns = Rat(s) / Rat(r + s);
        m.shape.deep = {transformed_levels(dp.levels, Rat(r) / Rat(r + s), ns), r + s, ns};
        m.negate = (s % 2) != 0;
        return m;
    }
    Rat k = sh.total_slope();
    if (k <= 1) {
        m.route = Route::InfinityToFinite;
        m.key_slope = dp.slope;
        m.shape.point = SpherePoint::finite(sh.linear);
        if (dp.is_tame()) {
            m.negate = true;
            return m;
        }
        std::int64_t r = dp.ram, s = dp.irr();
        Rat ns = Rat(s) / Rat(r - s);
        m.shape.deep = {transformed_levels(dp.levels, Rat(r) / Rat(r - s), ns), r - s, ns};
        m.negate = (s % 2) != 0;
        return m;
    }
    m.route = Route::AtInfinityWild;
    m.key_slope = k;
    m.shape.point = SpherePoint::infinity();
    std::int64_t r = dp.ram, s = sh.total_irr();
    m.negate = (s % 2) != 0;
    if (k == 2 && !sh.quad.is_zero()) {
        ExactScalar four_q = scalar_mul(ExactScalar::from_rat(4), sh.quad);
        m.shape.quad = -scalar_inv(four_q);
        m.shape.linear = scalar_mul(sh.linear, scalar_inv(scalar_mul(ExactScalar::from_rat(2), sh.quad)));
        m.shape.deep = dp;
        return m;
    }
    Rat ns = Rat(s) / Rat(s - r);
    m.shape.deep = {transformed_levels(dp.levels, Rat(r) / Rat(s - r), ns), s - r, ns};
    // The x coefficient of a deep slope in (1, 2) never becomes a position; it rides along as an
    // anchor so that applying F twice negates it.
    m.shape.linear = k < 2 ? sh.linear : -sh.linear;
    return m;
}

Rat image_slope(Route route, const Rat& k) {
    switch (route) {
        case Route::AtInfinityWild: return k / (k - 1);
        case Route::InfinityToFinite: return k / (1 - k);
        case Route::FiniteToInfinity: return k / (k + 1);
    }
    return 0;
}

}  // namespace

bool is_excluded_rank_one(const ShapeClass& s) {
    if (s.entries.size() != 1) return false;
    const auto& e = s.entries.front();
    return e.mult == 1 && e.shape.point.infinite && e.shape.deep.ram == 1 && e.shape.total_slope() <= 1;
}

ShapeClass fourier(const ShapeClass& s) {
    if (is_excluded_rank_one(s)) {
        throw ExcludedRankOne("Fourier transform of a rank one class with a pole of order < 2 at infinity");
    }
    const std::size_t n = s.entries.size();
    std::vector<Moved> moved;
    ShapeClass out;
    for (const auto& e : s.entries) {
        moved.push_back(move_shape(e.shape));
        out.entries.push_back({moved.back().shape, e.mult, moved.back().negate ? e.cls.negated() : e.cls});
    }
    out.pairs.assign(n, std::vector<std::optional<PairData>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || out.entries[i].shape.point != out.entries[j].shape.point) continue;
            const Moved& a = moved[i];
            const Moved& b = moved[j];
            if (s.pairs[i][j] && a.route == b.route) {
                const PairData& p = *s.pairs[i][j];
                Rat top = std::max(a.key_slope, b.key_slope);
                if (p.fission < top) {
                    Rat factor = image_slope(a.route, a.key_slope) / a.key_slope;
                    out.pairs[i][j] = PairData{p.fission * factor,
                                               transformed_levels(p.common_levels, factor,
                                                                  image_slope(a.route, a.key_slope))};
                } else {
                    out.pairs[i][j] = PairData{
                        std::max(image_slope(a.route, a.key_slope), image_slope(b.route, b.key_slope)), {}};
                }
                continue;
            }
            Rat si = out.entries[i].shape.total_slope();
            Rat sj = out.entries[j].shape.total_slope();
            out.pairs[i][j] = PairData{(si <= 1 && sj <= 1) ? Rat(1) : std::max(si, sj), {}};
        }
    }
    return out;
}

ShapeClass apply_word(const ShapeClass& s, const ElementaryWord& w) {
    ShapeClass cur = s;
    for (const auto& e : w) {
        switch (e.kind) {
            case Elementary::Kind::Twist: cur = twist(cur, e.param); break;
            case Elementary::Kind::Scale: cur = scale(cur, e.param); break;
            case Elementary::Kind::Fourier: cur = fourier(cur); break;
        }
    }
    return cur;
}

ShapeClass apply_sl2(const ShapeClass& s, const Sl2Elem& A) { return apply_word(s, sl2_factor(A)); }

SpherePoint lambda_coeff(const CircleShape& s) {
    if (!s.point.infinite || s.total_slope() > 2) return SpherePoint::infinity();
    return SpherePoint::finite(scalar_mul(ExactScalar::from_rat(-2), s.quad));
}

Genericized genericize(const ShapeClass& s) {
    if (is_excluded_rank_one(s)) throw ExcludedRankOne("rank one class with a pole of order < 2 at infinity");
    std::vector<ExactScalar> bad;
    for (const auto& e : s.entries) {
        SpherePoint l = lambda_coeff(e.shape);
        if (!l.infinite) bad.push_back(-l.value);
    }
    long rho = 0;
    while (std::find(bad.begin(), bad.end(), ExactScalar::from_rat(Rat(rho))) != bad.end()) ++rho;
    ElementaryWord w{Elementary::twist(Rat(rho)), Elementary::fourier()};
    return {apply_word(s, w), w};
}

Genericized genericize(const GlobalClass& g) {
    if (g.flavor != Flavor::Modified) return genericize(modify(g));
    if (!is_compatible(g)) throw Incompatible("a finite point has larger rank than infinity");
    return genericize(shape_of(g));
}

}  // namespace wildrep
