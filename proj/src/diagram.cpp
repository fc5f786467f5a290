#include "wildrep/diagram.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace wildrep {

namespace {

struct CoreCircle {
    const StokesCircle* circle;
    SpherePoint point;
};

std::vector<CoreCircle> core_of(const GlobalClass& g) {
    std::vector<CoreCircle> out;
    for (const auto& l : g.locals) {
        for (const auto& e : l.entries) out.push_back({&e.circle, l.point});
    }
    return out;
}

}  // namespace

std::vector<std::vector<long>> core_b_matrix(const GlobalClass& g0) {
    const GlobalClass g = g0.flavor == Flavor::Modified ? g0 : modify(g0);
    auto core = core_of(g);
    const std::size_t n = core.size();
    std::vector<std::vector<long>> B(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& I = *core[i].circle;
            const auto& J = *core[j].circle;
            long ai = irr(I), bi = ram(I), aj = irr(J), bj = ram(J);
            bool inf_i = core[i].point.infinite, inf_j = core[j].point.infinite;
            if (inf_i && !inf_j) {
                B[i][j] = bi * (aj + bj);
            } else if (!inf_i && inf_j) {
                B[i][j] = bj * (ai + bi);
            } else if (core[i].point != core[j].point) {
                B[i][j] = 0;
            } else {
                long binf = irr_hom(I, J) - bi * bj + (i == j ? 1 : 0);
                B[i][j] = inf_i ? binf : binf - ai * bj - aj * bi;
            }
        }
    }
    return B;
}

std::vector<int> legs(const ConjClass& c) {
    std::vector<std::pair<EigVal, std::vector<int>>> order = c.spectrum;
    auto total = [](const std::vector<int>& bs) {
        int s = 0;
        for (int b : bs) s += b;
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
        int tx = total(x.second), ty = total(y.second);
        if (tx != ty) return tx > ty;
        return x.first.key() < y.first.key();
    });
    // Rank of the running product of (C - xi) factors, each eigenvalue repeated up to its largest block.
    std::vector<std::vector<int>> remaining;
    for (const auto& [v, bs] : order) remaining.push_back(bs);
    auto rank = [&]() {
        int r = 0;
        for (const auto& bs : remaining) r += total(bs);
        return r;
    };
    std::vector<int> out;
    for (auto& bs : remaining) {
        while (std::any_of(bs.begin(), bs.end(), [](int b) { return b > 0; })) {
            for (int& b : bs) b = std::max(0, b - 1);
            int r = rank();
            if (r == 0) return out;
            out.push_back(r);
        }
    }
    return out;
}

std::vector<int> Diagram::dimension_vector() const {
    std::vector<int> d;
    for (const auto& n : nodes) d.push_back(n.dim);
    for (const auto& n : nodes) d.insert(d.end(), n.legs.begin(), n.legs.end());
    return d;
}

std::vector<std::vector<long>> Diagram::full_matrix() const {
    std::size_t total = nodes.size();
    for (const auto& n : nodes) total += n.legs.size();
    std::vector<std::vector<long>> M(total, std::vector<long>(total, 0));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < nodes.size(); ++j) M[i][j] = B[i][j];
    }
    std::size_t next = nodes.size();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::size_t prev = i;
        for (std::size_t k = 0; k < nodes[i].legs.size(); ++k, ++next) {
            M[prev][next] = M[next][prev] = 1;
            prev = next;
        }
    }
    return M;
}

Diagram diagram_of(const GlobalClass& g0) {
    const GlobalClass g = g0.flavor == Flavor::Modified ? g0 : modify(g0);
    Diagram d;
    d.B = core_b_matrix(g);
    for (const auto& l : g.locals) {
        for (const auto& e : l.entries) {
            d.nodes.push_back({e.circle.rep().str() + "@" + l.point.str(), l.point, e.mult, legs(e.cls)});
        }
    }
    return d;
}

long dimension(const Diagram& dg) {
    auto d = dg.dimension_vector();
    auto M = dg.full_matrix();
    long q = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            long c = (i == j ? 2 : 0) - M[i][j];
            q += static_cast<long>(d[i]) * c * d[j];
        }
    }
    return 2 - q;
}

namespace {

using Signature = std::tuple<int, std::vector<int>, long, std::vector<long>>;

Signature signature(const Diagram& d, std::size_t i) {
    std::vector<long> row;
    for (std::size_t j = 0; j < d.nodes.size(); ++j) {
        if (j != i) row.push_back(d.B[i][j]);
    }
    std::sort(row.begin(), row.end());
    return {d.nodes[i].dim, d.nodes[i].legs, d.B[i][i], row};
}

bool extend(const Diagram& a, const Diagram& b, std::vector<int>& map, std::vector<bool>& used, std::size_t i) {
    if (i == a.nodes.size()) return true;
    for (std::size_t j = 0; j < b.nodes.size(); ++j) {
        if (used[j] || signature(a, i) != signature(b, j)) continue;
        bool ok = true;
        for (std::size_t p = 0; p < i && ok; ++p) ok = a.B[i][p] == b.B[j][map[p]];
        if (!ok) continue;
        map[i] = static_cast<int>(j);
        used[j] = true;
        if (extend(a, b, map, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

bool diagram_eq(const Diagram& a, const Diagram& b) {
    if (a.nodes.size() != b.nodes.size()) return false;
    std::vector<int> map(a.nodes.size(), -1);
    std::vector<bool> used(b.nodes.size(), false);
    return extend(a, b, map, used, 0);
}

}  // namespace wildrep
