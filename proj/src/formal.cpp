#include "wildrep/formal.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wildrep/errors.hpp"

namespace wildrep {

EigVal EigVal::exact(const ExactScalar& v) {
    if (v.is_zero()) throw SemanticError("eigenvalue must be nonzero");
    EigVal e;
    e.value_ = v;
    return e;
}

EigVal EigVal::symbol(const std::string& name, int sign) {
    EigVal e;
    e.symbolic_ = true;
    e.name_ = name;
    e.sign_ = sign < 0 ? -1 : 1;
    return e;
}

EigVal EigVal::negated() const {
    if (symbolic_) return symbol(name_, -sign_);
    return exact(-value_);
}

EigVal EigVal::scaled(const EigVal& gamma) const {
    if (!symbolic_ && !gamma.symbolic_) return exact(scalar_mul(value_, gamma.value_));
    const EigVal& sym = symbolic_ ? *this : gamma;
    const EigVal& other = symbolic_ ? gamma : *this;
    if (other.symbolic_) throw SymbolicScale("product of two symbolic eigenvalues");
    if (other.value_ == ExactScalar::one()) return sym;
    if (other.value_ == -ExactScalar::one()) return sym.negated();
    throw SymbolicScale("cannot scale symbol " + sym.str() + " by " + other.value_.str());
}

std::string EigVal::key() const {
    if (symbolic_) return "s:" + name_ + (sign_ < 0 ? "-" : "+");
    return "e:" + value_.str();
}

std::string EigVal::str() const {
    if (symbolic_) return (sign_ < 0 ? "-" : "") + name_;
    return value_.str();
}

ConjClass::ConjClass(std::vector<std::pair<EigVal, std::vector<int>>> spec) {
    std::map<std::string, std::pair<EigVal, std::vector<int>>> merged;
    for (auto& [ev, blocks] : spec) {
        for (int b : blocks) {
            if (b <= 0) throw SemanticError("Jordan block sizes must be positive");
        }
        if (blocks.empty()) continue;
        auto it = merged.find(ev.key());
        if (it == merged.end()) {
            merged.emplace(ev.key(), std::make_pair(ev, blocks));
        } else {
            it->second.second.insert(it->second.second.end(), blocks.begin(), blocks.end());
        }
    }
    for (auto& [k, entry] : merged) {
        std::sort(entry.second.begin(), entry.second.end(), std::greater<>());
        dim += std::accumulate(entry.second.begin(), entry.second.end(), 0);
        spectrum.push_back(std::move(entry));
    }
}

ConjClass ConjClass::identity(int n) {
    if (n == 0) return {};
    return ConjClass({{EigVal::exact(ExactScalar::one()), std::vector<int>(n, 1)}});
}

int ConjClass::unipotent_block_count() const {
    for (const auto& [ev, blocks] : spectrum) {
        if (ev.is_one()) return static_cast<int>(blocks.size());
    }
    return 0;
}

ConjClass ConjClass::negated() const {
    auto spec = spectrum;
    for (auto& [ev, blocks] : spec) ev = ev.negated();
    return ConjClass(std::move(spec));
}

ConjClass ConjClass::scaled(const EigVal& gamma) const {
    auto spec = spectrum;
    for (auto& [ev, blocks] : spec) ev = ev.scaled(gamma);
    return ConjClass(std::move(spec));
}

std::string ConjClass::shape_key() const {
    std::vector<std::string> parts;
    for (const auto& [ev, blocks] : spectrum) {
        std::string s = "[";
        for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + std::to_string(blocks[i]);
        parts.push_back(s + "]");
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

std::string ConjClass::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (i) out += "; ";
        out += spectrum[i].first.str() + ":[";
        const auto& blocks = spectrum[i].second;
        for (std::size_t j = 0; j < blocks.size(); ++j) out += (j ? "," : "") + std::to_string(blocks[j]);
        out += "]";
    }
    return out + "}";
}

ConjClass child(const ConjClass& c) {
    auto spec = c.spectrum;
    for (auto& [ev, blocks] : spec) {
        if (!ev.is_one()) continue;
        for (int& b : blocks) --b;
        std::erase(blocks, 0);
    }
    return ConjClass(std::move(spec));
}

ConjClass parent(const ConjClass& c, int target_dim) {
    int needed = c.dim + c.unipotent_block_count();
    if (target_dim < needed) {
        throw TargetTooSmall("parent of " + c.str() + " needs dimension at least " + std::to_string(needed));
    }
    auto spec = c.spectrum;
    bool has_one = false;
    for (auto& [ev, blocks] : spec) {
        if (!ev.is_one()) continue;
        has_one = true;
        for (int& b : blocks) ++b;
        blocks.insert(blocks.end(), target_dim - needed, 1);
    }
    if (!has_one && target_dim > needed) {
        spec.emplace_back(EigVal::exact(ExactScalar::one()), std::vector<int>(target_dim - needed, 1));
    }
    return ConjClass(std::move(spec));
}

void GlobalClass::normalize() {
    std::sort(locals.begin(), locals.end(),
              [](const LocalClass& a, const LocalClass& b) { return a.point < b.point; });
    for (std::size_t i = 1; i < locals.size(); ++i) {
        if (locals[i].point == locals[i - 1].point) {
            throw SemanticError("duplicate point " + locals[i].point.str());
        }
    }
    for (const auto& l : locals) {
        for (std::size_t i = 0; i < l.entries.size(); ++i) {
            const auto& e = l.entries[i];
            if (e.circle.point() != l.point) throw SemanticError("circle anchored at the wrong point");
            if (e.mult <= 0) throw SemanticError("multiplicity must be positive");
            if (e.cls.dim != e.mult) {
                throw SemanticError("class " + e.cls.str() + " has dimension " + std::to_string(e.cls.dim) +
                                    " but multiplicity is " + std::to_string(e.mult));
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (circle_eq(e.circle, l.entries[j].circle)) {
                    throw SemanticError("repeated circle <" + e.circle.str() + "> at " + l.point.str());
                }
            }
        }
    }
}

const LocalClass* GlobalClass::at(const SpherePoint& p) const {
    for (const auto& l : locals) {
        if (l.point == p) return &l;
    }
    return nullptr;
}

int rank_at(const LocalClass& l) {
    int r = 0;
    for (const auto& e : l.entries) r += e.mult * static_cast<int>(ram(e.circle));
    return r;
}

int rank_at(const GlobalClass& g, const SpherePoint& p) {
    const LocalClass* l = g.at(p);
    return l ? rank_at(*l) : 0;
}

bool is_compatible(const GlobalClass& g) {
    int n = rank_at(g, SpherePoint::infinity());
    return std::all_of(g.locals.begin(), g.locals.end(),
                       [n](const LocalClass& l) { return l.point.infinite || rank_at(l) <= n; });
}

GlobalClass modify(const GlobalClass& g) {
    GlobalClass out;
    out.flavor = Flavor::Modified;
    for (const auto& l : g.locals) {
        LocalClass nl{l.point, {}};
        for (const auto& e : l.entries) {
            if (l.point.infinite || !e.circle.is_tame()) {
                nl.entries.push_back(e);
                continue;
            }
            ConjClass c = child(e.cls);
            if (c.dim > 0) nl.entries.push_back({e.circle, c.dim, c});
        }
        if (!nl.entries.empty()) out.locals.push_back(std::move(nl));
    }
    return out;
}

GlobalClass unmodify(const GlobalClass& g) {
    if (!is_compatible(g)) throw Incompatible("a finite point has larger rank than infinity");
    int n = rank_at(g, SpherePoint::infinity());
    GlobalClass out;
    out.flavor = Flavor::Unmodified;
    for (const auto& l : g.locals) {
        if (l.point.infinite) {
            out.locals.push_back(l);
            continue;
        }
        LocalClass nl{l.point, {}};
        ConjClass tame_child;
        int wild_rank = 0;
        for (const auto& e : l.entries) {
            if (e.circle.is_tame()) {
                tame_child = e.cls;
            } else {
                wild_rank += e.mult * static_cast<int>(ram(e.circle));
                nl.entries.push_back(e);
            }
        }
        int m = n - wild_rank;
        if (m > 0) {
            ConjClass p = parent(tame_child, m);
            nl.entries.push_back({StokesCircle(ExpFactor(l.point, {})), m, p});
        }
        out.locals.push_back(std::move(nl));
    }
    return out;
}

GlobalClass formal_twist(const GlobalClass& g, const SpherePoint& a, const ExpFactor& q0,
                         const EigVal& gamma) {
    GlobalClass out = g;
    for (auto& l : out.locals) {
        if (l.point != a) continue;
        for (auto& e : l.entries) {
            std::vector<Term> ts = e.circle.rep().terms;
            for (const auto& t : q0.terms) ts.push_back({t.exp, -t.coeff});
            e.circle = StokesCircle(ExpFactor(a, ts));
            e.cls = e.cls.scaled(gamma);
        }
    }
    return out;
}

}  // namespace wildrep
