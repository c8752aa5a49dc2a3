#include "chowpoly/cycle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chowpoly {

Cycle Cycle::make(std::vector<std::string> vars, WedgeElement a, int weight,
                  int degree) {
    std::sort(vars.begin(), vars.end());
    if (int(vars.size()) != weight - degree)
        throw std::domain_error("cycle dimension violates p = m - j");
    if (a.arity() != 2 * weight - degree)
        throw std::domain_error("wedge arity violates n = 2m - j");
    for (const auto& v : a.variables())
        if (!std::binary_search(vars.begin(), vars.end(), v))
            throw std::domain_error("wedge uses a variable off the cycle torus: " + v);
    Cycle c;
    c.vars = std::move(vars);
    c.a = std::move(a);
    c.weight = weight;
    c.degree = degree;
    return c;
}

bool Cycle::operator==(const Cycle& o) const {
    return weight == o.weight && degree == o.degree && vars == o.vars && a == o.a;
}

std::string Cycle::to_string() const {
    std::ostringstream os;
    os << "[[";
    for (size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
    os << "], " << a.to_string() << "]";
    return os.str();
}

void CycleSum::add(const Rat& c, Cycle cyc) {
    if (cyc.weight != weight_ || cyc.degree != degree_)
        throw std::domain_error("cycle (weight, degree) mismatch");
    if (c == 0 || cyc.a.is_zero()) return;
    terms_.emplace_back(c, std::move(cyc));
}

CycleSum CycleSum::operator+(const CycleSum& o) const {
    if (weight_ != o.weight_ || degree_ != o.degree_)
        throw std::domain_error("cycle sum (weight, degree) mismatch");
    CycleSum r = *this;
    for (const auto& [c, cyc] : o.terms_) r.terms_.emplace_back(c, cyc);
    return r;
}

CycleSum CycleSum::operator-(const CycleSum& o) const { return *this + o * Rat(-1); }

CycleSum CycleSum::operator*(const Rat& c) const {
    CycleSum r(weight_, degree_);
    if (c == 0) return r;
    for (const auto& [k, cyc] : terms_) r.terms_.emplace_back(k * c, cyc);
    return r;
}

std::string CycleSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, cyc] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (ac != 1) os << rat_to_string(ac) << "*";
        os << cyc.to_string();
    }
    return os.str();
}

CycleSum differential(const CycleSum& s) {
    CycleSum out(s.weight(), s.degree() + 1);
    for (const auto& [c, cyc] : s.terms()) {
        for (const auto& v : divisor_support(cyc.a, cyc.vars)) {
            WedgeElement w = tame_symbol(v, cyc.a);
            if (w.is_zero()) continue;
            std::vector<std::string> nvars;
            for (const auto& x : cyc.vars)
                if (x != v.var) nvars.push_back(x);
            out.add(c, Cycle::make(std::move(nvars), std::move(w), cyc.weight,
                                   cyc.degree + 1));
        }
    }
    return normalize_cycle(out);
}

CycleSum differential(const Cycle& c) {
    CycleSum s(c.weight, c.degree);
    s.add(Rat(1), c);
    return differential(s);
}

CycleSum normalize_cycle(const CycleSum& s) {
    // split into per-monomial generators, apply the drop rules, regroup
    std::map<std::vector<std::string>, WedgeElement> grouped;
    int n = 2 * s.weight() - s.degree();
    for (const auto& [c, cyc] : s.terms()) {
        int p = int(cyc.vars.size());
        for (const auto& [mono, k] : cyc.a.terms()) {
            if (p > 0) {
                std::vector<FactoredRational> slots;
                for (const auto& atom : mono.slots)
                    slots.push_back(FactoredRational::build(Rat(1), {{atom, 1}}));
                if (trans_degree(slots, cyc.vars) < p) continue;
            }
            if (s.degree() == 1) {
                // a constant slot kills a degree-1 generator
                bool has_const = std::any_of(
                    mono.slots.begin(), mono.slots.end(),
                    [](const Atom& a) { return !a.is_poly(); });
                if (has_const) continue;
            }
            auto it = grouped.find(cyc.vars);
            if (it == grouped.end())
                it = grouped.emplace(cyc.vars, WedgeElement(n)).first;
            WedgeElement add(n);
            add.add_term(c * k, mono.slots);
            it->second = it->second + add;
        }
    }
    CycleSum out(s.weight(), s.degree());
    for (auto& [vars, w] : grouped) {
        if (w.is_zero()) continue;
        out.add(Rat(1), Cycle::make(vars, std::move(w), s.weight(), s.degree()));
    }
    return out;
}

namespace {

std::string coord_name(const std::string& stem, int i) {
    return stem + std::to_string(i);
}

FactoredRational var_fr(const std::string& name) {
    return FactoredRational::build(
        Rat(1), {{Atom::make_poly(MultiPoly::variable(name), true), 1}});
}

FactoredRational poly_fr(const MultiPoly& p) { return factor(p); }

}  // namespace

WedgeElement omega(int m, const std::optional<FactoredRational>& f) {
    if (m < 2) throw std::domain_error("omega needs weight >= 2");
    if (!f) return WedgeElement(2 * m - 1);
    std::vector<FactoredRational> slots;
    slots.push_back(poly_fr(MultiPoly{Rat(1)} - MultiPoly::variable(coord_name("x", 1))));
    slots.push_back(var_fr(coord_name("x", 1)));
    for (int i = 2; i <= m - 1; ++i) {
        MultiPoly prev = MultiPoly::variable(coord_name("x", i - 1));
        MultiPoly xi = MultiPoly::variable(coord_name("x", i));
        slots.push_back(poly_fr(prev - xi));
        slots.push_back(var_fr(coord_name("x", i)));
    }
    // last slot: x_{m-1} - f
    auto [num, den] = f->expand();
    MultiPoly diff = MultiPoly::variable(coord_name("x", m - 1)) * den - num;
    if (diff.is_zero()) throw std::domain_error("omega: f equals the last coordinate");
    slots.push_back(factor(diff) * factor(den).inverse());
    return wedge_of(slots);
}

WedgeElement omega(int m, const Rat& a) {
    if (a == 0) return WedgeElement(2 * m - 1);
    return omega(m, FactoredRational(a));
}

WedgeElement omega_tilde(int m, const Rat& a) {
    if (m < 2) throw std::domain_error("omega_tilde needs weight >= 2");
    if (a == 0) throw std::domain_error("omega_tilde needs a != 0, infinity");
    std::vector<FactoredRational> slots;
    MultiPoly prod{Rat(1)};
    for (int i = 1; i <= m - 1; ++i) {
        MultiPoly yi = MultiPoly::variable(coord_name("y", i));
        slots.push_back(poly_fr(MultiPoly{Rat(1)} - yi));
        slots.push_back(var_fr(coord_name("y", i)));
        prod = prod * yi;
    }
    slots.push_back(poly_fr(prod - MultiPoly{a}));
    return wedge_of(slots);
}

Cycle gamma_P(int m, const MultiPoly& P) {
    if (P.is_zero()) throw std::domain_error("gamma_P needs P != 0");
    std::vector<std::string> vars;
    std::vector<FactoredRational> slots;
    for (int i = 1; i <= m - 1; ++i) {
        vars.push_back(coord_name("x", i));
        MultiPoly xi = MultiPoly::variable(coord_name("x", i));
        slots.push_back(poly_fr(MultiPoly{Rat(1)} - xi));
        slots.push_back(var_fr(coord_name("x", i)));
    }
    for (const auto& v : P.vars())
        if (!std::binary_search(vars.begin(), vars.end(), v))
            throw std::domain_error("gamma_P: P uses a variable off the torus: " + v);
    slots.push_back(poly_fr(P));
    return Cycle::make(std::move(vars), wedge_of(slots), m, 1);
}

CycleSum T_m(const LiSymbol& s) {
    int m = s.weight();
    CycleSum out(m, 1);
    std::vector<std::string> vars;
    for (int i = 1; i <= m - 1; ++i) vars.push_back(coord_name("x", i));
    for (const auto& [p, c] : s.terms()) {
        if (!p.is_value()) continue;  // {0}_m, {inf}_m -> 0
        WedgeElement w = omega(m, p.value);
        if (w.is_zero()) continue;
        out.add(c, Cycle::make(vars, std::move(w), m, 1));
    }
    return normalize_cycle(out);
}

bool equal_after_reparam(const CycleSum& a, const CycleSum& b,
                         const std::vector<CoordMap>& maps) {
    for (const auto& map : maps) {
        if (!coord_map_dominant(map))
            throw std::domain_error("reparametrization map is not dominant");
        // the pulled-back cycles live on the map's target torus
        std::vector<std::string> tvars;
        for (const auto& [src, val] : map)
            for (const auto& tv : val.variables())
                if (std::find(tvars.begin(), tvars.end(), tv) == tvars.end())
                    tvars.push_back(tv);
        std::sort(tvars.begin(), tvars.end());
        try {
            CycleSum bp(b.weight(), b.degree());
            bool applies = true;
            for (const auto& [c, cyc] : b.terms()) {
                if (tvars.size() != cyc.vars.size()) {
                    applies = false;
                    break;
                }
                WedgeElement w = pullback(cyc.a, map);
                bp.add(c, Cycle::make(tvars, std::move(w), cyc.weight, cyc.degree));
            }
            if (applies && normalize_cycle(a - bp).is_zero()) return true;
        } catch (const NotAUnitError&) {
            // map degenerate on this cycle; try the next one
        } catch (const std::domain_error&) {
        }
    }
    return false;
}

}  // namespace chowpoly
