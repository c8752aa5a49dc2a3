#include "chowpoly/valuation.hpp"

#include <algorithm>
#include <sstream>

namespace chowpoly {

Valuation Valuation::point(const std::string& var, const Rat& value) {
    Valuation v;
    v.kind = Kind::Point;
    v.var = var;
    v.value = value;
    return v;
}

Valuation Valuation::infinity(const std::string& var) {
    Valuation v;
    v.kind = Kind::Infinity;
    v.var = var;
    return v;
}

Valuation Valuation::graph(const std::string& solved_var, FactoredRational r,
                           Atom defining) {
    Valuation v;
    v.kind = Kind::Graph;
    v.var = solved_var;
    v.expr = std::move(r);
    v.defining = std::move(defining);
    return v;
}

bool Valuation::operator==(const Valuation& o) const {
    if (kind != o.kind || var != o.var) return false;
    if (kind == Kind::Point) return value == o.value;
    if (kind == Kind::Graph) return defining == o.defining;
    return true;
}

std::string Valuation::to_string() const {
    switch (kind) {
        case Kind::Point:
            return var + "=" + rat_to_string(value);
        case Kind::Infinity:
            return var + "=INF";
        case Kind::Graph:
            return var + "=" + expr.to_string();
    }
    return "?";
}

namespace {

// (order, residue-field unit part) of a single atom along v
std::pair<int, FactoredRational> atom_order_unit(const Valuation& v, const Atom& atom) {
    if (!atom.is_poly() || !atom.poly.uses(v.var))
        return {0, FactoredRational::build(Rat(1), {{atom, 1}})};
    FactoredRational f = FactoredRational::build(Rat(1), {{atom, 1}});
    switch (v.kind) {
        case Valuation::Kind::Point:
            return local_order_unit(f, v.var, SubstValue::of_rat(v.value));
        case Valuation::Kind::Infinity:
            return local_order_unit(f, v.var, SubstValue::at_infinity());
        case Valuation::Kind::Graph: {
            // uniformizer is the defining atom itself
            auto [num, den] = v.expr.expand();
            MultiPoly reduced = atom.poly;
            int k = 0;
            while (reduced.compose_fraction(v.var, num, den).is_zero()) {
                reduced = reduced.divide_exact(v.defining.poly);
                ++k;
            }
            MultiPoly composed = reduced.compose_fraction(v.var, num, den);
            int d = reduced.degree(v.var);
            return {k, factor(composed) * factor(den).pow(-d)};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

int ord(const Valuation& v, const FactoredRational& f) {
    int n = 0;
    for (const auto& [atom, e] : f.factors())
        n += e * atom_order_unit(v, atom).first;
    return n;
}

FactoredRational residue_unit(const Valuation& v, const FactoredRational& f) {
    int n = 0;
    FactoredRational unit(f.constant());
    for (const auto& [atom, e] : f.factors()) {
        auto [k, u] = atom_order_unit(v, atom);
        n += e * k;
        unit = unit * u.pow(e);
    }
    if (n != 0) throw NotAUnitError(f.to_string());
    return unit;
}

WedgeElement tame_symbol(const Valuation& v, const WedgeElement& a) {
    if (a.arity() < 1) throw std::domain_error("tame symbol needs arity >= 1");
    WedgeElement out(a.arity() - 1);
    for (const auto& [m, c] : a.terms()) {
        std::vector<int> orders;
        std::vector<FactoredRational> units;
        try {
            for (const auto& atom : m.slots) {
                auto [n, u] = atom_order_unit(v, atom);
                orders.push_back(n);
                units.push_back(u);
            }
        } catch (const NotAUnitError& e) {
            throw IndeterminateResidueError(m.to_string() + " at " + v.to_string() +
                                            " (" + e.atom + ")");
        }
        // slot i = pi^{n_i} * u_i; terms with the uniformizer in exactly one
        // slot survive, with the sign that moves it to the front
        for (size_t i = 0; i < m.slots.size(); ++i) {
            if (orders[i] == 0) continue;
            std::vector<FactoredRational> rest;
            for (size_t j = 0; j < m.slots.size(); ++j)
                if (j != i) rest.push_back(units[j]);
            int sign = (i % 2 == 0) ? 1 : -1;
            out = out + wedge_of(rest) * (c * Rat(orders[i]) * sign);
        }
    }
    return out;
}

std::vector<Valuation> divisor_support(const WedgeElement& a,
                                       const std::vector<std::string>& vars) {
    std::vector<Valuation> out;
    auto push = [&out](Valuation v) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    };
    for (const auto& [m, c] : a.terms()) {
        for (const auto& atom : m.slots) {
            if (!atom.is_poly()) continue;
            const MultiPoly& p = atom.poly;
            if (p.vars().size() == 1 && p.degree(p.vars()[0]) == 1) {
                // monic univariate linear: x - c
                Rat root = -p.eval(p.vars()[0], Rat(0)).constant_value();
                push(Valuation::point(p.vars()[0], root));
                continue;
            }
            // graph divisor: solve for the highest-order variable of degree 1
            std::string solved;
            for (const auto& vv : p.vars())
                if (p.degree(vv) == 1) solved = vv;  // vars ascending; keep the last
            if (solved.empty()) throw UnparametrizableDivisorError(atom.to_string());
            MultiPoly A = p.derivative(solved);
            MultiPoly B = p - A * MultiPoly::variable(solved);
            FactoredRational r = factor_fraction(-B, A);
            push(Valuation::graph(solved, std::move(r), atom));
        }
    }
    for (const auto& v : vars) push(Valuation::infinity(v));
    return out;
}

}  // namespace chowpoly
