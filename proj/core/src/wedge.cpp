#include "chowpoly/wedge.hpp"

#include <algorithm>
#include <sstream>

namespace chowpoly {

int WedgeMonomial::compare(const WedgeMonomial& a, const WedgeMonomial& b) {
    if (a.slots.size() != b.slots.size())
        return a.slots.size() < b.slots.size() ? -1 : 1;
    for (size_t i = 0; i < a.slots.size(); ++i) {
        int c = Atom::compare(a.slots[i], b.slots[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string WedgeMonomial::to_string() const {
    if (slots.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) os << " /\\ ";
        os << "(" << slots[i].to_string() << ")";
    }
    return os.str();
}

WedgeElement WedgeElement::operator+(const WedgeElement& o) const {
    if (arity_ != o.arity_) throw std::domain_error("wedge arity mismatch");
    WedgeElement r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

WedgeElement WedgeElement::operator-(const WedgeElement& o) const {
    return *this + (o * Rat(-1));
}

WedgeElement WedgeElement::operator*(const Rat& c) const {
    WedgeElement r(arity_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

bool WedgeElement::operator==(const WedgeElement& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
}

void WedgeElement::add_term(const Rat& c, std::vector<Atom> atoms) {
    if (int(atoms.size()) != arity_) throw std::domain_error("wedge arity mismatch");
    if (c == 0) return;
    // insertion sort tracking the permutation sign
    int sign = 1;
    for (size_t i = 1; i < atoms.size(); ++i)
        for (size_t j = i; j > 0; --j) {
            int cmp = Atom::compare(atoms[j - 1], atoms[j]);
            if (cmp == 0) return;  // repeated atom: the monomial is zero
            if (cmp < 0) break;
            std::swap(atoms[j - 1], atoms[j]);
            sign = -sign;
        }
    WedgeMonomial m{std::move(atoms)};
    Rat add = c * sign;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[std::move(m)] = add;
    } else {
        it->second += add;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<std::string> WedgeElement::variables() const {
    std::vector<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& a : m.slots) {
            if (!a.is_poly()) continue;
            std::vector<std::string> merged;
            std::set_union(out.begin(), out.end(), a.poly.vars().begin(),
                           a.poly.vars().end(), std::back_inserter(merged));
            out = std::move(merged);
        }
    return out;
}

std::string WedgeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? "  -  " : "  +  ");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (ac != 1) os << rat_to_string(ac) << "*";
        os << m.to_string();
    }
    return os.str();
}

namespace {

// the class of f in F^x (x) Q as a list of (atom, multiplicity); the sign
// and all rational roots of unity vanish
std::vector<std::pair<Atom, int>> atom_expansion(const FactoredRational& f) {
    std::vector<std::pair<Atom, int>> out;
    for (const auto& [p, e] : factor_integer(abs(f.constant().get_num())))
        out.emplace_back(Atom::make_prime(p), e);
    for (const auto& [p, e] : factor_integer(f.constant().get_den()))
        out.emplace_back(Atom::make_prime(p), -e);
    for (const auto& [a, e] : f.factors()) out.emplace_back(a, e);
    return out;
}

}  // namespace

WedgeElement wedge_of(const std::vector<FactoredRational>& fs) {
    WedgeElement out(int(fs.size()));
    std::vector<std::vector<std::pair<Atom, int>>> exps;
    for (const auto& f : fs) {
        if (f.constant() == 0) throw std::domain_error("zero slot in wedge");
        exps.push_back(atom_expansion(f));
    }
    // multilinear expansion
    std::vector<size_t> idx(fs.size(), 0);
    std::vector<Atom> pick(fs.size());
    auto expand = [&](auto&& self, size_t slot, Rat coeff) -> void {
        if (coeff == 0) return;
        if (slot == fs.size()) {
            out.add_term(coeff, pick);
            return;
        }
        for (const auto& [atom, mult] : exps[slot]) {
            pick[slot] = atom;
            self(self, slot + 1, coeff * Rat(mult));
        }
    };
    expand(expand, 0, Rat(1));
    return out;
}

FactoredRational substitute_all(const FactoredRational& f, const CoordMap& map) {
    // route through fresh intermediate names so the substitution is
    // simultaneous even when source and target variables overlap
    FactoredRational cur = f;
    std::vector<std::string> temps;
    for (size_t i = 0; i < map.size(); ++i) {
        std::string tmp = "#tmp" + std::to_string(i);
        temps.push_back(tmp);
        if (cur.uses(map[i].first)) {
            FactoredRational tv = FactoredRational::build(
                Rat(1), {{Atom::make_poly(MultiPoly::variable(tmp), true), 1}});
            cur = substitute(cur, map[i].first, SubstValue::of(tv));
        }
    }
    for (size_t i = 0; i < map.size(); ++i)
        if (cur.uses(temps[i]))
            cur = substitute(cur, temps[i], SubstValue::of(map[i].second));
    return cur;
}

bool coord_map_dominant(const CoordMap& map) {
    std::vector<FactoredRational> vals;
    std::vector<std::string> tvars;
    for (const auto& [v, f] : map) {
        vals.push_back(f);
        for (const auto& tv : f.variables())
            if (!std::binary_search(tvars.begin(), tvars.end(), tv)) {
                tvars.push_back(tv);
                std::sort(tvars.begin(), tvars.end());
            }
    }
    if (vals.empty()) return true;
    if (tvars.empty()) return false;  // all-constant map
    return trans_degree(vals, tvars) == int(map.size());
}

WedgeElement pullback(const WedgeElement& a, const CoordMap& map) {
    if (!coord_map_dominant(map)) throw std::domain_error("pullback map is not dominant");
    WedgeElement out(a.arity());
    for (const auto& [m, c] : a.terms()) {
        std::vector<FactoredRational> slots;
        for (const auto& atom : m.slots)
            slots.push_back(substitute_all(
                FactoredRational::build(Rat(1), {{atom, 1}}), map));
        out = out + wedge_of(slots) * c;
    }
    return out;
}

}  // namespace chowpoly
