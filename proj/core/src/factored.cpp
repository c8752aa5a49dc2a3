#include "chowpoly/factored.hpp"

#include <algorithm>
#include <sstream>

namespace chowpoly {

Atom Atom::make_prime(const Int& p) {
    Atom a;
    a.kind = Kind::Prime;
    a.prime = p;
    return a;
}

Atom Atom::make_poly(MultiPoly p, bool irreducible) {
    Atom a;
    a.kind = irreducible ? Kind::Irreducible : Kind::Opaque;
    a.poly = std::move(p);
    return a;
}

int Atom::compare(const Atom& a, const Atom& b) {
    auto rank = [](Kind k) { return k == Kind::Prime ? 0 : (k == Kind::Irreducible ? 1 : 2); };
    if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind) ? -1 : 1;
    if (a.kind == Kind::Prime) {
        if (a.prime != b.prime) return a.prime < b.prime ? -1 : 1;
        return 0;
    }
    return MultiPoly::compare(a.poly, b.poly);
}

std::string Atom::to_string() const {
    if (kind == Kind::Prime) return prime.get_str();
    return poly.to_string();
}

FactoredRational::FactoredRational(const Rat& c) : constant_(c) {
    if (c == 0) throw std::domain_error("zero is not a valid factored rational");
}

FactoredRational FactoredRational::build(Rat constant,
                                         std::vector<std::pair<Atom, int>> fs) {
    if (constant == 0) throw std::domain_error("zero is not a valid factored rational");
    std::sort(fs.begin(), fs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    FactoredRational r;
    r.constant_ = std::move(constant);
    for (auto& [atom, e] : fs) {
        if (e == 0) continue;
        if (!r.factors_.empty() && r.factors_.back().first == atom)
            r.factors_.back().second += e;
        else
            r.factors_.emplace_back(std::move(atom), e);
    }
    std::erase_if(r.factors_, [](const auto& f) { return f.second == 0; });
    return r;
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    std::vector<std::pair<Atom, int>> fs = factors_;
    fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
    return build(constant_ * o.constant_, std::move(fs));
}

FactoredRational FactoredRational::inverse() const { return pow(-1); }

FactoredRational FactoredRational::pow(int e) const {
    if (e == 0) return FactoredRational(Rat(1));
    std::vector<std::pair<Atom, int>> fs = factors_;
    for (auto& [a, k] : fs) k *= e;
    return build(rat_pow(constant_, e), std::move(fs));
}

bool FactoredRational::operator==(const FactoredRational& o) const {
    if (constant_ != o.constant_ || factors_.size() != o.factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].second != o.factors_[i].second ||
            !(factors_[i].first == o.factors_[i].first))
            return false;
    return true;
}

std::pair<MultiPoly, MultiPoly> FactoredRational::expand() const {
    MultiPoly num{Rat(constant_.get_num())}, den{Rat(constant_.get_den())};
    for (const auto& [a, e] : factors_) {
        MultiPoly base = a.is_poly() ? a.poly : MultiPoly{Rat(a.prime)};
        if (e > 0)
            num = num * base.pow(e);
        else
            den = den * base.pow(-e);
    }
    return {num, den};
}

MultiPoly FactoredRational::expand_poly() const {
    auto [num, den] = expand();
    if (!den.is_constant())
        throw std::domain_error("expand_poly on a non-polynomial value");
    return num * (Rat(1) / den.constant_value());
}

std::vector<std::string> FactoredRational::variables() const {
    std::vector<std::string> out;
    for (const auto& [a, e] : factors_) {
        if (!a.is_poly()) continue;
        std::vector<std::string> merged;
        std::set_union(out.begin(), out.end(), a.poly.vars().begin(),
                       a.poly.vars().end(), std::back_inserter(merged));
        out = std::move(merged);
    }
    return out;
}

bool FactoredRational::uses(const std::string& var) const {
    for (const auto& [a, e] : factors_)
        if (a.is_poly() && a.poly.uses(var)) return true;
    return false;
}

std::string FactoredRational::to_string() const {
    std::ostringstream os;
    bool need_dot = false;
    if (factors_.empty() || constant_ != 1) {
        os << rat_to_string(constant_);
        need_dot = true;
    }
    for (const auto& [a, e] : factors_) {
        if (need_dot) os << "*";
        need_dot = true;
        os << "(" << a.to_string() << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace {

// gcd of p with all of its partial derivatives
MultiPoly gcd_with_partials(const MultiPoly& p) {
    MultiPoly g = p;
    for (const auto& v : p.vars()) g = MultiPoly::gcd(g, p.derivative(v));
    return g;
}

// square-free decomposition of a primitive polynomial:
// returns (part, multiplicity) with product of part^mult = p up to constant
std::vector<std::pair<MultiPoly, int>> squarefree_decompose(const MultiPoly& p) {
    std::vector<MultiPoly> chain{p.primitive_part()};
    while (!chain.back().is_constant())
        chain.push_back(gcd_with_partials(chain.back()).primitive_part());
    // rad_k = chain[k] / chain[k+1] = product of parts with multiplicity > k
    std::vector<MultiPoly> rads;
    for (size_t k = 0; k + 1 < chain.size(); ++k)
        rads.push_back(chain[k].divide_exact(chain[k + 1]).primitive_part());
    std::vector<std::pair<MultiPoly, int>> out;
    for (size_t k = 0; k < rads.size(); ++k) {
        MultiPoly part = (k + 1 < rads.size()) ? rads[k].divide_exact(rads[k + 1]).primitive_part()
                                               : rads[k];
        if (!part.is_constant()) out.emplace_back(part, int(k) + 1);
    }
    return out;
}

std::vector<Int> divisors_of(const Int& n, size_t cap) {
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        size_t sz = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > cap) return divs;
            }
        }
    }
    return divs;
}

// split a square-free primitive polynomial into (factor, irreducible?) pieces
void split_squarefree(const MultiPoly& q, std::vector<std::pair<MultiPoly, bool>>& out) {
    if (q.is_constant()) return;

    // a variable of degree 1 gives A*x + B; split off gcd(A, B)
    for (const auto& v : q.vars()) {
        if (q.degree(v) != 1) continue;
        MultiPoly x = MultiPoly::variable(v);
        MultiPoly a = q.derivative(v);  // degree 1 in v, so A = dq/dv
        MultiPoly b = q - a * x;
        if (b.is_zero()) {
            out.emplace_back(x, true);
            split_squarefree(a, out);
            return;
        }
        MultiPoly g = MultiPoly::gcd(a, b);
        MultiPoly lin = a.divide_exact(g) * x + b.divide_exact(g);
        out.emplace_back(lin, true);
        if (!g.is_constant()) split_squarefree(g.primitive_part(), out);
        return;
    }

    if (q.vars().size() == 1) {
        const std::string v = q.vars()[0];
        MultiPoly rem = q.primitive_part();  // integer coefficients, content 1
        // rational roots: num | trailing coeff, den | leading coeff
        bool root_search = true;
        while (root_search && rem.degree(v) >= 2) {
            root_search = false;
            Int lead = rem.leading_coeff().get_num();
            Rat trail_r;
            for (const auto& [e, c] : rem.terms())
                if (e[0] == 0) trail_r = c;
            if (trail_r == 0) {
                out.emplace_back(MultiPoly::variable(v), true);
                rem = rem.divide_exact(MultiPoly::variable(v));
                root_search = true;
                continue;
            }
            constexpr size_t kDivisorCap = 4096;
            auto nums = divisors_of(abs(trail_r.get_num()), kDivisorCap);
            auto dens = divisors_of(abs(lead), kDivisorCap);
            for (const Int& dn : nums) {
                for (const Int& dd : dens) {
                    for (int sign : {1, -1}) {
                        Rat r(sign * dn, dd);
                        r.canonicalize();
                        if (!rem.eval(v, r).is_zero()) continue;
                        MultiPoly lin = MultiPoly::variable(v) - MultiPoly{r};
                        out.emplace_back(lin, true);
                        rem = rem.divide_exact(lin);
                        root_search = true;
                        goto next_round;
                    }
                }
            }
        next_round:;
        }
        int d = rem.degree(v);
        if (d == 1) {
            out.emplace_back(rem, true);
        } else if (d == 2 || d == 3) {
            // square-free with no rational root: irreducible (a reducible
            // quadratic/cubic would carry a linear factor)
            out.emplace_back(rem, true);
        } else if (d >= 4) {
            out.emplace_back(rem, false);
        }
        return;
    }

    // multivariate with no linear variable: opaque
    out.emplace_back(q, false);
}

}  // namespace

FactoredRational factor(const MultiPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    if (p.is_constant()) return FactoredRational(p.constant_value());

    std::vector<std::pair<Atom, int>> factors;
    MultiPoly product{Rat(1)};
    for (const auto& [part, mult] : squarefree_decompose(p)) {
        std::vector<std::pair<MultiPoly, bool>> pieces;
        split_squarefree(part, pieces);
        for (auto& [piece, irred] : pieces) {
            MultiPoly monic = piece.monic();
            product = product * monic.pow(mult);
            factors.emplace_back(Atom::make_poly(std::move(monic), irred), mult);
        }
    }
    // the product of monic atoms matches p up to a rational constant
    MultiPoly c = p.divide_exact(product);
    if (!c.is_constant()) throw std::logic_error("factorization lost a factor");
    return FactoredRational::build(c.constant_value(), std::move(factors));
}

FactoredRational factor_fraction(const MultiPoly& num, const MultiPoly& den) {
    return factor(num) * factor(den).inverse();
}

std::pair<int, FactoredRational> local_order_unit(const FactoredRational& f,
                                                  const std::string& var,
                                                  const SubstValue& value) {
    int order = 0;
    FactoredRational unit(f.constant());
    for (const auto& [atom, e] : f.factors()) {
        if (!atom.is_poly() || !atom.poly.uses(var)) {
            unit = unit * FactoredRational::build(Rat(1), {{atom, e}});
            continue;
        }
        if (value.infinite) {
            // chart s = 1/var: order is minus the degree, the unit part at
            // s = 0 is the leading coefficient in var
            int d = atom.poly.degree(var);
            order += -d * e;
            MultiPoly lead;
            auto it = std::lower_bound(atom.poly.vars().begin(), atom.poly.vars().end(), var);
            size_t i = size_t(it - atom.poly.vars().begin());
            for (const auto& [exps, c] : atom.poly.terms()) {
                if (exps[i] != d) continue;
                MultiPoly term{c};
                for (size_t j = 0; j < exps.size(); ++j)
                    if (j != i && exps[j] > 0)
                        term = term * MultiPoly::variable(atom.poly.vars()[j]).pow(exps[j]);
                lead = lead + term;
            }
            unit = unit * factor(lead).pow(e);
        } else {
            MultiPoly num, den{Rat(1)};
            if (!value.zero) {
                const FactoredRational& val = *value.value;
                if (val.uses(var))
                    throw std::domain_error("substitution value may not use the substituted variable");
                std::tie(num, den) = val.expand();
            }
            MultiPoly reduced = atom.poly;
            int k = 0;
            while (true) {
                MultiPoly composed = reduced.compose_fraction(var, num, den);
                if (!composed.is_zero()) {
                    int d = reduced.degree(var);
                    unit = unit * (factor(composed) * factor(den).pow(-d)).pow(e);
                    break;
                }
                // divide out the uniformizer var - num/den, written as
                // (var*den - num)/den so the division stays polynomial
                reduced = reduced.divide_exact(MultiPoly::variable(var) * den - num);
                unit = unit * factor(den).pow(e);
                ++k;
            }
            order += k * e;
        }
    }
    return {order, unit};
}

FactoredRational substitute(const FactoredRational& f, const std::string& var,
                            const SubstValue& value) {
    if (value.infinite) {
        auto [order, unit] = local_order_unit(f, var, value);
        if (order != 0) throw NotAUnitError(f.to_string());
        return unit;
    }
    // finite case: every individual factor must stay a unit
    MultiPoly num, den{Rat(1)};
    if (!value.zero) std::tie(num, den) = value.value->expand();
    FactoredRational out(f.constant());
    for (const auto& [atom, e] : f.factors()) {
        if (!atom.is_poly() || !atom.poly.uses(var)) {
            out = out * FactoredRational::build(Rat(1), {{atom, e}});
            continue;
        }
        MultiPoly composed = atom.poly.compose_fraction(var, num, den);
        if (composed.is_zero()) throw NotAUnitError(atom.to_string());
        int d = atom.poly.degree(var);
        out = out * (factor(composed) * factor(den).pow(-d)).pow(e);
    }
    return out;
}

int trans_degree(const std::vector<FactoredRational>& fs,
                 const std::vector<std::string>& vars) {
    if (fs.empty()) throw std::domain_error("trans_degree of an empty list");
    // logarithmic derivative matrix, rows cleared of denominators:
    // row i, col j = sum_k e_ik * da_k/dx_j * prod_{l != k} a_l
    std::vector<std::vector<MultiPoly>> m;
    for (const auto& f : fs) {
        std::vector<MultiPoly> row(vars.size());
        for (size_t k = 0; k < f.factors().size(); ++k) {
            const auto& [atom, e] = f.factors()[k];
            if (!atom.is_poly()) continue;
            MultiPoly others{Rat(1)};
            for (size_t l = 0; l < f.factors().size(); ++l)
                if (l != k && f.factors()[l].first.is_poly())
                    others = others * f.factors()[l].first.poly;
            for (size_t j = 0; j < vars.size(); ++j) {
                MultiPoly d = atom.poly.derivative(vars[j]);
                if (!d.is_zero()) row[j] = row[j] + Rat(e) * d * others;
            }
        }
        m.push_back(std::move(row));
    }
    // fraction-free (Bareiss) elimination with pivoting
    size_t rows = m.size(), cols = vars.size();
    MultiPoly prev_pivot{Rat(1)};
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t cc = c + 1; cc < cols; ++cc)
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc])
                               .divide_exact(prev_pivot);
            m[r][c] = MultiPoly();
        }
        prev_pivot = m[rank][c];
        ++rank;
    }
    return int(rank);
}

}  // namespace chowpoly
