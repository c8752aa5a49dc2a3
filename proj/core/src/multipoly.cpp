#include "chowpoly/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace chowpoly {

namespace {

// gcd of two nonneg Ints
Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace

std::vector<std::pair<Int, int>> factor_integer(Int n) {
    std::vector<std::pair<Int, int>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    auto push = [&out](const Int& p) {
        for (auto& [q, e] : out)
            if (q == p) {
                ++e;
                return;
            }
        out.emplace_back(p, 1);
    };
    for (Int d = 2; d * d <= n && d < 2000000; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) {
            push(d);
            n /= d;
        }
    }
    if (n > 1) {
        // either prime or beyond trial-division range; probable-prime split
        if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            push(n);
        } else {
            // Pollard rho
            std::vector<Int> stack{n};
            while (!stack.empty()) {
                Int m = stack.back();
                stack.pop_back();
                if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
                    push(m);
                    continue;
                }
                Int x = 2, y = 2, d = 1, c = 1;
                while (d == 1 || d == m) {
                    x = (x * x + c) % m;
                    y = (y * y + c) % m;
                    y = (y * y + c) % m;
                    Int diff = x - y;
                    if (diff < 0) diff = -diff;
                    d = int_gcd(diff, m);
                    if (d == m) {
                        ++c;
                        x = y = 2;
                        d = 1;
                    }
                }
                stack.push_back(d);
                stack.push_back(m / d);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

MultiPoly::MultiPoly(const Rat& c) {
    if (c != 0) terms_[{}] = c;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_[{1}] = Rat(1);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && vars_.empty());
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exps ne;
        for (size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt[ne] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MultiPoly remap(const MultiPoly& p, const std::vector<std::string>& vars) {
    MultiPoly r;
    r.vars_ = vars;
    std::vector<size_t> pos(p.vars_.size());
    for (size_t i = 0; i < p.vars_.size(); ++i) {
        auto it = std::lower_bound(vars.begin(), vars.end(), p.vars_[i]);
        pos[i] = size_t(it - vars.begin());
    }
    for (const auto& [e, c] : p.terms_) {
        MultiPoly::Exps ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[ne] = c;
    }
    return r;
}

void MultiPoly::align(const MultiPoly& a, const MultiPoly& b,
                      std::vector<std::string>& vars, TermMap& ta, TermMap& tb) {
    vars.clear();
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(vars));
    ta = remap(a, vars).terms_;
    tb = remap(b, vars).terms_;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r;
    TermMap ta, tb;
    align(*this, o, r.vars_, ta, tb);
    r.terms_ = std::move(ta);
    for (const auto& [e, c] : tb) r.terms_[e] += c;
    r.prune();
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    if (is_zero() || o.is_zero()) return r;
    TermMap ta, tb;
    align(*this, o, r.vars_, ta, tb);
    for (const auto& [ea, ca] : ta)
        for (const auto& [eb, cb] : tb) {
            Exps e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.terms_[e] += ca * cb;
        }
    r.prune();
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r;
    if (c == 0) return r;
    r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    MultiPoly r{Rat(1)}, b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

int MultiPoly::degree(const std::string& var) const {
    if (is_zero()) return -1;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    size_t i = size_t(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int MultiPoly::total_degree() const {
    if (is_zero()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return MultiPoly();
    size_t i = size_t(it - vars_.begin());
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exps ne(e);
        ne[i] -= 1;
        r.terms_[ne] += c * Rat(e[i]);
    }
    r.prune();
    return r;
}

MultiPoly MultiPoly::eval(const std::string& var, const Rat& value) const {
    return compose(var, MultiPoly(value));
}

MultiPoly MultiPoly::compose(const std::string& var, const MultiPoly& p) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    size_t i = size_t(it - vars_.begin());
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        MultiPoly term{c};
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (k == i)
                term = term * p.pow(e[k]);
            else
                term = term * MultiPoly::variable(vars_[k]).pow(e[k]);
        }
        r = r + term;
    }
    return r;
}

MultiPoly MultiPoly::compose_fraction(const std::string& var, const MultiPoly& num,
                                      const MultiPoly& den) const {
    int d = degree(var);
    if (d <= 0) return *this;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    size_t i = size_t(it - vars_.begin());
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        MultiPoly term{c};
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0 || k == i) continue;
            term = term * MultiPoly::variable(vars_[k]).pow(e[k]);
        }
        term = term * num.pow(e[i]) * den.pow(d - e[i]);
        r = r + term;
    }
    return r;
}

MultiPoly MultiPoly::rename(const std::string& from, const std::string& to) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), from);
    if (it == vars_.end() || *it != from) return *this;
    if (std::binary_search(vars_.begin(), vars_.end(), to))
        throw std::domain_error("rename target already in use: " + to);
    return compose(from, MultiPoly::variable(to));
}

Rat MultiPoly::leading_coeff() const {
    if (is_zero()) throw std::domain_error("leading coefficient of 0");
    return terms_.rbegin()->second;
}

Rat MultiPoly::content() const {
    if (is_zero()) throw std::domain_error("content of 0");
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = int_gcd(num_gcd, abs(c.get_num()));
        den_lcm = int_lcm(den_lcm, c.get_den());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

MultiPoly MultiPoly::primitive_part() const {
    Rat c = content();
    if (leading_coeff() < 0) c = -c;
    MultiPoly r = *this;
    for (auto& [e, v] : r.terms_) v /= c;
    return r;
}

MultiPoly MultiPoly::monic() const {
    Rat lc = leading_coeff();
    MultiPoly r = *this;
    for (auto& [e, v] : r.terms_) v /= lc;
    return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly q, r = *this;
    std::vector<std::string> vars;
    TermMap tr, td;
    while (!r.is_zero()) {
        align(r, d, vars, tr, td);
        const auto& [er, cr] = *tr.rbegin();
        const auto& [ed, cd] = *td.rbegin();
        Exps e(er.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = er[i] - ed[i];
            if (e[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        MultiPoly t;
        t.vars_ = vars;
        t.terms_[e] = cr / cd;
        t.prune();
        q = q + t;
        r = r - t * d;
    }
    return q;
}

namespace {

// view p as a univariate polynomial in `var` with MultiPoly coefficients
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, const std::string& var) {
    if (p.is_zero()) return {p};
    int d = p.degree(var);
    std::vector<MultiPoly> out(size_t(d + 1));
    auto it = std::lower_bound(p.vars().begin(), p.vars().end(), var);
    if (it == p.vars().end() || *it != var) {
        out[0] = p;
        return out;
    }
    for (int k = 0; k <= d; ++k) {
        // coefficient of var^k
        MultiPoly c;
        size_t i = size_t(it - p.vars().begin());
        for (const auto& [e, v] : p.terms()) {
            if (e[i] != k) continue;
            MultiPoly term{v};
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i && e[j] > 0)
                    term = term * MultiPoly::variable(p.vars()[j]).pow(e[j]);
            c = c + term;
        }
        out[size_t(k)] = c;
    }
    return out;
}

MultiPoly from_coeffs(const std::vector<MultiPoly>& cs, const std::string& var) {
    MultiPoly r;
    for (size_t k = 0; k < cs.size(); ++k)
        r = r + cs[k] * MultiPoly::variable(var).pow(int(k));
    return r;
}

// content of p w.r.t. var: gcd of its coefficient polynomials
MultiPoly content_in(const MultiPoly& p, const std::string& var) {
    auto cs = coeffs_in(p, var);
    MultiPoly g;
    for (const auto& c : cs)
        if (!c.is_zero()) g = g.is_zero() ? c : MultiPoly::gcd(g, c);
    return g;
}

// pseudo-remainder of a by b in variable var
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    auto cb = coeffs_in(b, var);
    int db = int(cb.size()) - 1;
    MultiPoly lb = cb.back();
    MultiPoly r = a;
    while (true) {
        auto cr = coeffs_in(r, var);
        int dr = r.is_zero() ? -1 : int(cr.size()) - 1;
        if (dr < db) return r;
        MultiPoly shift = MultiPoly::variable(var).pow(dr - db);
        r = r * lb - cr.back() * shift * b;
    }
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly{Rat(1)};
    // main variable: lex-smallest variable in use
    std::string var = std::min(a.vars_.front(), b.vars_.front());
    int da = a.degree(var), db = b.degree(var);
    if (da == 0) return gcd(a, content_in(b, var));
    if (db == 0) return gcd(content_in(a, var), b);
    MultiPoly ca = content_in(a, var), cb = content_in(b, var);
    MultiPoly gc = gcd(ca, cb);
    MultiPoly pa = a.divide_exact(ca), pb = b.divide_exact(cb);
    // primitive PRS
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = prem(pa, pb, var);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            MultiPoly cr = content_in(r, var);
            pb = r.divide_exact(cr);
        }
    }
    if (pa.degree(var) == 0) return gc;  // primitive parts are coprime in var
    MultiPoly cpa = content_in(pa, var);
    return (gc * pa.divide_exact(cpa)).primitive_part();
}

int MultiPoly::compare(const MultiPoly& a, const MultiPoly& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_ ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (!has_var || ac != 1) {
            os << rat_to_string(ac);
            if (has_var) os << "*";
        }
        bool fv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!fv) os << "*";
            fv = false;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace chowpoly
