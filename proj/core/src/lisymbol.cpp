#include "chowpoly/lisymbol.hpp"

#include <sstream>

namespace chowpoly {

int compare_factored(const FactoredRational& a, const FactoredRational& b) {
    if (a.constant() != b.constant()) return a.constant() < b.constant() ? -1 : 1;
    size_t n = std::min(a.factors().size(), b.factors().size());
    for (size_t i = 0; i < n; ++i) {
        int c = Atom::compare(a.factors()[i].first, b.factors()[i].first);
        if (c != 0) return c;
        if (a.factors()[i].second != b.factors()[i].second)
            return a.factors()[i].second < b.factors()[i].second ? -1 : 1;
    }
    if (a.factors().size() != b.factors().size())
        return a.factors().size() < b.factors().size() ? -1 : 1;
    return 0;
}

PPoint PPoint::of_rat(const Rat& c) {
    if (c == 0) return zero();
    return of(FactoredRational(c));
}

int PPoint::compare(const PPoint& a, const PPoint& b) {
    auto rank = [](Kind k) { return k == Kind::Zero ? 0 : (k == Kind::Inf ? 1 : 2); };
    if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind) ? -1 : 1;
    if (a.kind != Kind::Value) return 0;
    return compare_factored(a.value, b.value);
}

std::string PPoint::to_string() const {
    switch (kind) {
        case Kind::Zero: return "0";
        case Kind::Inf: return "INF";
        case Kind::Value: return value.to_string();
    }
    return "?";
}

void LiSymbol::add(const Rat& c, const PPoint& p) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_[p] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LiSymbol LiSymbol::operator+(const LiSymbol& o) const {
    if (weight_ != o.weight_) throw std::domain_error("Li-symbol weight mismatch");
    LiSymbol r = *this;
    for (const auto& [p, c] : o.terms_) r.add(c, p);
    return r;
}

LiSymbol LiSymbol::operator-(const LiSymbol& o) const { return *this + o * Rat(-1); }

LiSymbol LiSymbol::operator*(const Rat& c) const {
    LiSymbol r(weight_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [p, v] : r.terms_) v *= c;
    return r;
}

bool LiSymbol::operator==(const LiSymbol& o) const {
    return weight_ == o.weight_ && terms_ == o.terms_;
}

bool LiSymbol::over_constants() const {
    for (const auto& [p, c] : terms_)
        if (p.is_value() && !p.value.variables().empty()) return false;
    return true;
}

std::string LiSymbol::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (ac != 1) os << rat_to_string(ac) << "*";
        os << weight_ << "{" << p.to_string() << "}";
    }
    return os.str();
}

std::string DeltaImage::to_string() const {
    if (weight == 2) return wedge.to_string();
    if (tensor.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : tensor) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (ac != 1) os << rat_to_string(ac) << "*";
        os << (weight - 1) << "{" << key.first.to_string() << "} (x) ("
           << key.second.to_string() << ")";
    }
    return os.str();
}

namespace {

// 1 - a as a factored rational; nullopt when a == 1
std::optional<FactoredRational> one_minus(const FactoredRational& a) {
    auto [num, den] = a.expand();
    MultiPoly diff = den - num;
    if (diff.is_zero()) return std::nullopt;
    return factor(diff) * factor(den).inverse();
}

// atom expansion of a as an arity-1 wedge (primes from the constant too)
WedgeElement class_of(const FactoredRational& a) { return wedge_of({a}); }

}  // namespace

DeltaImage delta(const LiSymbol& s) {
    DeltaImage out;
    out.weight = s.weight();
    if (s.weight() == 2) {
        for (const auto& [p, c] : s.terms()) {
            if (!p.is_value()) continue;  // a = 0, infinity
            auto om = one_minus(p.value);
            if (!om) continue;  // a = 1
            out.wedge = out.wedge + wedge_of({p.value, *om}) * c;
        }
        return out;
    }
    for (const auto& [p, c] : s.terms()) {
        if (!p.is_value()) continue;
        WedgeElement cls = class_of(p.value);
        for (const auto& [mono, k] : cls.terms())
            for (const auto& atom : mono.slots) {
                auto key = std::make_pair(p, atom);
                auto it = out.tensor.find(key);
                Rat add = c * k;
                if (it == out.tensor.end()) {
                    out.tensor[key] = add;
                } else {
                    it->second += add;
                    if (it->second == 0) out.tensor.erase(it);
                }
            }
    }
    return out;
}

LiSymbol res(const Valuation& v, const LiSymbol& s) {
    if (v.kind == Valuation::Kind::Graph)
        throw std::domain_error("res expects a point of the t-line");
    LiSymbol out(s.weight());
    for (const auto& [p, c] : s.terms()) {
        if (!p.is_value()) {
            out.add(c, p);
            continue;
        }
        int n = ord(v, p.value);
        if (n != 0) continue;
        out.add(c, PPoint::of(residue_unit(v, p.value)));
    }
    return out;
}

std::string evidence_name(Evidence e) {
    switch (e) {
        case Evidence::Proved: return "proved";
        case Evidence::Certified: return "certified";
        case Evidence::Numeric: return "numeric";
    }
    return "?";
}

RmGenerator r_m_generator(const LiSymbol& alpha,
                          const std::vector<CertificateRow>& certificate,
                          const NumericKernelCheck& numeric) {
    DeltaImage d = delta(alpha);
    Evidence ev;
    if (alpha.weight() == 2) {
        if (!d.wedge.is_zero())
            throw EvidenceError("delta does not vanish: " + d.wedge.to_string());
        ev = Evidence::Proved;
    } else if (!certificate.empty()) {
        // expand the certificate rows and compare against delta(alpha)
        std::map<std::pair<PPoint, Atom>, Rat> expanded;
        for (const auto& row : certificate) {
            if (row.generator.weight() != alpha.weight() - 1)
                throw EvidenceError("certificate row has wrong weight");
            for (const auto& [p, c] : row.generator.terms()) {
                auto key = std::make_pair(p, row.tensor_atom);
                expanded[key] += row.coeff * c;
                if (expanded[key] == 0) expanded.erase(key);
            }
        }
        if (expanded != d.tensor)
            throw EvidenceError("certificate does not reduce delta(alpha)");
        ev = Evidence::Certified;
    } else if (numeric) {
        if (auto err = numeric(alpha))
            throw EvidenceError("numeric kernel check failed: " + *err);
        ev = Evidence::Numeric;
    } else {
        throw EvidenceError("no kernel evidence supplied for weight > 2");
    }
    // the one-parameter variable of alpha (default t for constant families)
    std::string var = "t";
    for (const auto& [p, c] : alpha.terms())
        if (p.is_value() && !p.value.variables().empty()) {
            auto vs = p.value.variables();
            if (vs.size() > 1)
                throw EvidenceError("alpha must be a one-parameter family");
            var = vs[0];
        }
    LiSymbol g = res(Valuation::point(var, Rat(0)), alpha) -
                 res(Valuation::infinity(var), alpha);
    if (!g.over_constants())
        throw EvidenceError("residues did not specialize to constants");
    return {g, ev};
}

}  // namespace chowpoly
