#include "chowpoly/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace chowpoly {

namespace {

constexpr double kPi = std::numbers::pi;

// counter-based stream: one splitmix64 chain keyed by (seed, index)
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct SampleRng {
    std::uint64_t state;
    explicit SampleRng(std::uint64_t seed, std::uint64_t index)
        : state(splitmix64(seed ^ splitmix64(index * 0x2545f4914f6cdd1dULL + 1))) {}
    double uniform() {
        state = splitmix64(state);
        return double(state >> 11) * 0x1.0p-53;
    }
};

// uniform point on the round sphere, stereographically projected: the
// Fubini-Study measure on the chart; weight = 1/density = pi (1+|z|^2)^2
Complex sample_fs(SampleRng& rng, double& weight) {
    double c = 1.0 - 2.0 * rng.uniform();  // cos(theta)
    double phi = 2.0 * kPi * rng.uniform();
    double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    double denom = 1.0 - c;  // projecting from the north pole
    if (denom < 1e-300) {
        weight = std::numeric_limits<double>::infinity();
        return Complex(0, 0);
    }
    Complex z(s * std::cos(phi) / denom, s * std::sin(phi) / denom);
    double r2 = std::norm(z);
    weight = kPi * (1.0 + r2) * (1.0 + r2);
    return z;
}

// determinant with partial pivoting
double det(std::vector<std::vector<double>>& m) {
    size_t n = m.size();
    double d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (m[piv][c] == 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            double f = m[r][c] / m[c][c];
            for (size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return d;
}

}  // namespace

CPoly CPoly::constant(int nvars, Complex c) {
    CPoly p;
    p.nvars = nvars;
    if (c != Complex(0, 0)) p.terms[std::vector<int>(size_t(nvars), 0)] = c;
    return p;
}

CPoly CPoly::variable(int nvars, int idx) {
    CPoly p;
    p.nvars = nvars;
    std::vector<int> e(size_t(nvars), 0);
    e[size_t(idx)] = 1;
    p.terms[e] = Complex(1, 0);
    return p;
}

Complex CPoly::eval(const std::vector<Complex>& z) const {
    Complex sum = 0;
    for (const auto& [e, c] : terms) {
        Complex t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= z[i];
        sum += t;
    }
    return sum;
}

CPoly CPoly::derivative(int var) const {
    CPoly d;
    d.nvars = nvars;
    for (const auto& [e, c] : terms) {
        if (e[size_t(var)] == 0) continue;
        std::vector<int> ne = e;
        ne[size_t(var)] -= 1;
        d.terms[ne] += c * double(e[size_t(var)]);
    }
    return d;
}

CSlot CSlot::from_poly(CPoly p) {
    CSlot s;
    int nv = p.nvars;
    s.num = std::move(p);
    s.den = CPoly::constant(nv, Complex(1, 0));
    return s;
}

Complex CSlot::value(const std::vector<Complex>& z) const {
    return num.eval(z) / den.eval(z);
}

Complex CSlot::dlog(int k, const std::vector<Complex>& z,
                    const std::vector<CPoly>& dnum,
                    const std::vector<CPoly>& dden) const {
    Complex n = num.eval(z), d = den.eval(z);
    Complex g = dnum[size_t(k)].eval(z) / n;
    if (!dden[size_t(k)].is_zero()) g -= dden[size_t(k)].eval(z) / d;
    return g;
}

CPoly to_cpoly(const MultiPoly& p, const std::vector<std::string>& vars) {
    CPoly out;
    out.nvars = int(vars.size());
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> ne(vars.size(), 0);
        for (size_t i = 0; i < p.vars().size(); ++i) {
            if (e[i] == 0) continue;
            auto it = std::find(vars.begin(), vars.end(), p.vars()[i]);
            if (it == vars.end())
                throw std::domain_error("variable off the torus: " + p.vars()[i]);
            ne[size_t(it - vars.begin())] = e[i];
        }
        out.terms[ne] += c.get_d();
    }
    return out;
}

CSlot to_cslot(const FactoredRational& f, const std::vector<std::string>& vars) {
    auto [num, den] = f.expand();
    CSlot s;
    s.num = to_cpoly(num, vars);
    s.den = to_cpoly(den, vars);
    return s;
}

CSlot atom_cslot(const Atom& a, const std::vector<std::string>& vars) {
    if (!a.is_poly())
        return CSlot::from_poly(CPoly::constant(int(vars.size()), Complex(a.prime.get_d(), 0)));
    return CSlot::from_poly(to_cpoly(a.poly, vars));
}

IntegralEstimate chow_integral(int p, const std::vector<CSlot>& slots,
                               const IntegralCfg& cfg) {
    if (int(slots.size()) != 2 * p + 1)
        throw std::domain_error("chow_integral needs 2p+1 slots");
    for (const auto& s : slots)
        if (s.num.is_zero()) throw std::domain_error("identically zero slot");

    IntegralEstimate est;
    est.seed = cfg.seed;
    if (p == 0) {
        // no integration: log of the absolute value of the constant
        std::vector<Complex> none;
        est.value = std::log(std::abs(slots[0].value(none)));
        est.samples = 0;
        return est;
    }

    // symbolic partials, shared read-only between workers
    std::vector<std::vector<CPoly>> dnum(slots.size()), dden(slots.size());
    for (size_t j = 0; j < slots.size(); ++j)
        for (int k = 0; k < p; ++k) {
            dnum[j].push_back(slots[j].num.derivative(k));
            dden[j].push_back(slots[j].den.derivative(k));
        }

    const std::uint64_t n = cfg.samples;
    const int workers = std::max(1, cfg.workers);
    const std::uint64_t chunk = (n + workers - 1) / std::uint64_t(workers);

    struct Partial {
        double sum = 0, sumsq = 0;
        std::uint64_t rejected = 0;
    };
    std::vector<Partial> partials(static_cast<size_t>(workers));

    auto run = [&](int w) {
        Partial& acc = partials[size_t(w)];
        std::uint64_t lo = std::uint64_t(w) * chunk;
        std::uint64_t hi = std::min(n, lo + chunk);
        std::vector<Complex> z(static_cast<size_t>(p));
        std::vector<std::vector<double>> mat(static_cast<size_t>(2 * p),
                                             std::vector<double>(size_t(2 * p)));
        for (std::uint64_t i = lo; i < hi; ++i) {
            SampleRng rng(cfg.seed, i);
            double weight = 1;
            bool bad = false;
            for (int k = 0; k < p; ++k) {
                double wk;
                z[size_t(k)] = sample_fs(rng, wk);
                if (!std::isfinite(wk)) {
                    bad = true;
                    break;
                }
                weight *= wk;
            }
            if (!bad) {
                for (const auto& s : slots) {
                    double av = std::abs(s.value(z));
                    if (!(av >= cfg.epsilon && av <= 1.0 / cfg.epsilon)) {
                        bad = true;
                        break;
                    }
                }
            }
            if (bad) {
                ++acc.rejected;
                acc.sumsq += 0;  // rejected samples contribute 0
                continue;
            }
            for (int j = 0; j < 2 * p; ++j)
                for (int k = 0; k < p; ++k) {
                    Complex g = slots[size_t(j + 1)].dlog(k, z, dnum[size_t(j + 1)],
                                                          dden[size_t(j + 1)]);
                    mat[size_t(j)][size_t(2 * k)] = g.real();
                    mat[size_t(j)][size_t(2 * k + 1)] = -g.imag();
                }
            double integrand =
                std::log(std::abs(slots[0].value(z))) * det(mat) * weight;
            if (!std::isfinite(integrand)) {
                ++acc.rejected;
                continue;
            }
            acc.sum += integrand;
            acc.sumsq += integrand * integrand;
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    double sum = 0, sumsq = 0;
    std::uint64_t rejected = 0;
    for (const auto& pt : partials) {  // fixed reduction order
        sum += pt.sum;
        sumsq += pt.sumsq;
        rejected += pt.rejected;
    }
    double mean = sum / double(n);
    double var = sumsq / double(n) - mean * mean;
    est.value = mean;
    est.stderr_ = std::sqrt(std::max(0.0, var) / double(n));
    est.samples = n;
    est.rejected_fraction = double(rejected) / double(n);
    est.reliability_warning = est.rejected_fraction >= 0.01;
    return est;
}

WedgeIntegral integrate_wedge(const WedgeElement& a,
                              const std::vector<std::string>& vars,
                              const IntegralCfg& cfg) {
    WedgeIntegral out;
    int p = int(vars.size());
    double var_acc = 0;
    for (const auto& [mono, c] : a.terms()) {
        std::vector<CSlot> slots;
        for (const auto& atom : mono.slots) slots.push_back(atom_cslot(atom, vars));
        IntegralEstimate est = chow_integral(p, slots, cfg);
        double cv = c.get_d();
        out.value += cv * est.value;
        out.l1_mass += std::abs(cv * est.value);
        var_acc += cv * cv * est.stderr_ * est.stderr_;
        out.rejected_max_permille = std::max(
            out.rejected_max_permille, std::uint64_t(est.rejected_fraction * 1000));
        out.pieces.push_back(est);
    }
    out.stderr_ = std::sqrt(var_acc);
    return out;
}

std::vector<CSlot> omega_slots(int m, Complex a) {
    int p = m - 1;
    std::vector<CSlot> slots;
    auto var = [&](int i) { return CPoly::variable(p, i); };
    auto cst = [&](Complex c) { return CPoly::constant(p, c); };
    CPoly one = cst(Complex(1, 0));
    // (1 - x1) ^ x1 ^ (x1 - x2) ^ x2 ^ ... ^ (x_{m-1} - a)
    {
        CPoly s = one;
        s.terms[CPoly::variable(p, 0).terms.begin()->first] -= Complex(1, 0);
        slots.push_back(CSlot::from_poly(s));
    }
    slots.push_back(CSlot::from_poly(var(0)));
    for (int i = 1; i < p; ++i) {
        CPoly d = var(i - 1);
        for (const auto& [e, c] : var(i).terms) d.terms[e] -= c;
        slots.push_back(CSlot::from_poly(d));
        slots.push_back(CSlot::from_poly(var(i)));
    }
    CPoly last = var(p - 1);
    last.terms[std::vector<int>(size_t(p), 0)] -= a;
    slots.push_back(CSlot::from_poly(last));
    return slots;
}

EmpiricalConstant estimate_q(int m, const std::vector<Complex>& points,
                             const IntegralCfg& cfg) {
    if (points.empty()) throw std::domain_error("estimate_q needs at least one point");
    EmpiricalConstant out;
    double var_acc = 0;
    for (const auto& a : points) {
        double lv = sv_polylog(m, a);
        if (std::abs(lv) <= 1e-3) {
            out.rejected.push_back(a);
            continue;
        }
        IntegralEstimate est = chow_integral(m - 1, omega_slots(m, a), cfg);
        out.support.push_back(a);
        out.ratios.push_back(est.value / lv);
        out.ratio_stderr.push_back(est.stderr_ / std::abs(lv));
        var_acc += (est.stderr_ / lv) * (est.stderr_ / lv);
    }
    if (out.ratios.empty())
        throw std::domain_error("estimate_q: every point was rejected");
    double sum = 0;
    for (double r : out.ratios) sum += r;
    out.q_hat = sum / double(out.ratios.size());
    double maxdev = 0;
    for (size_t i = 0; i < out.ratios.size(); ++i)
        for (size_t j = i + 1; j < out.ratios.size(); ++j)
            maxdev = std::max(maxdev, std::abs(out.ratios[i] - out.ratios[j]));
    out.spread = out.q_hat != 0 ? maxdev / std::abs(out.q_hat) : maxdev;
    out.combined_stderr = std::sqrt(var_acc) / double(out.ratios.size());
    return out;
}

WedgeIntegral integrate_cycle_sum(const CycleSum& s, const IntegralCfg& cfg) {
    if (s.degree() != 1)
        throw std::domain_error("integrate_cycle_sum expects a degree-1 sum");
    WedgeIntegral out;
    double var_acc = 0;
    for (const auto& [c, cyc] : s.terms()) {
        WedgeIntegral wi = integrate_wedge(cyc.a, cyc.vars, cfg);
        double cv = c.get_d();
        out.value += cv * wi.value;
        out.l1_mass += std::abs(cv) * wi.l1_mass;
        var_acc += cv * cv * wi.stderr_ * wi.stderr_;
        out.rejected_max_permille =
            std::max(out.rejected_max_permille, wi.rejected_max_permille);
        for (auto& piece : wi.pieces) out.pieces.push_back(piece);
    }
    out.stderr_ = std::sqrt(var_acc);
    return out;
}

BoundaryReport verify_boundary(const Cycle& top, const IntegralCfg& cfg) {
    if (top.degree != 0)
        throw std::domain_error("verify_boundary expects a degree-0 cycle");
    CycleSum d = differential(top);
    BoundaryReport rep;
    double var_acc = 0;
    for (const auto& [c, cyc] : d.terms()) {
        for (const auto& [mono, k] : cyc.a.terms()) {
            std::vector<CSlot> slots;
            for (const auto& atom : mono.slots) slots.push_back(atom_cslot(atom, cyc.vars));
            IntegralEstimate est = chow_integral(int(cyc.vars.size()), slots, cfg);
            double coeff = Rat(c * k).get_d();
            BoundaryTerm term;
            term.description = mono.to_string();
            term.value = coeff * est.value;
            term.stderr_ = std::abs(coeff) * est.stderr_;
            rep.sum += term.value;
            rep.l1_mass += std::abs(term.value);
            var_acc += term.stderr_ * term.stderr_;
            rep.terms.push_back(std::move(term));
        }
    }
    rep.total_stderr = std::sqrt(var_acc);
    rep.pass = std::abs(rep.sum) <=
               std::max(3.0 * rep.total_stderr, 0.02 * rep.l1_mass);
    return rep;
}

NumericKernelCheck sv_pairing_kernel_check(double tolerance, int samples,
                                           std::uint64_t seed) {
    return [tolerance, samples, seed](const LiSymbol& alpha) -> std::optional<std::string> {
        DeltaImage d = delta(alpha);
        if (d.weight == 2)
            return d.wedge.is_zero() ? std::nullopt
                                     : std::optional<std::string>("delta nonzero");
        if (d.tensor.empty()) return std::nullopt;
        std::string var = "t";
        for (const auto& [key, c] : d.tensor)
            if (key.first.is_value() && !key.first.value.variables().empty())
                var = key.first.value.variables()[0];
        for (int i = 0; i < samples; ++i) {
            SampleRng rng(seed, std::uint64_t(i));
            Complex t(4 * rng.uniform() - 2, 4 * rng.uniform() - 2);
            if (std::abs(t.imag()) < 0.1) t += Complex(0, 0.3);
            double sum = 0;
            bool usable = true;
            for (const auto& [key, c] : d.tensor) {
                // pair {h}_{m-1} (x) g  with  sv_polylog(m-1, h(t)) log|g(t)|
                CSlot h = to_cslot(key.first.value, {var});
                CSlot g = atom_cslot(key.second, {var});
                Complex hv = h.value({t}), gv = g.value({t});
                if (!std::isfinite(std::abs(hv)) || std::abs(gv) < 1e-12 ||
                    !std::isfinite(std::abs(gv))) {
                    usable = false;
                    break;
                }
                sum += c.get_d() * sv_polylog(d.weight - 1, hv) * std::log(std::abs(gv));
            }
            if (!usable) continue;
            if (std::abs(sum) > tolerance)
                return "pairing = " + std::to_string(sum) + " at t = (" +
                       std::to_string(t.real()) + "," + std::to_string(t.imag()) + ")";
        }
        return std::nullopt;
    };
}

}  // namespace chowpoly
