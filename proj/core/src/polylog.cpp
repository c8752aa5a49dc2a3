#include "chowpoly/polylog.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace chowpoly {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Rat>& bernoulli_cache() {
    static std::vector<Rat> cache{Rat(1), make_rat(-1, 2)};
    return cache;
}

std::mutex cache_mutex;

}  // namespace

Rat bernoulli(int k) {
    if (k < 0) throw std::domain_error("bernoulli index must be >= 0");
    std::lock_guard lock(cache_mutex);
    auto& cache = bernoulli_cache();
    while (int(cache.size()) <= k) {
        // B_n = -1/(n+1) sum_{j<n} C(n+1, j) B_j
        int n = int(cache.size());
        Rat sum(0);
        Rat binom(1);  // C(n+1, j), updated incrementally
        for (int j = 0; j < n; ++j) {
            sum += binom * cache[size_t(j)];
            binom *= Rat(n + 1 - j, j + 1);
        }
        cache.push_back(-sum / Rat(n + 1));
    }
    return cache[size_t(k)];
}

double zeta_int(int s) {
    if (s == 1) throw std::domain_error("zeta(1) diverges");
    if (s == 0) return -0.5;
    if (s < 0) {
        // zeta(-n) = -B_{n+1}/(n+1) for n >= 1
        int n = -s;
        Rat v = -bernoulli(n + 1) / Rat(n + 1);
        return v.get_d();
    }
    static std::map<int, double> memo;
    {
        std::lock_guard lock(cache_mutex);
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
    }
    // Euler-Maclaurin: sum to N, then tail corrections
    const int N = 24;
    double sum = 0;
    for (int k = 1; k < N; ++k) sum += std::pow(double(k), -s);
    double Ns = std::pow(double(N), -s);
    sum += 0.5 * Ns + double(N) * Ns / double(s - 1);
    for (int j = 1; j <= 12; ++j) {
        double b2j = bernoulli(2 * j).get_d();
        double fact = 1;
        for (int i = 2; i <= 2 * j; ++i) fact *= i;
        double prod = 1;  // s (s+1) ... (s+2j-2)
        for (int i = 0; i <= 2 * j - 2; ++i) prod *= double(s + i);
        sum += b2j / fact * prod * std::pow(double(N), -s - 2 * j + 1);
    }
    std::lock_guard lock(cache_mutex);
    memo[s] = sum;
    return sum;
}

namespace {

// direct series, |z| <= 0.55
Complex li_series(int m, Complex z) {
    Complex sum = 0, term = z;
    for (int k = 1; k < 2000; ++k) {
        Complex t = term / std::pow(double(k), m);
        sum += t;
        if (std::abs(t) < 1e-18 && k > 4) break;
        term *= z;
    }
    return sum;
}

// Bernoulli polynomial B_m(x) at a complex argument
Complex bernoulli_poly(int m, Complex x) {
    Complex sum = 0;
    Rat binom(1);
    for (int k = 0; k <= m; ++k) {
        // C(m, k) B_k x^{m-k}
        sum += binom.get_d() * bernoulli(k).get_d() * std::pow(x, m - k);
        binom *= Rat(m - k, k + 1);
    }
    return sum;
}

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// expansion around z = 1 in mu = log z, |mu| < 2 pi:
// Li_m(z) = sum_{j >= 0, j != m-1} zeta(m-j) mu^j / j!
//           + mu^{m-1}/(m-1)! (H_{m-1} - log(-mu))
Complex li_log_expansion(int m, Complex z) {
    Complex mu = std::log(z);
    if (std::abs(mu) < 1e-300) return Complex(zeta_int(m), 0);
    Complex sum = 0;
    Complex mupow = 1;  // mu^j / j!
    int small_run = 0;  // zeta vanishes at even negatives, so require two
    for (int j = 0; j < 160; ++j) {
        if (j != m - 1) {
            Complex t = zeta_int(m - j) * mupow;
            sum += t;
            small_run = (j > 8 && std::abs(t) < 1e-18) ? small_run + 1 : 0;
            if (small_run >= 2) break;
        }
        mupow *= mu / double(j + 1);
    }
    double harmonic = 0;
    for (int i = 1; i <= m - 1; ++i) harmonic += 1.0 / i;
    Complex mh = std::pow(mu, m - 1) / factorial(m - 1);
    sum += mh * (harmonic - std::log(-mu));
    return sum;
}

// inversion: Li_m(z) = (-1)^{m-1} Li_m(1/z)
//                      - (2 pi i)^m / m! B_m(1/2 + log(-z) / (2 pi i))
Complex li_inversion(int m, Complex z) {
    Complex inv = li_series(m, 1.0 / z);
    Complex twopii(0, 2 * kPi);
    Complex arg = 0.5 + std::log(-z) / twopii;
    Complex corr = -std::pow(twopii, m) / factorial(m) * bernoulli_poly(m, arg);
    double sign = (m % 2 == 0) ? -1.0 : 1.0;
    return sign * inv + corr;
}

}  // namespace

LiResult li_m_full(int m, Complex z) {
    if (m < 1) throw std::domain_error("li_m needs m >= 1");
    LiResult r;
    if (m == 1) {
        if (z == Complex(1, 0)) throw std::domain_error("Li_1(1) diverges");
        r.value = -std::log(1.0 - z);
        r.on_branch_cut = (z.imag() == 0 && z.real() > 1);
        return r;
    }
    r.on_branch_cut = (z.imag() == 0 && z.real() >= 1);
    double az = std::abs(z);
    if (az == 0) {
        r.value = 0;
    } else if (az <= 0.55) {
        r.value = li_series(m, z);
    } else if (az >= 2.0) {
        r.value = li_inversion(m, z);
    } else {
        r.value = li_log_expansion(m, z);
    }
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()))
        throw std::domain_error("li_m overflow");
    return r;
}

Complex li_m(int m, Complex z) { return li_m_full(m, z).value; }

double sv_polylog(int m, Complex z) {
    if (m < 2) throw std::domain_error("sv_polylog needs m >= 2");
    if (z == Complex(0, 0)) return 0;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return 0;
    double lz = std::log(std::abs(z));
    Complex sum = 0;
    for (int k = 0; k <= m - 1; ++k) {
        double coeff = std::pow(2.0, k) * bernoulli(k).get_d() / factorial(k);
        Complex li;
        if (m - k == 1) {
            if (z == Complex(1, 0)) continue;  // log|z| = 0 kills the term
            li = -std::log(1.0 - z);
        } else {
            li = li_m(m - k, z);
        }
        sum += coeff * std::pow(lz, k) * li;
    }
    return (m % 2 == 1) ? sum.real() : sum.imag();
}

}  // namespace chowpoly
