#pragma once

// Classical and single-valued polylogarithms in double precision.

#include <complex>

#include "chowpoly/rat.hpp"

namespace chowpoly {

using Complex = std::complex<double>;

// Bernoulli number B_k (B_1 = -1/2), exact
Rat bernoulli(int k);

// zeta at an integer argument != 1 (Euler-Maclaurin for s >= 2,
// trivial/Bernoulli values for s <= 0)
double zeta_int(int s);

struct LiResult {
    Complex value;
    bool on_branch_cut = false;  // z real in [1, inf) with m >= 2
};

// Li_m(z), principal branch, target absolute error ~1e-12;
// m = 1 requires z != 1
LiResult li_m_full(int m, Complex z);
Complex li_m(int m, Complex z);

// single-valued polylogarithm: the Bernoulli-weighted combination
// Re/Im_m sum_{k=0}^{m-1} 2^k B_k / k! log^k|z| Li_{m-k}(z);
// m = 2 is the Bloch-Wigner function D(z); 0 at z = 0
double sv_polylog(int m, Complex z);

}  // namespace chowpoly
