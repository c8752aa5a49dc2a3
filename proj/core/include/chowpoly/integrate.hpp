#pragma once

// Monte Carlo evaluation of the integral
//   int log|f_1| dlog|f_2| ^ ... ^ dlog|f_{2p+1}|
// over (P^1(C))^p, sampling each coordinate from the Fubini-Study measure.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowpoly/cycle.hpp"
#include "chowpoly/polylog.hpp"

namespace chowpoly {

// complex-coefficient sparse polynomial in variables indexed 0..nvars-1
struct CPoly {
    int nvars = 0;
    std::map<std::vector<int>, Complex> terms;

    static CPoly constant(int nvars, Complex c);
    static CPoly variable(int nvars, int idx);
    Complex eval(const std::vector<Complex>& z) const;
    CPoly derivative(int var) const;
    bool is_zero() const { return terms.empty(); }
};

// rational expression num/den with symbolic partial derivatives
struct CSlot {
    CPoly num, den;

    static CSlot from_poly(CPoly p);
    Complex value(const std::vector<Complex>& z) const;
    // (d slot / d z_k) / slot at z
    Complex dlog(int k, const std::vector<Complex>& z,
                 const std::vector<CPoly>& dnum, const std::vector<CPoly>& dden) const;
};

CPoly to_cpoly(const MultiPoly& p, const std::vector<std::string>& vars);
CSlot to_cslot(const FactoredRational& f, const std::vector<std::string>& vars);
CSlot atom_cslot(const Atom& a, const std::vector<std::string>& vars);

struct IntegralCfg {
    std::uint64_t samples = 200000;
    std::uint64_t seed = 1;
    double epsilon = 1e-7;
    int workers = 1;
};

struct IntegralEstimate {
    double value = 0;
    double stderr_ = 0;
    std::uint64_t samples = 0;
    double rejected_fraction = 0;
    std::uint64_t seed = 0;
    bool reliability_warning = false;  // rejected_fraction >= 1%
};

// slots.size() must be 2p+1; deterministic for fixed (seed, workers)
IntegralEstimate chow_integral(int p, const std::vector<CSlot>& slots,
                               const IntegralCfg& cfg);

// theta of a wedge element on the torus with the given variables:
// sum over monomials of chow_integral of the atom slots
struct WedgeIntegral {
    double value = 0;
    double stderr_ = 0;
    double l1_mass = 0;  // sum of |term values|
    std::uint64_t rejected_max_permille = 0;
    std::vector<IntegralEstimate> pieces;
};
WedgeIntegral integrate_wedge(const WedgeElement& a,
                              const std::vector<std::string>& vars,
                              const IntegralCfg& cfg);

// omega_m slot list at a complex argument (numeric layer, no exact atoms)
std::vector<CSlot> omega_slots(int m, Complex a);

struct EmpiricalConstant {
    double q_hat = 0;
    double spread = 0;  // max pairwise deviation / |q_hat|
    double combined_stderr = 0;
    std::vector<Complex> support;
    std::vector<double> ratios;        // per-point q estimates
    std::vector<double> ratio_stderr;  // per-point propagated errors
    std::vector<Complex> rejected;     // points with |sv_polylog| <= 1e-3
};

// ratio chow_integral(omega_m(a)) / sv_polylog(m, a) across the points
EmpiricalConstant estimate_q(int m, const std::vector<Complex>& points,
                             const IntegralCfg& cfg);

struct BoundaryTerm {
    std::string description;
    double value = 0;
    double stderr_ = 0;
};

struct BoundaryReport {
    double sum = 0;
    double total_stderr = 0;
    double l1_mass = 0;
    bool pass = false;
    std::vector<BoundaryTerm> terms;
};

// computes d(top) exactly, integrates every boundary term and checks
// |sum| <= max(3 * total stderr, 0.02 * l1 mass)
BoundaryReport verify_boundary(const Cycle& top, const IntegralCfg& cfg);

// theta of a degree-1 cycle sum: integrates each term and combines linearly
WedgeIntegral integrate_cycle_sum(const CycleSum& s, const IntegralCfg& cfg);

// default numeric kernel check for r_m_generator at weight m > 2:
// samples complex t and tests the sv_polylog/log pairing of delta(alpha)
NumericKernelCheck sv_pairing_kernel_check(double tolerance = 1e-6, int samples = 20,
                                           std::uint64_t seed = 12345);

}  // namespace chowpoly
