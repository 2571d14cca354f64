#ifndef HMSTURM_BOUNDS_HPP
#define HMSTURM_BOUNDS_HPP

#include "hmsturm/invariants.hpp"

namespace hmsturm {

// Vanishing threshold report. The content statement: a Hilbert modular form
// of weight (k1,k2) for the level vanishing with order s at all cusps and
// with order > threshold + s at cusp i0 is zero; a_min is the least integer
// strictly above the threshold.
struct BoundReport {
    Discriminant D;
    int a_class = 0;        // narrow class index of the level ideal
    int cusp_index = 0;     // i0, indexing ideal-class cusps (0 = infinity)
    long long k1 = 0, k2 = 0;
    long long s = 0;
    long long n = 0;
    long long index = 1;    // [Gamma(O_K,a) : Gamma_a]
    Rat zeta;
    std::vector<i128> cusp_sums;  // Sigma_j (b_{i,j} - 2), ideal-class cusps
    i128 sum_at_i0 = 0;
    i128 total_sum = 0;
    NRoute route = NRoute::Conjecture;
    Rat threshold;
    i128 a_min = 0;
    // Sturm variant bookkeeping
    long long prime_p = 0;
    bool p_compatible = false;
};

// parallel-weight threshold: 4 k n zeta / Sigma(b_{i0}) - s * (total / Sigma(b_{i0})),
// stated for parallel weight 2k (pass twok = 2k).
BoundReport hecke_bound(const Discriminant &D, const FracIdeal &a, int cusp_i0,
                        long long twok, long long s);

// general weights/levels: (k1 + k2) n [Gamma(O_K,a):Gamma_a] zeta / Sigma - s(...)
BoundReport general_bound(const Discriminant &D, const FracIdeal &a, int cusp_i0,
                          long long k1, long long k2, long long s, long long index);

// |SL2(O_K/c)| = N(c)^3 prod_{P | c} (1 - N(P)^-2); c = (n)
i128 subgroup_index(const Discriminant &D, long long n);

// Sturm variant: same threshold, plus the precondition p prime, p ∤ D n
BoundReport sturm_bound(const Discriminant &D, const FracIdeal &a, int cusp_i0,
                        long long twok, long long s, long long p);

bool is_prime_ll(long long p);

// closed-form bound for the tabulated rational cases
struct RationalCaseBound {
    RationalCaseData data;
    long long k = 0, s = 0;
    Rat threshold;  // k_coeff * k - s_coeff * s
    i128 a_min = 0;
};
RationalCaseBound rational_case_bound(const Discriminant &D, bool a_principal_genus,
                                long long k, long long s);

}  // namespace hmsturm

#endif
