#ifndef HMSTURM_CUSPRES_HPP
#define HMSTURM_CUSPRES_HPP

#include <vector>

#include "hmsturm/ideals.hpp"

namespace hmsturm {

// Resolution of the cusp singularity attached to (M, V), V of index v_index
// in the squared units. Vertices are emitted in the homothety normalization
// where the lattice is the primitive integral ideal equivalent to w0 Z + Z.
struct CuspResolution {
    Discriminant D;
    FracIdeal lattice;             // the input lattice M
    FracIdeal normalized_lattice;  // primitive integral rep carrying the vertices
    BQF reduced;                   // reduced form of M, first root w0
    std::vector<QuadElem> vertices;       // A_{-1} .. A_{r_tilde}
    std::vector<long long> cycle;         // b_0 .. b_{r_tilde - 1}
    std::vector<long long> self_intersections;  // -b_k, adjusted when r_tilde = 1
    long long period = 0;    // r, period of {b_k}
    int nu = 0;              // 1 if N(eps0) = -1 else 2
    long long v_index = 1;   // [U^2_{O_K} : V]
    long long r_tilde = 0;   // r * nu * v_index
    bool singular = false;             // r_tilde == 1
    bool double_intersection = false;  // r_tilde == 2: two curves meeting twice
    QuadElem unit_u;      // A_r / A_0, totally positive unit < 1
    QuadElem eps_plus;    // generator of U^2_{O_K}, > 1

    // A_0 .. A_{r_tilde - 1}, the vertices the tables list
    std::vector<QuadElem> vertex_reps() const {
        return std::vector<QuadElem>(vertices.begin() + 1,
                                     vertices.begin() + 1 + (size_t)r_tilde);
    }
    i128 cycle_sum_minus_2() const {
        i128 s = 0;
        for (long long b : cycle) s += b - 2;
        return s;
    }
};

// period search cap; the HSM_MAX_PERIOD environment variable overrides it
long long max_period_cap();

CuspResolution resolve_cusp(const FracIdeal &M, long long v_index = 1);

// one period of the b-cycle only (no vertices, no units). The w-recursion
// stays within reduced roots, so this works even where the fundamental unit
// overflows the vertex arithmetic.
std::vector<long long> base_cycle_of(const FracIdeal &M);

// resolution for the lattice n*M with V = U^2_{O_K,(n)}
CuspResolution scaled_resolution(const FracIdeal &M, long long n);

struct CuspSet {
    Discriminant D;
    FracIdeal a, c;
    // one entry per narrow class b, in canonical class order;
    // entry i resolves isotropy_lattice(a, reps[i], c)
    std::vector<CuspResolution> cusps;
};

// v_index must be [U^2 : U^2_{O_K,c}] (1 for c = O_K, unit_index(n) for (n))
CuspSet resolve_all_cusps(const Discriminant &D, const FracIdeal &a,
                          const FracIdeal &c, long long v_index = 1);

// Cusp data entering the Hecke/Sturm bounds: one cusp per *ideal* class of
// O_K, the cusp of class b carrying the cycle of a^-1 b^-1 (level-ab infinity
// cusp). Entry 0 is the principal cusp (lattice a^-1). Sums are over the
// full r~ = r*nu cycle, computed from the base period and nu alone.
struct BoundCusps {
    Discriminant D;
    FracIdeal a;
    int nu = 0;
    std::vector<std::vector<long long>> base_cycles;  // size h
    std::vector<i128> sums;   // Sigma_j (b_{i,j} - 2) per cusp, full cycle
    i128 total = 0;           // double sum over all cusps
};

BoundCusps bound_cusp_data(const Discriminant &D, const FracIdeal &a);

}  // namespace hmsturm

#endif
