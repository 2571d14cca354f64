#ifndef HMSTURM_FOURIER_HPP
#define HMSTURM_FOURIER_HPP

#include <map>
#include <optional>

#include "hmsturm/bounds.hpp"

namespace hmsturm {

// Canonical representative of the U^2-orbit of a totally positive xi:
// the orbit element of minimal trace, a trace tie broken toward y > 0.
// (Ties are conjugate pairs; the ratio xi/xi' is then an odd power of
// eps_plus.)
QuadElem canonical_rep(const QuadElem &xi, const QuadElem &eps_plus);

struct SturmRep {
    QuadElem xi;            // canonical orbit representative
    long long witness_j = 0;  // vertex index with Tr(orbit member * A_j) < T
    i128 witness_trace = 0;   // the minimal vertex trace of the orbit
};

struct SturmSet {
    Discriminant D;
    int a_class = 0;
    long long k1 = 0, k2 = 0, s = 0;
    long long n = 0;
    i128 threshold_T = 0;     // a_min + s; the defining condition is trace < T
    CuspResolution resolution;  // infinity cusp of Gamma(O_K, a), normalized
    FracIdeal dual;             // dual of the normalized lattice
    bool includes_zero = false;  // 0 belongs to the certifying set iff s = 0
    std::vector<SturmRep> reps;  // nonzero reps, sorted by (trace, y)

    size_t count() const { return reps.size() + (includes_zero ? 1 : 0); }
};

SturmSet sturm_set(const Discriminant &D, const FracIdeal &a, long long k1,
                   long long k2, long long s);

// minimal vertex trace of xi over all hull columns modulo the unit action of
// the resolution; xi must be totally positive and in the dual lattice
i128 min_vertex_trace(const QuadElem &xi, const CuspResolution &res,
                      long long *j_at = nullptr);

// |S| row of the reference count tables. The tables' s-convention is frozen
// here (see sturm_count_convention below) after matching every printed cell.
i128 sturm_count(const Discriminant &D, const FracIdeal &a, long long twok);
long long sturm_count_convention();  // the s used for the tables

// Fourier coefficient data a_xi on a declared dual lattice
struct CoeffMap {
    FracIdeal dual;                  // M^v the keys must lie in
    std::map<QuadElem, Rat> entries;  // key 0 or totally positive

    void insert(const QuadElem &xi, const Rat &value);
};

// ord_{c}(G) = inf { Tr(xi A_j) : a_xi != 0 }; nullopt encodes infinity
std::optional<i128> order_at_cusp(const CoeffMap &coeffs, const CuspResolution &res);

// T_{p11} demonstrator for D = 44: b_xi = 11 a_xi + a_{xi/11}
CoeffMap hecke_p11_transform(const CoeffMap &coeffs);

}  // namespace hmsturm

#endif
