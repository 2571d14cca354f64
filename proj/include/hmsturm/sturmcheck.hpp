#ifndef HMSTURM_STURMCHECK_HPP
#define HMSTURM_STURMCHECK_HPP

#include <iosfwd>

#include "hmsturm/fourier.hpp"

namespace hmsturm {

enum class VerdictKind {
    Certified,           // all certifying coefficients vanish / are congruent
    HypothesisFailed,    // some certifying coefficient violates the hypothesis
    InputIncomplete,     // a certifying coefficient is missing from the input
    PreconditionFailed,  // p | D n
};

const char *verdict_name(VerdictKind k);

struct CongruenceVerdict {
    VerdictKind kind = VerdictKind::PreconditionFailed;
    long long p = 0;  // 0 for the exact-vanishing check
    Discriminant D;
    int a_class = 0;
    long long n = 0;
    i128 threshold_T = 0;
    std::vector<QuadElem> failing;
    std::vector<QuadElem> missing;
    std::vector<std::pair<QuadElem, Rat>> checked;  // rep -> value (or residue)
    std::string message;

    bool certified() const { return kind == VerdictKind::Certified; }
};

// fold coefficient keys into canonical orbit representatives (parallel
// weight: the coefficient is unit-invariant); duplicate keys must agree
CoeffMap fold_keys(const CoeffMap &coeffs, const QuadElem &eps_plus);

CongruenceVerdict check_vanishing(const CoeffMap &coeffs, const SturmSet &set);

// single form against zero mod p (the zero form is complete by definition)
CongruenceVerdict check_congruence_zero(const CoeffMap &coeffs, long long p,
                                        const SturmSet &set);

CongruenceVerdict check_congruence(const CoeffMap &A, const CoeffMap &B, long long p,
                                   const SturmSet &set);

// coefficient CSV:
//   line 1: D,a_class,weight,s
//   line 2: the four integer values
//   line 3: x_num,x_den,y_num,y_den,coeff_num,coeff_den
//   rows:   one coefficient per line, xi = x + y*sqrt(D)
struct CoeffFile {
    long long D = 0;
    int a_class = 0;
    long long weight = 0;  // parallel weight 2k
    long long s = 0;
    std::vector<std::pair<QuadElem, Rat>> rows;
};

CoeffFile load_coeff_csv(std::istream &in);
void write_coeff_csv(std::ostream &out, const CoeffFile &file);

}  // namespace hmsturm

#endif
