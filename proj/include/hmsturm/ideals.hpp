#ifndef HMSTURM_IDEALS_HPP
#define HMSTURM_IDEALS_HPP

#include <vector>

#include "hmsturm/qforms.hpp"

namespace hmsturm {

// Fractional ideal of O_K in Hermite normal form over the basis {1, sqrt(D)}:
//   g1 = (a + b*sqrt(D))/den  with b > 0,
//   g2 = c/den                with c > 0, 0 <= a < c,
// gcd(den, a, b, c) = 1.  Closure under O_K is verified on construction.
class FracIdeal {
   public:
    FracIdeal() = default;

    static FracIdeal from_generators(const Discriminant &D,
                                     const std::vector<QuadElem> &gens);
    static FracIdeal ring_of_integers(const Discriminant &D);
    static FracIdeal principal(const QuadElem &xi);
    static FracIdeal principal_integer(const Discriminant &D, i128 n);

    long long D() const { return D_; }
    QuadElem g1() const;  // (a + b sqrt D)/den
    QuadElem g2() const;  // c/den
    i128 den() const { return den_; }

    bool contains(const QuadElem &xi) const;
    bool is_integral() const;
    Rat norm() const;  // ideal norm, = covolume / sqrt(D)

    FracIdeal conj() const;
    FracIdeal inverse() const;
    FracIdeal scaled(const Rat &r) const;
    FracIdeal scaled(const QuadElem &lambda) const;

    friend FracIdeal operator*(const FracIdeal &I, const FracIdeal &J);

    friend bool operator==(const FracIdeal &I, const FracIdeal &J) {
        return I.D_ == J.D_ && I.den_ == J.den_ && I.a_ == J.a_ && I.b_ == J.b_ &&
               I.c_ == J.c_;
    }
    friend bool operator!=(const FracIdeal &I, const FracIdeal &J) { return !(I == J); }

    std::string str() const;

   private:
    long long D_ = 0;
    i128 den_ = 1, a_ = 0, b_ = 0, c_ = 0;

    void validate() const;
};

// M^v = { xi : Tr(m xi) in Z for all m in M } = M^-1 * delta^-1,
// delta = (sqrt(D)) the different
FracIdeal dual_lattice(const FracIdeal &M);

// Q(x,y) = N(alpha x + beta y)/N(M) for the positively oriented HNF basis
BQF form_of_lattice(const FracIdeal &M);
// lattice with oriented basis (a, (b - sqrt(D))/2); form_of_lattice inverts it
FracIdeal ideal_of_form(const Discriminant &D, const BQF &Q);

// primitive integral ideal homothetic to M by a positive rational; M = rep/scale
struct PrimitiveRep {
    FracIdeal ideal;
    Rat scale;  // rep = scale * M
};
PrimitiveRep primitive_integral_rep(const FracIdeal &M);

struct NarrowClassGroup {
    Discriminant D;
    std::vector<FormCycle> cycles;   // cycle i <-> narrow class i, class 0 principal
    std::vector<FracIdeal> reps;     // ideal representative of class i
    int order = 0;                   // h+
    std::vector<std::vector<int>> mult;  // composition on class indices
    std::vector<bool> in_principal_genus;  // class i a square?
    int delta_class = 0;             // narrow class of the different (sqrt(D))
    // one narrow index per ideal class (cosets mod <delta_class>),
    // lexicographically least lift, principal coset first
    std::vector<int> ideal_class_lifts;

    int class_number() const { return (int)ideal_class_lifts.size(); }
};

const NarrowClassGroup &narrow_class_group(const Discriminant &D);

int narrow_class_of(const FracIdeal &M);
bool is_principal_genus(const FracIdeal &M);

// lattice attached to the cusp of class b on the surface for Gamma(c, a),
// realized as the infinity cusp of the level a*b: a^-1 b^-1 c
FracIdeal isotropy_lattice(const FracIdeal &a, const FracIdeal &b, const FracIdeal &c);

}  // namespace hmsturm

#endif
