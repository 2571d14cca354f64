#ifndef HMSTURM_QFORMS_HPP
#define HMSTURM_QFORMS_HPP

#include <vector>

#include "hmsturm/qfield.hpp"

namespace hmsturm {

// Primitive integral indefinite binary quadratic form a x^2 + b xy + c y^2
// of discriminant b^2 - 4ac = D > 0.
struct BQF {
    i128 a = 0, b = 0, c = 0;

    BQF() = default;
    BQF(i128 a_, i128 b_, i128 c_) : a(a_), b(b_), c(c_) {}

    i128 disc() const {
        return checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c)));
    }
    friend bool operator==(const BQF &p, const BQF &q) {
        return p.a == q.a && p.b == q.b && p.c == q.c;
    }
    friend bool operator<(const BQF &p, const BQF &q) {
        if (p.a != q.a) return p.a < q.a;
        if (p.b != q.b) return p.b < q.b;
        return p.c < q.c;
    }
    std::string str() const;
};

// column-action matrix in SL2(Z): (Q∘M)(x,y) = Q(p x + q y, r x + s y)
struct Mat2 {
    i128 p = 1, q = 0, r = 0, s = 1;
    i128 det() const {
        return checked_sub(checked_mul(p, s), checked_mul(q, r));
    }
    friend Mat2 operator*(const Mat2 &A, const Mat2 &B) {
        Mat2 M;
        M.p = checked_add(checked_mul(A.p, B.p), checked_mul(A.q, B.r));
        M.q = checked_add(checked_mul(A.p, B.q), checked_mul(A.q, B.s));
        M.r = checked_add(checked_mul(A.r, B.p), checked_mul(A.s, B.r));
        M.s = checked_add(checked_mul(A.r, B.q), checked_mul(A.s, B.s));
        return M;
    }
};

BQF apply(const BQF &Q, const Mat2 &M);

// reduced in the sense 0 < (b - sqrt(D))/(2a) < 1 < (b + sqrt(D))/(2a)
bool is_reduced(const BQF &Q);

// first root w0 = (b + sqrt(D))/(2a) of a reduced form
QuadElem first_root(const BQF &Q);

struct ReducedBQF {
    BQF form;
    Mat2 transform;  // witnesses apply(input, transform) == form
};

// standard indefinite reduction to a > 0, then the shift b -> b + 2a
ReducedBQF reduce_form(const BQF &Q);

// right neighbour of a reduced form along the ceiling continued fraction:
// b0 = ceil(w0), next = ((b'^2 - D)/(4a), b', a) with b' = 2*a*b0 - b
BQF cycle_step(const BQF &Q);

struct FormCycle {
    std::vector<BQF> forms;  // one full period, starting at the lex-least (a,b)
    BQF rep() const { return forms.front(); }
};

// all reduced forms of discriminant D grouped into cycles; the number of
// cycles is the narrow class number h+; cycle 0 is the principal one
std::vector<FormCycle> enumerate_reduced_forms(const Discriminant &D);

}  // namespace hmsturm

#endif
