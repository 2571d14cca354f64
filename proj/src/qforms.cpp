#include "hmsturm/qforms.hpp"

#include <algorithm>
#include <map>

namespace hmsturm {

std::string BQF::str() const {
    return "(" + to_string_i128(a) + ", " + to_string_i128(b) + ", " +
           to_string_i128(c) + ")";
}

BQF apply(const BQF &Q, const Mat2 &M) {
    if (M.det() != 1) throw std::domain_error("transform not in SL2(Z)");
    auto eval = [&](i128 x, i128 y) {
        return checked_add(
            checked_add(checked_mul(Q.a, checked_mul(x, x)),
                        checked_mul(Q.b, checked_mul(x, y))),
            checked_mul(Q.c, checked_mul(y, y)));
    };
    BQF R;
    R.a = eval(M.p, M.r);
    R.c = eval(M.q, M.s);
    // b' = 2(a p q + c r s) + b(p s + q r)
    R.b = checked_add(
        checked_mul(2, checked_add(checked_mul(Q.a, checked_mul(M.p, M.q)),
                                   checked_mul(Q.c, checked_mul(M.r, M.s)))),
        checked_mul(Q.b, checked_add(checked_mul(M.p, M.s), checked_mul(M.q, M.r))));
    return R;
}

// t < sqrt(D), exact; D not a square
static bool lt_sqrtD(i128 t, i128 D) {
    if (t < 0) return true;
    return checked_mul(t, t) < D;
}

bool is_reduced(const BQF &Q) {
    i128 D = Q.disc();
    if (D <= 0) return false;
    if (Q.a <= 0) return false;
    // b > sqrt(D)
    if (!(Q.b > 0 && checked_mul(Q.b, Q.b) > D)) return false;
    // (b - sqrt(D)) < 2a  <=>  b - 2a < sqrt(D)
    if (!lt_sqrtD(checked_sub(Q.b, checked_mul(2, Q.a)), D)) return false;
    // 2a < b + sqrt(D)  <=>  2a - b < sqrt(D)
    if (!lt_sqrtD(checked_sub(checked_mul(2, Q.a), Q.b), D)) return false;
    return true;
}

QuadElem first_root(const BQF &Q) {
    i128 D = Q.disc();
    return QuadElem((long long)D, Rat(Q.b, checked_mul(2, Q.a)),
                    Rat(1, checked_mul(2, Q.a)));
}

static bool is_cohen_reduced(const BQF &Q) {
    i128 D = Q.disc();
    if (!(Q.b > 0 && checked_mul(Q.b, Q.b) < D)) return false;
    i128 aa = abs128(Q.a);
    // |sqrt(D) - 2|a|| < b : both sqrt(D) - 2|a| < b and 2|a| - sqrt(D) < b
    i128 t = checked_sub(checked_mul(2, aa), Q.b);  // 2|a| - b < sqrt(D)
    if (!lt_sqrtD(t, D)) return false;
    i128 u = checked_add(checked_mul(2, aa), Q.b);  // sqrt(D) < 2|a| + b
    if (!(u > 0 && checked_mul(u, u) > D)) return false;
    return true;
}

// one rho step of the standard indefinite reduction; returns the matrix used
static BQF rho(const BQF &Q, Mat2 &M) {
    i128 D = Q.disc();
    i128 c = Q.c;
    if (c == 0) throw std::domain_error("degenerate form in reduction");
    i128 ac = abs128(c);
    i128 two_c = checked_mul(2, ac);
    // r = -b mod 2|c|, normalized into [0, 2|c|)
    i128 r0 = (-Q.b) % two_c;
    if (r0 < 0) r0 += two_c;
    i128 r;
    i128 sD = (i128)isqrt_u128((u128)D);  // floor sqrt
    if (checked_mul(ac, ac) > D) {
        // window (-|c|, |c|]
        r = r0 > ac ? r0 - two_c : r0;
    } else {
        // window (sqrt(D) - 2|c|, sqrt(D)): take the largest r <= floor(sqrt D)
        r = r0 + two_c * ((sD - r0) / two_c);
        if (r > sD) r -= two_c;  // guard when r0 > sD
    }
    i128 m = (r + Q.b) / checked_mul(2, c);  // exact: r = 2cm - b
    if (checked_sub(checked_mul(checked_mul(2, c), m), Q.b) != r)
        throw std::logic_error("rho step divisibility failed");
    Mat2 S;  // (0 -1; 1 m)
    S.p = 0;
    S.q = -1;
    S.r = 1;
    S.s = m;
    M = M * S;
    return apply(Q, S);
}

ReducedBQF reduce_form(const BQF &Q) {
    i128 D = Q.disc();
    if (D <= 0) throw std::domain_error("form not indefinite: " + Q.str());
    i128 sD = (i128)isqrt_u128((u128)D);
    if (sD * sD == D) throw std::domain_error("square discriminant");
    i128 g = gcd128(gcd128(Q.a, Q.b), Q.c);
    if (g != 1) throw std::domain_error("form not primitive: " + Q.str());

    ReducedBQF out;
    out.form = Q;
    if (is_reduced(Q)) return out;  // identity transform on reduced input

    BQF F = Q;
    Mat2 M;
    int guard = 0;
    while (!(is_cohen_reduced(F) && F.a > 0)) {
        F = rho(F, M);
        if (++guard > 4096) throw std::runtime_error("reduction did not terminate");
    }
    // shift b -> b + 2a via (1 1; 0 1)
    Mat2 T;
    T.p = 1;
    T.q = 1;
    T.r = 0;
    T.s = 1;
    M = M * T;
    F = apply(F, T);
    if (!is_reduced(F)) throw std::logic_error("shifted form not reduced");
    if (!(apply(Q, M) == F)) throw std::logic_error("transform does not witness reduction");
    out.form = F;
    out.transform = M;
    return out;
}

BQF cycle_step(const BQF &Q) {
    if (!is_reduced(Q)) throw std::domain_error("cycle_step needs a reduced form");
    i128 b0 = ceil_quad(first_root(Q));
    i128 bp = checked_sub(checked_mul(checked_mul(2, Q.a), b0), Q.b);
    i128 num = checked_sub(checked_mul(bp, bp), Q.disc());
    i128 X = num / checked_mul(4, Q.a);
    if (checked_mul(X, checked_mul(4, Q.a)) != num)
        throw std::logic_error("cycle step not integral");
    BQF R(X, bp, Q.a);
    if (!is_reduced(R)) throw std::logic_error("cycle step left the reduced set");
    return R;
}

std::vector<FormCycle> enumerate_reduced_forms(const Discriminant &Disc) {
    i128 D = Disc.D;
    i128 sD = (i128)isqrt_u128((u128)D);
    std::vector<BQF> all;
    // reduced forces sqrt(D) < b, and a + c <= b - 1 with 4ac = b^2 - D
    // gives b <= (D+1)/2
    for (i128 b = sD + 1; b <= (D + 1) / 2; ++b) {
        i128 b2D = checked_sub(checked_mul(b, b), D);
        if (b2D <= 0) continue;
        if (b2D % 4 != 0) continue;
        for (i128 a = 1; checked_mul(2, a) < b + sD + 1; ++a) {
            if (b2D % (4 * a) != 0) continue;
            BQF F(a, b, b2D / (4 * a));
            if (!is_reduced(F)) continue;
            if (gcd128(gcd128(F.a, F.b), F.c) != 1)
                throw std::logic_error("imprimitive reduced form at fundamental D");
            all.push_back(F);
        }
    }
    std::sort(all.begin(), all.end());

    std::map<BQF, bool> seen;
    for (const BQF &f : all) seen[f] = false;
    std::vector<FormCycle> cycles;
    for (const BQF &f : all) {
        if (seen[f]) continue;
        FormCycle cyc;
        BQF cur = f;
        int guard = 0;
        do {
            if (!seen.count(cur))
                throw std::logic_error("cycle left the enumerated set: " + cur.str());
            seen[cur] = true;
            cyc.forms.push_back(cur);
            cur = cycle_step(cur);
            if (++guard > 100000) throw std::runtime_error("form cycle did not close");
        } while (!(cur == f));
        // rotate so the lex-least form leads
        auto it = std::min_element(cyc.forms.begin(), cyc.forms.end());
        std::rotate(cyc.forms.begin(), it, cyc.forms.end());
        cycles.push_back(cyc);
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const FormCycle &u, const FormCycle &v) { return u.rep() < v.rep(); });
    return cycles;
}

}  // namespace hmsturm
