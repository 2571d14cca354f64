#include "hmsturm/qfield.hpp"

#include <cmath>

namespace hmsturm {

static bool squarefree(long long n) {
    for (long long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

bool is_fundamental_discriminant(long long d) {
    if (d <= 1) return false;
    long long r = (long long)isqrt_u128((u128)d);
    if (r * r == d) return false;
    if (d % 4 == 1) return squarefree(d);
    if (d % 4 == 0) {
        long long m = d / 4;
        return squarefree(m) && (m % 4 == 2 || m % 4 == 3);
    }
    return false;
}

Discriminant::Discriminant(long long d) : D(d) {
    if (!is_fundamental_discriminant(d))
        throw std::domain_error("not a fundamental discriminant: " + std::to_string(d));
}

int sign_of(const QuadElem &v) {
    int sx = v.x.sign(), sy = v.y.sign();
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // opposite signs: compare x^2 with D*y^2
    Rat diff = v.x * v.x - Rat(v.D) * v.y * v.y;
    int s = diff.sign();
    // |x| > |y|sqrt(D) iff s > 0, and then the value has the sign of x
    if (s == 0) throw std::logic_error("sqrt(D) rational: non-fundamental D");
    return s > 0 ? sx : sy;
}

bool totally_positive(const QuadElem &v) {
    return sign_of(v) > 0 && sign_of(v.conj()) > 0;
}

std::string QuadElem::str() const {
    if (y.is_zero()) return x.str();
    std::string s;
    if (!x.is_zero()) s += x.str() + " ";
    if (y == Rat(1))
        s += (x.is_zero() ? "" : "+ ") + std::string("sqrt(") + std::to_string(D) + ")";
    else if (y == Rat(-1))
        s += (x.is_zero() ? "-" : "- ") + std::string("sqrt(") + std::to_string(D) + ")";
    else if (y.sign() > 0)
        s += (x.is_zero() ? "" : "+ ") + y.str() + "*sqrt(" + std::to_string(D) + ")";
    else
        s += (x.is_zero() ? std::string("-") : std::string("- ")) + (-y).str() +
             "*sqrt(" + std::to_string(D) + ")";
    return s;
}

i128 floor_quad(const QuadElem &v) {
    if (v.y.is_zero()) return v.x.floor();
    // seed from doubles, then verify with exact comparisons
    double est = v.x.to_double() + v.y.to_double() * std::sqrt((double)v.D);
    i128 n = (i128)std::llround(std::floor(est));
    auto le_value = [&](i128 t) {  // t <= v ?
        return sign_of(v - QuadElem::rational(v.D, Rat(t, 1))) >= 0;
    };
    if (le_value(n)) {
        while (le_value(n + 1)) ++n;
    } else {
        while (!le_value(n)) --n;
    }
    return n;
}

i128 ceil_quad(const QuadElem &v) {
    i128 f = floor_quad(v);
    if (v == QuadElem::rational(v.D, Rat(f, 1))) return f;
    return f + 1;
}

UnitData fundamental_unit(const Discriminant &D, long long cap) {
    // smallest unit > 1 is x + y*sqrt(m) (D = 4m) resp. (u + v*sqrt(D))/2
    // (odd D) with the least positive second coordinate
    if (!D.odd()) {
        long long m = D.D / 4;
        for (long long y = 1; y <= cap; ++y) {
            u128 my2 = (u128)m * (u128)y * (u128)y;
            for (int nsign = -1; nsign <= 1; nsign += 2) {
                i128 x2 = (i128)my2 + nsign;  // x^2 - m y^2 = nsign
                if (x2 < 0) continue;
                u128 r = isqrt_u128((u128)x2);
                if ((i128)(r * r) != x2) continue;
                QuadElem eps0(D.D, Rat((i128)r, 1), Rat(y, 2));
                UnitData u;
                u.D = D;
                u.eps0 = eps0;
                u.nu = nsign == -1 ? 1 : 2;
                u.eps_plus = eps0 * eps0;
                return u;
            }
        }
    } else {
        for (long long v = 1; v <= cap; ++v) {
            u128 dv2 = (u128)D.D * (u128)v * (u128)v;
            for (int nsign = -1; nsign <= 1; nsign += 2) {
                i128 u2 = (i128)dv2 + 4 * nsign;  // u^2 - D v^2 = 4*nsign
                if (u2 < 0) continue;
                u128 r = isqrt_u128((u128)u2);
                if ((i128)(r * r) != u2) continue;
                if (((long long)(r % 2)) != (v % 2)) continue;  // (u+v sqrt D)/2 integral
                QuadElem eps0(D.D, Rat((i128)r, 2), Rat(v, 2));
                UnitData u;
                u.D = D;
                u.eps0 = eps0;
                u.nu = nsign == -1 ? 1 : 2;
                u.eps_plus = eps0 * eps0;
                return u;
            }
        }
    }
    throw std::runtime_error("fundamental unit not found below cap for D=" +
                             std::to_string(D.D));
}

int nu_of(const Discriminant &D) {
    // PQa continued fraction of omega = (sigma + sqrt(D))/2, sigma = D mod 2
    i128 sD = (i128)isqrt_u128((u128)D.D);
    i128 P = D.odd() ? 1 : 0, Q = 2;
    i128 P0 = -1, Q0 = -1;
    long long period = 0;
    for (long long i = 0; i < 4 * D.D + 16; ++i) {
        i128 a = (P + sD) / Q;  // floor((P + sqrt D)/Q), exact since P+sD >= 0
        if (P + sD < 0 || Q <= 0) throw std::logic_error("PQa state corrupt");
        i128 Pn = a * Q - P;
        i128 Qn = (D.D - Pn * Pn) / Q;
        if (Qn * Q != D.D - Pn * Pn) throw std::logic_error("PQa not integral");
        // the periodic part starts where the irrational is reduced; remember
        // the first recurring state
        if (P0 == -1 && i > 0) {
            P0 = P;
            Q0 = Q;
        } else if (P == P0 && Q == Q0 && period > 0) {
            return period % 2 == 1 ? 1 : 2;
        }
        if (P0 != -1) ++period;
        P = Pn;
        Q = Qn;
    }
    throw std::runtime_error("continued fraction period not found");
}

QuadElem omega(const Discriminant &D) {
    if (D.odd()) return QuadElem(D.D, Rat(1, 2), Rat(1, 2));
    return QuadElem(D.D, Rat(0), Rat(1, 2));
}

bool is_integral_elem(const QuadElem &v) {
    Rat q = v.y + v.y;                         // q = 2y
    Rat p = v.D % 2 != 0 ? v.x - v.y : v.x;    // p = x - y resp. x
    return q.is_integer() && p.is_integer();
}

void omega_coords(const QuadElem &v, i128 &p, i128 &q) {
    if (!is_integral_elem(v)) throw std::domain_error("element not in O_K: " + v.str());
    Rat qq = v.y + v.y;
    Rat pp = v.D % 2 != 0 ? v.x - v.y : v.x;
    p = pp.num;
    q = qq.num;
}

QuadElem from_omega_coords(const Discriminant &D, i128 p, i128 q) {
    QuadElem w = omega(D);
    return QuadElem(D.D, Rat(p, 1) + Rat(q, 1) * w.x, Rat(q, 1) * w.y);
}

}  // namespace hmsturm
