#ifndef HMSTURM_QFIELD_HPP
#define HMSTURM_QFIELD_HPP

#include <stdexcept>
#include <string>

#include "hmsturm/rational.hpp"

namespace hmsturm {

// Positive fundamental discriminant of a real quadratic field.
// D ≡ 1 (mod 4) squarefree, or D = 4m with m squarefree, m ≡ 2,3 (mod 4).
struct Discriminant {
    long long D = 0;

    Discriminant() = default;
    explicit Discriminant(long long d);

    bool odd() const { return D % 2 != 0; }
    friend bool operator==(const Discriminant &a, const Discriminant &b) {
        return a.D == b.D;
    }
};

bool is_fundamental_discriminant(long long d);

// Element x + y*sqrt(D) of Q(sqrt(D)). All comparisons exact; no floating
// point is used to decide anything.
struct QuadElem {
    long long D = 0;
    Rat x, y;

    QuadElem() = default;
    QuadElem(long long d, Rat x_, Rat y_) : D(d), x(x_), y(y_) {}
    static QuadElem rational(long long d, Rat r) { return QuadElem(d, r, Rat(0)); }
    static QuadElem zero(long long d) { return QuadElem(d, Rat(0), Rat(0)); }
    static QuadElem one(long long d) { return QuadElem(d, Rat(1), Rat(0)); }
    static QuadElem sqrtD(long long d) { return QuadElem(d, Rat(0), Rat(1)); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    bool is_rational() const { return y.is_zero(); }

    QuadElem conj() const { return QuadElem(D, x, -y); }
    Rat trace() const { return x + x; }
    Rat norm() const { return x * x - Rat(D) * y * y; }

    friend QuadElem operator+(const QuadElem &a, const QuadElem &b) {
        check_same_field(a, b);
        return QuadElem(a.D, a.x + b.x, a.y + b.y);
    }
    friend QuadElem operator-(const QuadElem &a, const QuadElem &b) {
        check_same_field(a, b);
        return QuadElem(a.D, a.x - b.x, a.y - b.y);
    }
    QuadElem operator-() const { return QuadElem(D, -x, -y); }
    friend QuadElem operator*(const QuadElem &a, const QuadElem &b) {
        check_same_field(a, b);
        return QuadElem(a.D, a.x * b.x + Rat(a.D) * a.y * b.y,
                        a.x * b.y + a.y * b.x);
    }
    friend QuadElem operator*(const Rat &r, const QuadElem &a) {
        return QuadElem(a.D, r * a.x, r * a.y);
    }
    QuadElem inverse() const {
        Rat n = norm();
        if (n.is_zero()) throw std::domain_error("inverse of zero-norm element");
        return QuadElem(D, x / n, -y / n);
    }
    friend QuadElem operator/(const QuadElem &a, const QuadElem &b) {
        return a * b.inverse();
    }

    friend bool operator==(const QuadElem &a, const QuadElem &b) {
        return a.D == b.D && a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const QuadElem &a, const QuadElem &b) { return !(a == b); }

    // structural order, usable as a set/map key (same D assumed)
    friend bool operator<(const QuadElem &a, const QuadElem &b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y.num != b.y.num) return a.y.num < b.y.num;
        return a.y.den < b.y.den;
    }

    std::string str() const;

   private:
    static void check_same_field(const QuadElem &a, const QuadElem &b) {
        if (a.D != b.D) throw std::domain_error("mixed quadratic fields");
    }
};

// exact sign of x + y*sqrt(D) (-1, 0, +1), by integer sign/square tests
int sign_of(const QuadElem &v);

inline int compare(const QuadElem &a, const QuadElem &b) { return sign_of(a - b); }

bool totally_positive(const QuadElem &v);

// exact ceiling / floor of the real value x + y*sqrt(D)
i128 ceil_quad(const QuadElem &v);
i128 floor_quad(const QuadElem &v);

// Fundamental unit data. eps0 is the smallest unit > 1 of O_K, nu = 1 iff
// N(eps0) = -1, eps_plus = eps0^2 generates the squared units.
struct UnitData {
    Discriminant D;
    QuadElem eps0;
    int nu = 0;
    QuadElem eps_plus;
};

// Bounded brute-force Pell search; throws if the unit is not found below
// the coefficient cap.
UnitData fundamental_unit(const Discriminant &D, long long cap = 10000000LL);

// nu without constructing the unit: N(eps0) = -1 iff the continued fraction
// of omega has odd period. Small integers throughout (P, Q < 2 sqrt D).
int nu_of(const Discriminant &D);

// membership in O_K, and coordinates over the integral basis (1, omega)
bool is_integral_elem(const QuadElem &v);
// omega = sqrt(D)/2 for even D, (1+sqrt(D))/2 for odd D
QuadElem omega(const Discriminant &D);
// v = p + q*omega; throws unless v is integral
void omega_coords(const QuadElem &v, i128 &p, i128 &q);
QuadElem from_omega_coords(const Discriminant &D, i128 p, i128 q);

}  // namespace hmsturm

#endif
