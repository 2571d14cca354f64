#ifndef HMSTURM_RATIONAL_HPP
#define HMSTURM_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmsturm {

using i128 = __int128;
using u128 = unsigned __int128;

struct overflow_error : std::runtime_error {
    explicit overflow_error(const char *what) : std::runtime_error(what) {}
};

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int128 add overflow");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("int128 sub overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int128 mul overflow");
    return r;
}

inline i128 abs128(i128 a) { return a < 0 ? -a : a; }

inline int sign128(i128 a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string_i128(i128 v);
i128 parse_i128(const std::string &s);

// floor of sqrt, exact
u128 isqrt_u128(u128 n);

// Exact rational number over __int128. den > 0, gcd(num, den) = 1.
// Arithmetic throws overflow_error instead of wrapping.
struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(i128 n, i128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int sign() const { return sign128(num); }

    Rat operator-() const { return Rat(-num, den); }

    friend Rat operator+(const Rat &a, const Rat &b) {
        i128 g = gcd128(a.den, b.den);
        i128 ad = a.den / g, bd = b.den / g;
        i128 n = checked_add(checked_mul(a.num, bd), checked_mul(b.num, ad));
        i128 d = checked_mul(checked_mul(ad, g), bd);
        return Rat(n, d);
    }
    friend Rat operator-(const Rat &a, const Rat &b) { return a + (-b); }
    friend Rat operator*(const Rat &a, const Rat &b) {
        i128 g1 = gcd128(a.num, b.den);
        i128 g2 = gcd128(b.num, a.den);
        return Rat(checked_mul(a.num / g1, b.num / g2),
                   checked_mul(a.den / g2, b.den / g1));
    }
    friend Rat operator/(const Rat &a, const Rat &b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return a * Rat(b.den, b.num);
    }

    friend bool operator==(const Rat &a, const Rat &b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat &a, const Rat &b) { return !(a == b); }
    friend bool operator<(const Rat &a, const Rat &b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Rat &a, const Rat &b) { return (a - b).sign() <= 0; }
    friend bool operator>(const Rat &a, const Rat &b) { return (a - b).sign() > 0; }
    friend bool operator>=(const Rat &a, const Rat &b) { return (a - b).sign() >= 0; }

    // floor/ceil as exact integers
    i128 floor() const {
        i128 q = num / den;
        if (num % den != 0 && num < 0) q -= 1;
        return q;
    }
    i128 ceil() const {
        i128 q = num / den;
        if (num % den != 0 && num > 0) q += 1;
        return q;
    }

    double to_double() const { return (double)num / (double)den; }
    std::string str() const;
};

inline Rat rat_abs(const Rat &a) { return a.sign() < 0 ? -a : a; }

// exact test: is q the square of a rational? If so store the nonnegative root.
bool rational_sqrt(const Rat &q, Rat &root);

}  // namespace hmsturm

#endif
