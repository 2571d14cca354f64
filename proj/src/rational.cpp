#include "hmsturm/rational.hpp"

#include <algorithm>
#include <cmath>

namespace hmsturm {

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 m = neg ? (u128)(-(v + 1)) + 1 : (u128)v;
    std::string s;
    while (m > 0) {
        s.push_back(char('0' + (int)(m % 10)));
        m /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

i128 parse_i128(const std::string &s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    i128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad digit in integer literal: " + s);
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    // double seed, then Newton until stable; final exact fixup
    u128 x = (u128)std::sqrt((double)n);
    if (x == 0) x = 1;
    for (int i = 0; i < 64; ++i) {
        u128 nx = (x + n / x) / 2;
        if (nx >= x) break;
        x = nx;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

std::string Rat::str() const {
    if (den == 1) return to_string_i128(num);
    return to_string_i128(num) + "/" + to_string_i128(den);
}

bool rational_sqrt(const Rat &q, Rat &root) {
    if (q.sign() < 0) return false;
    if (q.is_zero()) {
        root = Rat(0);
        return true;
    }
    u128 rn = isqrt_u128((u128)q.num);
    u128 rd = isqrt_u128((u128)q.den);
    if ((i128)(rn * rn) != q.num || (i128)(rd * rd) != q.den) return false;
    root = Rat((i128)rn, (i128)rd);
    return true;
}

}  // namespace hmsturm
