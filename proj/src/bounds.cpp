#include "hmsturm/bounds.hpp"

namespace hmsturm {

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BoundReport general_bound(const Discriminant &D, const FracIdeal &a, int cusp_i0,
                          long long k1, long long k2, long long s, long long index) {
    if ((k1 - k2) % 2 != 0)
        throw std::domain_error("weights must satisfy k1 = k2 mod 2");
    if (s < 0 || index < 1) throw std::domain_error("need s >= 0, index >= 1");

    SelectedLevel sel = select_n(D, a);
    if (sel.route == NRoute::RationalTable)
        throw std::domain_error(
            "rational surface: use the tabulated rational-case bound for D=" + std::to_string(D.D));

    BoundCusps bc = bound_cusp_data(D, a);
    if (cusp_i0 < 0 || cusp_i0 >= (int)bc.sums.size())
        throw std::domain_error("cusp index out of range");

    BoundReport rep;
    rep.D = D;
    rep.a_class = narrow_class_of(a);
    rep.cusp_index = cusp_i0;
    rep.k1 = k1;
    rep.k2 = k2;
    rep.s = s;
    rep.n = sel.n;
    rep.index = index;
    rep.route = sel.route;
    rep.zeta = zeta_minus_one(D);
    rep.cusp_sums = std::vector<i128>(bc.sums.begin(), bc.sums.end());
    rep.sum_at_i0 = bc.sums[(size_t)cusp_i0];
    rep.total_sum = bc.total;
    if (rep.sum_at_i0 < 1) throw std::logic_error("cusp sum at i0 vanished");

    Rat denom(rep.sum_at_i0, 1);
    rep.threshold = Rat(k1 + k2, 1) * Rat(sel.n, 1) * Rat(index, 1) * rep.zeta / denom -
                    Rat(s, 1) * (Rat(rep.total_sum, 1) / denom);
    rep.a_min = rep.threshold.floor() + 1;
    return rep;
}

BoundReport hecke_bound(const Discriminant &D, const FracIdeal &a, int cusp_i0,
                        long long twok, long long s) {
    if (twok % 2 != 0) throw std::domain_error("parallel weight 2k must be even");
    return general_bound(D, a, cusp_i0, twok, twok, s, 1);
}

static Rat local_factor(const Discriminant &D, long long p);

i128 subgroup_index(const Discriminant &D, long long n) {
    if (n < 1) throw std::domain_error("need n >= 1");
    if (n == 1) return 1;
    i128 Nc = (i128)n * n;
    i128 result = checked_mul(checked_mul(Nc, Nc), Nc);  // N(c)^3
    Rat corr(1);
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        corr = corr * local_factor(D, p);
    }
    if (m > 1) corr = corr * local_factor(D, m);
    Rat total = Rat(result, 1) * corr;
    if (!total.is_integer()) throw std::logic_error("|SL2(O/c)| not integral");
    return total.num;
}

// product over primes P | (p) of (1 - N(P)^-2), by the splitting type of p
static Rat local_factor(const Discriminant &D, long long p) {
    // Kronecker symbol (D/p)
    int chi;
    if (D.D % p == 0)
        chi = 0;  // ramified
    else if (p == 2)
        chi = (D.D % 8 == 1) ? 1 : -1;  // D odd here (else 2 | D)
    else {
        // Euler's criterion
        i128 r = 1, base = D.D % p, e = (p - 1) / 2;
        while (e > 0) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        chi = (r == 1) ? 1 : -1;
    }
    Rat p2inv(1, (i128)p * p);
    if (chi == 1) {  // split: two primes of norm p
        Rat f = Rat(1) - p2inv;
        return f * f;
    }
    if (chi == 0) return Rat(1) - p2inv;  // ramified: one prime of norm p
    return Rat(1) - Rat(1, (i128)p * p * (i128)p * p);  // inert: norm p^2
}

BoundReport sturm_bound(const Discriminant &D, const FracIdeal &a, int cusp_i0,
                        long long twok, long long s, long long p) {
    if (!is_prime_ll(p)) throw std::domain_error("p must be prime");
    BoundReport rep = hecke_bound(D, a, cusp_i0, twok, s);
    if (D.D % p == 0 || rep.n % p == 0)
        throw std::domain_error("p divides D*n: Sturm precondition p ∤ Dn fails (p=" +
                                std::to_string(p) + ", D=" + std::to_string(D.D) +
                                ", n=" + std::to_string(rep.n) + ")");
    rep.prime_p = p;
    rep.p_compatible = true;
    return rep;
}

RationalCaseBound rational_case_bound(const Discriminant &D, bool a_principal_genus,
                                long long k, long long s) {
    auto data = rational_case_data(D.D, a_principal_genus);
    if (!data)
        throw std::domain_error("no tabulated rational case for D=" + std::to_string(D.D));
    RationalCaseBound b;
    b.data = *data;
    b.k = k;
    b.s = s;
    b.threshold = b.data.k_coeff * Rat(k, 1) - b.data.s_coeff * Rat(s, 1);
    b.a_min = b.threshold.floor() + 1;
    return b;
}

}  // namespace hmsturm
