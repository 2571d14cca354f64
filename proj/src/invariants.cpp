#include "hmsturm/invariants.hpp"

#include <algorithm>

namespace hmsturm {

static i128 sigma1(i128 n) {
    i128 s = 0;
    for (i128 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += d;
        if (d != n / d) s += n / d;
    }
    return s;
}

Rat zeta_minus_one(const Discriminant &D) {
    i128 sum = 0;
    for (i128 b = D.D % 2; b * b < D.D; b += 2) {
        i128 term = sigma1((D.D - b * b) / 4);
        sum += (b == 0) ? term : 2 * term;  // b and -b
    }
    return Rat(sum, 60);
}

long long unit_index(const Discriminant &D, long long n) {
    if (n < 1) throw std::domain_error("unit_index needs n >= 1");
    if (n == 1) return 1;
    UnitData u = fundamental_unit(D);
    i128 p, q;
    omega_coords(u.eps_plus, p, q);
    auto md = [&](i128 v) {
        v %= n;
        if (v < 0) v += n;
        return v;
    };
    // omega^2 = e + f*omega
    i128 e = D.odd() ? (D.D - 1) / 4 : D.D / 4;
    i128 f = D.odd() ? 1 : 0;
    i128 ep = md(p), eq = md(q);
    i128 cp = ep, cq = eq;
    i128 bound = (i128)n * n + 1;
    for (i128 ord = 1; ord <= bound; ++ord) {
        if (cp == 1 && cq == 0) return (long long)ord;
        i128 np = md(checked_add(checked_mul(cp, ep),
                                 checked_mul(checked_mul(cq, eq), e)));
        i128 nq = md(checked_add(checked_add(checked_mul(cp, eq), checked_mul(cq, ep)),
                                 checked_mul(checked_mul(cq, eq), f)));
        cp = np;
        cq = nq;
    }
    throw std::logic_error("eps_plus has no order mod n; not a unit?");
}

// ---- classification tables ---------------------------------------------

static const long long kRationalPrincipal[] = {5, 8, 12, 13, 17, 21, 24, 28, 33, 60};

struct ExceptionRow {
    long long D;
    std::vector<i128> norms;
    const char *genus;
};

static const std::vector<ExceptionRow> &exception_rows() {
    static const std::vector<ExceptionRow> rows = {
        {5, {4, 5}, "+"},      {8, {2, 4}, "+"},
        {12, {2, 3, 4, 6}, "+,+"}, {12, {2, 3}, "-,-"},
        {13, {3}, "+"},        {17, {2}, "+"},
        {21, {3}, "-,-"},      {24, {2}, "-,-"},
        {24, {3}, "+,+"},      {28, {2}, "+,+"},
        {28, {3}, "-,-"},      {33, {2}, "-,-"},
    };
    return rows;
}

bool general_type_exception(long long D, i128 norm_c) {
    for (const auto &row : exception_rows()) {
        if (row.D != D) continue;
        if (std::find(row.norms.begin(), row.norms.end(), norm_c) != row.norms.end())
            return true;  // genus column read conservatively
    }
    return false;
}

SurfaceClass classify_surface(const Discriminant &D, const FracIdeal &a) {
    SurfaceClass c;
    c.D = D;
    c.a_principal_genus = is_principal_genus(a);
    bool listed = std::find(std::begin(kRationalPrincipal), std::end(kRationalPrincipal),
                            D.D) != std::end(kRationalPrincipal);
    c.is_rational = (listed && c.a_principal_genus) || (D.D == 12 && !c.a_principal_genus);

    if (D.D % 8 != 1) {
        c.conjecture_known = true;
        c.conjecture_case = "D != 1 mod 8";
    } else {
        for (long long t = 2; t <= D.D; ++t) {
            if (D.D % t != 0) continue;
            if (t % 8 != 1) {
                c.conjecture_known = true;
                c.conjecture_case = "divisor " + std::to_string(t) + " of D != 1 mod 8";
                break;
            }
        }
        if (!c.conjecture_known) {
            // D = (m^2 - 8)/n0^2 with m ≡ 7 mod 8
            for (long long n0 = 1; n0 * n0 * D.D + 8 <= 64 * D.D * D.D; ++n0) {
                i128 m2 = (i128)n0 * n0 * D.D + 8;
                u128 m = isqrt_u128((u128)m2);
                if ((i128)(m * m) == m2 && (long long)(m % 8) == 7) {
                    c.conjecture_known = true;
                    c.conjecture_case = "D = (m^2-8)/n0^2, m = " + to_string_i128((i128)m);
                    break;
                }
            }
        }
    }
    return c;
}

std::optional<RationalCaseData> rational_case_data(long long D, bool a_principal_genus) {
    auto mk = [&](long long d, const char *al, const char *cl, i128 nc, int cc,
                  std::vector<long long> cyc, Rat kc, Rat sc) {
        RationalCaseData r;
        r.D = d;
        r.a_label = al;
        r.c_label = cl;
        r.c_norm = nc;
        r.cusp_count = cc;
        r.cycle = std::move(cyc);
        r.k_coeff = kc;
        r.s_coeff = sc;
        return r;
    };
    if (D == 5 && a_principal_genus)
        return mk(5, "1", "(3)", 9, 10, {3, 3, 3, 3}, Rat(48), Rat(10));
    if (D == 8 && a_principal_genus)
        return mk(8, "1", "p_7", 7, 8, {4, 2, 4, 2, 4, 2}, Rat(14, 3), Rat(8));
    if (D == 12 && !a_principal_genus)
        return mk(12, "sqrt(3)", "(2)", 4, 3, {2, 3}, Rat(4), Rat(3));
    if (D == 13 && a_principal_genus)
        return mk(13, "1", "(2)", 4, 5, {2, 2, 3, 2, 2, 3, 2, 2, 3}, Rat(40, 3), Rat(5));
    if (D == 17 && a_principal_genus)
        return mk(17, "1", "(2)", 4, 9, {2, 2, 3, 3, 3}, Rat(4), Rat(9));
    if (D == 21 && a_principal_genus)
        return mk(21, "1", "(2)", 4, 5, {5, 5, 5, 5, 5, 5}, Rat(40, 9), Rat(5));
    if (D == 24 && a_principal_genus)
        return mk(24, "1", "p_2", 2, 3, {2, 2, 2, 3, 2, 2, 2, 3}, Rat(12), Rat(3));
    return std::nullopt;
}

SelectedLevel select_n(const Discriminant &D, const FracIdeal &a) {
    SelectedLevel sel;
    sel.cls = classify_surface(D, a);
    if (sel.cls.is_rational) {
        sel.route = NRoute::RationalTable;
        auto data = rational_case_data(D.D, sel.cls.a_principal_genus);
        if (!data)
            throw std::domain_error(
                "rational surface outside the tabulated cases: unsupported D=" +
                std::to_string(D.D));
        sel.n = 0;  // level is the tabulated ideal c, not an (n)
        return sel;
    }
    long long n;
    if (sel.cls.conjecture_known) {
        sel.route = NRoute::Conjecture;
        n = 3;
    } else {
        sel.route = NRoute::CConstant;
        BoundCusps bc = bound_cusp_data(D, a);
        sel.c_constant = 3 * bc.total;
        u128 r = isqrt_u128((u128)sel.c_constant);
        n = (long long)r;
        if ((i128)(r * r) != sel.c_constant) ++n;  // smallest n with n^2 >= C
        n = std::max(n, 3LL);
    }
    while (general_type_exception(D.D, (i128)n * n)) ++n;
    sel.n = n;
    return sel;
}

IntersectionReport intersection_numbers(const Discriminant &D, const FracIdeal &a,
                                        long long n, long long cprime) {
    if (n < 1 || cprime < 1) throw std::domain_error("need n, c' >= 1");
    IntersectionReport rep;
    rep.D = D;
    rep.n = n;
    rep.cusp_count_cprime = cprime;
    rep.unit_idx = unit_index(D, n);
    rep.degree_d = checked_mul(checked_mul((i128)n, (i128)n),
                               checked_mul((i128)cprime, (i128)rep.unit_idx));
    rep.zeta = zeta_minus_one(D);
    BoundCusps bc = bound_cusp_data(D, a);
    Rat d_over_n2(rep.degree_d, (i128)n * n);
    i128 total = 0;
    for (i128 s : bc.sums) {
        rep.cusp_sums.push_back(s);
        rep.K_dot_Si.push_back(d_over_n2 * Rat(s, 1));
        rep.Si_dot_Si.push_back(d_over_n2 * Rat(-s, 1));
        total += s;
    }
    // K.K = 4 d zeta + (d/n^2) * sum sum (2 - b)
    rep.K_dot_K = Rat(4, 1) * Rat(rep.degree_d, 1) * rep.zeta +
                  d_over_n2 * Rat(-total, 1);
    return rep;
}

}  // namespace hmsturm
