#include "hmsturm/cuspres.hpp"

#include <cstdlib>

#include "hmsturm/invariants.hpp"

namespace hmsturm {

long long max_period_cap() {
    if (const char *s = std::getenv("HSM_MAX_PERIOD")) {
        long long v = std::atoll(s);
        if (v > 0) return v;
    }
    return 10000;
}

// nu from the period unit u = A_r/A_0 (totally positive, norm 1, < 1):
// 1/u = eps0^2 when N(eps0) = -1, else eps0. Squares of units are detected
// by an exact rational-square test on x^2 = (s +- 1)/2.
static int nu_from_period_unit(const QuadElem &u, QuadElem &eps_plus_out) {
    QuadElem w = u.inverse();  // eps0 or eps0^2, > 1
    if (w.norm() != Rat(1)) throw std::logic_error("period unit has norm != 1");
    for (int br = 0; br < 2; ++br) {
        Rat cand = (br == 0) ? (w.x + Rat(1)) * Rat(1, 2) : (w.x - Rat(1)) * Rat(1, 2);
        Rat rt;
        if (!rational_sqrt(cand, rt) || rt.is_zero()) continue;
        Rat yy = w.y / (rt + rt);
        QuadElem root(u.D, rt, yy);
        if (root * root == w && is_integral_elem(root)) {
            eps_plus_out = w;  // w itself generates U^2
            return 1;
        }
    }
    eps_plus_out = w * w;
    return 2;
}

// reduced form of M, rotated to the lexicographically least cycle member so
// that homothetic lattices resolve identically
static BQF canonical_cycle_form(const FracIdeal &M) {
    BQF red = reduce_form(form_of_lattice(M)).form;
    BQF best = red, cur = cycle_step(red);
    long long guard = 0, cap = max_period_cap();
    while (!(cur == red)) {
        if (cur < best) best = cur;
        cur = cycle_step(cur);
        if (++guard > cap) throw std::runtime_error("form cycle not closed within cap");
    }
    return best;
}

// ceiling continued fraction w_{k+1} = 1/(b_k - w_k) from the reduced root
static std::vector<i128> b_period(const BQF &form, const std::string &what) {
    QuadElem w0 = first_root(form);
    std::vector<i128> base_b;
    QuadElem w = w0;
    long long cap = max_period_cap();
    for (long long k = 0;; ++k) {
        if (k > cap) throw std::runtime_error("period not found within cap for " + what);
        i128 b = ceil_quad(w);
        QuadElem next = (QuadElem::rational(w.D, Rat(b, 1)) - w).inverse();
        base_b.push_back(b);
        if (next == w0) break;  // purely periodic from the reduced start
        w = next;
    }
    return base_b;
}

std::vector<long long> base_cycle_of(const FracIdeal &M) {
    std::vector<i128> bs = b_period(canonical_cycle_form(M), M.str());
    return std::vector<long long>(bs.begin(), bs.end());
}

CuspResolution resolve_cusp(const FracIdeal &M, long long v_index) {
    if (v_index < 1) throw std::domain_error("v_index must be >= 1");
    Discriminant D(M.D());
    CuspResolution res;
    res.D = D;
    res.lattice = M;
    res.v_index = v_index;
    res.reduced = canonical_cycle_form(M);

    QuadElem w0 = first_root(res.reduced);
    std::vector<i128> base_b = b_period(res.reduced, M.str());
    res.period = (long long)base_b.size();

    // vertices in the primitive integral normalization of w0 Z + Z
    FracIdeal L = FracIdeal::from_generators(D, {QuadElem::one(D.D), w0});
    PrimitiveRep prim = primitive_integral_rep(L);
    res.normalized_lattice = prim.ideal;
    Rat rho = prim.scale;
    QuadElem Am1 = rho * w0;                        // A_{-1}
    QuadElem A0 = QuadElem::rational(D.D, rho);     // A_0

    std::vector<QuadElem> A{Am1, A0};
    auto extend_to = [&](long long upto) {
        while ((long long)A.size() < upto + 2) {
            long long k = (long long)A.size() - 2;  // index of the new A_{k+1}
            i128 b = base_b[(size_t)(k % res.period)];
            A.push_back(Rat(b, 1) * A.back() - A[A.size() - 2]);
        }
    };
    extend_to(res.period);
    res.unit_u = A[(size_t)res.period + 1] / A0;
    if (!totally_positive(res.unit_u) || res.unit_u.norm() != Rat(1))
        throw std::logic_error("period unit is not a totally positive norm-1 unit");
    res.nu = nu_from_period_unit(res.unit_u, res.eps_plus);

    res.r_tilde = res.period * res.nu * v_index;
    extend_to(res.r_tilde);
    res.vertices = A;

    for (long long k = 0; k < res.r_tilde; ++k)
        res.cycle.push_back((long long)base_b[(size_t)(k % res.period)]);

    res.singular = res.r_tilde == 1;
    res.double_intersection = res.r_tilde == 2;
    if (res.singular)
        res.self_intersections = {-(res.cycle[0]) + 2};
    else
        for (long long b : res.cycle) res.self_intersections.push_back(-b);

    // invariants: consecutive pairs are bases (constant determinant),
    // A_k totally positive with strictly decreasing first embedding
    QuadElem det0 = res.vertices[0] * res.vertices[1].conj() -
                    res.vertices[1] * res.vertices[0].conj();
    for (size_t k = 0; k + 1 < res.vertices.size(); ++k) {
        const QuadElem &p = res.vertices[k], &q = res.vertices[k + 1];
        if (!totally_positive(p)) throw std::logic_error("vertex not totally positive");
        if (sign_of(q - p) >= 0)
            throw std::logic_error("vertices not decreasing in the first embedding");
        QuadElem det = p * q.conj() - q * p.conj();
        if (!(det == det0 || det == -det0))
            throw std::logic_error("consecutive vertices fail the basis property");
    }
    // some b exceeds 2 in every period (else the resolution divisor would
    // have self-intersection 0, impossible by the Hodge index theorem)
    if (res.cycle_sum_minus_2() < 1)
        throw std::logic_error("cycle sum (b-2) < 1 contradicts Hodge index");
    return res;
}

CuspResolution scaled_resolution(const FracIdeal &M, long long n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    FracIdeal nM = M.scaled(Rat(n, 1));
    long long idx = unit_index(Discriminant(M.D()), n);
    return resolve_cusp(nM, idx);
}

CuspSet resolve_all_cusps(const Discriminant &D, const FracIdeal &a,
                          const FracIdeal &c, long long v_index) {
    const NarrowClassGroup &G = narrow_class_group(D);
    CuspSet set;
    set.D = D;
    set.a = a;
    set.c = c;
    for (int i = 0; i < G.order; ++i)
        set.cusps.push_back(resolve_cusp(isotropy_lattice(a, G.reps[i], c), v_index));
    return set;
}

BoundCusps bound_cusp_data(const Discriminant &D, const FracIdeal &a) {
    const NarrowClassGroup &G = narrow_class_group(D);
    BoundCusps out;
    out.D = D;
    out.a = a;
    out.nu = nu_of(D);
    FracIdeal ainv = a.inverse();
    for (int lift : G.ideal_class_lifts) {
        FracIdeal M = ainv * G.reps[(size_t)lift].inverse();
        std::vector<long long> base = base_cycle_of(M);
        i128 s = 0;
        for (long long b : base) s += b - 2;
        out.base_cycles.push_back(std::move(base));
        out.sums.push_back(s * out.nu);
        out.total += out.sums.back();
    }
    return out;
}

}  // namespace hmsturm
