#include "hmsturm/ideals.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace hmsturm {

// ---- HNF construction ------------------------------------------------

namespace {

struct Row {
    i128 p, q;  // (p + q sqrt D) / den
};

// Hermite normal form of the row span: returns (a,b,c) with
// g1 = a + b sqrtD (b > 0), g2 = c (c > 0), 0 <= a < c.
void hnf(std::vector<Row> rows, i128 &a, i128 &b, i128 &c) {
    // reduce the sqrt-column by the extended Euclid over all rows
    Row lead{0, 0};
    for (auto &r : rows) {
        if (r.q == 0) continue;
        if (lead.q == 0) {
            lead = r;
            r = {0, 0};
            continue;
        }
        // Euclid on (lead.q, r.q)
        while (r.q != 0) {
            i128 k = lead.q / r.q;
            lead.p = checked_sub(lead.p, checked_mul(k, r.p));
            lead.q = checked_sub(lead.q, checked_mul(k, r.q));
            std::swap(lead, r);
        }
    }
    if (lead.q == 0) throw std::domain_error("lattice has rank < 2");
    if (lead.q < 0) {
        lead.p = -lead.p;
        lead.q = -lead.q;
    }
    i128 g = 0;
    for (auto &r : rows) g = gcd128(g, r.p);
    if (g == 0) throw std::domain_error("lattice has rank < 2");
    b = lead.q;
    c = g;
    a = lead.p % c;
    if (a < 0) a += c;
}

i128 lcm128(i128 a, i128 b) { return checked_mul(a / gcd128(a, b), b); }

}  // namespace

FracIdeal FracIdeal::from_generators(const Discriminant &D,
                                     const std::vector<QuadElem> &gens) {
    // close under multiplication by omega, then HNF
    std::vector<QuadElem> all;
    QuadElem w = omega(D);
    for (const auto &g : gens) {
        if (g.D != D.D) throw std::domain_error("generator from wrong field");
        if (g.is_zero()) continue;
        all.push_back(g);
        all.push_back(g * w);
    }
    if (all.empty()) throw std::domain_error("zero ideal");
    i128 den = 1;
    for (const auto &g : all) den = lcm128(den, lcm128(g.x.den, g.y.den));
    std::vector<Row> rows;
    for (const auto &g : all) {
        Rat p = g.x * Rat(den, 1), q = g.y * Rat(den, 1);
        rows.push_back({p.num, q.num});
    }
    FracIdeal I;
    I.D_ = D.D;
    I.den_ = den;
    hnf(rows, I.a_, I.b_, I.c_);
    i128 g = gcd128(gcd128(I.a_, I.b_), gcd128(I.c_, I.den_));
    if (g > 1) {
        I.a_ /= g;
        I.b_ /= g;
        I.c_ /= g;
        I.den_ /= g;
    }
    I.validate();
    return I;
}

FracIdeal FracIdeal::ring_of_integers(const Discriminant &D) {
    return from_generators(D, {QuadElem::one(D.D), omega(D)});
}

FracIdeal FracIdeal::principal(const QuadElem &xi) {
    Discriminant D(xi.D);
    return from_generators(D, {xi});
}

FracIdeal FracIdeal::principal_integer(const Discriminant &D, i128 n) {
    return from_generators(D, {QuadElem::rational(D.D, Rat(n, 1))});
}

QuadElem FracIdeal::g1() const { return QuadElem(D_, Rat(a_, den_), Rat(b_, den_)); }
QuadElem FracIdeal::g2() const { return QuadElem(D_, Rat(c_, den_), Rat(0)); }

void FracIdeal::validate() const {
    if (b_ <= 0 || c_ <= 0 || den_ <= 0 || a_ < 0 || a_ >= c_)
        throw std::logic_error("ideal not in normal form");
    // closed under multiplication by omega, checked on both generators
    Discriminant D(D_);
    QuadElem w = omega(D);
    if (!contains(g1() * w) || !contains(g2() * w))
        throw std::domain_error("lattice is not an O_K-module");
}

bool FracIdeal::contains(const QuadElem &xi) const {
    if (xi.D != D_) return false;
    if (xi.is_zero()) return true;
    // xi = m*g1 + n*g2 with integers m, n
    Rat m = xi.y * Rat(den_, 1) / Rat(b_, 1);
    if (!m.is_integer()) return false;
    Rat n = (xi.x * Rat(den_, 1) - m * Rat(a_, 1)) / Rat(c_, 1);
    return n.is_integer();
}

bool FracIdeal::is_integral() const {
    return is_integral_elem(g1()) && is_integral_elem(g2());
}

Rat FracIdeal::norm() const {
    return Rat(checked_mul(2, checked_mul(b_, c_)), checked_mul(den_, den_));
}

FracIdeal FracIdeal::conj() const {
    Discriminant D(D_);
    return from_generators(D, {g1().conj(), g2()});
}

FracIdeal FracIdeal::inverse() const {
    Rat n = norm();
    FracIdeal cj = conj();
    return cj.scaled(Rat(1) / n);
}

FracIdeal FracIdeal::scaled(const Rat &r) const {
    if (r.is_zero()) throw std::domain_error("scaling ideal by zero");
    Discriminant D(D_);
    QuadElem l = QuadElem::rational(D_, r);
    return from_generators(D, {g1() * l, g2() * l});
}

FracIdeal FracIdeal::scaled(const QuadElem &lambda) const {
    if (lambda.is_zero()) throw std::domain_error("scaling ideal by zero");
    Discriminant D(D_);
    return from_generators(D, {g1() * lambda, g2() * lambda});
}

FracIdeal operator*(const FracIdeal &I, const FracIdeal &J) {
    if (I.D_ != J.D_) throw std::domain_error("ideals from different fields");
    Discriminant D(I.D_);
    return FracIdeal::from_generators(
        D, {I.g1() * J.g1(), I.g1() * J.g2(), I.g2() * J.g1(), I.g2() * J.g2()});
}

std::string FracIdeal::str() const {
    return "<" + g1().str() + ", " + g2().str() + ">";
}

FracIdeal dual_lattice(const FracIdeal &M) {
    // M^v = M^-1 * (1/sqrt(D))
    QuadElem inv_sqrtD(M.D(), Rat(0), Rat(1, M.D()));
    return M.inverse().scaled(inv_sqrtD);
}

BQF form_of_lattice(const FracIdeal &M) {
    QuadElem alpha = M.g1(), beta = M.g2();
    // (alpha, beta) is positively oriented: alpha beta' - beta alpha' = 2bc sqrtD/den^2 > 0
    Rat qa = alpha.norm();
    Rat qb = (alpha * beta.conj()).trace();
    Rat qc = beta.norm();
    // primitive integral multiple with positive content divisor
    i128 den = lcm128(qa.den, lcm128(qb.den, qc.den));
    i128 na = (qa * Rat(den, 1)).num, nb = (qb * Rat(den, 1)).num,
         nc = (qc * Rat(den, 1)).num;
    i128 g = gcd128(gcd128(na, nb), nc);
    if (g == 0) throw std::domain_error("degenerate basis");
    BQF Q(na / g, nb / g, nc / g);
    if (Q.disc() != M.D()) throw std::logic_error("form discriminant mismatch");
    return Q;
}

FracIdeal ideal_of_form(const Discriminant &D, const BQF &Q) {
    if (Q.disc() != D.D) throw std::domain_error("form discriminant mismatch");
    QuadElem alpha = QuadElem::rational(D.D, Rat(Q.a, 1));
    QuadElem beta(D.D, Rat(Q.b, 2), Rat(-1, 2));  // (b - sqrt D)/2
    return FracIdeal::from_generators(D, {alpha, beta});
}

PrimitiveRep primitive_integral_rep(const FracIdeal &M) {
    Discriminant D(M.D());
    FracIdeal J = M.scaled(Rat(M.den(), 1));  // integral now
    // content: largest m with J ⊆ m O_K, read off omega-coordinates
    i128 p1, q1, p2, q2;
    omega_coords(J.g1(), p1, q1);
    omega_coords(J.g2(), p2, q2);
    i128 m = gcd128(gcd128(p1, q1), gcd128(p2, q2));
    PrimitiveRep out;
    out.scale = Rat(M.den(), m);
    out.ideal = J.scaled(Rat(1, m));
    return out;
}

int narrow_class_of(const FracIdeal &M) {
    const NarrowClassGroup &G = narrow_class_group(Discriminant(M.D()));
    BQF R = reduce_form(form_of_lattice(M)).form;
    for (int i = 0; i < G.order; ++i)
        for (const BQF &f : G.cycles[i].forms)
            if (f == R) return i;
    throw std::logic_error("reduced form not found in any cycle");
}

bool is_principal_genus(const FracIdeal &M) {
    const NarrowClassGroup &G = narrow_class_group(Discriminant(M.D()));
    return G.in_principal_genus[narrow_class_of(M)];
}

FracIdeal isotropy_lattice(const FracIdeal &a, const FracIdeal &b,
                           const FracIdeal &c) {
    if (!c.is_integral()) throw std::domain_error("level ideal c must be integral");
    return a.inverse() * b.inverse() * c;
}

const NarrowClassGroup &narrow_class_group(const Discriminant &D) {
    static std::map<long long, NarrowClassGroup> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(D.D);
    if (it != cache.end()) return it->second;

    NarrowClassGroup G;
    G.D = D;
    G.cycles = enumerate_reduced_forms(D);
    G.order = (int)G.cycles.size();
    for (const auto &cyc : G.cycles) G.reps.push_back(ideal_of_form(D, cyc.rep()));

    auto classify = [&](const FracIdeal &I) {
        BQF R = reduce_form(form_of_lattice(I)).form;
        for (int i = 0; i < G.order; ++i)
            for (const BQF &f : G.cycles[i].forms)
                if (f == R) return i;
        throw std::logic_error("class not found");
    };

    G.mult.assign(G.order, std::vector<int>(G.order, -1));
    for (int i = 0; i < G.order; ++i)
        for (int j = i; j < G.order; ++j)
            G.mult[i][j] = G.mult[j][i] = classify(G.reps[i] * G.reps[j]);

    G.in_principal_genus.assign(G.order, false);
    for (int i = 0; i < G.order; ++i) G.in_principal_genus[G.mult[i][i]] = true;

    G.delta_class = classify(FracIdeal::principal(QuadElem::sqrtD(D.D)));

    std::vector<bool> used(G.order, false);
    for (int i = 0; i < G.order; ++i) {
        if (used[i]) continue;
        used[i] = true;
        used[G.mult[i][G.delta_class]] = true;
        G.ideal_class_lifts.push_back(i);
    }

    return cache.emplace(D.D, std::move(G)).first->second;
}

}  // namespace hmsturm
