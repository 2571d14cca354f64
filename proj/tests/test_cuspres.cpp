#include <doctest.h>

#include <random>

#include "hmsturm/cuspres.hpp"
#include "hmsturm/invariants.hpp"

using namespace hmsturm;

namespace {

FracIdeal OK(long long D) { return FracIdeal::ring_of_integers(Discriminant(D)); }

QuadElem qe(long long D, Rat x, Rat y) { return QuadElem(D, x, y); }

std::vector<long long> cyc(const CuspResolution &r) { return r.cycle; }

}  // namespace

TEST_CASE("infinity cusp of Q(sqrt 10): cycle (8,2,2,2,2,2) and its vertices") {
    CuspResolution r = resolve_cusp(OK(40));
    CHECK(cyc(r) == std::vector<long long>{8, 2, 2, 2, 2, 2});
    CHECK(r.period == 6);
    CHECK(r.nu == 1);
    CHECK(r.r_tilde == 6);
    std::vector<QuadElem> want = {
        qe(40, Rat(1), Rat(0)),       qe(40, Rat(4), Rat(-1, 2)),
        qe(40, Rat(7), Rat(-1)),      qe(40, Rat(10), Rat(-3, 2)),
        qe(40, Rat(13), Rat(-2)),     qe(40, Rat(16), Rat(-5, 2))};
    CHECK(r.vertex_reps() == want);
    CHECK(r.self_intersections == std::vector<long long>{-8, -2, -2, -2, -2, -2});
    CHECK(r.cycle_sum_minus_2() == 6);
}

TEST_CASE("class <2, sqrt 10> cusp: cycle (4,3,2,3)") {
    const NarrowClassGroup &G = narrow_class_group(Discriminant(40));
    CuspResolution r = resolve_cusp(G.reps[1]);
    CHECK(cyc(r) == std::vector<long long>{4, 3, 2, 3});
    std::vector<QuadElem> want = {
        qe(40, Rat(2), Rat(0)), qe(40, Rat(4), Rat(-1, 2)),
        qe(40, Rat(10), Rat(-3, 2)), qe(40, Rat(16), Rat(-5, 2))};
    CHECK(r.vertex_reps() == want);
    CHECK(r.cycle_sum_minus_2() == 4);
}

TEST_CASE("infinity cusp of Q(sqrt 29): cycle (7,2,2,2,2)") {
    CuspResolution r = resolve_cusp(OK(29));
    CHECK(cyc(r) == std::vector<long long>{7, 2, 2, 2, 2});
    std::vector<QuadElem> want = {
        qe(29, Rat(1), Rat(0)), qe(29, Rat(7, 2), Rat(-1, 2)),
        qe(29, Rat(6), Rat(-1)), qe(29, Rat(17, 2), Rat(-3, 2)),
        qe(29, Rat(11), Rat(-2))};
    CHECK(r.vertex_reps() == want);
    CHECK(r.cycle_sum_minus_2() == 5);
}

TEST_CASE("infinity cusp of Q(sqrt 11): cycle (8,2,2,8,2,2), nu = 2") {
    CuspResolution r = resolve_cusp(OK(44));
    CHECK(cyc(r) == std::vector<long long>{8, 2, 2, 8, 2, 2});
    CHECK(r.period == 3);
    CHECK(r.nu == 2);
    CHECK(r.r_tilde == 6);
    std::vector<QuadElem> want = {
        qe(44, Rat(1), Rat(0)),   qe(44, Rat(4), Rat(-1, 2)),
        qe(44, Rat(7), Rat(-1)),  qe(44, Rat(10), Rat(-3, 2)),
        qe(44, Rat(73), Rat(-11)), qe(44, Rat(136), Rat(-41, 2))};
    CHECK(r.vertex_reps() == want);
    CHECK(r.cycle_sum_minus_2() == 12);
}

TEST_CASE("non-principal class of Q(sqrt 11): twelve lines") {
    const NarrowClassGroup &G = narrow_class_group(Discriminant(44));
    CuspResolution r = resolve_cusp(G.reps[1]);
    CHECK(cyc(r) == std::vector<long long>{5, 2, 2, 2, 2, 2, 5, 2, 2, 2, 2, 2});
    CHECK(r.r_tilde == 12);
    CHECK(r.cycle_sum_minus_2() == 6);
    // the printed table lists these vertices scaled by 1/22 (homothety
    // representatives are equivalent; both normalizations accepted)
    std::vector<QuadElem> want22 = {
        qe(44, Rat(2), Rat(0)),    qe(44, Rat(5), Rat(-1, 2)),
        qe(44, Rat(8), Rat(-1)),   qe(44, Rat(11), Rat(-3, 2)),
        qe(44, Rat(14), Rat(-2)),  qe(44, Rat(17), Rat(-5, 2)),
        qe(44, Rat(20), Rat(-3)),  qe(44, Rat(83), Rat(-25, 2)),
        qe(44, Rat(146), Rat(-22)), qe(44, Rat(209), Rat(-63, 2)),
        qe(44, Rat(272), Rat(-41)), qe(44, Rat(335), Rat(-101, 2))};
    CHECK(r.vertex_reps() == want22);
}

TEST_CASE("special shapes r~ = 1 and r~ = 2") {
    CuspResolution r5 = resolve_cusp(OK(5));
    CHECK(r5.r_tilde == 1);
    CHECK(r5.singular);
    CHECK(cyc(r5) == std::vector<long long>{3});
    CHECK(r5.self_intersections == std::vector<long long>{-1});  // -b0 + 2
    CHECK(r5.cycle_sum_minus_2() == 1);

    CuspResolution r8 = resolve_cusp(OK(8));
    CHECK(r8.r_tilde == 2);
    CHECK(r8.double_intersection);
    CHECK(cyc(r8) == std::vector<long long>{4, 2});

    CuspResolution r12 = resolve_cusp(OK(12));  // r = 1, nu = 2
    CHECK(r12.r_tilde == 2);
    CHECK(cyc(r12) == std::vector<long long>{4, 4});
}

TEST_CASE("vertex recursion invariants") {
    for (long long D : {29LL, 40LL, 44LL, 73LL}) {
        const NarrowClassGroup &G = narrow_class_group(Discriminant(D));
        for (const FracIdeal &rep : G.reps) {
            CuspResolution r = resolve_cusp(rep);
            // A_{k+1} = b_k A_k - A_{k-1} over the stored range
            for (long long k = 0; k < r.r_tilde; ++k) {
                QuadElem lhs = r.vertices[(size_t)k + 2];
                QuadElem rhs = Rat(r.cycle[(size_t)k], 1) * r.vertices[(size_t)k + 1] -
                               r.vertices[(size_t)k];
                CHECK(lhs == rhs);
            }
            // unit relation: A_r / A_0 is a totally positive unit, and the
            // square of its inverse generates U^2 when nu = 2
            CHECK(totally_positive(r.unit_u));
            CHECK(r.unit_u.norm() == Rat(1));
            QuadElem w = r.unit_u.inverse();
            CHECK(r.eps_plus == (r.nu == 1 ? w : w * w));
            // all vertices in the normalized lattice
            for (const QuadElem &v : r.vertices)
                CHECK(r.normalized_lattice.contains(v));
        }
    }
}

TEST_CASE("homothety invariance of the resolution") {
    std::mt19937_64 rng(23);
    for (long long D : {40LL, 44LL}) {
        const NarrowClassGroup &G = narrow_class_group(Discriminant(D));
        for (const FracIdeal &rep : G.reps) {
            CuspResolution base = resolve_cusp(rep);
            std::uniform_int_distribution<long long> c(1, 6);
            QuadElem lam(D, Rat(c(rng) * 7, 2), Rat(c(rng), 2));
            if (!totally_positive(lam)) continue;
            CuspResolution scaled = resolve_cusp(rep.scaled(lam));
            CHECK(scaled.cycle == base.cycle);
            CHECK(scaled.vertex_reps() == base.vertex_reps());  // same normalization
        }
    }
}

TEST_CASE("recursion restarted from a rotation yields a rotated cycle") {
    // run the raw ceiling recursion from the root of every member of a cycle
    auto b_period = [](const BQF &form) {
        QuadElem w0 = first_root(form);
        QuadElem w = w0;
        std::vector<long long> bs;
        do {
            i128 b = ceil_quad(w);
            bs.push_back((long long)b);
            w = (QuadElem::rational(w.D, Rat(b, 1)) - w).inverse();
        } while (!(w == w0));
        return bs;
    };
    for (long long D : {40LL, 29LL, 44LL, 73LL}) {
        auto cycles = enumerate_reduced_forms(Discriminant(D));
        for (const auto &cycle : cycles) {
            std::vector<long long> base = b_period(cycle.rep());
            CHECK(base.size() == cycle.forms.size());
            BQF cur = cycle.rep();
            for (size_t k = 1; k < cycle.forms.size(); ++k) {
                cur = cycle_step(cur);
                std::vector<long long> expect = base;
                std::rotate(expect.begin(), expect.begin() + (long)k, expect.end());
                CHECK(b_period(cur) == expect);
            }
        }
    }
    // resolve_cusp itself is canonical: any cycle member's lattice resolves
    // to the same data
    for (long long D : {40LL, 44LL}) {
        auto cycles = enumerate_reduced_forms(Discriminant(D));
        for (const auto &cycle : cycles) {
            CuspResolution base = resolve_cusp(ideal_of_form(Discriminant(D), cycle.rep()));
            for (const BQF &f : cycle.forms) {
                CuspResolution again = resolve_cusp(ideal_of_form(Discriminant(D), f));
                CHECK(again.cycle == base.cycle);
                CHECK(again.vertex_reps() == base.vertex_reps());
            }
        }
    }
}

TEST_CASE("scaled resolution equals the repetition construction") {
    for (long long D : {29LL, 40LL, 44LL}) {
        FracIdeal O = OK(D);
        CuspResolution base = resolve_cusp(O);
        CHECK(scaled_resolution(O, 1).cycle == base.cycle);
        for (long long n : {3LL, 5LL, 7LL}) {
            CuspResolution direct = scaled_resolution(O, n);
            long long j = unit_index(Discriminant(D), n);
            std::vector<long long> tiled;
            for (long long t = 0; t < j; ++t)
                tiled.insert(tiled.end(), base.cycle.begin(), base.cycle.end());
            CHECK(direct.cycle == tiled);
            // eq. (11) shape: the scaled double sum is the index multiple
            CHECK(direct.cycle_sum_minus_2() == j * base.cycle_sum_minus_2());
        }
    }
}

TEST_CASE("every class below 120 has a cycle sum >= 1") {
    for (long long D = 5; D < 120; ++D) {
        if (!is_fundamental_discriminant(D)) continue;
        const NarrowClassGroup &G = narrow_class_group(Discriminant(D));
        for (const FracIdeal &rep : G.reps)
            CHECK(resolve_cusp(rep).cycle_sum_minus_2() >= 1);
    }
}

TEST_CASE("bound cusp data sums per ideal class") {
    Discriminant D40(40), D29(29), D44(44);
    BoundCusps b40 = bound_cusp_data(D40, OK(40));
    CHECK(b40.sums == std::vector<i128>{6, 4});
    CHECK(b40.total == 10);

    BoundCusps b29 = bound_cusp_data(D29, OK(29));
    CHECK(b29.sums == std::vector<i128>{5});

    BoundCusps b44 = bound_cusp_data(D44, OK(44));
    CHECK(b44.sums == std::vector<i128>{12});  // h = 1: one cusp

    const NarrowClassGroup &G44 = narrow_class_group(D44);
    BoundCusps b44n = bound_cusp_data(D44, G44.reps[1].inverse());
    CHECK(b44n.sums == std::vector<i128>{6});
}

TEST_CASE("period cap rejects pathological searches") {
    setenv("HSM_MAX_PERIOD", "1", 1);
    CHECK_THROWS_AS(resolve_cusp(OK(73)), std::runtime_error);
    unsetenv("HSM_MAX_PERIOD");
    CHECK_NOTHROW(resolve_cusp(OK(73)));
}

TEST_CASE("nu from the period unit agrees with the parity route") {
    for (long long D : {5LL, 8LL, 12LL, 13LL, 29LL, 40LL, 44LL, 73LL, 76LL}) {
        CHECK(resolve_cusp(OK(D)).nu == nu_of(Discriminant(D)));
    }
}
