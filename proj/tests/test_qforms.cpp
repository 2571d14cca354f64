#include <doctest.h>

#include <set>

#include "hmsturm/qforms.hpp"

using namespace hmsturm;

namespace {

// SL2(Z)-orbit oracle: breadth-first search over S and T^{+-1} up to a
// word-length bound, entirely independent of the reduction pipeline
bool orbit_connected(const BQF &from, const BQF &to, int depth) {
    std::set<BQF> seen{from};
    std::vector<BQF> frontier{from};
    auto S = [](const BQF &q) { return BQF(q.c, -q.b, q.a); };
    auto Tp = [](const BQF &q) {
        return BQF(q.a, q.b + 2 * q.a, q.a + q.b + q.c);
    };
    auto Tm = [](const BQF &q) {
        return BQF(q.a, q.b - 2 * q.a, q.a - q.b + q.c);
    };
    for (int d = 0; d < depth; ++d) {
        std::vector<BQF> next;
        for (const BQF &q : frontier) {
            if (q == to) return true;
            for (const BQF &r : {S(q), Tp(q), Tm(q)}) {
                if (seen.insert(r).second) next.push_back(r);
            }
        }
        frontier.swap(next);
    }
    for (const BQF &q : frontier)
        if (q == to) return true;
    return false;
}

}  // namespace

TEST_CASE("reduction pipeline on the worked forms") {
    ReducedBQF r = reduce_form(BQF(1, 0, -10));
    CHECK(r.form == BQF(1, 8, 6));
    CHECK(apply(BQF(1, 0, -10), r.transform) == r.form);

    ReducedBQF r29 = reduce_form(BQF(1, 7, 5));
    CHECK(r29.form == BQF(1, 7, 5));
    CHECK(r29.transform.p == 1);
    CHECK(r29.transform.q == 0);
    CHECK(r29.transform.r == 0);
    CHECK(r29.transform.s == 1);

    // negative leading coefficient input
    ReducedBQF rq = reduce_form(BQF(-5, 0, 2));
    CHECK(rq.form == BQF(2, 8, 3));
    CHECK(apply(BQF(-5, 0, 2), rq.transform) == rq.form);
}

TEST_CASE("reduced predicate matches the root conditions") {
    CHECK(is_reduced(BQF(1, 8, 6)));
    CHECK(is_reduced(BQF(2, 8, 3)));
    CHECK(is_reduced(BQF(10, 20, 9)));  // b beyond 2 sqrt(D) still reduced
    CHECK_FALSE(is_reduced(BQF(1, 0, -10)));
    CHECK_FALSE(is_reduced(BQF(1, 6, -1)));  // b < sqrt(40)
    QuadElem w0 = first_root(BQF(1, 8, 6));
    CHECK(w0 == QuadElem(40, Rat(4), Rat(1, 2)));
}

TEST_CASE("form enumeration gives the narrow class number") {
    CHECK(enumerate_reduced_forms(Discriminant(29)).size() == 1);
    CHECK(enumerate_reduced_forms(Discriminant(40)).size() == 2);
    CHECK(enumerate_reduced_forms(Discriminant(44)).size() == 2);
    CHECK(enumerate_reduced_forms(Discriminant(5)).size() == 1);
    CHECK(enumerate_reduced_forms(Discriminant(12)).size() == 2);

    auto cyc40 = enumerate_reduced_forms(Discriminant(40));
    CHECK(cyc40[0].rep() == BQF(1, 8, 6));
    CHECK(cyc40[0].forms.size() == 6);
    CHECK(cyc40[1].rep() == BQF(2, 8, 3));
    CHECK(cyc40[1].forms.size() == 4);

    auto cyc29 = enumerate_reduced_forms(Discriminant(29));
    CHECK(cyc29[0].forms.size() == 5);
}

TEST_CASE("cycle step walks every cycle back to its start") {
    for (long long D : {29LL, 40LL, 44LL, 73LL, 105LL}) {
        auto cycles = enumerate_reduced_forms(Discriminant(D));
        size_t total = 0;
        for (const auto &cyc : cycles) {
            total += cyc.forms.size();
            BQF cur = cyc.rep();
            for (size_t i = 0; i < cyc.forms.size(); ++i) cur = cycle_step(cur);
            CHECK(cur == cyc.rep());
        }
        // every reduced form belongs to exactly one cycle
        std::set<BQF> all;
        for (const auto &cyc : cycles) all.insert(cyc.forms.begin(), cyc.forms.end());
        CHECK(all.size() == total);
    }
}

TEST_CASE("reduction lands in the SL2(Z)-orbit (BFS oracle)") {
    CHECK(orbit_connected(BQF(1, 0, -10), BQF(1, 8, 6), 12));
    CHECK(orbit_connected(BQF(-10, 0, 1), BQF(1, 8, 6), 12));
    CHECK(orbit_connected(BQF(1, 7, 5), BQF(5, 7, 1), 12));
    // the two D=40 classes are distinct: BFS must not connect them
    CHECK_FALSE(orbit_connected(BQF(1, 8, 6), BQF(2, 8, 3), 9));
}

TEST_CASE("degenerate and imprimitive inputs are rejected") {
    CHECK_THROWS_AS(reduce_form(BQF(2, 0, -20)), std::domain_error);  // gcd 2
    CHECK_THROWS_AS(reduce_form(BQF(1, 0, 10)), std::domain_error);   // definite
}

TEST_CASE("cycles are purely periodic and short below D = 1000") {
    // the longest cycle in this range has period 137 (at D = 769)
    for (long long D = 5; D < 1000; ++D) {
        if (!is_fundamental_discriminant(D)) continue;
        for (const auto &cyc : enumerate_reduced_forms(Discriminant(D))) {
            CHECK(cyc.forms.size() <= 137);
            // the recursion from the representative returns to its root
            QuadElem w0 = first_root(cyc.rep());
            QuadElem w = w0;
            size_t steps = 0;
            do {
                i128 b = ceil_quad(w);
                w = (QuadElem::rational(w.D, Rat(b, 1)) - w).inverse();
                ++steps;
            } while (!(w == w0) && steps <= 300);
            CHECK(steps == cyc.forms.size());
        }
    }
}
