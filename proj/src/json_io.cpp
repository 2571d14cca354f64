#include "hmsturm/json_io.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace hmsturm {

ordered_json to_json(const Rat &r) { return r.str(); }

ordered_json to_json(const QuadElem &v) {
    ordered_json j;
    j["x"] = v.x.str();
    j["y"] = v.y.str();
    j["display"] = v.str();
    return j;
}

ordered_json to_json(const FracIdeal &I) {
    ordered_json j;
    j["g1"] = I.g1().str();
    j["g2"] = I.g2().str();
    j["norm"] = I.norm().str();
    return j;
}

ordered_json to_json(const CuspResolution &res) {
    ordered_json j;
    j["D"] = res.D.D;
    j["lattice"] = to_json(res.lattice);
    j["normalized_lattice"] = to_json(res.normalized_lattice);
    j["reduced_form"] = {to_string_i128(res.reduced.a), to_string_i128(res.reduced.b),
                         to_string_i128(res.reduced.c)};
    j["period"] = res.period;
    j["nu"] = res.nu;
    j["v_index"] = res.v_index;
    j["r_tilde"] = res.r_tilde;
    j["cycle"] = res.cycle;
    j["self_intersections"] = res.self_intersections;
    j["singular"] = res.singular;
    j["double_intersection"] = res.double_intersection;
    j["sum_b_minus_2"] = to_string_i128(res.cycle_sum_minus_2());
    ordered_json verts = ordered_json::array();
    for (const QuadElem &v : res.vertex_reps()) verts.push_back(to_json(v));
    j["vertices"] = verts;
    j["eps_plus"] = to_json(res.eps_plus);
    return j;
}

ordered_json to_json(const CuspSet &set) {
    ordered_json j;
    j["D"] = set.D.D;
    j["a"] = to_json(set.a);
    j["c"] = to_json(set.c);
    ordered_json cusps = ordered_json::array();
    for (const auto &r : set.cusps) cusps.push_back(to_json(r));
    j["cusps"] = cusps;
    return j;
}

ordered_json to_json(const BoundReport &rep) {
    ordered_json j;
    j["D"] = rep.D.D;
    j["a_class"] = rep.a_class;
    j["cusp_index"] = rep.cusp_index;
    j["k1"] = rep.k1;
    j["k2"] = rep.k2;
    j["s"] = rep.s;
    j["n"] = rep.n;
    j["index"] = rep.index;
    j["zeta_minus_one"] = rep.zeta.str();
    ordered_json sums = ordered_json::array();
    for (i128 s : rep.cusp_sums) sums.push_back(to_string_i128(s));
    j["cusp_sums_b_minus_2"] = sums;
    j["sum_at_cusp"] = to_string_i128(rep.sum_at_i0);
    j["total_sum"] = to_string_i128(rep.total_sum);
    j["route"] = rep.route == NRoute::Conjecture ? "conjecture"
                 : rep.route == NRoute::CConstant ? "c-constant"
                                                  : "rational-table";
    j["threshold"] = rep.threshold.str();
    j["a_min"] = to_string_i128(rep.a_min);
    if (rep.prime_p != 0) {
        j["p"] = rep.prime_p;
        j["p_compatible"] = rep.p_compatible;
    }
    return j;
}

ordered_json to_json(const RationalCaseBound &b) {
    ordered_json j;
    j["D"] = b.data.D;
    j["a"] = b.data.a_label;
    j["c"] = b.data.c_label;
    j["c_norm"] = to_string_i128(b.data.c_norm);
    j["cusps"] = b.data.cusp_count;
    j["cycle"] = b.data.cycle;
    j["formula"] = b.data.k_coeff.str() + "*k - " + b.data.s_coeff.str() + "*s";
    j["k"] = b.k;
    j["s"] = b.s;
    j["threshold"] = b.threshold.str();
    j["a_min"] = to_string_i128(b.a_min);
    return j;
}

ordered_json to_json(const IntersectionReport &rep) {
    ordered_json j;
    j["D"] = rep.D.D;
    j["n"] = rep.n;
    j["c_prime"] = rep.cusp_count_cprime;
    j["unit_index"] = rep.unit_idx;
    j["degree_d"] = to_string_i128(rep.degree_d);
    j["zeta_minus_one"] = rep.zeta.str();
    ordered_json sums = ordered_json::array(), ks = ordered_json::array(),
                 ss = ordered_json::array();
    for (size_t i = 0; i < rep.cusp_sums.size(); ++i) {
        sums.push_back(to_string_i128(rep.cusp_sums[i]));
        ks.push_back(rep.K_dot_Si[i].str());
        ss.push_back(rep.Si_dot_Si[i].str());
    }
    j["cusp_sums_b_minus_2"] = sums;
    j["K_dot_Si"] = ks;
    j["Si_dot_Si"] = ss;
    j["K_dot_K"] = rep.K_dot_K.str();
    return j;
}

ordered_json to_json(const SurfaceClass &c) {
    ordered_json j;
    j["D"] = c.D.D;
    j["a_principal_genus"] = c.a_principal_genus;
    j["is_rational"] = c.is_rational;
    j["conjecture_known"] = c.conjecture_known;
    j["conjecture_case"] = c.conjecture_case;
    return j;
}

ordered_json to_json(const SturmSet &set) {
    ordered_json j;
    j["D"] = set.D.D;
    j["a_class"] = set.a_class;
    j["k1"] = set.k1;
    j["k2"] = set.k2;
    j["s"] = set.s;
    j["n"] = set.n;
    j["threshold_T"] = to_string_i128(set.threshold_T);
    j["lattice"] = to_json(set.resolution.normalized_lattice);
    j["dual_lattice"] = to_json(set.dual);
    j["includes_zero"] = set.includes_zero;
    j["count"] = (long long)set.count();
    // experimental: indices grouped by the ideal they generate (xi and its
    // conjugate's orbit identified)
    {
        std::set<QuadElem> ideals;
        for (const auto &r : set.reps) {
            QuadElem c2 = canonical_rep(r.xi.conj(), set.resolution.eps_plus);
            ideals.insert(r.xi < c2 ? r.xi : c2);
        }
        j["ideal_orbit_count_experimental"] =
            (long long)(ideals.size() + (set.includes_zero ? 1 : 0));
    }
    ordered_json reps = ordered_json::array();
    for (const auto &r : set.reps) {
        ordered_json e;
        e["xi"] = to_json(r.xi);
        e["witness_j"] = r.witness_j;
        e["trace"] = to_string_i128(r.witness_trace);
        reps.push_back(e);
    }
    j["reps"] = reps;
    return j;
}

ordered_json to_json(const CongruenceVerdict &v) {
    ordered_json j;
    j["verdict"] = verdict_name(v.kind);
    j["D"] = v.D.D;
    j["a_class"] = v.a_class;
    j["n"] = v.n;
    if (v.p != 0) j["p"] = v.p;
    j["threshold_T"] = to_string_i128(v.threshold_T);
    j["message"] = v.message;
    ordered_json failing = ordered_json::array(), missing = ordered_json::array(),
                 checked = ordered_json::array();
    for (const auto &x : v.failing) failing.push_back(x.str());
    for (const auto &x : v.missing) missing.push_back(x.str());
    for (const auto &x : v.checked) {
        ordered_json e;
        e["xi"] = x.first.str();
        e["value"] = x.second.str();
        checked.push_back(e);
    }
    j["failing"] = failing;
    j["missing"] = missing;
    j["checked"] = checked;
    return j;
}

std::string sturm_set_csv(const SturmSet &set) {
    std::ostringstream out;
    out << "x_num,x_den,y_num,y_den,witness_j,trace\n";
    if (set.includes_zero) out << "0,1,0,1,0,0\n";
    for (const auto &r : set.reps) {
        out << to_string_i128(r.xi.x.num) << "," << to_string_i128(r.xi.x.den) << ","
            << to_string_i128(r.xi.y.num) << "," << to_string_i128(r.xi.y.den) << ","
            << r.witness_j << "," << to_string_i128(r.witness_trace) << "\n";
    }
    return out.str();
}

std::string cycle_svg(const CuspResolution &res) {
    const double R = 120.0, cx = 160.0, cy = 160.0;
    size_t n = res.self_intersections.size();
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"320\" height=\"320\" "
           "viewBox=\"0 0 320 320\">\n";
    svg << "<title>cusp resolution cycle, D=" << res.D.D << "</title>\n";
    std::vector<std::pair<double, double>> pts;
    for (size_t k = 0; k < n; ++k) {
        double ang = 2.0 * 3.14159265358979312 * (double)k / (double)(n == 0 ? 1 : n);
        pts.emplace_back(cx + R * std::cos(ang), cy + R * std::sin(ang));
    }
    for (size_t k = 0; k < n && n > 1; ++k) {
        auto &p = pts[k];
        auto &q = pts[(k + 1) % n];
        svg << "<line x1=\"" << p.first << "\" y1=\"" << p.second << "\" x2=\""
            << q.first << "\" y2=\"" << q.second
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (size_t k = 0; k < n; ++k) {
        svg << "<circle cx=\"" << pts[k].first << "\" cy=\"" << pts[k].second
            << "\" r=\"14\" fill=\"white\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << pts[k].first << "\" y=\"" << pts[k].second + 4
            << "\" font-size=\"11\" text-anchor=\"middle\">"
            << res.self_intersections[k] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hmsturm
