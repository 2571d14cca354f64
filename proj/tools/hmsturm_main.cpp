// command line front end: resolve, invariants, bound, sturm-set, check, atlas
#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>

#include "hmsturm/json_io.hpp"

using namespace hmsturm;

namespace {

struct Common {
    long long D = 0;
    int cls = 0;
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App *cmd, Common &c, bool need_D = true) {
    auto *d = cmd->add_option("-D,--discriminant", c.D, "fundamental discriminant");
    if (need_D) d->required();
    cmd->add_option("--class", c.cls, "narrow class index of the level (default 0)");
    cmd->add_option("--format", c.format, "json|text|csv");
    cmd->add_option("-o,--output", c.out_path, "write output to a file");
}

void emit(const Common &c, const std::string &payload) {
    if (c.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(c.out_path);
        if (!f) throw std::runtime_error("cannot open output file " + c.out_path);
        f << payload;
    }
}

// level ideal whose infinity cusp carries the class-i resolution cycle
FracIdeal level_ideal(const Discriminant &D, int cls) {
    const NarrowClassGroup &G = narrow_class_group(D);
    if (cls < 0 || cls >= G.order)
        throw std::domain_error("class index out of range (h+ = " +
                                std::to_string(G.order) + ")");
    return G.reps[(size_t)cls].inverse();
}

std::string resolution_text(const CuspResolution &r, int cls) {
    std::ostringstream os;
    os << "class " << cls << ": cycle (";
    for (size_t i = 0; i < r.cycle.size(); ++i)
        os << (i ? "," : "") << r.cycle[i];
    os << "), r=" << r.period << ", nu=" << r.nu << ", r~=" << r.r_tilde
       << ", sum(b-2)=" << to_string_i128(r.cycle_sum_minus_2()) << "\n";
    os << "  lattice " << r.normalized_lattice.str() << "\n";
    auto reps = r.vertex_reps();
    for (size_t i = 0; i < reps.size(); ++i)
        os << "  A_" << i << " = " << reps[i].str() << "   S.I. "
           << r.self_intersections[i % r.self_intersections.size()] << "\n";
    return os.str();
}

int cmd_resolve(const Common &c, long long n_level) {
    Discriminant D(c.D);
    FracIdeal a = level_ideal(D, c.cls);
    FracIdeal lev = n_level > 1
                        ? FracIdeal::principal_integer(D, n_level)
                        : FracIdeal::ring_of_integers(D);
    long long vidx = n_level > 1 ? unit_index(D, n_level) : 1;
    CuspSet set = resolve_all_cusps(D, a, lev, vidx);
    if (c.format == "text") {
        std::ostringstream os;
        for (size_t i = 0; i < set.cusps.size(); ++i)
            os << resolution_text(set.cusps[i], (int)i);
        emit(c, os.str());
    } else {
        emit(c, to_json(set).dump(2));
    }
    return 0;
}

int cmd_invariants(const Common &c, long long n, long long cprime) {
    Discriminant D(c.D);
    FracIdeal a = level_ideal(D, c.cls);
    SelectedLevel sel = select_n(D, a);
    ordered_json j;
    j["surface"] = to_json(sel.cls);
    j["route"] = sel.route == NRoute::Conjecture ? "conjecture"
                 : sel.route == NRoute::CConstant ? "c-constant"
                                                  : "rational-table";
    if (sel.route != NRoute::RationalTable) j["n_selected"] = sel.n;
    if (sel.route == NRoute::CConstant) j["C"] = to_string_i128(sel.c_constant);
    j["zeta_minus_one"] = zeta_minus_one(D).str();
    if (sel.route != NRoute::RationalTable) {
        long long use_n = n > 0 ? n : sel.n;
        j["intersections"] = to_json(intersection_numbers(D, a, use_n, cprime));
    }
    emit(c, j.dump(2));
    return 0;
}

int cmd_bound(const Common &c, long long weight, long long k1, long long k2,
              long long s, long long p, long long index, int cusp, bool rational_table) {
    Discriminant D(c.D);
    FracIdeal a = level_ideal(D, c.cls);
    SelectedLevel sel = select_n(D, a);
    if (rational_table || sel.route == NRoute::RationalTable) {
        RationalCaseBound b =
            rational_case_bound(D, is_principal_genus(a), weight > 0 ? weight : k1, s);
        emit(c, to_json(b).dump(2));
        return 0;
    }
    BoundReport rep;
    if (k1 > 0 || k2 > 0) {
        if (k1 <= 0 || k2 <= 0)
            throw std::domain_error("--k1 and --k2 must be given together");
        rep = general_bound(D, a, cusp, k1, k2, s, index);
    } else if (p > 0) {
        rep = sturm_bound(D, a, cusp, weight, s, p);
    } else {
        rep = hecke_bound(D, a, cusp, weight, s);
    }
    if (c.format == "text") {
        std::ostringstream os;
        os << "D=" << c.D << " class=" << c.cls << " cusp=" << cusp
           << " n=" << rep.n << " zeta=" << rep.zeta.str()
           << " threshold=" << rep.threshold.str()
           << " a_min=" << to_string_i128(rep.a_min) << "\n";
        emit(c, os.str());
    } else {
        emit(c, to_json(rep).dump(2));
    }
    return 0;
}

int cmd_sturm_set(const Common &c, long long weight, long long k1, long long k2,
                  long long s) {
    Discriminant D(c.D);
    FracIdeal a = level_ideal(D, c.cls);
    if (weight > 0) k1 = k2 = weight;
    SturmSet set = sturm_set(D, a, k1, k2, s);
    if (c.format == "csv")
        emit(c, sturm_set_csv(set));
    else
        emit(c, to_json(set).dump(2));
    return 0;
}

int cmd_check(const Common &c, const std::string &coeffs_path,
              const std::string &coeffs_b_path, long long p) {
    std::ifstream f(coeffs_path);
    if (!f) throw std::runtime_error("cannot open " + coeffs_path);
    CoeffFile file = load_coeff_csv(f);
    Discriminant D(file.D);
    FracIdeal a = level_ideal(D, file.a_class);
    SturmSet set = sturm_set(D, a, file.weight, file.weight, file.s);

    auto to_map = [&](const CoeffFile &cf) {
        CoeffMap m;
        m.dual = set.dual;
        for (const auto &row : cf.rows) m.insert(row.first, row.second);
        return m;
    };
    CoeffMap A = to_map(file);
    CongruenceVerdict verdict;
    if (!coeffs_b_path.empty()) {
        if (p <= 0) throw std::domain_error("two-file congruence check needs -p");
        std::ifstream g(coeffs_b_path);
        if (!g) throw std::runtime_error("cannot open " + coeffs_b_path);
        CoeffFile fb = load_coeff_csv(g);
        if (fb.D != file.D || fb.a_class != file.a_class || fb.weight != file.weight ||
            fb.s != file.s)
            throw std::domain_error("coefficient files disagree on D/a_class/weight/s");
        CoeffMap B = to_map(fb);
        verdict = check_congruence(A, B, p, set);
    } else if (p > 0) {
        verdict = check_congruence_zero(A, p, set);
    } else {
        verdict = check_vanishing(A, set);
    }
    emit(c, to_json(verdict).dump(2));
    return verdict.certified() ? 0 : 1;
}

std::string atlas_rows(long long D) {
    std::ostringstream os;
    if (!is_fundamental_discriminant(D)) return "";
    Discriminant disc(D);
    const NarrowClassGroup &G = narrow_class_group(disc);
    for (int cls = 0; cls < G.order; ++cls) {
        FracIdeal a = G.reps[(size_t)cls].inverse();
        std::vector<long long> base = base_cycle_of(G.reps[(size_t)cls]);
        i128 base_sum = 0;
        for (long long b : base) base_sum += b - 2;
        std::string nu = "?";
        try {
            nu = std::to_string(resolve_cusp(G.reps[(size_t)cls], 1).nu);
        } catch (const std::exception &) {
            // unit too large for vertex arithmetic; the period data stands
        }
        std::ostringstream cyc;
        for (size_t i = 0; i < base.size(); ++i) cyc << (i ? " " : "") << base[i];
        os << D << "," << cls << "," << G.class_number() << "," << G.order << ","
           << nu << ",\"" << cyc.str() << "\"," << to_string_i128(base_sum) << ","
           << zeta_minus_one(disc).str() << ",";
        try {
            SelectedLevel sel = select_n(disc, a);
            if (sel.route == NRoute::RationalTable) {
                auto data = rational_case_data(D, is_principal_genus(a));
                os << "rational-table,," << data->k_coeff.str() << ","
                   << data->s_coeff.str();
            } else {
                BoundCusps bc = bound_cusp_data(disc, a);
                Rat P = Rat(4, 1) * Rat(sel.n, 1) * zeta_minus_one(disc) /
                        Rat(bc.sums[0], 1);
                Rat Q = Rat(bc.total, 1) / Rat(bc.sums[0], 1);
                os << (sel.route == NRoute::Conjecture ? "conjecture" : "c-constant")
                   << "," << sel.n << "," << P.str() << "," << Q.str();
            }
        } catch (const std::exception &e) {
            os << "unsupported,,,";
        }
        os << "\n";
    }
    return os.str();
}

int cmd_atlas(const Common &c, long long from, long long to,
              const std::string &svg_dir) {
    std::ostringstream os;
    os << "D,class,h,h_plus,nu,base_cycle,base_sum_b_minus_2,zeta,route,n,k_coeff,s_coeff\n";
    std::vector<std::future<std::string>> rows;
    for (long long D = from; D <= to; ++D)
        rows.push_back(std::async(std::launch::async, atlas_rows, D));
    for (auto &r : rows) os << r.get();
    if (!svg_dir.empty()) {
        for (long long D = from; D <= to; ++D) {
            if (!is_fundamental_discriminant(D)) continue;
            Discriminant disc(D);
            const NarrowClassGroup &G = narrow_class_group(disc);
            for (int cls = 0; cls < G.order; ++cls) {
                CuspResolution r = resolve_cusp(G.reps[(size_t)cls], 1);
                std::ofstream f(svg_dir + "/cycle_D" + std::to_string(D) + "_c" +
                                std::to_string(cls) + ".svg");
                f << cycle_svg(r);
            }
        }
    }
    emit(c, os.str());
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hecke/Sturm vanishing bounds for Hilbert modular forms over real quadratic fields"};
    app.require_subcommand(1);

    Common c_res, c_inv, c_bound, c_set, c_check, c_atlas;
    long long n_level = 1, inv_n = 0, inv_cprime = 1;
    long long weight = 0, k1 = 0, k2 = 0, s = 0, p = 0, index = 1;
    int cusp = 0;
    bool rational_table = false;
    std::string coeffs_path, coeffs_b_path;
    long long from = 5, to = 50;
    std::string svg_dir;

    auto *res = app.add_subcommand("resolve", "cusp resolution cycles and vertices");
    add_common(res, c_res);
    res->add_option("-n,--level", n_level, "resolve for the lattice scaled by n");

    auto *inv = app.add_subcommand("invariants", "surface classification and intersection numbers");
    add_common(inv, c_inv);
    inv->add_option("-n", inv_n, "auxiliary level n (default: selected automatically)");
    inv->add_option("--c-prime", inv_cprime, "cusp count c' of the level-n surface");

    auto *bnd = app.add_subcommand("bound", "vanishing threshold (Hecke/Sturm/general)");
    add_common(bnd, c_bound);
    bnd->add_option("-k,--weight", weight, "parallel weight 2k");
    bnd->add_option("--k1", k1, "first weight (general bound)");
    bnd->add_option("--k2", k2, "second weight (general bound)");
    bnd->add_option("-s", s, "vanishing order at all cusps");
    bnd->add_option("-p", p, "Sturm prime (checks p does not divide D*n)");
    bnd->add_option("--index", index, "[Gamma(O_K,a):Gamma_a] for the general bound");
    bnd->add_option("--cusp", cusp, "cusp index i0 (default infinity)");
    bnd->add_flag("--rational-table", rational_table, "force the tabulated rational-case bound");

    auto *sset = app.add_subcommand("sturm-set", "certifying set of Fourier indices");
    add_common(sset, c_set);
    sset->add_option("-k,--weight", weight, "parallel weight 2k")->required();
    sset->add_option("-s", s, "vanishing order at all cusps");

    auto *chk = app.add_subcommand("check", "verify vanishing/congruence on a coefficient file");
    add_common(chk, c_check, false);
    chk->add_option("--coeffs", coeffs_path, "coefficient CSV")->required();
    chk->add_option("--coeffs-b", coeffs_b_path, "second coefficient CSV (congruence)");
    chk->add_option("-p", p, "prime modulus");

    auto *atl = app.add_subcommand("atlas", "cycles and bound coefficients per (D, class)");
    add_common(atl, c_atlas, false);
    atl->add_option("--from", from, "first discriminant");
    atl->add_option("--to", to, "last discriminant");
    atl->add_option("--svg-dir", svg_dir, "emit cycle diagrams into this directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (res->parsed()) return cmd_resolve(c_res, n_level);
        if (inv->parsed()) return cmd_invariants(c_inv, inv_n, inv_cprime);
        if (bnd->parsed()) return cmd_bound(c_bound, weight, k1, k2, s, p, index, cusp,
                                            rational_table);
        if (sset->parsed()) return cmd_sturm_set(c_set, weight, k1, k2, s);
        if (chk->parsed()) return cmd_check(c_check, coeffs_path, coeffs_b_path, p);
        if (atl->parsed()) return cmd_atlas(c_atlas, from, to, svg_dir);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
