#include "hmsturm/sturmcheck.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace hmsturm {

const char *verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Certified: return "certified-congruent-to-zero";
        case VerdictKind::HypothesisFailed: return "hypothesis-failed";
        case VerdictKind::InputIncomplete: return "input-incomplete";
        case VerdictKind::PreconditionFailed: return "precondition-failed";
    }
    return "?";
}

CoeffMap fold_keys(const CoeffMap &coeffs, const QuadElem &eps_plus) {
    CoeffMap out;
    out.dual = coeffs.dual;
    for (const auto &kv : coeffs.entries) {
        QuadElem key = kv.first.is_zero() ? kv.first : canonical_rep(kv.first, eps_plus);
        auto it = out.entries.find(key);
        if (it != out.entries.end()) {
            if (it->second != kv.second)
                throw std::domain_error(
                    "orbit-duplicate keys with conflicting coefficients at " +
                    key.str());
            continue;
        }
        out.entries.emplace(key, kv.second);
    }
    return out;
}

static void fill_common(CongruenceVerdict &v, const SturmSet &set) {
    v.D = set.D;
    v.a_class = set.a_class;
    v.n = set.n;
    v.threshold_T = set.threshold_T;
}

static std::vector<QuadElem> set_keys(const SturmSet &set) {
    std::vector<QuadElem> keys;
    if (set.includes_zero) keys.push_back(QuadElem::zero(set.D.D));
    for (const auto &r : set.reps) keys.push_back(r.xi);
    return keys;
}

CongruenceVerdict check_vanishing(const CoeffMap &coeffs, const SturmSet &set) {
    CongruenceVerdict v;
    fill_common(v, set);
    v.p = 0;
    CoeffMap folded = fold_keys(coeffs, set.resolution.eps_plus);
    for (const QuadElem &key : set_keys(set)) {
        auto it = folded.entries.find(key);
        if (it == folded.entries.end()) {
            v.missing.push_back(key);
            continue;
        }
        v.checked.emplace_back(key, it->second);
        if (!it->second.is_zero()) v.failing.push_back(key);
    }
    if (!v.failing.empty()) {
        v.kind = VerdictKind::HypothesisFailed;
        v.message = "nonzero certifying coefficients";
    } else if (!v.missing.empty()) {
        v.kind = VerdictKind::InputIncomplete;
        v.message = "certifying coefficients missing from the input";
    } else {
        v.kind = VerdictKind::Certified;
        v.message = "all certifying coefficients vanish; the form is zero";
    }
    return v;
}

// residue of a/b mod p; the denominator must be a p-unit
static i128 residue_mod_p(const Rat &q, long long p, const QuadElem &key) {
    i128 den = q.den % p;
    if (den == 0)
        throw std::domain_error("coefficient denominator divisible by p at key " +
                                key.str());
    // inverse by Fermat
    i128 inv = 1, base = den, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    i128 r = (q.num % p * inv) % p;
    if (r < 0) r += p;
    return r;
}

static CongruenceVerdict congruence_impl(const CoeffMap &A, const CoeffMap *B,
                                         long long p, const SturmSet &set) {
    CongruenceVerdict v;
    fill_common(v, set);
    v.p = p;
    if (!is_prime_ll(p)) {
        v.kind = VerdictKind::PreconditionFailed;
        v.message = "p is not prime";
        return v;
    }
    if (set.D.D % p == 0 || set.n % p == 0) {
        v.kind = VerdictKind::PreconditionFailed;
        v.message = "p divides D*n (p=" + std::to_string(p) +
                    ", D=" + std::to_string(set.D.D) + ", n=" + std::to_string(set.n) +
                    ")";
        return v;
    }
    CoeffMap fa = fold_keys(A, set.resolution.eps_plus);
    CoeffMap fb;
    if (B) fb = fold_keys(*B, set.resolution.eps_plus);
    for (const QuadElem &key : set_keys(set)) {
        auto ia = fa.entries.find(key);
        bool has_a = ia != fa.entries.end();
        bool has_b = true;
        Rat bval(0);
        if (B) {
            auto ib = fb.entries.find(key);
            has_b = ib != fb.entries.end();
            if (has_b) bval = ib->second;
        }
        if (!has_a || !has_b) {
            v.missing.push_back(key);
            continue;
        }
        Rat diff = ia->second - bval;
        i128 r = residue_mod_p(diff, p, key);
        v.checked.emplace_back(key, Rat(r, 1));
        if (r != 0) v.failing.push_back(key);
    }
    if (!v.failing.empty()) {
        v.kind = VerdictKind::HypothesisFailed;
        v.message = "certifying coefficients not congruent mod p";
    } else if (!v.missing.empty()) {
        v.kind = VerdictKind::InputIncomplete;
        v.message = "certifying coefficients missing from the input";
    } else {
        v.kind = VerdictKind::Certified;
        v.message = "congruence certified on the full certifying set";
    }
    return v;
}

CongruenceVerdict check_congruence_zero(const CoeffMap &coeffs, long long p,
                                        const SturmSet &set) {
    return congruence_impl(coeffs, nullptr, p, set);
}

CongruenceVerdict check_congruence(const CoeffMap &A, const CoeffMap &B, long long p,
                                   const SturmSet &set) {
    return congruence_impl(A, &B, p, set);
}

// ---- CSV -------------------------------------------------------------

static std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)ch)) {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

CoeffFile load_coeff_csv(std::istream &in) {
    std::string line;
    auto next_line = [&](const char *what) {
        if (!std::getline(in, line))
            throw std::domain_error(std::string("coefficient CSV truncated before ") +
                                    what);
        return line;
    };
    if (split_csv_line(next_line("header")) !=
        std::vector<std::string>{"D", "a_class", "weight", "s"})
        throw std::domain_error("coefficient CSV must start with 'D,a_class,weight,s'");
    auto vals = split_csv_line(next_line("header values"));
    if (vals.size() != 4) throw std::domain_error("expected 4 header values");
    CoeffFile file;
    file.D = (long long)parse_i128(vals[0]);
    file.a_class = (int)parse_i128(vals[1]);
    file.weight = (long long)parse_i128(vals[2]);
    file.s = (long long)parse_i128(vals[3]);
    if (split_csv_line(next_line("row header")) !=
        std::vector<std::string>{"x_num", "x_den", "y_num", "y_den", "coeff_num",
                                 "coeff_den"})
        throw std::domain_error(
            "expected row header 'x_num,x_den,y_num,y_den,coeff_num,coeff_den'");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 6)
            throw std::domain_error("coefficient row needs 6 fields: " + line);
        QuadElem xi(file.D, Rat(parse_i128(f[0]), parse_i128(f[1])),
                    Rat(parse_i128(f[2]), parse_i128(f[3])));
        Rat val(parse_i128(f[4]), parse_i128(f[5]));
        file.rows.emplace_back(xi, val);
    }
    return file;
}

void write_coeff_csv(std::ostream &out, const CoeffFile &file) {
    out << "D,a_class,weight,s\n"
        << file.D << "," << file.a_class << "," << file.weight << "," << file.s
        << "\n";
    out << "x_num,x_den,y_num,y_den,coeff_num,coeff_den\n";
    for (const auto &row : file.rows) {
        const QuadElem &xi = row.first;
        out << to_string_i128(xi.x.num) << "," << to_string_i128(xi.x.den) << ","
            << to_string_i128(xi.y.num) << "," << to_string_i128(xi.y.den) << ","
            << to_string_i128(row.second.num) << "," << to_string_i128(row.second.den)
            << "\n";
    }
}

}  // namespace hmsturm
