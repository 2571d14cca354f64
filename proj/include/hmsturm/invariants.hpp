#ifndef HMSTURM_INVARIANTS_HPP
#define HMSTURM_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hmsturm/cuspres.hpp"

namespace hmsturm {

// zeta_K(-1) = (1/60) * sum_{b^2 < D, b ≡ D mod 2} sigma_1((D - b^2)/4)
Rat zeta_minus_one(const Discriminant &D);

// [U^2_{O_K} : U^2_{O_K,(n)}]: multiplicative order of eps_plus in (O_K/n)^x
long long unit_index(const Discriminant &D, long long n);

struct SurfaceClass {
    Discriminant D;
    bool a_principal_genus = true;
    bool is_rational = false;      // Y_{Gamma(O_K, a)} rational
    bool conjecture_known = false; // canonical-divisor conjecture known to hold
    std::string conjecture_case;   // which clause applied
};

SurfaceClass classify_surface(const Discriminant &D, const FracIdeal &a);

// general-type exception rows: (D, norms of c, genus label). Ambiguous genus
// labels are treated conservatively (any genus counts as excepted).
bool general_type_exception(long long D, i128 norm_c);

enum class NRoute { RationalTable, Conjecture, CConstant };

struct SelectedLevel {
    long long n = 0;
    NRoute route = NRoute::Conjecture;
    SurfaceClass cls;
    i128 c_constant = 0;  // 3 * double sum (b - 2), set on the CConstant route
};

// Auxiliary level: rational surfaces route to the tabulated cases;
// when the conjecture is known n = 3; otherwise the C-constant route.
SelectedLevel select_n(const Discriminant &D, const FracIdeal &a);

struct RationalCaseData {
    long long D;
    std::string a_label;   // ideal class of a in the table
    std::string c_label;   // the level ideal used
    i128 c_norm;
    int cusp_count;
    std::vector<long long> cycle;  // per-cusp resolution cycle in the minimal model
    Rat k_coeff;  // threshold = k_coeff * k - s_coeff * s (k the parallel weight)
    Rat s_coeff;
};

// the tabulated rational cases; nullopt when (D, genus of a) is not covered
std::optional<RationalCaseData> rational_case_data(long long D, bool a_principal_genus);

struct IntersectionReport {
    Discriminant D;
    long long n = 0;
    long long cusp_count_cprime = 0;  // c', caller supplied
    long long unit_idx = 1;
    i128 degree_d = 0;  // d = n^2 c' [U^2 : U^2_{(n)}]
    Rat zeta;
    std::vector<i128> cusp_sums;      // Sigma_j (b_{i,j} - 2) per level-one cusp
    std::vector<Rat> K_dot_Si;        // K_{Z_n} . S'_i
    std::vector<Rat> Si_dot_Si;       // S'_i . S'_i
    Rat K_dot_K;
};

IntersectionReport intersection_numbers(const Discriminant &D, const FracIdeal &a,
                                        long long n, long long cprime);

}  // namespace hmsturm

#endif
